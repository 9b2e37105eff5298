#pragma once
// Binary relations over a finite base, generator sets of a finite quantale,
// the hat map into relations, and the end-to-end representation pipeline
//
//   algebra --(down-cones)--> closed-set quantale --(hat)--> relations
//
// together with the faithfulness verifier.  The verifier is deliberately
// independent of the construction: it recomputes every operational equality
// from the relation matrices alone.

#include <string>
#include <utility>
#include <vector>

#include "finrep/completion.hpp"
#include "finrep/report.hpp"

namespace finrep {

struct FiniteBase {
    int size = 0;
    std::vector<std::string> labels;  // one per point, distinct

    bool operator==(const FiniteBase&) const = default;
};

// size positive, one label per point, labels distinct
ValidationReport validate_base(const FiniteBase& base);

// Binary relation over a base of n points, one bit-row per source point.
struct Rel {
    int base = 0;
    BoolMatrix rows;  // rows[x].contains(y) iff (x,y) in the relation

    static Rel empty(int n) { return Rel{n, BoolMatrix(n)}; }
    static Rel identity(int n);
    static Rel full(int n);

    bool contains(int x, int y) const { return rows[x].contains(y); }
    void add(int x, int y) { rows[x].add(y); }
    bool subset_of(const Rel& o) const;
    // pairs in row-major order, for printing and serialization
    std::vector<std::pair<int, int>> pairs() const;

    bool operator==(const Rel&) const = default;
};

// All three require the same base and throw BaseMismatch otherwise.
Rel rel_union(const Rel& r, const Rel& s);
// (x,z) in r;s  iff  some y has (x,y) in r and (y,z) in s
Rel rel_compose(const Rel& r, const Rel& s);
// (x,y) in a\b  iff  every z with (z,x) in a has (z,y) in b
Rel rel_lres(const Rel& a, const Rel& b);
// (x,y) in a/b  iff  every z with (y,z) in b has (x,z) in a
Rel rel_rres(const Rel& a, const Rel& b);

struct Representation {
    FiniteBase base;
    std::vector<Rel> map;  // indexed by algebra element
};

// A generator set G (bitmask over quantale indices) must satisfy
//   1. every q is the sup of {g in G : g <= q}
//   2. g <= q1;q2 forces g <= q1;r for some generator r <= q2.
// Violation witnesses: ("generator-sup", {q}), ("generator-factor",
// {g,q1,q2}).  Generators outside the carrier: ("generator-range", {g}).
ValidationReport check_generators(const FiniteQuantale& q, ElementSet gens);

// Subset-minimal generator set obtained by greedy removal from the full
// carrier in canonical index order; deterministic.
ElementSet minimize_generators(const FiniteQuantale& q);

// hat(a) = {(g,p) : g in G, g <= a ;_Q p} over the full carrier as base.
// Rows outside G stay empty.  Throws InvalidGenerators when G fails
// check_generators.
Rel hat(int a, const FiniteQuantale& q, ElementSet gens);

// Full pipeline: build the closed-set quantale, embed each element as its
// down-cone, then apply the hat map.  Point labels are the closed sets
// printed as "{0,1}".  With minimize = true the generator set is first
// shrunk via minimize_generators (sparser relations, same base).
Representation represent(const ResiduatedSemigroup& rs, bool minimize = false);

// Checks, from the matrices alone:
//   injective        rep is one-to-one
//   order            a <= b  iff  rep(a) subset rep(b)
//   compose          rep(a;b)  = rep(a);rep(b)
//   left-residual    rep(a\b)  = rep(a)\rep(b)
//   right-residual   rep(a/b)  = rep(a)/rep(b)
// Witnesses carry the algebra pair (a,b) and, in the detail string, the
// first differing matrix cell.  Two side observations are reported as notes
// and never affect the verdict: whether the union of all represented
// relations is transitive, and whether every base point occurs in that
// union.  Throws BaseMismatch when the map's relations disagree on the base
// or the map is not total on the carrier.
ValidationReport verify_representation(const ResiduatedSemigroup& rs,
                                       const Representation& rep);

} // namespace finrep
