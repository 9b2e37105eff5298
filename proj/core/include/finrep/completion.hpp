#pragma once
// Galois closure on the powerset of a finite residuated semigroup and the
// finite quantale of closed subsets.
//
//   uX = common upper bounds of X,  lX = common lower bounds,  m = l after u.
//
// The m-closed subsets ordered by inclusion form a complete lattice; with
// X ;_m Y = m({x;y : x in X, y in Y}) they form a quantale into which the
// original algebra embeds via a |-> down-cone(a), preserving composition and
// both residuals.  Everything here is exhaustively verifiable at desk scale.

#include <cstdint>
#include <optional>

#include "finrep/algebra.hpp"
#include "finrep/report.hpp"

namespace finrep {

// Common bounds of a subset; both are the full carrier for the empty set.
ElementSet lower_bounds(ElementSet x, const FinitePoset& order);
ElementSet upper_bounds(ElementSet x, const FinitePoset& order);

// m(X) = l(u(X)); extensive, idempotent, monotone.
ElementSet galois_closure(ElementSet x, const FinitePoset& order);

// All m-closed subsets in canonical order: ascending (cardinality, bit
// pattern).  Computed as intersections of principal down-cones together with
// the full carrier (= l of the empty set), which is complete because every
// closed set is an intersection of the down-cones of its upper bounds.
std::vector<ElementSet> closed_sets(const FinitePoset& order);

// Definitional oracle: filter all 2^n subsets by m(S) = S.  Exponential; only
// sensible at test sizes (n <= ~20).
std::vector<ElementSet> closed_sets_definitional(const FinitePoset& order);

struct FiniteQuantale {
    int source_size = 0;                // carrier size of the source algebra
    std::vector<ElementSet> closed;     // canonical order; index = SubsetId
    FinitePoset order;                  // inclusion between closed sets
    Table product;                      // product[x][y] = m(pairwise products)

    int size() const { return static_cast<int>(closed.size()); }
    bool leq(int x, int y) const { return order.leq(x, y); }
    int comp(int x, int y) const { return product[x][y]; }

    // Index of a closed subset; throws InternalError when the set is not
    // closed (callers only hand in sets produced by the closure).
    int index_of(ElementSet s) const;

    // Sigma_m of a family of closed sets (given as a bitmask over SubsetIds):
    // m of the union.  The empty family yields the bottom closed set m({}).
    int sup(ElementSet family) const;

    // Intersection of a family; the empty family yields the full carrier.
    int inf(ElementSet family) const;

    // The unit element if the quantale has one (u with u;x = x;u = x for all
    // x), else nullopt.  Purely diagnostic; the construction does not need it
    // but faithfulness of the relational stage depends on it.
    std::optional<int> unit() const;
};

// Builds the quantale of m-closed subsets of a validated algebra.
FiniteQuantale build_quantale(const ResiduatedSemigroup& rs);

struct NucleusReport {
    bool is_closure = false;  // extensive + idempotent + monotone
    bool is_nucleus = false;  // closure and m(X);m(Y) subset of m(X.Y)
    std::vector<std::string> witnesses;
    bool exhaustive = false;  // all subset pairs vs. a pseudorandom sample
};

// Verifies the closure laws and the nucleus inequality.  Exhaustive over all
// subset pairs up to carrier size 4; beyond that a deterministic sample of at
// least 10^4 pairs drawn from the given seed.
NucleusReport check_quantic_nucleus(const ResiduatedSemigroup& rs,
                                    std::uint64_t seed = 0x5eed);

// Residual tables of the quantale computed by the sup formulas
//   x\y = Sigma_m {c : x;c <= y},   y/x... stored as in the algebra module:
//   lres[x][y] = x\y and rres[y][x] = y/x.
ResidualTables quantale_residuals(const FiniteQuantale& q);

// Index of down-cone(a) in the quantale carrier.  Injective, order-reflecting
// and commuting with ; \ / -- the embedding stage of the pipeline.
int dm_embed(int a, const ResiduatedSemigroup& rs, const FiniteQuantale& q);

} // namespace finrep
