#pragma once
// Finite partial orders over {0,..,n-1}, stored as bit-rows of the <= matrix.

#include "finrep/bitset.hpp"
#include "finrep/report.hpp"

namespace finrep {

// Checks reflexivity, antisymmetry and transitivity of a 0/1 matrix.
// Witnesses: ("reflexive", {a}), ("antisymmetric", {a,b}),
// ("transitive", {a,b,c}).  Throws MalformedInput on a non-square matrix.
ValidationReport validate_poset(const BoolMatrix& leq, int n);

class FinitePoset {
public:
    // Throws ValidationError unless validate_poset passes.
    FinitePoset(BoolMatrix leq, int n);

    int size() const { return n_; }
    bool leq(int a, int b) const { return rows_[a].contains(b); }

    // {b : a <= b} and {b : b <= a} as bit sets
    ElementSet upset(int a) const { return rows_[a]; }
    ElementSet downset(int a) const { return cols_[a]; }

    // smallest up-closed superset of S
    ElementSet up_close(ElementSet s) const {
        ElementSet r;
        for (int a : s.members()) r |= rows_[a];
        return r;
    }

    bool is_up_closed(ElementSet s) const { return up_close(s) == s; }

    // maximum of S if it exists, else -1
    int max_of(ElementSet s) const {
        for (int a : s.members())
            if (s.subset_of(cols_[a])) return a;
        return -1;
    }

    // minimal members of S (no other member strictly below them)
    ElementSet minimal_members(ElementSet s) const {
        ElementSet out;
        for (int a : s.members()) {
            ElementSet strictly_below = cols_[a] & s;
            strictly_below.remove(a);
            if (strictly_below.empty()) out.add(a);
        }
        return out;
    }

    bool operator==(const FinitePoset&) const = default;

private:
    int n_;
    BoolMatrix rows_;  // rows_[a] = upset of a
    BoolMatrix cols_;  // cols_[a] = downset of a
};

// All labelled partial orders on n points, in lexicographic matrix order.
// Intended for test corpora; n is capped at 5 (4231 posets).
std::vector<FinitePoset> enumerate_posets(int n);

} // namespace finrep
