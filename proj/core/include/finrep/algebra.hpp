#pragma once
// The two finite ordered-algebra flavours this library works with:
//
//   ResiduatedSemigroup     <A, ;, <=, \, /> -- partially ordered semigroup
//                           whose composition has both residuals:
//                           b <= a\c  <=>  a;b <= c  <=>  a <= c/b
//
//   JoinSemilatticeSemigroup <A, ;, +>       -- semigroup with a semilattice
//                           join distributing over ; on both sides; its order
//                           is derived by a <= b <=> a+b = b.
//
// Residual tables are oriented so the table index order matches the
// adjunction's variable roles: lres[a][c] holds a\c and rres[c][b] holds c/b.
// Keeping that straight at the type level kills a whole class of index-swap
// bugs, so conversions elsewhere always go through these accessors.

#include <optional>
#include <utility>

#include "finrep/bitset.hpp"
#include "finrep/poset.hpp"
#include "finrep/report.hpp"

namespace finrep {

struct ResiduatedSemigroup {
    FinitePoset poset;
    Table compose;  // compose[a][b] = a;b
    Table lres;     // lres[a][c]   = a\c
    Table rres;     // rres[c][b]   = c/b

    int size() const { return poset.size(); }
    int comp(int a, int b) const { return compose[a][b]; }
    int left_residual(int a, int c) const { return lres[a][c]; }
    int right_residual(int c, int b) const { return rres[c][b]; }
    bool leq(int a, int b) const { return poset.leq(a, b); }

    bool operator==(const ResiduatedSemigroup&) const = default;
};

struct JoinSemilatticeSemigroup {
    int size_ = 0;
    Table compose;  // compose[a][b] = a;b
    Table join;     // join[a][b]    = a+b

    int size() const { return size_; }
    int comp(int a, int b) const { return compose[a][b]; }
    int plus(int a, int b) const { return join[a][b]; }

    bool operator==(const JoinSemilatticeSemigroup&) const = default;
};

// -- validators -------------------------------------------------------------

// Order laws, associativity, monotonicity in both arguments, and the two-way
// adjunction checked over every triple.  Witness tuples follow the law's
// variable order; see the report's law names.
ValidationReport validate_residuated_semigroup(const ResiduatedSemigroup& rs);

// Semilattice laws for +, associativity for ;, and both distribution laws.
ValidationReport validate_jsl(const JoinSemilatticeSemigroup& alg);

// -- residual derivation ----------------------------------------------------

// lres[a][c] = max {b : a;b <= c},  rres[c][b] = max {a : a;b <= c}.
// Empty candidate sets and maximum-free candidate sets both mean the
// structure is not residuated.  The try_ variant reports the offending cell
// instead of throwing.
struct ResidualTables {
    Table lres, rres;
};
std::optional<ResidualTables> try_derive_residuals(const Table& compose,
                                                   const FinitePoset& order,
                                                   int* bad_a = nullptr,
                                                   int* bad_c = nullptr,
                                                   bool* bad_is_left = nullptr);
ResidualTables derive_residuals(const Table& compose, const FinitePoset& order);

// -- join-semilattice order -------------------------------------------------

// leq[a][b] = 1 iff a+b = b.  Throws InvalidSemilattice when the join table
// is not a semilattice (so the derived matrix would not be a poset).
FinitePoset order_from_join(const Table& join);

// -- cone utilities ---------------------------------------------------------

inline ElementSet up_close(ElementSet s, const FinitePoset& order) {
    return order.up_close(s);
}
inline ElementSet down_cone(int a, const FinitePoset& order) {
    return order.downset(a);
}

// -- helpers shared by validators and enumeration ---------------------------

// true iff t is associative; on failure *a,*b,*c name the first bad triple
bool table_associative(const Table& t, int n, int* a = nullptr, int* b = nullptr,
                       int* c = nullptr);

// true iff ; is monotone in both arguments w.r.t. the order
bool table_monotone(const Table& t, const FinitePoset& order, int* a = nullptr,
                    int* b = nullptr, int* c = nullptr);

// dimension check shared by the validators; throws MalformedInput
void require_square_table(const Table& t, int n, const char* name);

} // namespace finrep
