#pragma once
// Exhaustive small-structure enumeration for test corpora.
//
// Strategy: associative tables are generated once by a cell-by-cell DFS with
// incremental associativity pruning (cross-checkable against the known
// labelled semigroup counts 1, 8, 113, 3492 for n <= 4), then each order or
// join structure is layered on top by filtering.  This keeps the hot search
// in one place and makes every stage independently testable.

#include <functional>

#include "finrep/algebra.hpp"

namespace finrep {

enum class AlgebraKind { ResiduatedSemigroup, JoinSemilatticeSemigroup };

// All associative n x n tables, lexicographic cell order.  n capped at 4 by
// SizeCapExceeded (the n = 5 count, 183732, is enumerable but nothing here
// needs it).
void enumerate_semigroup_tables(int n, const std::function<void(const Table&)>& emit);

// All join-semilattice tables (associative, commutative, idempotent).
void enumerate_semilattice_tables(int n, const std::function<void(const Table&)>& emit);

// Every labelled residuated semigroup of the given size: each poset paired
// with each associative table that is monotone and residuated, residual
// tables derived.  Emission order is deterministic (poset order, then table
// order).  With modulo_iso only the lexicographically least representative
// of each isomorphism class is emitted.
void enumerate_rs(int size, bool modulo_iso,
                  const std::function<void(const ResiduatedSemigroup&)>& emit,
                  int size_cap = 3);

// Every labelled join semilattice-ordered semigroup of the given size.
void enumerate_jsl(int size, bool modulo_iso,
                   const std::function<void(const JoinSemilatticeSemigroup&)>& emit,
                   int size_cap = 3);

// Convenience wrappers collecting into vectors.
std::vector<ResiduatedSemigroup> all_rs(int size, bool modulo_iso = false,
                                        int size_cap = 3);
std::vector<JoinSemilatticeSemigroup> all_jsl(int size, bool modulo_iso = false,
                                              int size_cap = 3);

// Lexicographically-least canonical form helpers used for modulo_iso; exposed
// for the isomorphism tests.  The canonical key is the concatenated table
// bytes minimized over all carrier permutations.
bool is_canonical_rs(const ResiduatedSemigroup& rs);
bool is_canonical_jsl(const JoinSemilatticeSemigroup& alg);

} // namespace finrep
