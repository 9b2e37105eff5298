#include "finrep/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "finrep/errors.hpp"

namespace finrep {
namespace {

// Incremental associativity scan against a partially filled table
// (-1 = unknown).  Checks every triple whose four lookups are all known;
// cheap enough at n <= 4 to rerun after each cell assignment.
bool partial_associative(const Table& t, int n) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = t[a][b];
            if (ab < 0) continue;
            for (int c = 0; c < n; ++c) {
                int bc = t[b][c];
                if (bc < 0) continue;
                int l = t[ab][c], r = t[a][bc];
                if (l >= 0 && r >= 0 && l != r) return false;
            }
        }
    return true;
}

void semigroup_dfs(Table& t, int n, int cell,
                   const std::function<void(const Table&)>& emit) {
    if (cell == n * n) {
        emit(t);
        return;
    }
    int i = cell / n, j = cell % n;
    for (int v = 0; v < n; ++v) {
        t[i][j] = v;
        if (partial_associative(t, n)) semigroup_dfs(t, n, cell + 1, emit);
    }
    t[i][j] = -1;
}

// Upper-triangle cells (i < j) for the commutative case.
void semilattice_dfs(Table& t, int n, const std::vector<std::pair<int, int>>& cells,
                     std::size_t k, const std::function<void(const Table&)>& emit) {
    if (k == cells.size()) {
        emit(t);
        return;
    }
    auto [i, j] = cells[k];
    for (int v = 0; v < n; ++v) {
        t[i][j] = t[j][i] = v;
        if (partial_associative(t, n)) semilattice_dfs(t, n, cells, k + 1, emit);
    }
    t[i][j] = t[j][i] = -1;
}

bool distributive_over(const Table& t, const Table& j, int n) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (t[a][j[b][c]] != j[t[a][b]][t[a][c]]) return false;
                if (t[j[a][b]][c] != j[t[a][c]][t[b][c]]) return false;
            }
    return true;
}

// canonical key: the given byte rows minimized over carrier permutations
std::vector<int> rs_key(const BoolMatrix& leq, const Table& t, int n) {
    std::vector<int> key;
    key.reserve(2 * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) key.push_back(leq[a].contains(b) ? 1 : 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) key.push_back(t[a][b]);
    return key;
}

template <typename KeyOf>
bool is_lex_least(int n, const KeyOf& key_of) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> self = key_of(perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        if (key_of(perm) < self) return false;
    return true;
}

} // namespace

void enumerate_semigroup_tables(int n, const std::function<void(const Table&)>& emit) {
    require_carrier_size(n);
    if (n > 4)
        throw SizeCapExceeded("semigroup table enumeration capped at size 4");
    Table t(n, std::vector<int>(n, -1));
    semigroup_dfs(t, n, 0, emit);
}

void enumerate_semilattice_tables(int n, const std::function<void(const Table&)>& emit) {
    require_carrier_size(n);
    if (n > 4)
        throw SizeCapExceeded("semilattice table enumeration capped at size 4");
    Table t(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) t[i][i] = i;  // idempotence
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) cells.emplace_back(i, j);
    semilattice_dfs(t, n, cells, 0, emit);
}

bool is_canonical_rs(const ResiduatedSemigroup& rs) {
    int n = rs.size();
    return is_lex_least(n, [&](const std::vector<int>& p) {
        BoolMatrix leq(n);
        Table t(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (rs.leq(a, b)) leq[p[a]].add(p[b]);
                t[p[a]][p[b]] = p[rs.comp(a, b)];
            }
        return rs_key(leq, t, n);
    });
}

bool is_canonical_jsl(const JoinSemilatticeSemigroup& alg) {
    int n = alg.size();
    return is_lex_least(n, [&](const std::vector<int>& p) {
        Table j(n, std::vector<int>(n)), t(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                j[p[a]][p[b]] = p[alg.plus(a, b)];
                t[p[a]][p[b]] = p[alg.comp(a, b)];
            }
        std::vector<int> key;
        key.reserve(2 * n * n);
        for (auto& row : j) key.insert(key.end(), row.begin(), row.end());
        for (auto& row : t) key.insert(key.end(), row.begin(), row.end());
        return key;
    });
}

void enumerate_rs(int size, bool modulo_iso,
                  const std::function<void(const ResiduatedSemigroup&)>& emit,
                  int size_cap) {
    if (size < 1) throw MalformedInput("size must be positive");
    if (size > size_cap)
        throw SizeCapExceeded("size " + std::to_string(size) +
                              " above the configured cap " +
                              std::to_string(size_cap));
    std::vector<Table> tables;
    enumerate_semigroup_tables(size, [&](const Table& t) { tables.push_back(t); });
    for (const FinitePoset& poset : enumerate_posets(size)) {
        for (const Table& t : tables) {
            if (!table_monotone(t, poset)) continue;
            auto res = try_derive_residuals(t, poset);
            if (!res) continue;  // not residuated; skipped by design
            ResiduatedSemigroup rs{poset, t, std::move(res->lres),
                                   std::move(res->rres)};
            if (modulo_iso && !is_canonical_rs(rs)) continue;
            emit(rs);
        }
    }
}

void enumerate_jsl(int size, bool modulo_iso,
                   const std::function<void(const JoinSemilatticeSemigroup&)>& emit,
                   int size_cap) {
    if (size < 1) throw MalformedInput("size must be positive");
    if (size > size_cap)
        throw SizeCapExceeded("size " + std::to_string(size) +
                              " above the configured cap " +
                              std::to_string(size_cap));
    std::vector<Table> tables;
    enumerate_semigroup_tables(size, [&](const Table& t) { tables.push_back(t); });
    enumerate_semilattice_tables(size, [&](const Table& join) {
        for (const Table& t : tables) {
            if (!distributive_over(t, join, size)) continue;
            JoinSemilatticeSemigroup alg{size, t, join};
            if (modulo_iso && !is_canonical_jsl(alg)) continue;
            emit(alg);
        }
    });
}

std::vector<ResiduatedSemigroup> all_rs(int size, bool modulo_iso, int size_cap) {
    std::vector<ResiduatedSemigroup> out;
    enumerate_rs(size, modulo_iso,
                 [&](const ResiduatedSemigroup& rs) { out.push_back(rs); },
                 size_cap);
    return out;
}

std::vector<JoinSemilatticeSemigroup> all_jsl(int size, bool modulo_iso,
                                              int size_cap) {
    std::vector<JoinSemilatticeSemigroup> out;
    enumerate_jsl(size, modulo_iso,
                  [&](const JoinSemilatticeSemigroup& a) { out.push_back(a); },
                  size_cap);
    return out;
}

} // namespace finrep
