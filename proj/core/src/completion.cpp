#include "finrep/completion.hpp"

#include <algorithm>
#include <random>

#include "finrep/errors.hpp"

namespace finrep {

ElementSet lower_bounds(ElementSet x, const FinitePoset& order) {
    ElementSet out = ElementSet::first_n(order.size());
    for (int a : x.members()) out &= order.downset(a);
    return out;
}

ElementSet upper_bounds(ElementSet x, const FinitePoset& order) {
    ElementSet out = ElementSet::first_n(order.size());
    for (int a : x.members()) out &= order.upset(a);
    return out;
}

ElementSet galois_closure(ElementSet x, const FinitePoset& order) {
    return lower_bounds(upper_bounds(x, order), order);
}

namespace {
void sort_canonically(std::vector<ElementSet>& sets) {
    std::sort(sets.begin(), sets.end(), [](ElementSet a, ElementSet b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.bits() < b.bits();
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}
} // namespace

std::vector<ElementSet> closed_sets(const FinitePoset& order) {
    // every closed set is an intersection of principal down-cones (of its
    // upper bounds); the full carrier covers the empty intersection
    std::vector<ElementSet> sets;
    sets.push_back(ElementSet::first_n(order.size()));
    for (int a = 0; a < order.size(); ++a) sets.push_back(order.downset(a));
    sort_canonically(sets);
    // close under pairwise intersection to a fixpoint
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t n = sets.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                ElementSet meet = sets[i] & sets[j];
                if (std::find(sets.begin(), sets.end(), meet) == sets.end()) {
                    sets.push_back(meet);
                    grew = true;
                }
            }
        if (grew) sort_canonically(sets);
    }
    return sets;
}

std::vector<ElementSet> closed_sets_definitional(const FinitePoset& order) {
    if (order.size() > 20)
        throw SizeCapExceeded("definitional closed-set filter needs 2^n scans");
    std::vector<ElementSet> out;
    for (std::uint64_t bits = 0; bits < (1ULL << order.size()); ++bits) {
        ElementSet s(bits);
        if (galois_closure(s, order) == s) out.push_back(s);
    }
    sort_canonically(out);
    return out;
}

int FiniteQuantale::index_of(ElementSet s) const {
    for (int i = 0; i < size(); ++i)
        if (closed[i] == s) return i;
    throw InternalError("subset " + s.to_string() +
                        " is not in the closed-set carrier");
}

int FiniteQuantale::sup(ElementSet family) const {
    ElementSet u;
    for (int i : family.members()) u |= closed[i];
    // m(union) = least closed superset of the union = intersection of all
    // closed supersets; the full carrier is one, so the meet is nonempty
    ElementSet out = ElementSet::first_n(source_size);
    for (const ElementSet& c : closed)
        if (u.subset_of(c)) out &= c;
    return index_of(out);
}

int FiniteQuantale::inf(ElementSet family) const {
    ElementSet meet = ElementSet::first_n(source_size);
    for (int i : family.members()) meet &= closed[i];
    return index_of(meet);
}

std::optional<int> FiniteQuantale::unit() const {
    for (int u = 0; u < size(); ++u) {
        bool ok = true;
        for (int x = 0; x < size() && ok; ++x)
            ok = comp(u, x) == x && comp(x, u) == x;
        if (ok) return u;
    }
    return std::nullopt;
}

FiniteQuantale build_quantale(const ResiduatedSemigroup& rs) {
    std::vector<ElementSet> closed = closed_sets(rs.poset);
    int k = static_cast<int>(closed.size());
    auto index_of = [&](ElementSet s) {
        for (int i = 0; i < k; ++i)
            if (closed[i] == s) return i;
        throw InternalError("closure produced a set outside the carrier");
    };

    BoolMatrix inclusion(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (closed[i].subset_of(closed[j])) inclusion[i].add(j);

    Table product(k, std::vector<int>(k, -1));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            ElementSet pairwise;
            for (int x : closed[i].members())
                for (int y : closed[j].members()) pairwise.add(rs.comp(x, y));
            product[i][j] = index_of(galois_closure(pairwise, rs.poset));
        }
    return FiniteQuantale{rs.size(), std::move(closed),
                          FinitePoset(inclusion, k), std::move(product)};
}

NucleusReport check_quantic_nucleus(const ResiduatedSemigroup& rs,
                                    std::uint64_t seed) {
    int n = rs.size();
    NucleusReport report;
    report.is_closure = true;
    report.is_nucleus = true;
    report.exhaustive = n <= 4;

    auto m = [&](ElementSet s) { return galois_closure(s, rs.poset); };
    auto pairwise = [&](ElementSet a, ElementSet b) {
        ElementSet out;
        for (int x : a.members())
            for (int y : b.members()) out.add(rs.comp(x, y));
        return out;
    };
    auto check_pair = [&](ElementSet x, ElementSet y) {
        ElementSet mx = m(x), my = m(y);
        if (!x.subset_of(mx)) {
            report.is_closure = false;
            report.witnesses.push_back("not extensive at X=" + x.to_string());
        }
        if (m(mx) != mx) {
            report.is_closure = false;
            report.witnesses.push_back("not idempotent at X=" + x.to_string());
        }
        if (x.subset_of(y) && !mx.subset_of(my)) {
            report.is_closure = false;
            report.witnesses.push_back("not monotone at X=" + x.to_string() +
                                       " Y=" + y.to_string());
        }
        if (!pairwise(mx, my).subset_of(m(pairwise(x, y)))) {
            report.is_nucleus = false;
            report.witnesses.push_back("m(X);m(Y) not within m(X.Y) at X=" +
                                       x.to_string() + " Y=" + y.to_string());
        }
    };

    if (report.exhaustive) {
        for (std::uint64_t xb = 0; xb < (1ULL << n); ++xb)
            for (std::uint64_t yb = 0; yb < (1ULL << n); ++yb)
                check_pair(ElementSet(xb), ElementSet(yb));
    } else {
        std::mt19937_64 rng(seed);
        std::uint64_t mask = ElementSet::first_n(n).bits();
        for (int i = 0; i < 10000; ++i)
            check_pair(ElementSet(rng() & mask), ElementSet(rng() & mask));
    }
    if (!report.is_closure) report.is_nucleus = false;
    return report;
}

ResidualTables quantale_residuals(const FiniteQuantale& q) {
    int k = q.size();
    ResidualTables out;
    out.lres.assign(k, std::vector<int>(k, -1));
    out.rres.assign(k, std::vector<int>(k, -1));
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            ElementSet good;  // {c : x;c <= y}
            for (int c = 0; c < k; ++c)
                if (q.leq(q.comp(x, c), y)) good.add(c);
            out.lres[x][y] = q.sup(good);
        }
    for (int y = 0; y < k; ++y)
        for (int x = 0; x < k; ++x) {
            ElementSet good;  // {a : a;x <= y}
            for (int a = 0; a < k; ++a)
                if (q.leq(q.comp(a, x), y)) good.add(a);
            out.rres[y][x] = q.sup(good);
        }
    return out;
}

int dm_embed(int a, const ResiduatedSemigroup& rs, const FiniteQuantale& q) {
    if (a < 0 || a >= rs.size())
        throw MalformedInput("element index " + std::to_string(a) +
                             " outside the carrier");
    return q.index_of(down_cone(a, rs.poset));
}

} // namespace finrep
