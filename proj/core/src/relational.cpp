#include "finrep/relational.hpp"

#include <algorithm>

#include "finrep/errors.hpp"

namespace finrep {

namespace {

void require_same_base(const Rel& a, const Rel& b, const char* op) {
    if (a.base != b.base)
        throw BaseMismatch(std::string(op) + ": relation bases differ (" +
                           std::to_string(a.base) + " vs " +
                           std::to_string(b.base) + ")");
}

// columns[x] = {z : (z,x) in r}
BoolMatrix columns_of(const Rel& r) {
    BoolMatrix cols(r.base);
    for (int z = 0; z < r.base; ++z)
        for (int x : r.rows[z].members()) cols[x].add(z);
    return cols;
}

} // namespace

ValidationReport validate_base(const FiniteBase& base) {
    ValidationReport report;
    if (base.size <= 0)
        report.add("base-size", {base.size}, "size must be positive");
    if (static_cast<int>(base.labels.size()) != base.size)
        report.add("base-labels", {static_cast<int>(base.labels.size())},
                   "expected one label per point");
    for (std::size_t i = 0; i < base.labels.size(); ++i)
        for (std::size_t j = i + 1; j < base.labels.size(); ++j)
            if (base.labels[i] == base.labels[j])
                report.add("base-label-distinct",
                           {static_cast<int>(i), static_cast<int>(j)},
                           "duplicate label \"" + base.labels[i] + "\"");
    return report;
}

Rel Rel::identity(int n) {
    Rel r = empty(n);
    for (int i = 0; i < n; ++i) r.add(i, i);
    return r;
}

Rel Rel::full(int n) {
    Rel r = empty(n);
    for (int i = 0; i < n; ++i) r.rows[i] = ElementSet::first_n(n);
    return r;
}

bool Rel::subset_of(const Rel& o) const {
    for (int x = 0; x < base; ++x)
        if (!rows[x].subset_of(o.rows[x])) return false;
    return true;
}

std::vector<std::pair<int, int>> Rel::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < base; ++x)
        for (int y : rows[x].members()) out.emplace_back(x, y);
    return out;
}

Rel rel_union(const Rel& r, const Rel& s) {
    require_same_base(r, s, "union");
    Rel out = Rel::empty(r.base);
    for (int x = 0; x < r.base; ++x) out.rows[x] = r.rows[x] | s.rows[x];
    return out;
}

Rel rel_compose(const Rel& r, const Rel& s) {
    require_same_base(r, s, "compose");
    Rel out = Rel::empty(r.base);
    for (int x = 0; x < r.base; ++x)
        for (int y : r.rows[x].members()) out.rows[x] |= s.rows[y];
    return out;
}

Rel rel_lres(const Rel& a, const Rel& b) {
    require_same_base(a, b, "left residual");
    BoolMatrix cols_a = columns_of(a), cols_b = columns_of(b);
    Rel out = Rel::empty(a.base);
    for (int x = 0; x < a.base; ++x)
        for (int y = 0; y < a.base; ++y)
            if (cols_a[x].subset_of(cols_b[y])) out.add(x, y);
    return out;
}

Rel rel_rres(const Rel& a, const Rel& b) {
    require_same_base(a, b, "right residual");
    Rel out = Rel::empty(a.base);
    for (int x = 0; x < a.base; ++x)
        for (int y = 0; y < a.base; ++y)
            if (b.rows[y].subset_of(a.rows[x])) out.add(x, y);
    return out;
}

ValidationReport check_generators(const FiniteQuantale& q, ElementSet gens) {
    ValidationReport report;
    int k = q.size();
    for (int g : gens.members())
        if (g >= k) report.add("generator-range", {g}, "index outside carrier");
    if (!report.ok()) return report;

    for (int qi = 0; qi < k; ++qi) {
        ElementSet below;
        for (int g : gens.members())
            if (q.leq(g, qi)) below.add(g);
        int s = q.sup(below);
        if (!q.leq(qi, s))
            report.add("generator-sup", {qi},
                       "sup of generators below is index " + std::to_string(s));
    }
    for (int g : gens.members())
        for (int q1 = 0; q1 < k; ++q1)
            for (int q2 = 0; q2 < k; ++q2) {
                if (!q.leq(g, q.comp(q1, q2))) continue;
                bool factors = false;
                for (int r : gens.members())
                    if (q.leq(r, q2) && q.leq(g, q.comp(q1, r))) {
                        factors = true;
                        break;
                    }
                if (!factors)
                    report.add("generator-factor", {g, q1, q2},
                               "no generator r <= q2 with g <= q1;r");
            }
    return report;
}

ElementSet minimize_generators(const FiniteQuantale& q) {
    ElementSet gens = ElementSet::first_n(q.size());
    for (int i = 0; i < q.size(); ++i) {
        ElementSet trial = gens;
        trial.remove(i);
        // On the one-element quantale the empty set passes both conditions
        // vacuously (the empty sup is already the top); keep a nonempty floor
        // so the hat map never degenerates to all-empty relations.
        if (trial.empty()) continue;
        if (check_generators(q, trial).ok()) gens = trial;
    }
    return gens;
}

Rel hat(int a, const FiniteQuantale& q, ElementSet gens) {
    if (a < 0 || a >= q.size())
        throw MalformedInput("quantale index " + std::to_string(a) +
                             " outside carrier");
    ValidationReport gr = check_generators(q, gens);
    if (!gr.ok())
        throw InvalidGenerators("generator set rejected: " + gr.summary());
    Rel r = Rel::empty(q.size());
    for (int g : gens.members())
        for (int p = 0; p < q.size(); ++p)
            if (q.leq(g, q.comp(a, p))) r.add(g, p);
    return r;
}

Representation represent(const ResiduatedSemigroup& rs, bool minimize) {
    FiniteQuantale q = build_quantale(rs);
    ElementSet gens = minimize ? minimize_generators(q)
                               : ElementSet::first_n(q.size());
    FiniteBase base;
    base.size = q.size();
    for (const ElementSet& c : q.closed) base.labels.push_back(c.to_string());

    Representation rep;
    rep.base = std::move(base);
    for (int a = 0; a < rs.size(); ++a)
        rep.map.push_back(hat(dm_embed(a, rs, q), q, gens));
    return rep;
}

namespace {

// appends ", cell (x,y): represented u, computed v" for the first mismatch
std::string first_cell_diff(const Rel& represented, const Rel& computed) {
    for (int x = 0; x < represented.base; ++x)
        for (int y = 0; y < represented.base; ++y)
            if (represented.contains(x, y) != computed.contains(x, y))
                return "cell (" + std::to_string(x) + "," + std::to_string(y) +
                       "): represented " +
                       (represented.contains(x, y) ? "1" : "0") + ", computed " +
                       (computed.contains(x, y) ? "1" : "0");
    return "no differing cell";
}

} // namespace

ValidationReport verify_representation(const ResiduatedSemigroup& rs,
                                       const Representation& rep) {
    int n = rs.size();
    if (static_cast<int>(rep.map.size()) != n)
        throw BaseMismatch("representation map is not total on the carrier");
    for (const Rel& r : rep.map)
        if (r.base != rep.base.size)
            throw BaseMismatch("relation base differs from the declared base");

    ValidationReport report;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rep.map[a] == rep.map[b])
                report.add("injective", {a, b}, "equal relations");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool alg = rs.leq(a, b);
            bool rel = rep.map[a].subset_of(rep.map[b]);
            if (alg != rel)
                report.add("order", {a, b},
                           alg ? "a <= b but relation not included"
                               : "relation included but not a <= b");
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Rel& composed = rep.map[rs.comp(a, b)];
            Rel computed = rel_compose(rep.map[a], rep.map[b]);
            if (!(composed == computed))
                report.add("compose", {a, b}, first_cell_diff(composed, computed));

            const Rel& left = rep.map[rs.left_residual(a, b)];
            Rel lcomputed = rel_lres(rep.map[a], rep.map[b]);
            if (!(left == lcomputed))
                report.add("left-residual", {a, b},
                           first_cell_diff(left, lcomputed));

            const Rel& right = rep.map[rs.right_residual(a, b)];
            Rel rcomputed = rel_rres(rep.map[a], rep.map[b]);
            if (!(right == rcomputed))
                report.add("right-residual", {a, b},
                           first_cell_diff(right, rcomputed));
        }

    // side observations, never failures
    Rel all = Rel::empty(rep.base.size);
    for (const Rel& r : rep.map) all = rel_union(all, r);
    bool transitive = rel_compose(all, all).subset_of(all);
    report.notes.push_back(std::string("union of represented relations is ") +
                           (transitive ? "transitive" : "not transitive"));
    ElementSet touched;
    for (auto [x, y] : all.pairs()) {
        touched.add(x);
        touched.add(y);
    }
    if (touched == ElementSet::first_n(rep.base.size))
        report.notes.push_back("every base point occurs in the union");
    else
        report.notes.push_back(
            "base points absent from the union: " +
            (ElementSet::first_n(rep.base.size) - touched).to_string());
    return report;
}

} // namespace finrep
