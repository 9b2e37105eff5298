#include "finrep/algebra.hpp"

#include "finrep/errors.hpp"
#include "finrep/terms.hpp"

namespace finrep {

void require_square_table(const Table& t, int n, const char* name) {
    if (static_cast<int>(t.size()) != n)
        throw MalformedInput(std::string(name) + " table has " +
                             std::to_string(t.size()) + " rows, expected " +
                             std::to_string(n));
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n)
            throw MalformedInput(std::string(name) + " table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw MalformedInput(std::string(name) + " table entry " +
                                     std::to_string(v) + " outside carrier");
    }
}

bool table_associative(const Table& t, int n, int* a, int* b, int* c) {
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = t[x][y];
            for (int z = 0; z < n; ++z)
                if (t[xy][z] != t[x][t[y][z]]) {
                    if (a) *a = x;
                    if (b) *b = y;
                    if (c) *c = z;
                    return false;
                }
        }
    return true;
}

bool table_monotone(const Table& t, const FinitePoset& order, int* a, int* b,
                    int* c) {
    int n = order.size();
    for (int x = 0; x < n; ++x)
        for (int y : order.upset(x).members())
            for (int z = 0; z < n; ++z) {
                // x <= y must give x;z <= y;z and z;x <= z;y
                if (!order.leq(t[x][z], t[y][z]) || !order.leq(t[z][x], t[z][y])) {
                    if (a) *a = x;
                    if (b) *b = y;
                    if (c) *c = z;
                    return false;
                }
            }
    return true;
}

ValidationReport validate_residuated_semigroup(const ResiduatedSemigroup& rs) {
    int n = rs.size();
    require_square_table(rs.compose, n, "compose");
    require_square_table(rs.lres, n, "left residual");
    require_square_table(rs.rres, n, "right residual");

    ValidationReport report;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = rs.comp(a, b);
            for (int c = 0; c < n; ++c)
                if (rs.comp(ab, c) != rs.comp(a, rs.comp(b, c)))
                    report.add("associativity", {a, b, c});
        }
    for (int a = 0; a < n; ++a)
        for (int b : rs.poset.upset(a).members())
            for (int c = 0; c < n; ++c) {
                if (!rs.leq(rs.comp(a, c), rs.comp(b, c)))
                    report.add("monotonicity-left", {a, b, c});
                if (!rs.leq(rs.comp(c, a), rs.comp(c, b)))
                    report.add("monotonicity-right", {a, b, c});
            }
    // two-way adjunction, all triples: b <= a\c <=> a;b <= c <=> a <= c/b
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                bool compose_leq = rs.leq(rs.comp(a, b), c);
                if (rs.leq(b, rs.left_residual(a, c)) != compose_leq)
                    report.add("adjunction", {a, b, c},
                               "b <= a\\c disagrees with a;b <= c");
                if (rs.leq(a, rs.right_residual(c, b)) != compose_leq)
                    report.add("adjunction", {a, b, c},
                               "a <= c/b disagrees with a;b <= c");
            }
    return report;
}

ValidationReport validate_jsl(const JoinSemilatticeSemigroup& alg) {
    int n = alg.size();
    require_carrier_size(n);
    require_square_table(alg.compose, n, "compose");
    require_square_table(alg.join, n, "join");

    ValidationReport report;
    for (int a = 0; a < n; ++a) {
        if (alg.plus(a, a) != a) report.add("join-idempotent", {a});
        for (int b = 0; b < n; ++b) {
            if (alg.plus(a, b) != alg.plus(b, a))
                report.add("join-commutative", {a, b});
            for (int c = 0; c < n; ++c) {
                if (alg.plus(alg.plus(a, b), c) != alg.plus(a, alg.plus(b, c)))
                    report.add("join-associative", {a, b, c});
                if (alg.comp(alg.comp(a, b), c) != alg.comp(a, alg.comp(b, c)))
                    report.add("associativity", {a, b, c});
                if (alg.comp(a, alg.plus(b, c)) !=
                    alg.plus(alg.comp(a, b), alg.comp(a, c)))
                    report.add("left-distributivity", {a, b, c},
                               "a;(b+c) != a;b + a;c");
                if (alg.comp(alg.plus(a, b), c) !=
                    alg.plus(alg.comp(a, c), alg.comp(b, c)))
                    report.add("right-distributivity", {a, b, c},
                               "(a+b);c != a;c + b;c");
            }
        }
    }
    return report;
}

std::optional<ResidualTables> try_derive_residuals(const Table& compose,
                                                   const FinitePoset& order,
                                                   int* bad_a, int* bad_c,
                                                   bool* bad_is_left) {
    int n = order.size();
    require_square_table(compose, n, "compose");
    ResidualTables out;
    out.lres.assign(n, std::vector<int>(n, -1));
    out.rres.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            ElementSet candidates;  // {b : a;b <= c}
            for (int b = 0; b < n; ++b)
                if (order.leq(compose[a][b], c)) candidates.add(b);
            int m = candidates.empty() ? -1 : order.max_of(candidates);
            if (m < 0) {
                if (bad_a) *bad_a = a;
                if (bad_c) *bad_c = c;
                if (bad_is_left) *bad_is_left = true;
                return std::nullopt;
            }
            out.lres[a][c] = m;
        }
    for (int c = 0; c < n; ++c)
        for (int b = 0; b < n; ++b) {
            ElementSet candidates;  // {a : a;b <= c}
            for (int a = 0; a < n; ++a)
                if (order.leq(compose[a][b], c)) candidates.add(a);
            int m = candidates.empty() ? -1 : order.max_of(candidates);
            if (m < 0) {
                if (bad_a) *bad_a = c;
                if (bad_c) *bad_c = b;
                if (bad_is_left) *bad_is_left = false;
                return std::nullopt;
            }
            out.rres[c][b] = m;
        }
    return out;
}

ResidualTables derive_residuals(const Table& compose, const FinitePoset& order) {
    int a = 0, c = 0;
    bool left = true;
    auto r = try_derive_residuals(compose, order, &a, &c, &left);
    if (!r) throw NotResiduated(a, c, left ? "a\\c" : "c/b");
    return *r;
}

FinitePoset order_from_join(const Table& join) {
    int n = static_cast<int>(join.size());
    require_carrier_size(n);
    require_square_table(join, n, "join");
    // check the semilattice laws first so the derived matrix is meaningful
    for (int a = 0; a < n; ++a) {
        if (join[a][a] != a)
            throw InvalidSemilattice("join not idempotent at " + std::to_string(a));
        for (int b = 0; b < n; ++b) {
            if (join[a][b] != join[b][a])
                throw InvalidSemilattice("join not commutative at (" +
                                         std::to_string(a) + "," +
                                         std::to_string(b) + ")");
            for (int c = 0; c < n; ++c)
                if (join[join[a][b]][c] != join[a][join[b][c]])
                    throw InvalidSemilattice("join not associative at (" +
                                             std::to_string(a) + "," +
                                             std::to_string(b) + "," +
                                             std::to_string(c) + ")");
        }
    }
    BoolMatrix leq(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (join[a][b] == b) leq[a].add(b);
    return FinitePoset(leq, n);  // semilattice laws make this a poset
}

// -- terms ------------------------------------------------------------------

TermPtr Term::make_var(int index) {
    if (index < 0) throw MalformedInput("negative variable index");
    auto t = std::make_shared<Term>();
    t->kind = Kind::Var;
    t->var = index;
    return t;
}

TermPtr Term::plus(TermPtr l, TermPtr r) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Plus;
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

TermPtr Term::semi(TermPtr l, TermPtr r) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Semi;
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

int Valuation::lookup(int var) const {
    if (var < 0 || var >= static_cast<int>(values_.size()) || values_[var] < 0)
        throw UnboundVariable(var);
    return values_[var];
}

int eval_term(const TermPtr& t, const Valuation& v,
              const JoinSemilatticeSemigroup& alg) {
    switch (t->kind) {
        case Term::Kind::Var:
            return v.lookup(t->var);
        case Term::Kind::Plus:
            return alg.plus(eval_term(t->left, v, alg), eval_term(t->right, v, alg));
        case Term::Kind::Semi:
            return alg.comp(eval_term(t->left, v, alg), eval_term(t->right, v, alg));
    }
    throw InternalError("corrupt term node");
}

std::string print_term(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Var:
            return "v" + std::to_string(t->var);
        case Term::Kind::Plus:
            return "(" + print_term(t->left) + " + " + print_term(t->right) + ")";
        case Term::Kind::Semi:
            return "(" + print_term(t->left) + " ; " + print_term(t->right) + ")";
    }
    throw InternalError("corrupt term node");
}

void collect_term_vars(const TermPtr& t, std::set<int>& out) {
    if (t->kind == Term::Kind::Var) {
        out.insert(t->var);
        return;
    }
    collect_term_vars(t->left, out);
    collect_term_vars(t->right, out);
}

} // namespace finrep
