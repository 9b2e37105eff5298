#include "finrep/games.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>

#include "finrep/errors.hpp"

namespace finrep {

namespace {

// a <= b in the order derived from the join table
bool jleq(const JoinSemilatticeSemigroup& alg, int a, int b) {
    return alg.plus(a, b) == b;
}

ElementSet up_close_in(const JoinSemilatticeSemigroup& alg, ElementSet s) {
    ElementSet out = s;
    for (int x : s.members())
        for (int y = 0; y < alg.size(); ++y)
            if (jleq(alg, x, y)) out.add(y);
    return out;
}

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void require_node(const Prenetwork& p, int u, const char* what) {
    if (u < 0 || u >= p.nodes)
        throw IllegalMove(std::string(what) + " node " + std::to_string(u) +
                          " outside 0.." + std::to_string(p.nodes - 1));
}

void require_element(const JoinSemilatticeSemigroup& alg, int a,
                     const char* what) {
    if (a < 0 || a >= alg.size())
        throw IllegalMove(std::string(what) + " element " + std::to_string(a) +
                          " outside the carrier");
}

// union e1 into l(u,v) and re-close upward; drops nothing, never stores
// an empty label
void extend_label(Prenetwork& p, const JoinSemilatticeSemigroup& alg, int u,
                  int v, int element) {
    ElementSet s = p.label(u, v);
    s.add(element);
    p.labels[{u, v}] = up_close_in(alg, s);
}

} // namespace

NetworkCheck check_network(const Prenetwork& p,
                           const JoinSemilatticeSemigroup& alg) {
    const int n = alg.size();
    if (p.nodes < 0)
        throw MalformedPrenetwork("negative node count");
    for (const auto& [e, s] : p.labels) {
        auto [u, v] = e;
        if (u < 0 || u >= p.nodes || v < 0 || v >= p.nodes)
            throw MalformedPrenetwork("edge " + edge_str(u, v) +
                                      " references a node outside 0.." +
                                      std::to_string(p.nodes - 1));
        for (int x : s.members())
            if (x >= n)
                throw MalformedPrenetwork(
                    "label on edge " + edge_str(u, v) + " contains element " +
                    std::to_string(x) + " outside the carrier");
        if (up_close_in(alg, s) != s)
            throw MalformedPrenetwork("label on edge " + edge_str(u, v) +
                                      " is not upward closed: " +
                                      s.to_string());
    }

    NetworkCheck out;
    ValidationReport r;
    // saturation: z in l(u,v), z <= x;y  =>  some w splits the edge
    for (const auto& [e, s] : p.labels) {
        auto [u, v] = e;
        for (int z : s.members())
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (!jleq(alg, z, alg.comp(x, y))) continue;
                    bool served = false;
                    for (int w = 0; w < p.nodes && !served; ++w)
                        served = p.label(u, w).contains(x) &&
                                 p.label(w, v).contains(y);
                    if (!served)
                        r.add("saturation", {u, v, z, x, y},
                              "no node w has " + std::to_string(x) +
                                  " in l(u,w) and " + std::to_string(y) +
                                  " in l(w,v)");
                }
    }
    // coherence: b in l(u,v), c in l(v,w)  =>  b;c in l(u,w)
    for (const auto& [e1, s1] : p.labels) {
        auto [u, v] = e1;
        for (const auto& [e2, s2] : p.labels) {
            if (e2.first != v) continue;
            int w = e2.second;
            for (int b : s1.members())
                for (int c : s2.members())
                    if (!p.label(u, w).contains(alg.comp(b, c)))
                        r.add("coherence", {u, v, w, b, c},
                              "composite " + std::to_string(alg.comp(b, c)) +
                                  " missing from l" + edge_str(u, w));
        }
    }
    // join-primeness: a+b in l(u,v)  =>  a in l(u,v) or b in l(u,v)
    for (const auto& [e, s] : p.labels) {
        auto [u, v] = e;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (s.contains(alg.plus(a, b)) && !s.contains(a) &&
                    !s.contains(b))
                    r.add("join-primeness", {u, v, a, b},
                          "sum " + std::to_string(alg.plus(a, b)) +
                              " present but neither summand is");
    }
    auto has = [&](const char* law) {
        for (const auto& v : r.violations)
            if (v.law == law) return true;
        return false;
    };
    out.saturated = !has("saturation");
    out.coherent = !has("coherence");
    out.join_prime = !has("join-primeness");
    out.witnesses = std::move(r.violations);
    return out;
}

Prenetwork initial_network(const JoinSemilatticeSemigroup& alg,
                           GoalPair goal) {
    const int n = alg.size();
    if (goal.a < 0 || goal.a >= n || goal.b < 0 || goal.b >= n)
        throw InvalidGoal("goal (" + std::to_string(goal.a) + "," +
                          std::to_string(goal.b) +
                          ") references elements outside the carrier");
    if (jleq(alg, goal.a, goal.b))
        throw InvalidGoal("goal (" + std::to_string(goal.a) + "," +
                          std::to_string(goal.b) +
                          ") invalid: first element lies below the second");
    Prenetwork p;
    p.nodes = 2;
    p.labels[{0, 1}] = up_close_in(alg, ElementSet::single(goal.a));
    return p;
}

std::vector<GoalPair> all_goals(const JoinSemilatticeSemigroup& alg) {
    std::vector<GoalPair> out;
    for (int a = 0; a < alg.size(); ++a)
        for (int b = 0; b < alg.size(); ++b)
            if (!jleq(alg, a, b)) out.push_back({a, b});
    return out;
}

std::vector<Move> legal_forall_moves(const Prenetwork& p,
                                     const JoinSemilatticeSemigroup& alg,
                                     bool prune) {
    const int n = alg.size();
    std::vector<Move> moves;
    std::set<std::tuple<int, int, int, int, int>> seen;

    // composition moves: b in l(x,y), c in l(y,z)
    for (const auto& [e1, lxy] : p.labels) {
        auto [x, y] = e1;
        for (int b : lxy.members())
            for (const auto& [e2, lyz] : p.labels) {
                if (e2.first != y) continue;
                int z = e2.second;
                for (int c : lyz.members()) {
                    if (prune) {
                        if (p.label(x, z).contains(alg.comp(b, c))) continue;
                        auto eff = std::tuple{0, x, z, alg.comp(b, c), 0};
                        if (!seen.insert(eff).second) continue;
                    }
                    moves.push_back(
                        {Move::Kind::Composition, x, y, z, b, c, -1});
                }
            }
    }
    // witness moves: some c in l(x,y) with c <= d;e
    for (const auto& [e1, lxy] : p.labels) {
        auto [x, y] = e1;
        for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e) {
                int just = -1;
                for (int c : lxy.members())
                    if (jleq(alg, c, alg.comp(d, e))) {
                        just = c;
                        break;
                    }
                if (just < 0) continue;
                if (prune) {
                    bool served = false;
                    for (int w = 0; w < p.nodes && !served; ++w)
                        served = p.label(x, w).contains(d) &&
                                 p.label(w, y).contains(e);
                    if (served) continue;
                }
                moves.push_back({Move::Kind::Witness, x, y, -1, d, e, just});
            }
    }
    // join moves: c+d in l(x,y)
    for (const auto& [e1, lxy] : p.labels) {
        auto [x, y] = e1;
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
                if (!lxy.contains(alg.plus(c, d))) continue;
                if (prune && (lxy.contains(c) || lxy.contains(d))) continue;
                moves.push_back({Move::Kind::Join, x, y, -1, c, d, -1});
            }
    }
    return moves;
}

std::vector<Prenetwork> exists_responses(const Prenetwork& p, const Move& m,
                                         const JoinSemilatticeSemigroup& alg) {
    require_node(p, m.x, "move");
    require_node(p, m.y, "move");
    require_element(alg, m.e1, "move");
    require_element(alg, m.e2, "move");
    std::vector<Prenetwork> out;
    switch (m.kind) {
        case Move::Kind::Composition: {
            require_node(p, m.z, "composition target");
            if (!p.label(m.x, m.y).contains(m.e1))
                throw IllegalMove("composition move: " + std::to_string(m.e1) +
                                  " not in l" + edge_str(m.x, m.y));
            if (!p.label(m.y, m.z).contains(m.e2))
                throw IllegalMove("composition move: " + std::to_string(m.e2) +
                                  " not in l" + edge_str(m.y, m.z));
            Prenetwork q = p;
            extend_label(q, alg, m.x, m.z, alg.comp(m.e1, m.e2));
            out.push_back(std::move(q));
            break;
        }
        case Move::Kind::Witness: {
            bool justified = false;
            if (m.just >= 0) {
                require_element(alg, m.just, "witness justification");
                justified = p.label(m.x, m.y).contains(m.just) &&
                            jleq(alg, m.just, alg.comp(m.e1, m.e2));
            } else {
                for (int c : p.label(m.x, m.y).members())
                    if (jleq(alg, c, alg.comp(m.e1, m.e2))) {
                        justified = true;
                        break;
                    }
            }
            if (!justified)
                throw IllegalMove(
                    "witness move on edge " + edge_str(m.x, m.y) +
                    ": no label element lies below " + std::to_string(m.e1) +
                    ";" + std::to_string(m.e2));
            // one successor per existing node, then exactly one fresh node
            for (int w = 0; w <= p.nodes; ++w) {
                Prenetwork q = p;
                if (w == p.nodes) q.nodes = p.nodes + 1;
                extend_label(q, alg, m.x, w, m.e1);
                extend_label(q, alg, w, m.y, m.e2);
                out.push_back(std::move(q));
            }
            break;
        }
        case Move::Kind::Join: {
            if (!p.label(m.x, m.y).contains(alg.plus(m.e1, m.e2)))
                throw IllegalMove("join move: " + std::to_string(m.e1) + "+" +
                                  std::to_string(m.e2) + " not in l" +
                                  edge_str(m.x, m.y));
            for (int add : {m.e1, m.e2}) {
                Prenetwork q = p;
                extend_label(q, alg, m.x, m.y, add);
                out.push_back(std::move(q));
            }
            break;
        }
    }
    return out;
}

namespace {

// Memoized bounded minimax.  Keys canonicalize node names by breadth-first
// traversal from the root pair (0,1); positions whose BFS order is ambiguous
// (equal sibling signatures) fall back to exact-identity keys, which only
// costs memo hits, never correctness.
struct GameSolver {
    const JoinSemilatticeSemigroup& alg;
    int goal_b;
    bool prune;
    std::unordered_map<std::string, bool> memo;

    std::string position_key(const Prenetwork& p, int depth) const {
        std::vector<int> order;
        std::vector<char> seen(p.nodes, 0);
        auto push = [&](int u) {
            order.push_back(u);
            seen[u] = 1;
        };
        if (p.nodes >= 1) push(0);
        if (p.nodes >= 2) push(1);
        bool ambiguous = false;
        for (std::size_t head = 0; head < order.size() && !ambiguous; ++head) {
            int u = order[head];
            std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, int>>
                nb;
            for (int w = 0; w < p.nodes; ++w) {
                if (seen[w]) continue;
                std::uint64_t a = p.label(u, w).bits();
                std::uint64_t b = p.label(w, u).bits();
                if (a || b) nb.push_back({{a, b}, w});
            }
            std::sort(nb.begin(), nb.end());
            for (std::size_t i = 0; i + 1 < nb.size(); ++i)
                if (nb[i].first == nb[i + 1].first) ambiguous = true;
            if (!ambiguous)
                for (const auto& [sig, w] : nb) push(w);
        }
        std::string k;
        if (!ambiguous && static_cast<int>(order.size()) == p.nodes) {
            std::vector<int> pos(p.nodes);
            for (std::size_t i = 0; i < order.size(); ++i)
                pos[order[i]] = static_cast<int>(i);
            std::vector<std::tuple<int, int, std::uint64_t>> es;
            for (const auto& [e, s] : p.labels)
                if (!s.empty())
                    es.push_back({pos[e.first], pos[e.second], s.bits()});
            std::sort(es.begin(), es.end());
            k = "C" + std::to_string(p.nodes) + "@" + std::to_string(depth);
            for (const auto& [u, v, bits] : es)
                k += ";" + std::to_string(u) + "," + std::to_string(v) + ":" +
                     std::to_string(bits);
        } else {
            k = "X" + std::to_string(p.nodes) + "@" + std::to_string(depth);
            for (const auto& [e, s] : p.labels)
                if (!s.empty())
                    k += ";" + std::to_string(e.first) + "," +
                         std::to_string(e.second) + ":" +
                         std::to_string(s.bits());
        }
        return k;
    }

    bool forall_wins(const Prenetwork& p, int depth) {
        if (p.label(0, 1).contains(goal_b)) return true;
        if (depth == 0) return false;
        std::string key = position_key(p, depth);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool res = false;
        for (const Move& mv : legal_forall_moves(p, alg, prune)) {
            bool all_win = true;
            for (const Prenetwork& r : exists_responses(p, mv, alg))
                if (!forall_wins(r, depth - 1)) {
                    all_win = false;
                    break;
                }
            if (all_win) {
                res = true;
                break;
            }
        }
        memo.emplace(std::move(key), res);
        return res;
    }

    // second pass over a position already known winning for the universal
    // player: re-derive the winning move through the warm memo
    Certificate build_certificate(const Prenetwork& p, int depth) {
        Certificate c;
        if (p.label(0, 1).contains(goal_b)) {
            c.win = true;
            return c;
        }
        if (depth == 0)
            throw InternalError(
                "certificate reconstruction reached depth 0 in a position "
                "claimed winning");
        for (const Move& mv : legal_forall_moves(p, alg, prune)) {
            auto rs = exists_responses(p, mv, alg);
            bool all_win = true;
            for (const Prenetwork& r : rs)
                if (!forall_wins(r, depth - 1)) {
                    all_win = false;
                    break;
                }
            if (!all_win) continue;
            c.move = mv;
            c.children.reserve(rs.size());
            for (const Prenetwork& r : rs)
                c.children.push_back(build_certificate(r, depth - 1));
            return c;
        }
        throw InternalError(
            "certificate reconstruction found no winning move in a position "
            "claimed winning");
    }
};

} // namespace

Verdict solve_game(const JoinSemilatticeSemigroup& alg, int depth,
                   GoalPair goal, int depth_cap) {
    if (depth < 0) throw MalformedInput("game depth must be nonnegative");
    if (depth > depth_cap)
        throw DepthCapExceeded("game depth " + std::to_string(depth) +
                               " exceeds the configured cap " +
                               std::to_string(depth_cap));
    Prenetwork init = initial_network(alg, goal);
    GameSolver solver{alg, goal.b, /*prune=*/true, {}};
    Verdict v;
    v.depth = depth;
    if (solver.forall_wins(init, depth)) {
        v.winner = Winner::Forall;
        v.certificate = solver.build_certificate(init, depth);
    } else {
        v.winner = Winner::Exists;
    }
    return v;
}

std::map<std::pair<int, int>, Verdict> solve_game_all(
    const JoinSemilatticeSemigroup& alg, int depth, int depth_cap) {
    std::map<std::pair<int, int>, Verdict> out;
    for (GoalPair g : all_goals(alg))
        out.emplace(std::pair{g.a, g.b}, solve_game(alg, depth, g, depth_cap));
    return out;
}

namespace {

bool replay_certificate(const JoinSemilatticeSemigroup& alg,
                        const Prenetwork& p, int goal_b,
                        const Certificate& cert, int depth) {
    if (cert.win) return p.label(0, 1).contains(goal_b);
    if (depth <= 0) return false;  // truncated: claims a move with no rounds left
    if (!cert.move) return false;
    std::vector<Prenetwork> rs;
    try {
        rs = exists_responses(p, *cert.move, alg);
    } catch (const ValidationError&) {
        return false;  // illegal move spliced in
    }
    if (rs.size() != cert.children.size()) return false;
    for (std::size_t i = 0; i < rs.size(); ++i)
        if (!replay_certificate(alg, rs[i], goal_b, cert.children[i],
                                depth - 1))
            return false;
    return true;
}

} // namespace

bool verify_certificate(const JoinSemilatticeSemigroup& alg, GoalPair goal,
                        const Certificate& cert, int depth) {
    if (depth < 0) return false;
    Prenetwork init;
    try {
        init = initial_network(alg, goal);
    } catch (const ValidationError&) {
        return false;
    }
    return replay_certificate(alg, init, goal.b, cert, depth);
}

std::pair<Representation, ValidationReport> saturate_and_extract_rep(
    const JoinSemilatticeSemigroup& alg, int node_budget, int round_budget) {
    const int n = alg.size();
    if (node_budget < 2 || round_budget < 1)
        throw BudgetExhausted(
            "budgets below the minimum viable game: need at least 2 nodes "
            "and 1 round, got " +
            std::to_string(node_budget) + " nodes / " +
            std::to_string(round_budget) + " rounds");

    ValidationReport report;
    std::vector<GoalPair> goals = all_goals(alg);
    std::vector<Prenetwork> nets;

    if (goals.empty()) {
        // one-element algebra: nothing to defend; a single self-loop
        // labelled with the whole (one-element) carrier is already a network
        Prenetwork net;
        net.nodes = 1;
        net.labels[{0, 0}] = up_close_in(alg, ElementSet::single(0));
        nets.push_back(std::move(net));
        report.notes.push_back(
            "no goal pairs (one-element algebra); seeded a single self-loop");
    } else {
        const int lookahead = std::min(round_budget, 4);
        std::vector<GameSolver> steer;
        steer.reserve(goals.size());
        for (GoalPair g : goals) {
            Verdict v = solve_game(alg, lookahead, g);
            if (v.winner == Winner::Forall)
                throw NotKnownExistsWin(
                    "universal player wins goal (" + std::to_string(g.a) +
                    "," + std::to_string(g.b) + ") at depth " +
                    std::to_string(lookahead) +
                    "; the algebra has no representation");
            nets.push_back(initial_network(alg, g));
            steer.push_back(GameSolver{alg, g.b, /*prune=*/true, {}});
        }

        // round-robin: each turn a net serves its first pending obligation,
        // with the existential player steering by bounded solver lookahead
        const int steer_depth = std::min(round_budget, 2);
        std::vector<char> done(nets.size(), 0);
        int rounds_used = 0;
        while (rounds_used < round_budget) {
            bool progressed = false;
            for (std::size_t gi = 0;
                 gi < nets.size() && rounds_used < round_budget; ++gi) {
                if (done[gi]) continue;
                bool applied = false;
                for (const Move& mv :
                     legal_forall_moves(nets[gi], alg, /*prune=*/true)) {
                    auto rs = exists_responses(nets[gi], mv, alg);
                    int chosen = -1, fallback = -1;
                    for (std::size_t ri = 0; ri < rs.size(); ++ri) {
                        if (rs[ri].nodes > node_budget) continue;
                        if (fallback < 0) fallback = static_cast<int>(ri);
                        if (!steer[gi].forall_wins(rs[ri], steer_depth)) {
                            chosen = static_cast<int>(ri);
                            break;
                        }
                    }
                    if (chosen < 0) chosen = fallback;
                    if (chosen < 0) continue;  // budget blocks every response
                    nets[gi] = rs[chosen];
                    ++rounds_used;
                    applied = true;
                    progressed = true;
                    break;
                }
                if (!applied) done[gi] = 1;  // saturated within the budget
            }
            if (!progressed) break;
        }
        bool all_done = true;
        for (std::size_t gi = 0; gi < nets.size(); ++gi)
            if (!done[gi] &&
                !legal_forall_moves(nets[gi], alg, /*prune=*/true).empty())
                all_done = false;
        report.notes.push_back(
            all_done ? "all scheduled obligations served within budget"
                     : "round budget exhausted with obligations pending");
    }

    // disjoint union of the per-goal networks
    int total = 0;
    for (const Prenetwork& net : nets) total += net.nodes;
    FiniteBase base;
    base.size = total;
    for (int i = 0; i < total; ++i) base.labels.push_back("n" + std::to_string(i));

    Representation rep;
    rep.base = base;
    rep.map.assign(n, Rel::empty(total));
    for (int a = 0; a < n; ++a) {
        int off = 0;
        for (const Prenetwork& net : nets) {
            for (const auto& [e, s] : net.labels)
                for (int b : s.members())
                    if (jleq(alg, b, a)) {
                        rep.map[a].add(off + e.first, off + e.second);
                        break;
                    }
            off += net.nodes;
        }
    }

    // representation laws on the finite approximation
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rep.map[a] == rep.map[b])
                report.add("rep-injective", {a, b},
                           "distinct elements share the relation " +
                               std::to_string(a) + " ~ " + std::to_string(b));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!(rep.map[alg.plus(a, b)] ==
                  rel_union(rep.map[a], rep.map[b])))
                report.add("rep-join", {a, b},
                           "rep(" + std::to_string(a) + "+" +
                               std::to_string(b) +
                               ") differs from the union of the parts");
            if (!(rep.map[alg.comp(a, b)] ==
                  rel_compose(rep.map[a], rep.map[b])))
                report.add("rep-compose", {a, b},
                           "rep(" + std::to_string(a) + ";" +
                               std::to_string(b) +
                               ") differs from the composite of the parts");
        }
    if (!report.ok())
        report.notes.push_back(
            "BUDGET-INCONCLUSIVE: law failures on a truncated saturation do "
            "not refute representability");
    return {std::move(rep), std::move(report)};
}

// -- axiom schema -----------------------------------------------------------

namespace {

// persistent-style extension: copy, then append if not structurally present
TermNetwork tnet_add(const TermNetwork& net, std::pair<int, int> e,
                     const TermPtr& t) {
    TermNetwork out = net;
    auto& v = out.labels[e];
    for (const TermPtr& u : v)
        if (term_equal(u, t)) return out;
    v.push_back(t);
    return out;
}

} // namespace

FormulaPtr emit_sigma(int rounds, const TermNetwork& net, int goal_var,
                      int& fresh_var) {
    if (rounds == 0) {
        std::vector<FormulaPtr> cs;
        auto it = net.labels.find({0, 1});
        if (it != net.labels.end())
            for (const TermPtr& t : it->second)
                cs.push_back(Formula::negation(
                    Formula::leq(t, Term::make_var(goal_var))));
        return Formula::conj(std::move(cs));
    }
    std::vector<FormulaPtr> cl;
    // composition clauses
    for (const auto& [e1, lxy] : net.labels) {
        auto [x, y] = e1;
        for (const TermPtr& t1 : lxy)
            for (const auto& [e2, lyz] : net.labels) {
                if (e2.first != y) continue;
                int z = e2.second;
                for (const TermPtr& t2 : lyz)
                    cl.push_back(emit_sigma(
                        rounds - 1,
                        tnet_add(net, {x, z}, Term::semi(t1, t2)), goal_var,
                        fresh_var));
            }
    }
    // witness clauses
    for (const auto& [e1, lxy] : net.labels) {
        auto [x, y] = e1;
        for (const TermPtr& t : lxy) {
            int u1 = fresh_var++;
            int u2 = fresh_var++;
            std::vector<FormulaPtr> disj;
            for (int w = 0; w <= net.nodes; ++w) {
                TermNetwork ext =
                    tnet_add(net, {x, w}, Term::make_var(u1));
                ext = tnet_add(ext, {w, y}, Term::make_var(u2));
                if (w == net.nodes) ext.nodes = net.nodes + 1;
                disj.push_back(
                    emit_sigma(rounds - 1, ext, goal_var, fresh_var));
            }
            cl.push_back(Formula::forall(
                u1,
                Formula::forall(
                    u2, Formula::implies(
                            Formula::leq(t, Term::semi(Term::make_var(u1),
                                                       Term::make_var(u2))),
                            Formula::disj(std::move(disj))))));
        }
    }
    // join clauses
    for (const auto& [e1, lxy] : net.labels) {
        auto [x, y] = e1;
        for (const TermPtr& t : lxy) {
            int a = fresh_var++;
            int b = fresh_var++;
            FormulaPtr left =
                emit_sigma(rounds - 1, tnet_add(net, {x, y}, Term::make_var(a)),
                           goal_var, fresh_var);
            FormulaPtr right =
                emit_sigma(rounds - 1, tnet_add(net, {x, y}, Term::make_var(b)),
                           goal_var, fresh_var);
            cl.push_back(Formula::forall(
                a, Formula::forall(
                       b, Formula::implies(
                              Formula::leq(t, Term::plus(Term::make_var(a),
                                                         Term::make_var(b))),
                              Formula::disj({std::move(left),
                                             std::move(right)})))));
        }
    }
    return Formula::conj(std::move(cl));
}

FormulaPtr emit_rho(int rounds) {
    int fresh_var = 2;
    TermNetwork net;
    net.nodes = 2;
    net.labels[{0, 1}] = {Term::make_var(0)};
    FormulaPtr body = emit_sigma(rounds, net, 1, fresh_var);
    return Formula::forall(
        0, Formula::forall(
               1, Formula::implies(
                      Formula::negation(Formula::leq(Term::make_var(0),
                                                     Term::make_var(1))),
                      std::move(body))));
}

} // namespace finrep
