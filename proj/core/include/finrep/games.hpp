#pragma once
// Representability games over join semilattice-ordered semigroups:
// prenetworks and the network conditions, the three kinds of attacking moves
// with their response rules, a memoized bounded minimax solver with
// replayable certificates for universal-player wins, budgeted representation
// extraction from winning plays, and the sigma/rho axiom schema.
//
// Conventions fixed across the module (and recorded in the project ledger):
//   - the goal obligation lives on the round-0 edge (x0,x1) = (0,1);
//     the universal player wins a play once b lands in that label
//   - join moves require the sum to be present in the attacked label
//   - a witness response may reuse any existing node or a single fresh one;
//     labels extend by union followed by upward closure

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "finrep/algebra.hpp"
#include "finrep/formula.hpp"
#include "finrep/relational.hpp"
#include "finrep/report.hpp"

namespace finrep {

struct Prenetwork {
    int nodes = 0;
    // edge -> label; absent edge = empty label.  Labels must be upward
    // closed w.r.t. the algebra's derived order.
    std::map<std::pair<int, int>, ElementSet> labels;

    ElementSet label(int u, int v) const {
        auto it = labels.find({u, v});
        return it == labels.end() ? ElementSet() : it->second;
    }
    // union into the edge label; the caller up-closes
    void add_label(int u, int v, ElementSet s) { labels[{u, v}] |= s; }

    bool operator==(const Prenetwork&) const = default;
};

struct NetworkCheck {
    bool saturated = false;
    bool coherent = false;
    bool join_prime = false;
    std::vector<Violation> witnesses;

    bool is_network() const { return saturated && coherent && join_prime; }
};

struct GoalPair {
    int a = 0, b = 0;

    auto operator<=>(const GoalPair&) const = default;
};

struct Move {
    enum class Kind { Composition, Witness, Join };

    Kind kind;
    int x = 0, y = 0;  // attacked edge (Witness/Join) or first hop (Composition)
    int z = -1;        // Composition only: second edge is (y,z)
    int e1 = 0, e2 = 0;  // Composition: b,c | Witness: d,e | Join: c,d
    int just = -1;       // Witness only: optional justifying label element

    bool operator==(const Move&) const = default;
};

enum class Winner { Exists, Forall };

// Strategy tree for a universal-player win: at an inner node the universal
// player commits to `move`; children line up one-to-one with the ordered
// exists_responses list.  A leaf claims the goal element already sits in the
// round-0 label.
struct Certificate {
    bool win = false;
    std::optional<Move> move;
    std::vector<Certificate> children;
};

struct Verdict {
    int depth = 0;
    Winner winner = Winner::Exists;
    std::optional<Certificate> certificate;  // present iff winner == Forall
};

// Validates node indices, element ranges, and upward closure of every label
// (MalformedPrenetwork otherwise), then evaluates the three network
// conditions, collecting capped witnesses:
//   saturation      z in l(u,v), z <= x;y  =>  some w has x in l(u,w), y in l(w,v)
//   coherence       b in l(u,v), c in l(v,w)  =>  b;c in l(u,w)
//   join-primeness  a+b in l(u,v)  =>  a in l(u,v) or b in l(u,v)
NetworkCheck check_network(const Prenetwork& p,
                           const JoinSemilatticeSemigroup& alg);

// Two nodes, one edge (0,1) labelled with the up-closure of {goal.a}.
// Throws InvalidGoal when the pair is out of range or goal.a <= goal.b.
Prenetwork initial_network(const JoinSemilatticeSemigroup& alg, GoalPair goal);

// All goal pairs (a,b) with a not below b, in lexicographic order.
std::vector<GoalPair> all_goals(const JoinSemilatticeSemigroup& alg);

// Attacking moves available to the universal player.  With prune = true
// (the default used by the solver) duplicates and absorbed moves are
// dropped: compositions whose product already sits in the target label,
// joins where either summand is already present, witnesses already served
// by some node.  Pruning never changes solver verdicts.
std::vector<Move> legal_forall_moves(const Prenetwork& p,
                                     const JoinSemilatticeSemigroup& alg,
                                     bool prune = true);

// The existential player's options against a legal move, in deterministic
// order: a composition forces one successor; a witness yields one successor
// per existing node plus exactly one fresh node (in node order, fresh last);
// a join yields the two one-summand extensions (first summand first).
// Throws IllegalMove when the move's side conditions fail in p.
std::vector<Prenetwork> exists_responses(const Prenetwork& p, const Move& m,
                                         const JoinSemilatticeSemigroup& alg);

// Bounded minimax from the initial network of the goal: FORALL wins iff the
// universal player can force the goal element into the round-0 label within
// `depth` rounds.  Memoized on canonicalized positions; FORALL verdicts
// carry a certificate.  Throws DepthCapExceeded when depth > depth_cap and
// InvalidGoal for bad goals.
Verdict solve_game(const JoinSemilatticeSemigroup& alg, int depth,
                   GoalPair goal, int depth_cap = 6);

// solve_game across all_goals; the one-element algebra yields an empty map.
std::map<std::pair<int, int>, Verdict> solve_game_all(
    const JoinSemilatticeSemigroup& alg, int depth, int depth_cap = 6);

// Replays a certificate against every existential response, checking raw
// move legality (side conditions only -- absorbed moves are legal), child
// alignment, and that every branch reaches the goal within `depth` rounds.
// Structural damage (bad indices, missing children) makes it return false.
bool verify_certificate(const JoinSemilatticeSemigroup& alg, GoalPair goal,
                        const Certificate& cert, int depth);

// Budgeted saturation: seeds one initial network per goal (a single
// self-loop labelled with the whole carrier's upward closure of each element
// when no goals exist), round-robins over pending attacking moves with the
// existential player steering by bounded solver lookahead, then reads off
//   rep(a) = {(x,y) : some b <= a has b in l(x,y)}
// over the disjoint union of the networks.  The report checks injectivity,
// rep(a+b) = rep(a) u rep(b), and rep(a;b) = rep(a);rep(b) on the finite
// approximation; failures are tagged BUDGET-INCONCLUSIVE in the notes since
// a truncated run cannot refute representability.  Throws BudgetExhausted
// for budgets below (2 nodes, 1 round) and NotKnownExistsWin when the
// lookahead solver already hands the universal player a win.
std::pair<Representation, ValidationReport> saturate_and_extract_rep(
    const JoinSemilatticeSemigroup& alg, int node_budget, int round_budget);

// -- axiom schema -----------------------------------------------------------

// Network whose labels are finite lists of terms; variables stand for
// algebra elements chosen at evaluation time.
struct TermNetwork {
    int nodes = 0;
    std::map<std::pair<int, int>, std::vector<TermPtr>> labels;
};

// sigma_n(net, v): the existential player survives n more rounds of the
// game played on (an instantiation of) net with goal element v.
//   sigma_0        = conjunction over terms t on the (0,1) edge of !(t <= v)
//   sigma_{n+1}    = composition clauses (recurse on the composed network)
//                  & witness clauses  (forall u1,u2: t <= u1;u2 ->
//                       disjunction over old nodes + one fresh node of
//                       sigma_n on the witness-extended network)
//                  & join clauses     (forall a,b: t <= a+b ->
//                       sigma_n(label+a) | sigma_n(label+b))
// fresh_var supplies quantifier variable indices and is advanced in place.
FormulaPtr emit_sigma(int rounds, const TermNetwork& net, int goal_var,
                      int& fresh_var);

// rho_n = forall v0 v1 (!(v0 <= v1) -> sigma_n(two-node network labelled
// {v0} on edge (0,1), goal v1)); rho_0 is a tautology.
FormulaPtr emit_rho(int rounds);

} // namespace finrep
