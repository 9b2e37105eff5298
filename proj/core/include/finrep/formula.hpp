#pragma once
// First-order formulas over join semilattice-ordered semigroups: inequality
// atoms between terms, the propositional connectives, and element
// quantifiers.  Enough for the axiom schema and its finite-model evaluation.

#include <memory>
#include <string>
#include <vector>

#include "finrep/terms.hpp"

namespace finrep {

struct JoinSemilatticeSemigroup;  // algebra.hpp

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { Leq, Not, And, Or, Implies, Forall, Exists };

    Kind kind;
    TermPtr lhs, rhs;                  // Leq
    std::vector<FormulaPtr> children;  // Not:1, And/Or:0+, Implies:2, quantifiers:1
    int var = -1;                      // Forall / Exists

    static FormulaPtr leq(TermPtr l, TermPtr r);
    static FormulaPtr negation(FormulaPtr f);
    // Single-element conjunctions/disjunctions collapse to the element; the
    // empty ones stay as nodes and print as "true" / "false".
    static FormulaPtr conj(std::vector<FormulaPtr> fs);
    static FormulaPtr disj(std::vector<FormulaPtr> fs);
    static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
    static FormulaPtr forall(int var, FormulaPtr body);
    static FormulaPtr exists(int var, FormulaPtr body);
};

// Grammar emitted (and re-parsed) -- fully parenthesized infix:
//   (t <= t)  !f  (f & f & ...)  (f | f | ...)  (f -> f)
//   forall vK f   exists vK f   true   false
std::string print_formula(const FormulaPtr& f);

// Inverse of print_formula.  Throws ParseError carrying the byte offset of
// the offending token.
FormulaPtr parse_formula(const std::string& text);

bool term_equal(const TermPtr& a, const TermPtr& b);
bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

// Formula-node count (terms not included); growth diagnostics and caps.
int formula_size(const FormulaPtr& f);

// Standard finite-model evaluation; f must be closed (quantifiers bind every
// variable before use, else UnboundVariable escapes from term evaluation).
bool eval_formula(const FormulaPtr& f, const JoinSemilatticeSemigroup& alg);

} // namespace finrep
