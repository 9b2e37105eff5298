#pragma once
// Terms over variables with the two binary constructors + (join) and
// ; (composition).  Immutable trees shared by pointer; cheap to copy.

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace finrep {

struct JoinSemilatticeSemigroup;  // algebra.hpp

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { Var, Plus, Semi };
    Kind kind;
    int var = -1;        // Kind::Var
    TermPtr left, right; // Kind::Plus / Kind::Semi

    static TermPtr make_var(int index);
    static TermPtr plus(TermPtr l, TermPtr r);
    static TermPtr semi(TermPtr l, TermPtr r);
};

// Variable index -> element index; -1 marks unbound slots.
class Valuation {
public:
    Valuation() = default;
    explicit Valuation(std::vector<int> values) : values_(std::move(values)) {}

    void bind(int var, int element) {
        if (var >= static_cast<int>(values_.size())) values_.resize(var + 1, -1);
        values_[var] = element;
    }
    // Throws UnboundVariable when no binding exists.
    int lookup(int var) const;

private:
    std::vector<int> values_;
};

// Structural evaluation using the algebra's join and composition tables.
int eval_term(const TermPtr& t, const Valuation& v,
              const JoinSemilatticeSemigroup& alg);

// Fully parenthesized rendering, e.g. "((v0 ; v1) + v2)".
std::string print_term(const TermPtr& t);

// Variables occurring in t.  Indices are unbounded (axiom emission numbers
// fresh variables well past any carrier size), hence a real set.
void collect_term_vars(const TermPtr& t, std::set<int>& out);

} // namespace finrep
