#include "finrep/formula.hpp"

#include <cctype>

#include "finrep/algebra.hpp"
#include "finrep/errors.hpp"

namespace finrep {

FormulaPtr Formula::leq(TermPtr l, TermPtr r) {
    return std::make_shared<Formula>(
        Formula{Kind::Leq, std::move(l), std::move(r), {}, -1});
}

FormulaPtr Formula::negation(FormulaPtr f) {
    return std::make_shared<Formula>(
        Formula{Kind::Not, nullptr, nullptr, {std::move(f)}, -1});
}

FormulaPtr Formula::conj(std::vector<FormulaPtr> fs) {
    if (fs.size() == 1) return fs[0];
    return std::make_shared<Formula>(
        Formula{Kind::And, nullptr, nullptr, std::move(fs), -1});
}

FormulaPtr Formula::disj(std::vector<FormulaPtr> fs) {
    if (fs.size() == 1) return fs[0];
    return std::make_shared<Formula>(
        Formula{Kind::Or, nullptr, nullptr, std::move(fs), -1});
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
    return std::make_shared<Formula>(Formula{
        Kind::Implies, nullptr, nullptr, {std::move(a), std::move(b)}, -1});
}

FormulaPtr Formula::forall(int var, FormulaPtr body) {
    return std::make_shared<Formula>(
        Formula{Kind::Forall, nullptr, nullptr, {std::move(body)}, var});
}

FormulaPtr Formula::exists(int var, FormulaPtr body) {
    return std::make_shared<Formula>(
        Formula{Kind::Exists, nullptr, nullptr, {std::move(body)}, var});
}

std::string print_formula(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::Leq:
            return "(" + print_term(f->lhs) + " <= " + print_term(f->rhs) + ")";
        case Formula::Kind::Not:
            return "!" + print_formula(f->children[0]);
        case Formula::Kind::And: {
            if (f->children.empty()) return "true";
            std::string s = "(";
            for (std::size_t i = 0; i < f->children.size(); ++i) {
                if (i) s += " & ";
                s += print_formula(f->children[i]);
            }
            return s + ")";
        }
        case Formula::Kind::Or: {
            if (f->children.empty()) return "false";
            std::string s = "(";
            for (std::size_t i = 0; i < f->children.size(); ++i) {
                if (i) s += " | ";
                s += print_formula(f->children[i]);
            }
            return s + ")";
        }
        case Formula::Kind::Implies:
            return "(" + print_formula(f->children[0]) + " -> " +
                   print_formula(f->children[1]) + ")";
        case Formula::Kind::Forall:
            return "forall v" + std::to_string(f->var) + " " +
                   print_formula(f->children[0]);
        case Formula::Kind::Exists:
            return "exists v" + std::to_string(f->var) + " " +
                   print_formula(f->children[0]);
    }
    throw InternalError("unhandled formula kind");
}

namespace {

// Minimal backtracking tokenizer/parser for the printer's grammar.
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    FormulaPtr parse() {
        FormulaPtr f = formula();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError("trailing input after formula", pos_);
        return f;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(
                   static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(const std::string& token) {
        skip_space();
        if (text_.compare(pos_, token.size(), token) == 0) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(const std::string& token) {
        if (!eat(token))
            throw ParseError("expected \"" + token + "\"", pos_);
    }

    bool eat_word(const std::string& word) {
        skip_space();
        if (text_.compare(pos_, word.size(), word) != 0) return false;
        std::size_t end = pos_ + word.size();
        if (end < text_.size() &&
            std::isalnum(static_cast<unsigned char>(text_[end])))
            return false;  // prefix of a longer identifier
        pos_ = end;
        return true;
    }

    int variable_index() {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != 'v')
            throw ParseError("expected a variable like v0", pos_);
        std::size_t i = pos_ + 1, start = i;
        while (i < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[i])))
            ++i;
        if (i == start)
            throw ParseError("expected digits after 'v'", pos_);
        int idx = std::stoi(text_.substr(start, i - start));
        pos_ = i;
        return idx;
    }

    TermPtr term() {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == 'v')
            return Term::make_var(variable_index());
        expect("(");
        TermPtr l = term();
        skip_space();
        bool is_semi = eat(";");
        if (!is_semi) expect("+");
        TermPtr r = term();
        expect(")");
        return is_semi ? Term::semi(std::move(l), std::move(r))
                       : Term::plus(std::move(l), std::move(r));
    }

    FormulaPtr formula() {
        skip_space();
        if (eat("!")) return Formula::negation(formula());
        if (eat_word("true")) return Formula::conj({});
        if (eat_word("false")) return Formula::disj({});
        if (eat_word("forall")) {
            int var = variable_index();
            return Formula::forall(var, formula());
        }
        if (eat_word("exists")) {
            int var = variable_index();
            return Formula::exists(var, formula());
        }
        expect("(");
        // A '(' opens either a term inequality or a compound formula; try the
        // inequality first and rewind on failure.
        std::size_t saved = pos_ - 1;
        try {
            pos_ = saved + 1;
            TermPtr l = term();
            expect("<=");
            TermPtr r = term();
            expect(")");
            return Formula::leq(std::move(l), std::move(r));
        } catch (const ParseError&) {
            pos_ = saved + 1;
        }
        FormulaPtr first = formula();
        skip_space();
        if (eat("->")) {
            FormulaPtr second = formula();
            expect(")");
            return Formula::implies(std::move(first), std::move(second));
        }
        if (eat("&")) {
            std::vector<FormulaPtr> fs{std::move(first)};
            do fs.push_back(formula());
            while (eat("&"));
            expect(")");
            return std::make_shared<Formula>(
                Formula{Formula::Kind::And, nullptr, nullptr, std::move(fs), -1});
        }
        if (eat("|")) {
            std::vector<FormulaPtr> fs{std::move(first)};
            do fs.push_back(formula());
            while (eat("|"));
            expect(")");
            return std::make_shared<Formula>(
                Formula{Formula::Kind::Or, nullptr, nullptr, std::move(fs), -1});
        }
        expect(")");  // plain grouping
        return first;
    }
};

} // namespace

FormulaPtr parse_formula(const std::string& text) {
    return Parser(text).parse();
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    if (a->kind == Term::Kind::Var) return a->var == b->var;
    return term_equal(a->left, b->left) && term_equal(a->right, b->right);
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    if (a->kind == Formula::Kind::Leq)
        return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
    if (a->var != b->var) return false;
    if (a->children.size() != b->children.size()) return false;
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!formula_equal(a->children[i], b->children[i])) return false;
    return true;
}

int formula_size(const FormulaPtr& f) {
    int total = 1;
    for (const FormulaPtr& c : f->children) total += formula_size(c);
    return total;
}

namespace {

// env[i] = binding of variable i, -1 when unbound; grows on demand so fresh
// variable indices from the axiom emitter are fine
bool eval_rec(const FormulaPtr& f, const JoinSemilatticeSemigroup& alg,
              std::vector<int>& env) {
    switch (f->kind) {
        case Formula::Kind::Leq: {
            Valuation v(env);
            int a = eval_term(f->lhs, v, alg);
            int b = eval_term(f->rhs, v, alg);
            return alg.plus(a, b) == b;
        }
        case Formula::Kind::Not:
            return !eval_rec(f->children[0], alg, env);
        case Formula::Kind::And:
            for (const FormulaPtr& c : f->children)
                if (!eval_rec(c, alg, env)) return false;
            return true;
        case Formula::Kind::Or:
            for (const FormulaPtr& c : f->children)
                if (eval_rec(c, alg, env)) return true;
            return false;
        case Formula::Kind::Implies:
            return !eval_rec(f->children[0], alg, env) ||
                   eval_rec(f->children[1], alg, env);
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            if (f->var >= static_cast<int>(env.size()))
                env.resize(f->var + 1, -1);
            int prev = env[f->var];  // restored afterwards, so shadowing works
            bool universal = f->kind == Formula::Kind::Forall;
            bool result = universal;
            for (int x = 0; x < alg.size(); ++x) {
                env[f->var] = x;
                bool body = eval_rec(f->children[0], alg, env);
                if (body != universal) {
                    result = body;
                    break;
                }
            }
            env[f->var] = prev;
            return result;
        }
    }
    throw InternalError("unhandled formula kind");
}

} // namespace

bool eval_formula(const FormulaPtr& f, const JoinSemilatticeSemigroup& alg) {
    std::vector<int> env;
    return eval_rec(f, alg, env);
}

} // namespace finrep
