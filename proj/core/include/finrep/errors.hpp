#pragma once
// Error hierarchy shared by the whole library.  Every exception carries the
// process exit code the CLI maps it to: 1 input fails validation, 2 input
// cannot be parsed, 3 a configured budget or cap was hit, 4 an internal
// invariant broke (always a bug).

#include <stdexcept>
#include <string>

namespace finrep {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual int exit_code() const { return 4; }
};

// -- exit code 1: structurally well-formed input that violates a law --------

class ValidationError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 1; }
};

class InvalidGoal : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidSemilattice : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotResiduated : public ValidationError {
public:
    NotResiduated(int a, int c, const std::string& side)
        : ValidationError("not residuated: " + side + " candidate set for (" +
                          std::to_string(a) + "," + std::to_string(c) +
                          ") is empty or has no maximum"),
          a(a), c(c) {}
    int a, c;
};

class InvalidGenerators : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class BaseMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnboundVariable : public ValidationError {
public:
    explicit UnboundVariable(int index)
        : ValidationError("unbound variable v" + std::to_string(index)),
          index(index) {}
    int index;
};

class IllegalMove : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class MalformedPrenetwork : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// -- exit code 2: input that cannot even be read ----------------------------

class MalformedInput : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 2; }
};

class ParseError : public MalformedInput {
public:
    ParseError(const std::string& what, std::size_t position)
        : MalformedInput(what + " (at byte " + std::to_string(position) + ")"),
          position(position) {}
    explicit ParseError(const std::string& what)
        : MalformedInput(what), position(0) {}
    std::size_t position;
};

class MalformedCertificate : public MalformedInput {
public:
    using MalformedInput::MalformedInput;
};

// -- exit code 3: work refused because a budget or cap would be exceeded ----

class BudgetError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 3; }
};

class SizeCapExceeded : public BudgetError {
public:
    using BudgetError::BudgetError;
};

class DepthCapExceeded : public BudgetError {
public:
    using BudgetError::BudgetError;
};

class BudgetExhausted : public BudgetError {
public:
    using BudgetError::BudgetError;
};

class NotKnownExistsWin : public BudgetError {
public:
    using BudgetError::BudgetError;
};

// -- exit code 4 ------------------------------------------------------------

class InternalError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 4; }
};

} // namespace finrep
