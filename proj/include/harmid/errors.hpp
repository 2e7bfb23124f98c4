#pragma once

#include <stdexcept>
#include <string>

namespace harmid {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct ContextMismatch : Error {
    ContextMismatch() : Error("mixing values from different precision contexts") {}
};

struct OutOfTable : Error {
    explicit OutOfTable(const std::string& what) : Error(what) {}
};

struct OrderTooHigh : Error {
    explicit OrderTooHigh(const std::string& what) : Error(what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct UnsupportedBasePoint : Error {
    explicit UnsupportedBasePoint(const std::string& what) : Error(what) {}
};

struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& id) : Error("unknown identity: " + id) {}
};

struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& name) : Error("unbound variable: " + name) {}
};

struct TranscendentalInExactContext : Error {
    explicit TranscendentalInExactContext(const std::string& what) : Error(what) {}
};

struct UnsupportedTermShape : Error {
    explicit UnsupportedTermShape(const std::string& what) : Error(what) {}
};

struct EvaluationError : Error {
    explicit EvaluationError(const std::string& what) : Error(what) {}
};

} // namespace harmid
