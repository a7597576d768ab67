#pragma once

#include <stdexcept>
#include <string>

namespace ahlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in field arithmetic") {}
};

struct RangeError : Error {
    using Error::Error;
};

struct CharacteristicTooSmall : Error {
    explicit CharacteristicTooSmall(const std::string& msg) : Error(msg) {}
};

struct FieldTooSmall : Error {
    explicit FieldTooSmall(const std::string& msg) : Error(msg) {}
};

struct DuplicatePoint : Error {
    explicit DuplicatePoint(const std::string& msg) : Error(msg) {}
};

struct DecompositionError : Error {
    explicit DecompositionError(const std::string& msg) : Error(msg) {}
};

struct NegativeDelta : Error {
    explicit NegativeDelta(const std::string& msg) : Error(msg) {}
};

struct ExpansionStuck : Error {
    explicit ExpansionStuck(const std::string& msg) : Error(msg) {}
};

struct RetryExhausted : Error {
    explicit RetryExhausted(const std::string& msg) : Error(msg) {}
};

struct CrossCheckMismatch : Error {
    explicit CrossCheckMismatch(const std::string& msg) : Error(msg) {}
};

}  // namespace ahlab
