#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quiverreach {

/// Malformed QVR / FQVR / morphism input. Carries the 1-based line number
/// (0 when the problem is not tied to a single line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

enum class Violation {
    DuplicateId,
    UnknownId,
    CyclicQuiver,
    Disconnected,
    NotSimple,
    NotMaximal,
    LoopContraction,
    InvalidOrder,
    InvalidOccurrence,
    NotAMorphism,
    InvalidBasisElement,
    TooLarge,
    BadDegree,
    BadField,
    NonMonotone,
    InvalidArgument,
};

const char* to_string(Violation v) noexcept;

/// An operation was called on input outside its domain.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(Violation violation, const std::string& message)
        : std::runtime_error(std::string(to_string(violation)) + ": " + message),
          violation_(violation) {}

    Violation violation() const noexcept { return violation_; }

private:
    Violation violation_;
};

}  // namespace quiverreach
