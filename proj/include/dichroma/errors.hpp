#pragma once

#include <stdexcept>
#include <string>

namespace dichroma {

/// An operation was handed arguments that violate its contract.
struct ContractViolation : std::runtime_error {
    explicit ContractViolation(const std::string& msg) : std::runtime_error(msg) {}
};

/// A structural guarantee that holds for in-class inputs failed at runtime.
/// The colouring pipeline catches this and falls back to a witness search;
/// it never reaches callers of the public entry points.
struct ClaimViolation : std::runtime_error {
    explicit ClaimViolation(const std::string& msg) : std::runtime_error(msg) {}
};

/// An assertion failed and no forbidden subdigraph explains it. This is an
/// implementation-bug surface, never an expected outcome.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file. `line` is 1-based, 0 when no line applies.
struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& msg)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
    int line;
};

/// A generator's repair loop exceeded its iteration cap.
struct GenError : std::runtime_error {
    explicit GenError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dichroma
