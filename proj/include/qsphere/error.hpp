#pragma once

#include <stdexcept>
#include <string>

namespace qsphere {

// Base class for all engine errors. `code()` is the stable machine-readable
// identifier used in JSON output and for CLI exit-code mapping.
class EngineError : public std::runtime_error {
public:
    EngineError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct DivisionByZero : EngineError {
    explicit DivisionByZero(const std::string& what = "division by zero")
        : EngineError("DivisionByZero", what) {}
};

struct PoleAtLimit : EngineError {
    explicit PoleAtLimit(const std::string& what = "expression has a pole at s = 1")
        : EngineError("PoleAtLimit", what) {}
};

struct NotIntegrable : EngineError {
    explicit NotIntegrable(const std::string& monomial)
        : EngineError("NotIntegrable", "monomial outside the domain of the integral: " + monomial),
          offending(monomial) {}
    std::string offending;
};

struct SingularDiagonal : EngineError {
    explicit SingularDiagonal(const std::string& what)
        : EngineError("SingularDiagonal", what) {}
};

struct VerificationFailure : EngineError {
    explicit VerificationFailure(const std::string& what)
        : EngineError("VerificationFailure", what) {}
};

struct QuadratureNotConverged : EngineError {
    explicit QuadratureNotConverged(const std::string& what)
        : EngineError("QuadratureNotConverged", what) {}
};

struct ParseError : EngineError {
    ParseError(std::size_t offset, const std::string& what)
        : EngineError("ParseError", what + " (at offset " + std::to_string(offset) + ")"),
          offset(offset) {}
    std::size_t offset;
};

}  // namespace qsphere
