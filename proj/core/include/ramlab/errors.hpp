#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramlab {

enum class ErrorKind {
    PrecisionUnderflow,
    NotCoprime,
    NotAPthPower,
    RadicalInconclusive,
    MixedInseparableCase,
    NotIsolated,
    NonSquarefreeInput,
    PrecisionTooSmall,
    ParseError,
    ValidationError,
    DomainError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base class of every error raised by the library. The kind is stable and
/// is what the CLI maps onto exit codes and report causes.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

class PrecisionUnderflow : public Error {
   public:
    explicit PrecisionUnderflow(const std::string& what) : Error(ErrorKind::PrecisionUnderflow, what) {}
};

class NotCoprime : public Error {
   public:
    explicit NotCoprime(const std::string& what) : Error(ErrorKind::NotCoprime, what) {}
};

class NotAPthPower : public Error {
   public:
    explicit NotAPthPower(std::int64_t exponent)
        : Error(ErrorKind::NotAPthPower, "nonzero coefficient at exponent " + std::to_string(exponent)),
          exponent_(exponent) {}

    /// Absolute exponent of the first coefficient that blocks the root.
    std::int64_t exponent() const noexcept { return exponent_; }

   private:
    std::int64_t exponent_;
};

class RadicalInconclusive : public Error {
   public:
    explicit RadicalInconclusive(const std::string& what) : Error(ErrorKind::RadicalInconclusive, what) {}
};

class MixedInseparableCase : public Error {
   public:
    explicit MixedInseparableCase(const std::string& what) : Error(ErrorKind::MixedInseparableCase, what) {}
};

class NotIsolated : public Error {
   public:
    explicit NotIsolated(const std::string& what) : Error(ErrorKind::NotIsolated, what) {}
};

class NonSquarefreeInput : public Error {
   public:
    explicit NonSquarefreeInput(const std::string& what) : Error(ErrorKind::NonSquarefreeInput, what) {}
};

class PrecisionTooSmall : public Error {
   public:
    explicit PrecisionTooSmall(const std::string& what) : Error(ErrorKind::PrecisionTooSmall, what) {}
};

class ParseError : public Error {
   public:
    ParseError(int line, int column, const std::string& what)
        : Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column),
          reason_(what) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    /// The message without the position prefix.
    const std::string& reason() const noexcept { return reason_; }

   private:
    int line_;
    int column_;
    std::string reason_;
};

class ValidationError : public Error {
   public:
    explicit ValidationError(const std::string& what) : Error(ErrorKind::ValidationError, what) {}
};

class DomainError : public Error {
   public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::DomainError, what) {}
};

}  // namespace ramlab
