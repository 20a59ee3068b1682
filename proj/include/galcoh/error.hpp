#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galcoh {

enum class ErrorKind {
    InvalidInput,
    NonAssociative,
    NoIdentity,
    NoInverse,
    NotNormal,
    NotEquivariant,
    NotACocycle,
    NotCyclic,
    SearchBudgetExceeded,
    InternalInvariantViolation,
    NotSL,
    Singular,
    NotACocycleForStructure,
    NotSymmetric,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes failure modes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the kind prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace galcoh
