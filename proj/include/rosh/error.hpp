#pragma once

#include <stdexcept>
#include <string>

namespace rosh {

// Base of every error thrown by the library. kind() is a stable machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Malformed or inconsistent input: unknown ids, non-tree networks, negative numbers.
struct InputError : Error {
    explicit InputError(const std::string& message) : Error("input", message) {}
};

// An operation was called on an instance outside its domain.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& message) : Error("precondition", message) {}
};

// A precedence scheme is cyclic or does not cover the instance.
struct SchemeError : Error {
    explicit SchemeError(const std::string& message) : Error("scheme", message) {}
};

// Aggregation or contraction would raise the lower bound.
struct ValidityError : Error {
    explicit ValidityError(const std::string& message) : Error("validity", message) {}
};

// A trace and a schedule do not describe the same instance.
struct TraceError : Error {
    explicit TraceError(const std::string& message) : Error("trace", message) {}
};

// The brute-force solver refused an instance above its job cap.
struct CapError : Error {
    explicit CapError(const std::string& message) : Error("oracle_cap", message) {}
};

// A construction that is proved to succeed did not. Indicates a bug.
struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& message) : Error("consistency", message) {}
};

}  // namespace rosh
