#pragma once

#include <stdexcept>
#include <string>

namespace prbox {

/// Invalid argument or malformed input (CLI exit code 1).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Problem too large for exhaustive treatment (CLI exit code 2).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A certificate or internal consistency check did not hold (CLI exit code 3).
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace prbox
