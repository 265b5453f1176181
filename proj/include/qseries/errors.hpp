#pragma once

#include <stdexcept>

namespace qseries {

/// Caller violated an interface contract (mismatched rings, bad arguments).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined request (non-unit inversion, empty partition).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace qseries
