#pragma once

#include <stdexcept>

namespace powerpairs {

// Thrown when an operation would exceed a configured resource budget
// (sieve memory cap, quadratic-oracle guard, enumeration limit).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a requested accuracy target cannot be met at the configured
// floating-point width.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown by least-squares fitting on a rank-deficient or undersized design.
class fit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace powerpairs
