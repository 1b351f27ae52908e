#pragma once

#include <stdexcept>
#include <string>

namespace cleanwords {

// Error taxonomy mirrored by the CLI exit codes:
//   ValidationError -> 1, VerificationError -> 2, BudgetError -> 3.

/// Bad user input: malformed alphabets, patterns, words, files, options.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A self-check failed: alpha inconsistency, oracle mismatch, singular system.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured work budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cleanwords
