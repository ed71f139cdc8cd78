#pragma once

#include <stdexcept>
#include <string>

namespace hultman {

/// Thrown when an identity the algorithms rely on fails to hold exactly
/// (a non-exact division, a guard coefficient that should vanish, ...).
/// Seeing one of these means a table or a formula implementation is wrong,
/// not that the caller passed bad input.
class InternalConsistencyError : public std::logic_error {
public:
    explicit InternalConsistencyError(const std::string& what)
        : std::logic_error(what) {}
};

/// Rejected input (malformed permutation, mismatched series orders, ...).
class InvalidInputError : public std::invalid_argument {
public:
    explicit InvalidInputError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Request to enumerate S_n for an n above the configured cap.
class EnumerationCapError : public InvalidInputError {
public:
    EnumerationCapError(int n, int cap)
        : InvalidInputError("refusing to enumerate S_" + std::to_string(n) +
                            ": exceeds the enumeration cap " + std::to_string(cap) +
                            " (raise it explicitly, e.g. with --enum-cap)") {}
};

} // namespace hultman
