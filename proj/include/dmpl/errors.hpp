// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dmpl {

/// Malformed literal (scalar, index, point, word) or command input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A precondition on the mathematical input is violated
/// (non-admissible index for dualization, length mismatch, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arithmetic between scalars of different variants or moduli.
class MismatchError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A denominator vanished. `slot` and `n` locate it inside a nested sum
/// when known (1-based slot, summation value); both are -1 otherwise.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what, int slot = -1, long long n = -1)
        : std::domain_error(what), slot_(slot), n_(n) {}

    int slot() const noexcept { return slot_; }
    long long n() const noexcept { return n_; }

private:
    int slot_;
    long long n_;
};

}  // namespace dmpl
