// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmpl/scalar.hpp"

namespace dmpl {

/// Composition of positive integers (k_1, ..., k_r), possibly empty.
class Index {
public:
    Index() = default;
    Index(std::initializer_list<int> parts);
    explicit Index(std::vector<int> parts);

    /// "k1,k2,...,kr"; the empty string is the empty index.
    static Index parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    int depth() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    bool admissible() const noexcept { return parts_.empty() || parts_.back() >= 2; }
    std::string str() const;

    /// Copy with part i (0-based) removed.
    Index without(int i) const;
    /// Copy with part i (0-based) lowered by one; the part must exceed 1.
    Index lowered(int i) const;
    Index prefix(int len) const;
    Index suffix_from(int start) const;
    Index concat(const Index& o) const;

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    friend bool operator==(const Index&, const Index&) = default;
    friend std::strong_ordering operator<=>(const Index& a, const Index& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

/// Formal Q-linear combination of indices; zero coefficients are dropped.
class IndexCombo {
public:
    using Map = std::map<Index, Rational>;

    IndexCombo() = default;
    IndexCombo(const Index& k) { add(k, Rational(1)); }  // NOLINT(google-explicit-constructor)

    void add(const Index& k, const Rational& c);
    void add(const IndexCombo& o, const Rational& scale = Rational(1));
    Rational coefficient(const Index& k) const;
    const Map& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    std::string str() const;

    friend bool operator==(const IndexCombo&, const IndexCombo&) = default;

private:
    Map terms_;
};

/// k^dagger for admissible k.
Index dual_index(const Index& k);

/// Membership in {|z| >= 1 and |1 - z| >= 1} or z = 1, decided exactly.
bool in_dual_domain(const Scalar& z);

struct DualizablePair {
    Index index;
    std::vector<Scalar> points;

    friend bool operator==(const DualizablePair&, const DualizablePair&) = default;
};

bool satisfies_dual_condition(const DualizablePair& p);

struct DualResult {
    DualizablePair pair;
    int iota = 0;
};

DualResult dual_pair(const DualizablePair& p);

/// All l whose comma-to-plus coarsenings include k (k itself included).
std::vector<Index> refinements(const Index& k);

/// Sum of all indices obtained from k by replacing commas with plus signs.
IndexCombo coarsenings_star(const Index& k);

Index oplus(const std::vector<int>& l, const Index& k);
Index oslash(const std::vector<int>& l, const Index& k);

/// All h with oplus(l, k) <= h <= oslash(l, k) in the refinement order.
std::vector<Index> between_chain(const std::vector<int>& l, const Index& k);

/// Sorted by (weight, depth, parts).
std::vector<Index> enumerate_indices(int max_weight, int max_depth, bool admissible_only);

/// Nonnegative integer tuples of the given length and sum, lexicographic.
std::vector<std::vector<int>> weak_compositions(int total, int length);

}  // namespace dmpl
