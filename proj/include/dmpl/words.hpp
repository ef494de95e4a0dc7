// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dmpl/index.hpp"
#include "dmpl/scalar.hpp"

namespace dmpl {

/// e_{z,k} = e_z e_0^{k-1}.
struct Letter {
    Scalar param;
    int exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b)
    {
        if (auto c = a.param <=> b.param; c != 0) return c;
        return a.exponent <=> b.exponent;
    }
};

/// Word in grouped letters. Parameters are kept canonical (Gaussian values
/// with zero imaginary part become rationals) and a letter with parameter 0
/// is folded into its predecessor, so equal words compare equal.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    Word(const Index& k, const std::vector<Scalar>& params);

    /// "z1^k1 . z2^k2 . ..."; "^k" may be omitted for k = 1; "" or "1" alone is the empty word.
    static Word parse(std::string_view text);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    bool empty() const noexcept { return letters_.empty(); }
    int depth() const noexcept { return static_cast<int>(letters_.size()); }
    /// Length over the alphabet {e_0, e_z}.
    int weight() const noexcept;
    Index index() const;
    std::vector<Scalar> params() const;
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b)
    {
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

class WordCombo {
public:
    using Map = std::map<Word, Rational>;

    WordCombo() = default;
    WordCombo(const Word& w) { add(w, Rational(1)); }  // NOLINT(google-explicit-constructor)

    static WordCombo unit() { return WordCombo(Word()); }

    void add(const Word& w, const Rational& c);
    void add(const WordCombo& o, const Rational& scale = Rational(1));
    Rational coefficient(const Word& w) const;
    const Map& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    std::string str() const;

    friend bool operator==(const WordCombo&, const WordCombo&) = default;

private:
    Map terms_;
};

/// Canonical form of a letter parameter.
Scalar canonical_param(const Scalar& z);

bool in_h_sh(const Word& w);
bool in_h1_sh(const Word& w);
bool in_h0_sh(const Word& w);
/// Image of H^1_sh under top: nonzero params with |xi_i ... xi_r| <= 1 for all i.
bool in_h1_star(const Word& w);

WordCombo harmonic(const WordCombo& u, const WordCombo& v);
WordCombo shuffle(const WordCombo& u, const WordCombo& v);
WordCombo top_map(const WordCombo& u);

/// Index-level harmonic product (all parameters 1).
IndexCombo harmonic(const IndexCombo& k, const IndexCombo& l);
IndexCombo underline_harmonic(const Index& k, const Index& l);
IndexCombo underline_harmonic(const IndexCombo& k, const IndexCombo& l);

/// Linear extension of li_star_truncated; L(1) = 1.
Scalar eval_L(const WordCombo& u, long long N);
/// eval_L for every N = 1..n_max (entry N-1), from one pass per word.
std::vector<Scalar> eval_L_ladder(const WordCombo& u, long long n_max);
/// Linear extension of the exclusive iterated sum; I(1) = 1.
Scalar eval_I(const WordCombo& u, long long N);

/// Sum of field values that may mix rationals and Gaussians.
Scalar add_mixed(const Scalar& a, const Scalar& b);

}  // namespace dmpl
