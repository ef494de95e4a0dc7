// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmpl/words.hpp"

#include <functional>
#include <sstream>
#include <string>

#include "dmpl/evaluators.hpp"
#include "dmpl/nested_sum.hpp"

namespace dmpl {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::uint64_t modulus_of(const Scalar& s)
{
    return s.is<Residue>() ? s.as<Residue>().modulus() : 0;
}

Scalar scaled(const Rational& c, const Scalar& v)
{
    return Scalar(c).promoted_to(v.kind(), modulus_of(v)) * v;
}

Scalar mul_params(const Scalar& a, const Scalar& b)
{
    const auto u = unify({a, b});
    return canonical_param(u[0] * u[1]);
}

bool abs_le_one(const Scalar& z)
{
    if (z.is<Rational>()) return z.as<Rational>().abs() <= Rational(1);
    if (z.is<Gaussian>()) return z.as<Gaussian>().norm() <= Rational(1);
    throw MismatchError("absolute value of a residue");
}

// Generic quasi-shuffle over prefix pairs:
//   ua * vb = (u * vb) a + (ua * v) b + (u * v) merge(a, b)
template <class Seq, class Merge>
std::map<Seq, Rational> stuffle(const Seq& u, const Seq& v, Merge merge)
{
    using Cell = std::map<Seq, Rational>;
    const std::size_t p = u.size();
    const std::size_t q = v.size();
    std::vector<std::vector<Cell>> t(p + 1, std::vector<Cell>(q + 1));
    for (std::size_t i = 0; i <= p; ++i) t[i][0][Seq(u.begin(), u.begin() + static_cast<long>(i))] = Rational(1);
    for (std::size_t j = 1; j <= q; ++j) t[0][j][Seq(v.begin(), v.begin() + static_cast<long>(j))] = Rational(1);
    auto append = [](Cell& out, const Cell& in, const auto& letter) {
        for (const auto& [w, c] : in) {
            Seq x = w;
            x.push_back(letter);
            auto& slot = out[x];
            slot += c;
        }
    };
    for (std::size_t i = 1; i <= p; ++i) {
        for (std::size_t j = 1; j <= q; ++j) {
            Cell& cell = t[i][j];
            append(cell, t[i - 1][j], u[i - 1]);
            append(cell, t[i][j - 1], v[j - 1]);
            append(cell, t[i - 1][j - 1], merge(u[i - 1], v[j - 1]));
            std::erase_if(cell, [](const auto& kv) { return kv.second.is_zero(); });
        }
    }
    return std::move(t[p][q]);
}

// Plain shuffle over a flat alphabet.
template <class Seq>
std::map<Seq, Rational> shuffle_flat(const Seq& u, const Seq& v)
{
    using Cell = std::map<Seq, Rational>;
    const std::size_t p = u.size();
    const std::size_t q = v.size();
    std::vector<std::vector<Cell>> t(p + 1, std::vector<Cell>(q + 1));
    for (std::size_t i = 0; i <= p; ++i) t[i][0][Seq(u.begin(), u.begin() + static_cast<long>(i))] = Rational(1);
    for (std::size_t j = 1; j <= q; ++j) t[0][j][Seq(v.begin(), v.begin() + static_cast<long>(j))] = Rational(1);
    for (std::size_t i = 1; i <= p; ++i) {
        for (std::size_t j = 1; j <= q; ++j) {
            Cell& cell = t[i][j];
            for (const auto& [w, c] : t[i - 1][j]) {
                Seq x = w;
                x.push_back(u[i - 1]);
                cell[x] += c;
            }
            for (const auto& [w, c] : t[i][j - 1]) {
                Seq x = w;
                x.push_back(v[j - 1]);
                cell[x] += c;
            }
        }
    }
    return std::move(t[p][q]);
}

std::vector<Scalar> flatten(const Word& w)
{
    std::vector<Scalar> out;
    for (const Letter& l : w.letters()) {
        out.push_back(l.param);
        for (int e = 1; e < l.exponent; ++e) out.emplace_back(Rational(0));
    }
    return out;
}

Word regroup(const std::vector<Scalar>& flat)
{
    std::vector<Letter> letters;
    for (const Scalar& z : flat) letters.push_back({z, 1});
    return Word(std::move(letters));
}

template <class T>
std::vector<T> unwrap(const std::vector<Scalar>& p)
{
    std::vector<T> out;
    out.reserve(p.size());
    for (const auto& s : p) out.push_back(s.as<T>());
    return out;
}

template <ExactField F>
std::vector<F> li_star_profile(const Index& k, const std::vector<F>& xi, long long n_max, const F& unit)
{
    SumSignature<F> sig(n_max - 1, unit);
    for (int i = 0; i < k.depth(); ++i) {
        Slot<F> s;
        s.power = k[static_cast<std::size_t>(i)];
        s.geometric = xi[static_cast<std::size_t>(i)];
        sig.add(std::move(s));
    }
    return sig.last_profile();
}

// L_{<N}(w) for N = 1..n_max.
std::vector<Scalar> word_ladder(const Word& w, long long n_max)
{
    if (w.empty()) return std::vector<Scalar>(static_cast<std::size_t>(n_max), Scalar(Rational(1)));
    const std::vector<Scalar> p = unify(w.params());
    const Index k = w.index();
    auto run = [&](const auto& values, const auto& unit) {
        const auto prof = li_star_profile(k, values, n_max, unit);
        std::vector<Scalar> out;
        out.reserve(static_cast<std::size_t>(n_max));
        auto acc = unit - unit;
        out.emplace_back(acc);  // N = 1
        for (long long n = 1; n < n_max; ++n) {
            acc = acc + prof[static_cast<std::size_t>(n - 1)];
            out.emplace_back(acc);
        }
        return out;
    };
    switch (p.front().kind()) {
    case ScalarKind::Rational: return run(unwrap<Rational>(p), Rational(1));
    case ScalarKind::Gaussian: return run(unwrap<Gaussian>(p), Gaussian(Rational(1)));
    case ScalarKind::Residue:
        return run(unwrap<Residue>(p), Residue(1, p.front().as<Residue>().modulus()));
    }
    throw MismatchError("unknown scalar kind");
}

}  // namespace

Scalar canonical_param(const Scalar& z)
{
    if (z.is<Gaussian>() && z.as<Gaussian>().im().is_zero()) return Scalar(z.as<Gaussian>().re());
    return z;
}

Scalar add_mixed(const Scalar& a, const Scalar& b)
{
    if (a.kind() == b.kind()) return a + b;
    const auto u = unify({a, b});
    return u[0] + u[1];
}

// ---------------------------------------------------------------- Word

Word::Word(std::vector<Letter> letters)
{
    for (Letter& l : letters) {
        if (l.exponent < 1) throw DomainError("letter exponent must be positive");
        l.param = canonical_param(l.param);
        if (l.param.is_zero() && !letters_.empty()) {
            letters_.back().exponent += l.exponent;
        } else {
            letters_.push_back(std::move(l));
        }
    }
}

Word::Word(const Index& k, const std::vector<Scalar>& params)
{
    if (static_cast<int>(params.size()) != k.depth()) throw DomainError("word: index and parameters differ in length");
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < params.size(); ++i) letters.push_back({params[i], k[i]});
    *this = Word(std::move(letters));
}

Word Word::parse(std::string_view text)
{
    text = trim(text);
    if (text.empty() || text == "1") return Word();
    std::vector<Letter> letters;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t dot = text.find('.', start);
        if (dot == std::string_view::npos) dot = text.size();
        const std::string_view tok = trim(text.substr(start, dot - start));
        if (tok.empty()) throw ParseError("empty letter in word '" + std::string(text) + "'");
        const std::size_t caret = tok.rfind('^');
        Letter l;
        if (caret == std::string_view::npos) {
            l.param = Scalar::parse(tok);
        } else {
            l.param = Scalar::parse(trim(tok.substr(0, caret)));
            const std::string e(trim(tok.substr(caret + 1)));
            if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos || e.size() > 6) {
                throw ParseError("bad exponent '" + e + "'");
            }
            l.exponent = std::stoi(e);
            if (l.exponent < 1) throw ParseError("exponent must be positive");
        }
        letters.push_back(std::move(l));
        start = dot + 1;
        if (dot == text.size()) break;
    }
    return Word(std::move(letters));
}

int Word::weight() const noexcept
{
    int w = 0;
    for (const Letter& l : letters_) w += l.exponent;
    return w;
}

Index Word::index() const
{
    std::vector<int> parts;
    for (const Letter& l : letters_) parts.push_back(l.exponent);
    return Index(std::move(parts));
}

std::vector<Scalar> Word::params() const
{
    std::vector<Scalar> out;
    for (const Letter& l : letters_) out.push_back(l.param);
    return out;
}

std::string Word::str() const
{
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += " . ";
        out += letters_[i].param.str() + "^" + std::to_string(letters_[i].exponent);
    }
    return out;
}

// ---------------------------------------------------------------- WordCombo

void WordCombo::add(const Word& w, const Rational& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void WordCombo::add(const WordCombo& o, const Rational& scale)
{
    for (const auto& [w, c] : o.terms_) add(w, c * scale);
}

Rational WordCombo::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string WordCombo::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c != Rational(1)) os << c.str() << "*";
        os << "[" << w.str() << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------- tiers

bool in_h_sh(const Word& w)
{
    for (const Letter& l : w.letters()) {
        if (!l.param.is_zero() && !abs_at_least_one(l.param)) return false;
    }
    return true;
}

bool in_h1_sh(const Word& w)
{
    if (w.empty()) return true;
    return !w.letters().front().param.is_zero() && in_h_sh(w);
}

bool in_h0_sh(const Word& w)
{
    if (!in_h1_sh(w)) return false;
    if (w.empty()) return true;
    const Letter& last = w.letters().back();
    return last.exponent >= 2 || last.param != Scalar(Rational(1));
}

bool in_h1_star(const Word& w)
{
    const auto& ls = w.letters();
    Scalar tail(Rational(1));
    for (std::size_t i = ls.size(); i-- > 0;) {
        if (ls[i].param.is_zero()) return false;
        tail = mul_params(tail, ls[i].param);
        if (!abs_le_one(tail)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- products

WordCombo harmonic(const WordCombo& u, const WordCombo& v)
{
    WordCombo out;
    for (const auto& [a, ca] : u.terms()) {
        for (const Letter& l : a.letters()) {
            if (l.param.is_zero()) throw DomainError("harmonic product needs nonzero parameters: " + a.str());
        }
        for (const auto& [b, cb] : v.terms()) {
            for (const Letter& l : b.letters()) {
                if (l.param.is_zero()) throw DomainError("harmonic product needs nonzero parameters: " + b.str());
            }
            const auto terms = stuffle(a.letters(), b.letters(), [](const Letter& x, const Letter& y) {
                return Letter{mul_params(x.param, y.param), x.exponent + y.exponent};
            });
            const Rational c = ca * cb;
            for (const auto& [w, k] : terms) out.add(Word(w), k * c);
        }
    }
    return out;
}

WordCombo shuffle(const WordCombo& u, const WordCombo& v)
{
    for (const auto* side : {&u, &v}) {
        for (const auto& [w, c] : side->terms()) {
            if (!in_h_sh(w)) throw DomainError("shuffle needs parameters 0 or |z| >= 1: " + w.str());
        }
    }
    WordCombo out;
    for (const auto& [a, ca] : u.terms()) {
        const auto fa = flatten(a);
        for (const auto& [b, cb] : v.terms()) {
            const auto terms = shuffle_flat(fa, flatten(b));
            const Rational c = ca * cb;
            for (const auto& [w, k] : terms) out.add(regroup(w), k * c);
        }
    }
    return out;
}

WordCombo top_map(const WordCombo& u)
{
    WordCombo out;
    for (const auto& [w, c] : u.terms()) {
        if (!in_h1_sh(w)) throw DomainError("top map needs a word in H^1_sh: " + w.str());
        const auto& ls = w.letters();
        std::vector<Letter> t;
        for (std::size_t i = 0; i < ls.size(); ++i) {
            const Scalar next = i + 1 < ls.size() ? ls[i + 1].param : Scalar(Rational(1));
            if (next.is_zero()) throw DomainError("top map needs nonzero parameters: " + w.str());
            const auto zz = unify({next, ls[i].param});
            t.push_back({canonical_param(zz[0] / zz[1]), ls[i].exponent});
        }
        out.add(Word(std::move(t)), c);
    }
    return out;
}

IndexCombo harmonic(const IndexCombo& k, const IndexCombo& l)
{
    IndexCombo out;
    for (const auto& [a, ca] : k.terms()) {
        for (const auto& [b, cb] : l.terms()) {
            const auto terms = stuffle(a.parts(), b.parts(), [](int x, int y) { return x + y; });
            for (const auto& [w, c] : terms) out.add(Index(w), c * ca * cb);
        }
    }
    return out;
}

IndexCombo underline_harmonic(const Index& k, const Index& l)
{
    if (k.empty()) throw DomainError("underline harmonic product is undefined for an empty left index");
    if (l.empty()) return IndexCombo(k);
    const int kr = k.parts().back();
    const int ls = l.parts().back();
    const Index km = k.prefix(k.depth() - 1);
    const Index lm = l.prefix(l.depth() - 1);
    IndexCombo out;
    const IndexCombo upper = harmonic(IndexCombo(km), IndexCombo(l));
    const IndexCombo merged = harmonic(IndexCombo(km), IndexCombo(lm));
    for (const auto& [h, c] : upper.terms()) out.add(h.concat(Index{kr}), c);
    for (const auto& [h, c] : merged.terms()) out.add(h.concat(Index{kr + ls}), c);
    return out;
}

IndexCombo underline_harmonic(const IndexCombo& k, const IndexCombo& l)
{
    IndexCombo out;
    for (const auto& [a, ca] : k.terms()) {
        for (const auto& [b, cb] : l.terms()) out.add(underline_harmonic(a, b), ca * cb);
    }
    return out;
}

// ---------------------------------------------------------------- evaluation

Scalar eval_L(const WordCombo& u, long long N)
{
    if (N < 1) throw DomainError("N must be positive");
    Scalar acc(Rational(0));
    for (const auto& [w, c] : u.terms()) {
        const Scalar v = w.empty() ? Scalar(Rational(1)) : li_star_truncated(w.index(), w.params(), N);
        acc = add_mixed(acc, scaled(c, v));
    }
    return acc;
}

std::vector<Scalar> eval_L_ladder(const WordCombo& u, long long n_max)
{
    if (n_max < 1) throw DomainError("N must be positive");
    std::vector<Scalar> acc(static_cast<std::size_t>(n_max), Scalar(Rational(0)));
    for (const auto& [w, c] : u.terms()) {
        const auto lad = word_ladder(w, n_max);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = add_mixed(acc[i], scaled(c, lad[i]));
    }
    return acc;
}

Scalar eval_I(const WordCombo& u, long long N)
{
    if (N < 1) throw DomainError("N must be positive");
    Scalar acc(Rational(0));
    for (const auto& [w, c] : u.terms()) {
        if (!in_h1_sh(w)) throw DomainError("I^(N) needs a word in H^1_sh: " + w.str());
        const Scalar v = w.empty() ? Scalar(Rational(1)) : iterated_sum(w.index(), w.params(), N, false);
        acc = add_mixed(acc, scaled(c, v));
    }
    return acc;
}

}  // namespace dmpl
