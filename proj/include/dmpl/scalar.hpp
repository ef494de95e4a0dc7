// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "dmpl/errors.hpp"

namespace dmpl {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q);

    static Rational from_int(long long n, const Rational& /*like*/) { return Rational(n); }
    static Rational parse(std::string_view text);

    const mpq_class& mpq() const noexcept { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    int sign() const noexcept { return sgn(q_); }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inverse() const;
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

/// Element a + b i of Q(i).
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(Rational re, Rational im = Rational()) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT

    static Gaussian from_int(long long n, const Gaussian& /*like*/) { return Gaussian(Rational(n)); }
    static Gaussian parse(std::string_view text);
    static Gaussian i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }
    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    Gaussian conj() const { return {re_, -im_}; }
    /// |z|^2
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Gaussian inverse() const;
    std::string str() const;

    Gaussian operator-() const { return {-re_, -im_}; }
    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian&, const Gaussian&) = default;
    friend std::strong_ordering operator<=>(const Gaussian& a, const Gaussian& b)
    {
        if (auto c = a.re_ <=> b.re_; c != 0) return c;
        return a.im_ <=> b.im_;
    }

private:
    Rational re_;
    Rational im_;
};

/// Residue class modulo a prime p < 2^32.
class Residue {
public:
    Residue() = default;
    Residue(long long value, std::uint64_t p);

    static Residue from_int(long long n, const Residue& like) { return {n, like.p_}; }
    /// Reduces a rational whose denominator is prime to p.
    static Residue from_rational(const Rational& q, std::uint64_t p);
    static Residue parse(std::string_view text);

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }
    Residue inverse() const;
    Residue pow(std::uint64_t e) const;
    std::string str() const;

    Residue operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Residue& operator+=(const Residue& o);
    Residue& operator-=(const Residue& o);
    Residue& operator*=(const Residue& o);
    Residue& operator/=(const Residue& o) { return *this *= o.inverse(); }

    friend Residue operator+(Residue a, const Residue& b) { return a += b; }
    friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
    friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
    friend bool operator==(const Residue& a, const Residue& b)
    {
        return a.v_ == b.v_ && a.p_ == b.p_;
    }
    friend std::strong_ordering operator<=>(const Residue& a, const Residue& b)
    {
        if (auto c = a.p_ <=> b.p_; c != 0) return c;
        return a.v_ <=> b.v_;
    }

private:
    static Residue from_raw(std::uint64_t v, std::uint64_t p)
    {
        Residue r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    void check_same(const Residue& o) const;

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// The operations every evaluator needs from its coefficient field.
template <class F>
concept ExactField = requires(const F& a, const F& b, long long k) {
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
    { F::from_int(k, a) } -> std::same_as<F>;
};

enum class ScalarKind { Rational, Gaussian, Residue };

/// Tagged union over the three coefficient fields. Arithmetic requires both
/// operands to share the variant (and modulus); use promoted_to() to convert.
class Scalar {
public:
    using Storage = std::variant<Rational, Gaussian, Residue>;

    Scalar() = default;
    Scalar(Rational q) : v_(std::move(q)) {}   // NOLINT(google-explicit-constructor)
    Scalar(Gaussian g) : v_(std::move(g)) {}   // NOLINT(google-explicit-constructor)
    Scalar(Residue r) : v_(r) {}               // NOLINT(google-explicit-constructor)
    Scalar(long long n) : v_(Rational(n)) {}   // NOLINT(google-explicit-constructor)

    static Scalar from_int(long long n, const Scalar& like);
    static Scalar parse(std::string_view text);

    ScalarKind kind() const noexcept { return static_cast<ScalarKind>(v_.index()); }
    const Storage& storage() const noexcept { return v_; }
    template <class T>
    bool is() const noexcept { return std::holds_alternative<T>(v_); }
    template <class T>
    const T& as() const;

    bool is_zero() const;
    Scalar inverse() const;
    std::string str() const;
    /// Explicit widening: Rational -> Gaussian, Rational -> Residue (mod `p`).
    Scalar promoted_to(ScalarKind target, std::uint64_t p = 0) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    /// Total order: by variant, then by value. Used for canonical sorting only.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

private:
    Storage v_;
};

template <class T>
const T& Scalar::as() const
{
    if (const T* p = std::get_if<T>(&v_)) return *p;
    throw MismatchError("scalar " + str() + " has the wrong variant");
}

std::string_view kind_name(ScalarKind k);

/// Comma-separated list of scalars; empty string is the empty list.
std::vector<Scalar> parse_scalar_list(std::string_view text);
std::string render_scalar_list(const std::vector<Scalar>& xs);

/// Rewrites `xs` so that all entries share one variant: Rationals are widened
/// to Gaussian if any Gaussian is present, or reduced mod p if any residue is.
std::vector<Scalar> unify(std::vector<Scalar> xs);

/// Exact |z| upper bound as a rational: the value itself for rationals,
/// a certified upper bound on sqrt(|z|^2) for Gaussians.
Rational abs_upper_bound(const Scalar& z);

/// Nearest double, for plotting/rendering only.
double to_double(const Rational& q);

}  // namespace dmpl
