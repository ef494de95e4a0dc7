// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmpl/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace dmpl {

namespace {

std::string trim(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_integer(std::string_view s)
{
    if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) throw PoleError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::inverse() const
{
    if (is_zero()) throw PoleError("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw PoleError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const
{
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(std::string_view text)
{
    const std::string s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s), mpz_class(1));
    const std::string_view den = std::string_view(s).substr(slash + 1);
    if (den.empty() || den.front() == '-' || den.front() == '+') {
        throw ParseError("bad denominator in '" + s + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(parse_integer(std::string_view(s).substr(0, slash)), d);
}

// ---------------------------------------------------------------- Gaussian

Gaussian& Gaussian::operator+=(const Gaussian& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o)
{
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Gaussian Gaussian::inverse() const
{
    if (is_zero()) throw PoleError("inverse of zero");
    const Rational n = norm();
    return {re_ / n, -im_ / n};
}

std::string Gaussian::str() const
{
    std::string out = re_.str();
    out += im_.sign() < 0 ? "-" : "+";
    out += im_.abs().str();
    out += "*i";
    return out;
}

Gaussian Gaussian::parse(std::string_view text)
{
    const std::string s = trim(text);
    if (s.empty() || s.back() != 'i') throw ParseError("not a Gaussian rational: '" + s + "'");
    std::string body = s.substr(0, s.size() - 1);
    if (!body.empty() && body.back() == '*') body.pop_back();

    // Split at the last sign that is not leading and not part of "+-".
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '+' && body[k - 1] != '-' &&
            body[k - 1] != '/') {
            split = k;
            break;
        }
    }
    std::string re_text = split == std::string::npos ? "0" : body.substr(0, split);
    std::string im_text = split == std::string::npos ? body : body.substr(split);
    if (!im_text.empty() && im_text.front() == '+') im_text.erase(0, 1);
    if (im_text.empty()) im_text = "1";
    else if (im_text == "-") im_text = "-1";
    else if (im_text.size() >= 2 && im_text[0] == '-' && im_text[1] == '+') im_text.erase(1, 1);
    else if (im_text.size() >= 2 && im_text[0] == '-' && im_text[1] == '-') im_text.erase(0, 2);
    if (split != std::string::npos && s.size() > split && body[split] == '+' && im_text.front() == '-') {
        // "a+-b" keeps the minus.
    }
    return {Rational::parse(re_text), Rational::parse(im_text)};
}

// ---------------------------------------------------------------- Residue

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Residue::Residue(long long value, std::uint64_t p) : p_(p)
{
    if (p < 2 || p > std::numeric_limits<std::uint32_t>::max()) {
        throw DomainError("residue modulus out of range: " + std::to_string(p));
    }
    thread_local std::uint64_t last_prime = 0;
    if (p != last_prime) {
        if (!is_prime(p)) throw DomainError("residue modulus " + std::to_string(p) + " is not prime");
        last_prime = p;
    }
    const auto pp = static_cast<long long>(p);
    long long v = value % pp;
    if (v < 0) v += pp;
    v_ = static_cast<std::uint64_t>(v);
}

Residue Residue::from_rational(const Rational& q, std::uint64_t p)
{
    const mpz_class pz(static_cast<unsigned long>(p));
    mpz_class num = q.num() % pz;
    mpz_class den = q.den() % pz;
    if (den == 0) {
        throw PoleError("denominator " + q.den().get_str() + " is divisible by " + std::to_string(p));
    }
    Residue n(num.get_si(), p);
    Residue d(den.get_si(), p);
    return n / d;
}

void Residue::check_same(const Residue& o) const
{
    if (p_ != o.p_) {
        throw MismatchError("residues modulo " + std::to_string(p_) + " and " + std::to_string(o.p_));
    }
}

Residue& Residue::operator+=(const Residue& o)
{
    check_same(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
}

Residue& Residue::operator-=(const Residue& o)
{
    check_same(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
}

Residue& Residue::operator*=(const Residue& o)
{
    check_same(o);
    v_ = mulmod(v_, o.v_, p_);
    return *this;
}

Residue Residue::pow(std::uint64_t e) const
{
    Residue base = *this;
    Residue acc = from_raw(1 % p_, p_);
    while (e != 0) {
        if (e & 1U) acc *= base;
        base *= base;
        e >>= 1U;
    }
    return acc;
}

Residue Residue::inverse() const
{
    if (v_ == 0) throw PoleError("division by a multiple of " + std::to_string(p_));
    return pow(p_ - 2);
}

std::string Residue::str() const { return std::to_string(v_) + " mod " + std::to_string(p_); }

Residue Residue::parse(std::string_view text)
{
    const std::string s = trim(text);
    const auto at = s.find("mod");
    if (at == std::string::npos) throw ParseError("not a residue: '" + s + "'");
    const mpz_class p = parse_integer(std::string_view(s).substr(at + 3));
    if (p < 2 || !p.fits_ulong_p() || !is_prime(p.get_ui())) {
        throw ParseError("modulus is not a supported prime: '" + s + "'");
    }
    return from_rational(Rational::parse(std::string_view(s).substr(0, at)), p.get_ui());
}

// ---------------------------------------------------------------- Scalar

namespace {

template <class Op>
Scalar binary(const Scalar& a, const Scalar& b, Op op, const char* name)
{
    return std::visit(
        [&](const auto& x, const auto& y) -> Scalar {
            using X = std::decay_t<decltype(x)>;
            using Y = std::decay_t<decltype(y)>;
            if constexpr (std::is_same_v<X, Y>) {
                return Scalar(op(x, y));
            } else {
                throw MismatchError(std::string("cannot ") + name + " " + a.str() + " and " + b.str());
            }
        },
        a.storage(), b.storage());
}

}  // namespace

Scalar Scalar::from_int(long long n, const Scalar& like)
{
    return std::visit([n](const auto& x) -> Scalar { return Scalar(std::decay_t<decltype(x)>::from_int(n, x)); },
                      like.v_);
}

Scalar Scalar::parse(std::string_view text)
{
    const std::string s = trim(text);
    if (s.empty()) throw ParseError("empty scalar literal");
    if (s.find("mod") != std::string::npos) return Residue::parse(s);
    if (s.back() == 'i') return Gaussian::parse(s);
    return Rational::parse(s);
}

bool Scalar::is_zero() const
{
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

Scalar Scalar::inverse() const
{
    return std::visit([](const auto& x) -> Scalar { return Scalar(x.inverse()); }, v_);
}

std::string Scalar::str() const
{
    return std::visit([](const auto& x) { return x.str(); }, v_);
}

Scalar Scalar::promoted_to(ScalarKind target, std::uint64_t p) const
{
    if (kind() == target) {
        if (target == ScalarKind::Residue && p != 0 && as<Residue>().modulus() != p) {
            throw MismatchError("residue " + str() + " cannot change modulus");
        }
        return *this;
    }
    if (kind() == ScalarKind::Rational && target == ScalarKind::Gaussian) {
        return Gaussian(as<Rational>());
    }
    if (kind() == ScalarKind::Rational && target == ScalarKind::Residue) {
        return Residue::from_rational(as<Rational>(), p);
    }
    throw MismatchError("cannot convert " + str() + " to " + std::string(kind_name(target)));
}

Scalar Scalar::operator-() const
{
    return std::visit([](const auto& x) -> Scalar { return Scalar(-x); }, v_);
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    return binary(a, b, [](const auto& x, const auto& y) { return x + y; }, "add");
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    return binary(a, b, [](const auto& x, const auto& y) { return x - y; }, "subtract");
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    return binary(a, b, [](const auto& x, const auto& y) { return x * y; }, "multiply");
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
    return binary(a, b, [](const auto& x, const auto& y) { return x / y; }, "divide");
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
{
    if (auto c = a.v_.index() <=> b.v_.index(); c != 0) return c;
    return std::visit(
        [&](const auto& x) -> std::strong_ordering {
            return x <=> std::get<std::decay_t<decltype(x)>>(b.v_);
        },
        a.v_);
}

std::string_view kind_name(ScalarKind k)
{
    switch (k) {
    case ScalarKind::Rational: return "rational";
    case ScalarKind::Gaussian: return "gaussian";
    case ScalarKind::Residue: return "residue";
    }
    return "unknown";
}

std::vector<Scalar> parse_scalar_list(std::string_view text)
{
    std::vector<Scalar> out;
    const std::string s = trim(text);
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(Scalar::parse(std::string_view(s).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string render_scalar_list(const std::vector<Scalar>& xs)
{
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k != 0) out += ',';
        out += xs[k].str();
    }
    return out;
}

std::vector<Scalar> unify(std::vector<Scalar> xs)
{
    bool has_gaussian = false;
    std::uint64_t modulus = 0;
    for (const auto& x : xs) {
        if (x.kind() == ScalarKind::Gaussian) has_gaussian = true;
        if (x.kind() == ScalarKind::Residue) {
            const auto p = x.as<Residue>().modulus();
            if (modulus != 0 && modulus != p) throw MismatchError("point mixes moduli");
            modulus = p;
        }
    }
    if (has_gaussian && modulus != 0) throw MismatchError("point mixes Gaussian and residue values");
    for (auto& x : xs) {
        if (has_gaussian) x = x.promoted_to(ScalarKind::Gaussian);
        else if (modulus != 0) x = x.promoted_to(ScalarKind::Residue, modulus);
    }
    return xs;
}

Rational abs_upper_bound(const Scalar& z)
{
    if (z.is<Rational>()) return z.as<Rational>().abs();
    if (!z.is<Gaussian>()) throw MismatchError("absolute value of a residue");
    const Rational n2 = z.as<Gaussian>().norm();
    if (n2.is_zero()) return {};
    // sqrt(a/b) = sqrt(a*b*4^s) / (b*2^s); pad so the integer root has >= 128 bits.
    const mpz_class a = n2.num();
    const mpz_class b = n2.den();
    mpz_class prod = a * b;
    unsigned long shift = 0;
    const std::size_t bits = mpz_sizeinbase(prod.get_mpz_t(), 2);
    if (bits < 256) shift = (256 - bits) / 2 + 1;
    prod <<= 2 * shift;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
    if (root * root != prod) root += 1;
    mpz_class den = b;
    den <<= shift;
    return {root, den};
}

double to_double(const Rational& q) { return q.mpq().get_d(); }

}  // namespace dmpl
