// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmpl/index.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace dmpl {

namespace {

void check_parts(const std::vector<int>& parts)
{
    for (int p : parts) {
        if (p < 1) throw DomainError("index parts must be positive");
    }
}

// All ordered compositions of n.
std::vector<std::vector<int>> compositions(int n)
{
    std::vector<std::vector<int>> out;
    if (n <= 0) return out;
    const unsigned cuts = static_cast<unsigned>(n - 1);
    for (unsigned mask = 0; mask < (1U << cuts); ++mask) {
        std::vector<int> c;
        int run = 1;
        for (unsigned b = 0; b < cuts; ++b) {
            if (mask & (1U << b)) {
                c.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.push_back(run);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Cartesian product of per-block alternatives, concatenated in order.
std::vector<Index> concat_product(const std::vector<std::vector<std::vector<int>>>& blocks)
{
    std::vector<std::vector<int>> acc{{}};
    for (const auto& choices : blocks) {
        std::vector<std::vector<int>> next;
        next.reserve(acc.size() * choices.size());
        for (const auto& head : acc) {
            for (const auto& c : choices) {
                auto v = head;
                v.insert(v.end(), c.begin(), c.end());
                next.push_back(std::move(v));
            }
        }
        acc = std::move(next);
    }
    std::vector<Index> out;
    out.reserve(acc.size());
    for (auto& v : acc) out.emplace_back(std::move(v));
    std::sort(out.begin(), out.end());
    return out;
}

// Gaussian view of a rational or Gaussian scalar.
Gaussian as_gaussian(const Scalar& z)
{
    if (z.is<Rational>()) return Gaussian(z.as<Rational>());
    if (z.is<Gaussian>()) return z.as<Gaussian>();
    throw DomainError("dual pairs need rational or Gaussian points");
}

bool is_one(const Scalar& z) { return as_gaussian(z) == Gaussian(Rational(1)); }

Scalar one_minus(const Scalar& z)
{
    if (z.is<Rational>()) return Rational(1) - z.as<Rational>();
    Gaussian g = Gaussian(Rational(1)) - z.as<Gaussian>();
    if (g.im().is_zero()) return g.re();
    return g;
}

}  // namespace

// ---------------------------------------------------------------- Index

Index::Index(std::initializer_list<int> parts) : parts_(parts) { check_parts(parts_); }

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) { check_parts(parts_); }

Index Index::parse(std::string_view text)
{
    std::vector<int> parts;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) throw ParseError("empty index part in '" + std::string(text) + "'");
        if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            tok.size() > 6) {
            throw ParseError("bad index part '" + tok + "'");
        }
        const int v = std::stoi(tok);
        if (v < 1) throw ParseError("index parts must be positive: '" + tok + "'");
        parts.push_back(v);
        tok.clear();
    };
    bool any = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        any = true;
        if (c == ',') flush();
        else tok.push_back(c);
    }
    if (any) flush();
    return Index(std::move(parts));
}

int Index::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Index::str() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Index Index::without(int i) const
{
    auto v = parts_;
    v.erase(v.begin() + i);
    return Index(std::move(v));
}

Index Index::lowered(int i) const
{
    if (parts_.at(static_cast<std::size_t>(i)) < 2) throw DomainError("cannot lower a part equal to 1");
    auto v = parts_;
    --v[static_cast<std::size_t>(i)];
    return Index(std::move(v));
}

Index Index::prefix(int len) const { return Index(std::vector<int>(parts_.begin(), parts_.begin() + len)); }

Index Index::suffix_from(int start) const { return Index(std::vector<int>(parts_.begin() + start, parts_.end())); }

Index Index::concat(const Index& o) const
{
    auto v = parts_;
    v.insert(v.end(), o.parts_.begin(), o.parts_.end());
    return Index(std::move(v));
}

// ---------------------------------------------------------------- IndexCombo

void IndexCombo::add(const Index& k, const Rational& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void IndexCombo::add(const IndexCombo& o, const Rational& scale)
{
    for (const auto& [k, c] : o.terms_) add(k, c * scale);
}

Rational IndexCombo::coefficient(const Index& k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational() : it->second;
}

std::string IndexCombo::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        if (c != Rational(1)) out += c.str() + "*";
        out += "(" + k.str() + ")";
    }
    return out;
}

// ---------------------------------------------------------------- duality

Index dual_index(const Index& k)
{
    if (!k.admissible()) throw DomainError("dual index of non-admissible (" + k.str() + ")");
    // Blocks ({1}^{a-1}, b+1).
    std::vector<std::pair<int, int>> blocks;
    int ones = 0;
    for (int p : k) {
        if (p == 1) {
            ++ones;
        } else {
            blocks.emplace_back(ones + 1, p - 1);
            ones = 0;
        }
    }
    std::vector<int> out;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        out.insert(out.end(), static_cast<std::size_t>(it->second - 1), 1);
        out.push_back(it->first + 1);
    }
    return Index(std::move(out));
}

bool in_dual_domain(const Scalar& z)
{
    const Gaussian g = as_gaussian(z);
    if (g == Gaussian(Rational(1))) return true;
    const Gaussian w = Gaussian(Rational(1)) - g;
    return g.norm() >= Rational(1) && w.norm() >= Rational(1);
}

bool satisfies_dual_condition(const DualizablePair& p)
{
    if (p.index.empty() || static_cast<int>(p.points.size()) != p.index.depth()) return false;
    if (!std::all_of(p.points.begin(), p.points.end(), in_dual_domain)) return false;
    return p.index.admissible() || !is_one(p.points.back());
}

DualResult dual_pair(const DualizablePair& p)
{
    if (!satisfies_dual_condition(p)) throw DomainError("pair violates the dual condition");

    struct Segment {
        Index l;       // admissible block
        int a = 0;     // run of ones is {1}^{a-1}
        int b = 0;     // part at w
        Scalar w;
    };
    std::vector<Segment> segs;
    std::vector<int> stretch;
    const int r = p.index.depth();
    for (int i = 0; i < r; ++i) {
        if (is_one(p.points[static_cast<std::size_t>(i)])) {
            stretch.push_back(p.index[static_cast<std::size_t>(i)]);
            continue;
        }
        int trailing = 0;
        while (trailing < static_cast<int>(stretch.size()) && stretch[stretch.size() - 1 - trailing] == 1) {
            ++trailing;
        }
        Segment s;
        s.l = Index(std::vector<int>(stretch.begin(), stretch.end() - trailing));
        s.a = trailing + 1;
        s.b = p.index[static_cast<std::size_t>(i)];
        s.w = p.points[static_cast<std::size_t>(i)];
        segs.push_back(std::move(s));
        stretch.clear();
    }
    const Index tail(stretch);
    if (!tail.admissible()) throw DomainError("trailing block is not admissible");

    std::vector<int> parts;
    std::vector<Scalar> points;
    auto push_block = [&](const Index& l) {
        for (int v : dual_index(l)) {
            parts.push_back(v);
            points.emplace_back(Rational(1));
        }
    };
    push_block(tail);
    for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
        for (int j = 0; j < it->b - 1; ++j) {
            parts.push_back(1);
            points.emplace_back(Rational(1));
        }
        parts.push_back(it->a);
        points.push_back(one_minus(it->w));
        push_block(it->l);
    }
    return {DualizablePair{Index(std::move(parts)), std::move(points)}, static_cast<int>(segs.size())};
}

// ---------------------------------------------------------------- refinement poset

std::vector<Index> refinements(const Index& k)
{
    std::vector<std::vector<std::vector<int>>> blocks;
    for (int p : k) blocks.push_back(compositions(p));
    return concat_product(blocks);
}

IndexCombo coarsenings_star(const Index& k)
{
    IndexCombo out;
    if (k.empty()) {
        out.add(k, Rational(1));
        return out;
    }
    const unsigned commas = static_cast<unsigned>(k.depth() - 1);
    for (unsigned mask = 0; mask < (1U << commas); ++mask) {
        std::vector<int> h{k[0]};
        for (unsigned c = 0; c < commas; ++c) {
            if (mask & (1U << c)) h.back() += k[c + 1];
            else h.push_back(k[c + 1]);
        }
        out.add(Index(std::move(h)), Rational(1));
    }
    return out;
}

namespace {

void check_lengths(const std::vector<int>& l, const Index& k)
{
    if (static_cast<int>(l.size()) != k.depth()) throw DomainError("length mismatch between l and k");
    for (int v : l) {
        if (v < 0) throw DomainError("l must be non-negative");
    }
}

}  // namespace

Index oplus(const std::vector<int>& l, const Index& k)
{
    check_lengths(l, k);
    std::vector<int> out;
    for (std::size_t i = 0; i < l.size(); ++i) out.push_back(l[i] + k[i]);
    return Index(std::move(out));
}

Index oslash(const std::vector<int>& l, const Index& k)
{
    check_lengths(l, k);
    std::vector<int> out;
    for (std::size_t i = 0; i < l.size(); ++i) {
        out.push_back(l[i] + 1);
        out.insert(out.end(), static_cast<std::size_t>(k[i] - 1), 1);
    }
    return Index(std::move(out));
}

std::vector<Index> between_chain(const std::vector<int>& l, const Index& k)
{
    check_lengths(l, k);
    // Each block (l_j + 1, {1}^{k_j - 1}) collapses along any subset of its inner commas.
    std::vector<std::vector<std::vector<int>>> blocks;
    for (std::size_t j = 0; j < l.size(); ++j) {
        std::vector<int> block{l[j] + 1};
        block.insert(block.end(), static_cast<std::size_t>(k[j] - 1), 1);
        std::vector<std::vector<int>> choices;
        const IndexCombo star = coarsenings_star(Index(block));
        for (const auto& [h, c] : star.terms()) choices.push_back(h.parts());
        blocks.push_back(std::move(choices));
    }
    return concat_product(blocks);
}

std::vector<Index> enumerate_indices(int max_weight, int max_depth, bool admissible_only)
{
    if (max_weight < 0 || max_depth < 0) throw DomainError("negative enumeration bounds");
    std::vector<Index> out;
    out.emplace_back();
    for (int w = 1; w <= max_weight; ++w) {
        auto comps = compositions(w);
        std::stable_sort(comps.begin(), comps.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        for (auto& c : comps) {
            if (static_cast<int>(c.size()) > max_depth) continue;
            Index k(std::move(c));
            if (admissible_only && !k.admissible()) continue;
            out.push_back(std::move(k));
        }
    }
    return out;
}

std::vector<std::vector<int>> weak_compositions(int total, int length)
{
    std::vector<std::vector<int>> out;
    if (length == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(length), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == length - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

}  // namespace dmpl
