#pragma once

// Projective generalized Pauli matrices X^s Z^t over Z_d, identified with
// their exponent vectors, and sets of them.

#include <algorithm>
#include <cctype>
#include <compare>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbslu/error.hpp"
#include "gbslu/modmath.hpp"

namespace gbslu {

/// X^s Z^t in dimension d, up to phase.
class Gpm {
public:
    Gpm(i64 s, i64 t, i64 d) : s_(0), t_(0), d_(d) {
        if (d < 2) throw OutOfRange("Gpm: dimension must be >= 2");
        s_ = mod(s, d);
        t_ = mod(t, d);
    }

    static Gpm identity(i64 d) { return {0, 0, d}; }

    i64 s() const noexcept { return s_; }
    i64 t() const noexcept { return t_; }
    i64 d() const noexcept { return d_; }
    bool is_identity() const noexcept { return s_ == 0 && t_ == 0; }

    Gpm operator-() const { return {-s_, -t_, d_}; }
    Gpm scaled(i64 k) const { return {s_ * k, t_ * k, d_}; }

    friend bool operator==(const Gpm&, const Gpm&) = default;
    friend std::strong_ordering operator<=>(const Gpm& a, const Gpm& b) {
        if (auto c = a.s_ <=> b.s_; c != 0) return c;
        return a.t_ <=> b.t_;
    }

private:
    i64 s_, t_, d_;
};

/// Exponent vector and phase exponent m of a product, meaning value = omega^m * gpm.
struct PhasedGpm {
    Gpm gpm;
    i64 phase;
};

inline void require_same_dim(const Gpm& a, const Gpm& b) {
    if (a.d() != b.d()) throw DimensionMismatch("GPMs of different dimensions");
}

/// X^{sA}Z^{tA} X^{sB}Z^{tB} = omega^{tA sB} X^{sA+sB} Z^{tA+tB}.
inline PhasedGpm gpm_product(const Gpm& a, const Gpm& b) {
    require_same_dim(a, b);
    const i64 d = a.d();
    return {Gpm(a.s() + b.s(), a.t() + b.t(), d), mod(a.t() * b.s(), d)};
}

/// (X^s Z^t)^dagger = omega^{st} X^{-s} Z^{-t}.
inline PhasedGpm gpm_dagger(const Gpm& a) {
    return {-a, mod(a.s() * a.t(), a.d())};
}

/// Sorted set of distinct GPMs of one dimension, size >= 2.
class GpmSet {
public:
    GpmSet(i64 d, std::vector<Gpm> members) : d_(d), members_(std::move(members)) {
        if (d < 2) throw OutOfRange("GpmSet: dimension must be >= 2");
        for (const auto& g : members_)
            if (g.d() != d) throw DimensionMismatch("GpmSet: member of another dimension");
        std::sort(members_.begin(), members_.end());
        if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
            throw PreconditionViolated("GpmSet: duplicate member");
        if (members_.size() < 2) throw PreconditionViolated("GpmSet: need at least two members");
    }

    GpmSet(i64 d, std::initializer_list<std::pair<i64, i64>> exps) : GpmSet(d, from_pairs(d, exps)) {}

    i64 d() const noexcept { return d_; }
    std::size_t size() const noexcept { return members_.size(); }
    const Gpm& operator[](std::size_t i) const { return members_.at(i); }
    std::span<const Gpm> members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    bool contains_identity() const noexcept { return members_.front().is_identity(); }

    friend bool operator==(const GpmSet&, const GpmSet&) = default;

private:
    static std::vector<Gpm> from_pairs(i64 d, std::initializer_list<std::pair<i64, i64>> exps) {
        std::vector<Gpm> out;
        for (auto [s, t] : exps) out.emplace_back(s, t, d);
        return out;
    }

    i64 d_;
    std::vector<Gpm> members_;
};

/// v_ij = M_j - M_i for all ordered pairs, row-major.
class DiffTable {
public:
    explicit DiffTable(std::span<const Gpm> ms) : n_(ms.size()) {
        v_.reserve(n_ * n_);
        for (const auto& mi : ms)
            for (const auto& mj : ms) v_.emplace_back(mj.s() - mi.s(), mj.t() - mi.t(), mi.d());
    }

    std::size_t n() const noexcept { return n_; }
    const Gpm& at(std::size_t i, std::size_t j) const { return v_.at(i * n_ + j); }
    std::span<const Gpm> all() const noexcept { return v_; }

private:
    std::size_t n_;
    std::vector<Gpm> v_;
};

inline DiffTable diff_table(const GpmSet& s) { return DiffTable(s.members()); }

inline std::string to_string(const Gpm& g) { return std::to_string(g.s()) + "," + std::to_string(g.t()); }

inline std::string to_string(std::span<const Gpm> ms) {
    std::string out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out += ';';
        out += to_string(ms[i]);
    }
    return out;
}

inline std::string to_string(const GpmSet& s) { return to_string(s.members()); }

namespace detail {
inline i64 parse_int(std::string_view tok, std::string_view whole) {
    if (tok.empty()) throw ParseError("empty number in '" + std::string(whole) + "'");
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(std::string(tok), &pos);
    } catch (const std::exception&) {
        throw ParseError("bad number '" + std::string(tok) + "'");
    }
    if (pos != tok.size()) throw ParseError("bad number '" + std::string(tok) + "'");
    return v;
}
}  // namespace detail

/// Parses "s,t;s,t;..." into a list (whitespace ignored, values reduced mod d, repeats kept).
inline std::vector<Gpm> parse_gpm_list(std::string_view text, i64 d) {
    std::string clean;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) clean += c;
    if (clean.empty()) throw ParseError("empty set");
    std::vector<Gpm> ms;
    std::string_view rest = clean;
    while (true) {
        auto semi = rest.find(';');
        auto item = rest.substr(0, semi);
        auto comma = item.find(',');
        if (comma == std::string_view::npos || item.find(',', comma + 1) != std::string_view::npos)
            throw ParseError("expected 's,t' but got '" + std::string(item) + "'");
        ms.emplace_back(detail::parse_int(item.substr(0, comma), text), detail::parse_int(item.substr(comma + 1), text), d);
        if (semi == std::string_view::npos) break;
        rest = rest.substr(semi + 1);
    }
    return ms;
}

inline GpmSet parse_gpm_set(std::string_view text, i64 d) { return GpmSet(d, parse_gpm_list(text, d)); }

}  // namespace gbslu
