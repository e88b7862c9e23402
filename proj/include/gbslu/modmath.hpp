#pragma once

// Residue arithmetic over Z_d and the small number-theoretic objects used by
// the classification: inverses, factorization, the Moebius-type residue
// classes [x]_d / [[x]]_d and the solutions of x = 1 - x^-1.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gbslu/error.hpp"

namespace gbslu {

using i64 = std::int64_t;

/// Canonical representative of a in [0, d).
constexpr i64 mod(i64 a, i64 d) noexcept {
    i64 r = a % d;
    return r < 0 ? r + d : r;
}

constexpr bool coprime(i64 a, i64 d) noexcept { return std::gcd(mod(a, d), d) == 1; }

constexpr i64 ipow(i64 base, int exp) noexcept {
    i64 r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

/// The unique r in (0, d) with k*r = 1 (mod d).
inline i64 inv_mod(i64 k, i64 d) {
    if (d < 2) throw OutOfRange("inv_mod: modulus must be >= 2");
    i64 a = mod(k, d), m = d;
    i64 x0 = 1, x1 = 0;
    while (m != 0) {
        i64 q = a / m;
        a -= q * m;
        std::swap(a, m);
        x0 -= q * x1;
        std::swap(x0, x1);
    }
    if (a != 1)
        throw NonInvertible("inv_mod: " + std::to_string(k) + " is not invertible mod " + std::to_string(d));
    return mod(x0, d);
}

inline std::optional<i64> try_inv_mod(i64 k, i64 d) {
    if (!coprime(k, d)) return std::nullopt;
    return inv_mod(k, d);
}

/// Value in [0, modulus) together with its modulus.
class Residue {
public:
    Residue(i64 value, i64 modulus) : value_(0), modulus_(modulus) {
        if (modulus < 2) throw OutOfRange("Residue: modulus must be >= 2");
        value_ = mod(value, modulus);
    }

    i64 value() const noexcept { return value_; }
    i64 modulus() const noexcept { return modulus_; }
    bool invertible() const noexcept { return coprime(value_, modulus_); }
    Residue inverse() const { return {inv_mod(value_, modulus_), modulus_}; }

    friend Residue operator+(Residue a, Residue b) { return {a.value_ + b.check(a).value_, a.modulus_}; }
    friend Residue operator-(Residue a, Residue b) { return {a.value_ - b.check(a).value_, a.modulus_}; }
    friend Residue operator*(Residue a, Residue b) { return {a.value_ * b.check(a).value_, a.modulus_}; }
    Residue operator-() const { return {-value_, modulus_}; }
    friend bool operator==(const Residue&, const Residue&) = default;

private:
    const Residue& check(const Residue& other) const {
        if (other.modulus_ != modulus_) throw DimensionMismatch("Residue: moduli differ");
        return *this;
    }

    i64 value_;
    i64 modulus_;
};

struct PrimePower {
    i64 prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

inline constexpr i64 kDefaultFactorCap = 1'000'000;

/// Trial-division factorization, primes ascending.
inline Factorization factorize(i64 d, i64 cap = kDefaultFactorCap) {
    if (d < 2) throw OutOfRange("factorize: d must be >= 2");
    if (d > cap) throw DimensionTooLarge("factorize: d exceeds the configured cap");
    Factorization out;
    for (i64 p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        int k = 0;
        while (d % p == 0) {
            d /= p;
            ++k;
        }
        out.push_back({p, k});
    }
    if (d > 1) out.push_back({d, 1});
    return out;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// (p, alpha) when d = p^alpha, nullopt otherwise.
inline std::optional<PrimePower> prime_power(i64 d) {
    if (d < 2) return std::nullopt;
    auto f = factorize(d, d);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

inline std::vector<i64> divisors(i64 d) {
    std::vector<i64> out;
    for (i64 s = 1; s <= d; ++s)
        if (d % s == 0) out.push_back(s);
    return out;
}

inline i64 divisor_count(const Factorization& f) {
    i64 n = 1;
    for (const auto& pp : f) n *= pp.exponent + 1;
    return n;
}

inline std::vector<i64> units(i64 d) {
    std::vector<i64> out;
    for (i64 k = 1; k < d; ++k)
        if (std::gcd(k, d) == 1) out.push_back(k);
    return out;
}

enum class BracketKind { Bracket, Double };

/// [x]_d (Bracket) or [[x]]_d (Double); terms needing a missing inverse are omitted.
struct BracketClass {
    BracketKind kind;
    i64 modulus;
    std::vector<i64> members;  // sorted, distinct

    i64 min() const { return members.front(); }
    bool contains(i64 y) const { return std::binary_search(members.begin(), members.end(), mod(y, modulus)); }
    friend bool operator==(const BracketClass&, const BracketClass&) = default;
};

inline BracketClass bracket_class(i64 x, i64 d, BracketKind kind) {
    if (d < 3 || x < 2 || x >= d)
        throw OutOfRange("bracket_class: need 2 <= x < d, got x=" + std::to_string(x) + ", d=" + std::to_string(d));
    std::set<i64> m{x};
    const auto xi = try_inv_mod(x, d);
    const auto one_minus_x_inv = try_inv_mod(1 - x, d);
    if (one_minus_x_inv) m.insert(*one_minus_x_inv);
    if (xi) m.insert(mod(1 - *xi, d));
    if (kind == BracketKind::Bracket) {
        if (xi) m.insert(*xi);
        m.insert(mod(1 - x, d));
        if (auto xm1 = try_inv_mod(x - 1, d)) m.insert(mod(x * *xm1, d));
    }
    return {kind, d, {m.begin(), m.end()}};
}

/// All invertible x in Z_{p^alpha} with x = 1 - x^-1, by exhaustive search.
inline std::vector<i64> solve_self_inverse(i64 p, int alpha) {
    const i64 d = ipow(p, alpha);
    std::vector<i64> out;
    for (i64 x = 1; x < d; ++x) {
        if (!coprime(x, d)) continue;
        if (mod(x * x - x + 1, d) == 0) out.push_back(x);
    }
    return out;
}

/// Whether -3 is a square mod p^alpha, by exhaustive search.
inline bool count_quadratic_check(i64 p, int alpha) {
    const i64 d = ipow(p, alpha);
    const i64 target = mod(-3, d);
    for (i64 y = 0; y < d; ++y)
        if (mod(y * y, d) == target) return true;
    return false;
}

}  // namespace gbslu
