#pragma once

// Equivalence moves on GPM sets. Everything except the pivot acts linearly
// on exponent vectors, possibly restricted to a sublattice.

#include <array>
#include <functional>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "gbslu/gpm.hpp"

namespace gbslu {

/// Column action (s,t) -> (a s + b t, c s + e t).
struct Mat2 {
    i64 a = 1, b = 0, c = 0, e = 1;

    i64 det() const noexcept { return a * e - b * c; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.e, c * o.a + e * o.c, c * o.b + e * o.e};
    }
    Mat2 reduced(i64 m) const { return {mod(a, m), mod(b, m), mod(c, m), mod(e, m)}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 mat_pow(Mat2 m, i64 k, i64 d) {
    Mat2 r;
    for (; k > 0; --k) r = (r * m).reduced(d);
    return r;
}

/// The group G(t,s) of X^{a1 p^t} Z^{a2 p^s}.
struct LatticeContext {
    i64 p;
    int alpha;
    int s;
    int t;

    i64 d() const { return ipow(p, alpha); }
    i64 x_step() const { return ipow(p, t); }
    i64 z_step() const { return ipow(p, s); }
    i64 x_modulus() const { return ipow(p, alpha - t); }
    i64 z_modulus() const { return ipow(p, alpha - s); }
    i64 det_modulus() const { return ipow(p, alpha - s - t); }
    bool contains(const Gpm& g) const { return g.s() % x_step() == 0 && g.t() % z_step() == 0; }
};

struct SymplecticMap {
    i64 d;
    Mat2 m;
    std::optional<LatticeContext> ctx;

    i64 det() const { return m.det(); }
};

enum class CliffordName { P, R, V, Q };

inline SymplecticMap clifford_generator(CliffordName name, i64 d, i64 k = 1) {
    switch (name) {
        case CliffordName::P: return {d, {1, 0, 1, 1}, {}};
        case CliffordName::R: return {d, {0, d - 1, 1, 0}, {}};
        case CliffordName::V: return {d, {1, 1, 0, 1}, {}};
        case CliffordName::Q: return {d, {inv_mod(k, d), 0, 0, mod(k, d)}, {}};
    }
    throw OutOfRange("clifford_generator: unknown name");
}

inline Gpm apply_map(const SymplecticMap& f, const Gpm& g) {
    if (g.d() != f.d) throw DimensionMismatch("apply_map: dimension differs from map");
    if (!f.ctx) return {f.m.a * g.s() + f.m.b * g.t(), f.m.c * g.s() + f.m.e * g.t(), f.d};
    const auto& c = *f.ctx;
    if (!c.contains(g)) throw NotInLattice("apply_map: " + to_string(g) + " is outside the sublattice");
    const i64 a1 = g.s() / c.x_step(), a2 = g.t() / c.z_step();
    const i64 b1 = mod(f.m.a * a1 + f.m.b * a2, c.x_modulus());
    const i64 b2 = mod(f.m.c * a1 + f.m.e * a2, c.z_modulus());
    return {b1 * c.x_step(), b2 * c.z_step(), f.d};
}

inline GpmSet apply_map(const SymplecticMap& f, const GpmSet& set) {
    std::vector<Gpm> out;
    for (const auto& g : set) out.push_back(apply_map(f, g));
    return {set.d(), std::move(out)};
}

/// True iff det F = 1 mod p^{alpha-s-t}, with entries first reduced to their lattice ranges.
inline bool lemma2_det_check(const Mat2& f, const LatticeContext& ctx) {
    const i64 xm = ctx.x_modulus(), zm = ctx.z_modulus();
    const Mat2 r{mod(f.a, xm), mod(f.b, xm), mod(f.c, zm), mod(f.e, zm)};
    return mod(r.det() - 1, ctx.det_modulus()) == 0;
}

inline void check_w_params(i64 p, int alpha, int s, int t, i64 k) {
    if (!is_prime(p)) throw PreconditionViolated("W: p must be prime");
    if (s < 0 || t < 0) throw PreconditionViolated("W: s and t must be non-negative");
    if (s + t >= alpha) throw PreconditionViolated("W: need s + t < alpha");
    if (k < 1 || k >= ipow(p, s)) throw PreconditionViolated("W: need 1 <= k < p^s");
}

/// Lattice map of the W operator: X^{p^t} -> X^{k p^{alpha-s} + p^t}, Z^{p^s} fixed.
inline SymplecticMap w_map(i64 p, int alpha, int s, int t, i64 k) {
    check_w_params(p, alpha, s, t, k);
    LatticeContext ctx{p, alpha, s, t};
    return {ctx.d(), {k * ctx.det_modulus() + 1, 0, 0, 1}, ctx};
}

inline GpmSet w_move(const GpmSet& set, i64 p, int alpha, int s, int t, i64 k) {
    const auto f = w_map(p, alpha, s, t, k);
    if (set.d() != f.d) throw DimensionMismatch("w_move: set dimension is not p^alpha");
    for (const auto& g : set)
        if (!f.ctx->contains(g)) throw PreconditionViolated("w_move: " + to_string(g) + " is outside G(t,s)");
    return apply_map(f, set);
}

/// Left-multiplies every member by c (projectively).
inline GpmSet translate(const GpmSet& set, const Gpm& c) {
    std::vector<Gpm> out;
    for (const auto& g : set) out.push_back(gpm_product(c, g).gpm);
    return {set.d(), std::move(out)};
}

/// Right-multiplies by the inverse of member j, so that member becomes I.
inline GpmSet pivot_move(const GpmSet& set, std::size_t j) {
    if (j >= set.size()) throw IndexOutOfRange("pivot_move: index " + std::to_string(j) + " out of range");
    return translate(set, -set[j]);
}

enum class MoveKind { Clifford, LatticeScale, Pivot };

/// A primitive move. LatticeScale covers the W operators and the tensor splits.
struct Move {
    MoveKind kind = MoveKind::Clifford;
    Mat2 f;
    i64 xdiv = 1, zdiv = 1;  // guard: X-exponent divisible by xdiv, Z-exponent by zdiv
    std::size_t pivot = 0;
    std::string label;

    bool applies(const Gpm& g) const { return g.s() % xdiv == 0 && g.t() % zdiv == 0; }
    bool applies(const GpmSet& set) const {
        if (kind == MoveKind::Pivot) return pivot < set.size();
        return std::all_of(set.begin(), set.end(), [this](const Gpm& g) { return applies(g); });
    }
    Gpm image(const Gpm& g) const { return {f.a * g.s() + f.b * g.t(), f.c * g.s() + f.e * g.t(), g.d()}; }

    GpmSet apply(const GpmSet& set) const {
        if (kind == MoveKind::Pivot) return pivot_move(set, pivot);
        if (!applies(set)) throw GuardFailed("move " + label + " does not apply to " + to_string(set));
        std::vector<Gpm> out;
        for (const auto& g : set) out.push_back(image(g));
        return {set.d(), std::move(out)};
    }
};

namespace moves {

inline Move clifford(const Mat2& m, i64 d, std::string label) {
    return {MoveKind::Clifford, m.reduced(d), 1, 1, 0, std::move(label)};
}

inline Move P(i64 d, i64 power = 1) {
    const i64 m = mod(power, d);
    return clifford(mat_pow({1, 0, 1, 1}, m, d), d, m == 1 ? "P" : "P^" + std::to_string(m));
}

inline Move R(i64 d, int power = 1) {
    const int m = ((power % 4) + 4) % 4;
    return clifford(mat_pow({0, -1, 1, 0}, m, d), d, m == 1 ? "R" : "R^" + std::to_string(m));
}

inline Move V(i64 d, i64 power = 1) {
    const i64 m = mod(power, d);
    return clifford(mat_pow({1, 1, 0, 1}, m, d), d, m == 1 ? "V" : "V^" + std::to_string(m));
}

inline Move Q(i64 d, i64 k) {
    const i64 kk = mod(k, d);
    return clifford({inv_mod(kk, d), 0, 0, kk}, d, "Q(" + std::to_string(kk) + ")");
}

inline Move matrix(const Mat2& m, i64 d) {
    const Mat2 r = m.reduced(d);
    return clifford(r, d, "F(" + std::to_string(r.a) + "," + std::to_string(r.b) + "," + std::to_string(r.c) + "," +
                              std::to_string(r.e) + ")");
}

inline Move pivot(std::size_t j) { return {MoveKind::Pivot, {}, 1, 1, j, "PIVOT(" + std::to_string(j) + ")"}; }

inline Move W(i64 p, int alpha, int s, int t, i64 k) {
    check_w_params(p, alpha, s, t, k);
    const i64 mult = 1 + k * ipow(p, alpha - s - t);
    return {MoveKind::LatticeScale, {mult, 0, 0, 1}, ipow(p, t), ipow(p, s), 0,
            "W(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(k) + ")"};
}

/// X^{p^{alpha-s}} and Z^{p^s} generate a tensor factor on which X may be rescaled by any unit m.
inline Move split(i64 p, int alpha, int s, i64 m) {
    const i64 d = ipow(p, alpha);
    if (s < 1 || s >= alpha) throw PreconditionViolated("split: need 1 <= s < alpha");
    if (!coprime(m, d)) throw NonInvertible("split: multiplier must be a unit");
    return {MoveKind::LatticeScale, {mod(m, d), 0, 0, 1}, ipow(p, alpha - s), ipow(p, s), 0,
            "SPLIT(" + std::to_string(s) + "," + std::to_string(mod(m, d)) + ")"};
}

/// W(s,t,j) undoing W(s,t,k).
inline Move W_inverse(i64 p, int alpha, int s, int t, i64 k) {
    const i64 xm = ipow(p, alpha - t), step = ipow(p, alpha - s - t);
    const i64 inv = inv_mod(1 + k * step, xm);
    return W(p, alpha, s, t, mod(inv - 1, xm) / step);
}

}  // namespace moves

/// Parses a trace token back into a move.
inline Move parse_move(const std::string& token, i64 d) {
    static const std::regex re(R"(^(P|R|V)(?:\^(\d+))?$|^Q\((\d+)\)$|^PIVOT\((\d+)\)$|^W\((\d+),(\d+),(\d+)\)$|^SPLIT\((\d+),(\d+)\)$|^F\((\d+),(\d+),(\d+),(\d+)\)$)");
    std::smatch m;
    if (!std::regex_match(token, m, re)) throw ParseError("unknown move token '" + token + "'");
    auto num = [&m](int i) { return std::stoll(m[i].str()); };
    if (m[1].matched) {
        const i64 pw = m[2].matched ? num(2) : 1;
        if (m[1] == "P") return moves::P(d, pw);
        if (m[1] == "R") return moves::R(d, int(pw % 4));
        return moves::V(d, pw);
    }
    if (m[3].matched) return moves::Q(d, num(3));
    if (m[4].matched) return moves::pivot(std::size_t(num(4)));
    if (m[10].matched) {
        const Mat2 f{num(10), num(11), num(12), num(13)};
        if (!coprime(f.det(), d)) throw ParseError("matrix move '" + token + "' is singular");
        return moves::matrix(f, d);
    }
    const auto pp = prime_power(d);
    if (!pp) throw ParseError("move '" + token + "' needs a prime-power dimension");
    if (m[5].matched) return moves::W(pp->prime, pp->exponent, int(num(5)), int(num(6)), num(7));
    return moves::split(pp->prime, pp->exponent, int(num(8)), num(9));
}

/// Generating moves for set closure, closed under inverses.
inline std::vector<Move> generator_catalog(i64 d, std::size_t set_size) {
    std::vector<Move> out{moves::P(d), moves::P(d, d - 1), moves::R(d), moves::R(d, 3)};
    for (std::size_t j = 1; j < set_size; ++j) out.push_back(moves::pivot(j));
    const auto pp = prime_power(d);
    if (!pp) return out;
    const i64 p = pp->prime;
    const int alpha = pp->exponent;
    for (int s = 1; s < alpha; ++s)
        for (int t = 0; s + t < alpha; ++t)
            for (i64 k = 1; k < ipow(p, s); ++k) out.push_back(moves::W(p, alpha, s, t, k));
    for (int s = 1; s < alpha; ++s)
        for (i64 m : units(d))
            if (m != 1) out.push_back(moves::split(p, alpha, s, m));
    return out;
}

/// Inverse of a non-pivot generator.
inline Move inverse_move(const Move& mv, i64 d) {
    if (mv.kind == MoveKind::Pivot) throw PreconditionViolated("pivot inverse depends on the set");
    const i64 det = mod(mv.f.det(), d);
    const i64 di = inv_mod(det, d);
    const Mat2 inv = Mat2{mv.f.e * di, -mv.f.b * di, -mv.f.c * di, mv.f.a * di}.reduced(d);
    if (mv.kind == MoveKind::Clifford) {
        for (i64 k = 1; k < d; ++k)
            if (moves::P(d, k).f == inv) return moves::P(d, k);
        for (int k = 1; k < 4; ++k)
            if (moves::R(d, k).f == inv) return moves::R(d, k);
        for (i64 k = 1; k < d; ++k)
            if (moves::V(d, k).f == inv) return moves::V(d, k);
        if (inv.b == 0 && inv.c == 0 && mod(inv.a * inv.e, d) == 1) return moves::Q(d, inv.e);
        return moves::matrix(inv, d);
    }
    const auto pp = prime_power(d);
    const i64 p = pp->prime;
    const int alpha = pp->exponent;
    if (mv.label.rfind("SPLIT", 0) == 0) {
        int s = 0;
        while (ipow(p, s) != mv.zdiv) ++s;
        return moves::split(p, alpha, s, inv_mod(mv.f.a, d));
    }
    int s = 0, t = 0;
    while (ipow(p, s) != mv.zdiv) ++s;
    while (ipow(p, t) != mv.xdiv) ++t;
    const i64 step = ipow(p, alpha - s - t);
    return moves::W_inverse(p, alpha, s, t, (mod(mv.f.a, ipow(p, alpha - t)) - 1) / step);
}

// ---------------------------------------------------------------------------
// Named rewrite rules on sets {I, A, B}.

namespace detail {

// Largest e with p^e | x (x != 0 mod d), capped at alpha.
inline int valuation(i64 x, i64 p, int alpha) {
    x = mod(x, ipow(p, alpha));
    if (x == 0) return alpha;
    int e = 0;
    while (x % p == 0) {
        x /= p;
        ++e;
    }
    return e;
}

// e with x == p^e exactly, if any.
inline std::optional<int> exact_power(i64 x, i64 p, int alpha) {
    for (int e = 0; e < alpha; ++e)
        if (ipow(p, e) == x) return e;
    return std::nullopt;
}

struct RuleInput {
    i64 p;
    int alpha;
    i64 d;
    Gpm a, b;
};

using RuleFn = std::function<std::optional<std::pair<Gpm, Gpm>>(const RuleInput&)>;

}  // namespace detail

struct NamedRule {
    std::string name;
    bool pairs_only = false;
    bool needs_p2 = false;
    detail::RuleFn fn;
};

/// The rewrite catalog. Outputs are checked against the primitive orbit in the tests.
inline const std::vector<NamedRule>& rule_catalog() {
    using detail::exact_power;
    using detail::RuleInput;
    using detail::valuation;
    using Out = std::optional<std::pair<Gpm, Gpm>>;
    using P = std::pair<Gpm, Gpm>;
    static const std::vector<NamedRule> rules = [] {
        std::vector<NamedRule> r;
        auto add = [&r](std::string name, detail::RuleFn fn, bool p2 = false) {
            r.push_back({std::move(name), false, p2, std::move(fn)});
        };
        // Z^a fixed; X^s Z^t -> X^s by P^{-mu} with mu s = t.
        add("eqX", [](const RuleInput& in) -> Out {
            if (in.a.s() != 0 || in.b.s() == 0 || in.b.t() == 0) return {};
            const i64 g = std::gcd(in.b.s(), in.d);
            if (in.b.t() % g != 0) return {};
            return P{in.a, Gpm(in.b.s(), 0, in.d)};
        });
        add("eqIX", [](const RuleInput& in) -> Out {
            if (in.a != Gpm(0, 1, in.d) || in.b.s() == 0 || in.b.t() != 0) return {};
            return P{in.a, -in.b};
        });
        add("eqXp1", [](const RuleInput& in) -> Out {
            if (in.a != Gpm(0, 1, in.d) || in.b.t() != 1 || valuation(in.b.s(), in.p, in.alpha) != 1) return {};
            return P{in.a, Gpm(-in.b.s(), 0, in.d)};
        });
        add("eqXpZ2", [](const RuleInput& in) -> Out {
            if (in.a != Gpm(0, 1, in.d) || valuation(in.b.s(), in.p, in.alpha) != 1) return {};
            return P{in.a, Gpm(in.b.s(), in.b.t() - in.p, in.d)};
        });
        add("eqXpZ_neg", [](const RuleInput& in) -> Out {
            if (in.a != Gpm(0, 1, in.d) || valuation(in.b.s(), in.p, in.alpha) != 1) return {};
            return P{in.a, Gpm(-in.b.s(), 1 - in.b.t(), in.d)};
        });
        add("eqXpZ_inv", [](const RuleInput& in) -> Out {
            if (in.a != Gpm(0, 1, in.d) || valuation(in.b.s(), in.p, in.alpha) != 1 || !coprime(in.b.t(), in.d)) return {};
            return P{in.a, Gpm(-in.b.s(), inv_mod(in.b.t(), in.d), in.d)};
        });
        add("eqZp1", [](const RuleInput& in) -> Out {
            if (in.a != Gpm(0, in.p, in.d) || in.b.t() != 0 || !coprime(in.b.s(), in.d)) return {};
            return P{Gpm(0, 1, in.d), Gpm(-in.b.s() * in.p, 0, in.d)};
        });
        add("eqZ_inv", [](const RuleInput& in) -> Out {
            if (in.a.s() != 0 || in.b.s() != 0) return {};
            const int e = valuation(in.a.t(), in.p, in.alpha);
            if (valuation(in.b.t(), in.p, in.alpha) != e) return {};
            const i64 m = ipow(in.p, in.alpha - e), step = ipow(in.p, e);
            const i64 k = mod((in.b.t() / step) * inv_mod(in.a.t() / step, m), m);
            return P{in.a, Gpm(0, in.a.t() * inv_mod(k, in.d), in.d)};
        });
        add("eqZ_neg", [](const RuleInput& in) -> Out {
            if (in.a.s() != 0 || in.b.s() != 0) return {};
            return P{in.a, Gpm(0, in.a.t() - in.b.t(), in.d)};
        });
        add("eqXp2", [](const RuleInput& in) -> Out {
            if (in.a != Gpm(0, in.p, in.d) || in.b.s() == 0 || in.b.s() % in.p != 0 || !coprime(in.b.t(), in.d)) return {};
            return P{Gpm(0, 1, in.d), Gpm(0, in.p * inv_mod(in.b.t(), in.d), in.d)};
        }, true);
        add("eqXp", [](const RuleInput& in) -> Out {
            if (in.a != Gpm(0, in.p, in.d) || in.b.t() != 0 || valuation(in.b.s(), in.p, in.alpha) != 1) return {};
            return P{in.a, Gpm(in.p, 0, in.d)};
        }, true);

        // Rules on {I, Z^{p^s}, B}.
        auto zs = [](const RuleInput& in) -> std::optional<int> {
            if (in.a.s() != 0) return {};
            return exact_power(in.a.t(), in.p, in.alpha);
        };
        add("eq-a1", [zs](const RuleInput& in) -> Out {
            auto s = zs(in);
            if (!s || in.b.t() != 0 || in.b.s() == 0) return {};
            const int t = valuation(in.b.s(), in.p, in.alpha);
            const i64 k = in.b.s() / ipow(in.p, t);
            return P{Gpm(0, ipow(in.p, t), in.d), Gpm(-k * ipow(in.p, *s), 0, in.d)};
        });
        add("eq-a2", [zs](const RuleInput& in) -> Out {
            auto s = zs(in);
            if (!s || in.b.t() != 0 || in.b.s() == 0 || *s < valuation(in.b.s(), in.p, in.alpha)) return {};
            return P{in.a, -in.b};
        });
        add("eq-a3", [zs](const RuleInput& in) -> Out {
            auto s = zs(in);
            if (!s || in.b.t() != 0 || in.b.s() == 0) return {};
            const int t = valuation(in.b.s(), in.p, in.alpha);
            if (*s + t < in.alpha) return {};
            return P{in.a, Gpm(ipow(in.p, t), 0, in.d)};
        });
        auto c1_parts = [zs](const RuleInput& in) -> std::optional<std::pair<int, i64>> {
            auto s = zs(in);
            if (!s || in.b.s() == 0 || in.b.t() % ipow(in.p, *s) != 0) return {};
            return std::pair{*s, in.b.t() / ipow(in.p, *s)};
        };
        add("eq-c1_neg", [c1_parts](const RuleInput& in) -> Out {
            auto c = c1_parts(in);
            if (!c) return {};
            return P{in.a, Gpm(-in.b.s(), (1 - c->second) * ipow(in.p, c->first), in.d)};
        });
        add("eq-c1_inv", [c1_parts](const RuleInput& in) -> Out {
            auto c = c1_parts(in);
            if (!c || c->second % in.p == 0) return {};
            const i64 m = ipow(in.p, in.alpha - c->first);
            return P{in.a, Gpm(-in.b.s(), inv_mod(c->second, m) * ipow(in.p, c->first), in.d)};
        });
        add("eq-c1_flip", [c1_parts](const RuleInput& in) -> Out {
            auto c = c1_parts(in);
            if (!c || (1 - c->second) % in.p == 0) return {};
            const i64 m = ipow(in.p, in.alpha - c->first);
            return P{in.a, Gpm(in.b.s(), inv_mod(1 - c->second, m) * ipow(in.p, c->first), in.d)};
        });
        add("eq-c2", [zs](const RuleInput& in) -> Out {
            auto s = zs(in);
            if (!s || !coprime(in.b.s(), in.d)) return {};
            return P{Gpm(0, 1, in.d), Gpm(-in.b.s() * ipow(in.p, *s), 0, in.d)};
        });
        add("eq-c3", [zs](const RuleInput& in) -> Out {
            auto s = zs(in);
            if (!s || in.b.s() == 0 || in.b.t() == 0) return {};
            const int t = valuation(in.b.s(), in.p, in.alpha), tp = valuation(in.b.t(), in.p, in.alpha);
            if (tp >= t) return {};
            const i64 k = in.b.s() / ipow(in.p, t), kp = in.b.t() / ipow(in.p, tp);
            return P{Gpm(0, ipow(in.p, tp), in.d),
                     Gpm(-k * ipow(in.p, t - tp + *s), inv_mod(kp, in.d) * ipow(in.p, *s), in.d)};
        });
        add("eq-c4", [zs](const RuleInput& in) -> Out {
            auto s = zs(in);
            if (!s || in.b.s() == 0 || in.b.t() == 0) return {};
            const int t = valuation(in.b.s(), in.p, in.alpha), tp = valuation(in.b.t(), in.p, in.alpha);
            if (tp < t) return {};
            return P{in.a, Gpm(in.b.s(), 0, in.d)};
        });
        add("eq-c5", [zs](const RuleInput& in) -> Out {
            auto s = zs(in);
            if (!s || in.b.s() == 0 || in.b.t() != in.a.t()) return {};
            return P{in.a, Gpm(-in.b.s(), 0, in.d)};
        });
        add("eq-c6", [zs](const RuleInput& in) -> Out {
            auto s = zs(in);
            if (!s || in.b.s() == 0 || in.b.t() % ipow(in.p, *s) != 0) return {};
            const int t = valuation(in.b.s(), in.p, in.alpha);
            if (*s + t < in.alpha) return {};
            return P{in.a, Gpm(ipow(in.p, t), in.b.t(), in.d)};
        });
        add("eq-b1", [zs](const RuleInput& in) -> Out {
            auto s = zs(in);
            if (!s || in.b.s() != 0) return {};
            const int t = valuation(in.b.t(), in.p, in.alpha);
            const i64 k = in.b.t() / ipow(in.p, t);
            return P{Gpm(0, ipow(in.p, t), in.d), Gpm(0, inv_mod(k, in.d) * ipow(in.p, *s), in.d)};
        });
        auto b2_parts = [zs](const RuleInput& in) -> std::optional<std::pair<int, i64>> {
            auto s = zs(in);
            if (!s || in.b.s() != 0 || in.b.t() % ipow(in.p, *s) != 0) return {};
            return std::pair{*s, in.b.t() / ipow(in.p, *s)};
        };
        add("eq-b2_flip", [b2_parts](const RuleInput& in) -> Out {
            auto c = b2_parts(in);
            if (!c || (1 - c->second) % in.p == 0) return {};
            const i64 m = ipow(in.p, in.alpha - c->first);
            return P{in.a, Gpm(0, inv_mod(1 - c->second, m) * ipow(in.p, c->first), in.d)};
        });
        add("eq-b2_inv", [b2_parts](const RuleInput& in) -> Out {
            auto c = b2_parts(in);
            if (!c || c->second % in.p == 0) return {};
            const i64 m = ipow(in.p, in.alpha - c->first);
            return P{in.a, Gpm(0, (1 - inv_mod(c->second, m)) * ipow(in.p, c->first), in.d)};
        });
        r.push_back({"gcd", true, false, {}});
        return r;
    }();
    return rules;
}

inline const NamedRule& find_rule(const std::string& name) {
    for (const auto& r : rule_catalog())
        if (r.name == name) return r;
    throw OutOfRange("unknown rule '" + name + "'");
}

/// {I, X^s Z^t} -> {I, Z^{gcd(s,t,d)}}.
inline GpmSet gcd_rule(const GpmSet& set) {
    if (set.size() != 2 || !set.contains_identity()) throw GuardFailed("gcd: needs a pair containing I");
    const auto& g = set[1];
    const i64 d = set.d();
    return {d, {Gpm::identity(d), Gpm(0, std::gcd(std::gcd(g.s(), g.t()), d), d)}};
}

/// Applies a named rule to {I, A, B}, trying both roles for A and B.
inline std::optional<GpmSet> try_apply_rule(const NamedRule& rule, const GpmSet& set) {
    if (rule.pairs_only) {
        if (set.size() != 2 || !set.contains_identity()) return std::nullopt;
        return gcd_rule(set);
    }
    if (set.size() != 3 || !set.contains_identity()) return std::nullopt;
    const auto pp = prime_power(set.d());
    if (!pp) return std::nullopt;
    if (rule.needs_p2 && pp->exponent != 2) return std::nullopt;
    for (int swap = 0; swap < 2; ++swap) {
        detail::RuleInput in{pp->prime, pp->exponent, set.d(), set[1 + swap], set[2 - swap]};
        if (auto out = rule.fn(in)) {
            const auto& [a, b] = *out;
            if (a.is_identity() || b.is_identity() || a == b) continue;
            return GpmSet(set.d(), {Gpm::identity(set.d()), a, b});
        }
    }
    return std::nullopt;
}

inline GpmSet apply_rule(const std::string& name, const GpmSet& set) {
    if (auto out = try_apply_rule(find_rule(name), set)) return *out;
    throw GuardFailed("rule " + name + " does not apply to " + to_string(set));
}

/// Applies a trace of move tokens, including RULE(name) tokens.
inline GpmSet replay(const GpmSet& start, const std::vector<std::string>& trace) {
    GpmSet cur = start;
    for (const auto& tok : trace) {
        if (tok.rfind("RULE(", 0) == 0 && tok.back() == ')')
            cur = apply_rule(tok.substr(5, tok.size() - 6), cur);
        else
            cur = parse_move(tok, cur.d()).apply(cur);
    }
    return cur;
}

}  // namespace gbslu
