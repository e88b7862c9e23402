#pragma once

// Exact U-equivalence invariants. Every trace in the invariant formulas
// reduces to counting exponent vectors, except the commutator sum, which is
// kept as a multiset of cosine arguments.

#include <cmath>
#include <map>
#include <numbers>
#include <span>
#include <vector>

#include "gbslu/gpm.hpp"

namespace gbslu {

/// Sum over m in args of 2 - 2cos(2 pi m / d), compared on folded arguments.
class CosFingerprint {
public:
    CosFingerprint() : d_(2) {}
    CosFingerprint(i64 d, std::vector<i64> args) : d_(d), args_(std::move(args)) {
        for (auto& m : args_) m = mod(m, d_);
        std::sort(args_.begin(), args_.end());
        folded_.reserve(args_.size());
        for (i64 m : args_)
            if (m != 0) folded_.push_back(std::min(m, d_ - m));
        std::sort(folded_.begin(), folded_.end());
    }

    i64 d() const noexcept { return d_; }
    const std::vector<i64>& args() const noexcept { return args_; }
    /// Nonzero arguments folded to min(m, d-m); zero terms contribute nothing.
    const std::vector<i64>& folded() const noexcept { return folded_; }

    double numeric() const {
        double sum = 0;
        for (i64 m : folded_) sum += 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * double(m) / double(d_));
        return sum;
    }

    friend bool operator==(const CosFingerprint& a, const CosFingerprint& b) {
        return a.d_ == b.d_ && a.folded_ == b.folded_;
    }

private:
    i64 d_;
    std::vector<i64> args_;
    std::vector<i64> folded_;
};

namespace detail {
inline i64 common_dim(std::span<const Gpm> ms) {
    if (ms.empty()) throw PreconditionViolated("empty GPM list");
    for (const auto& g : ms)
        if (g.d() != ms.front().d()) throw DimensionMismatch("GPM list mixes dimensions");
    return ms.front().d();
}

inline void check_power(i64 a, i64 d) {
    if (a <= 0 || a >= d) throw PowerOutOfRange("power " + std::to_string(a) + " outside (0, " + std::to_string(d) + ")");
}

// Number of difference vectors equal to (s,t), indexed s*d + t.
inline std::vector<int> diff_histogram(std::span<const Gpm> diffs, i64 d) {
    std::vector<int> h(std::size_t(d * d), 0);
    for (const auto& v : diffs) ++h[std::size_t(v.s() * d + v.t())];
    return h;
}
}  // namespace detail

/// [A, B] for A = X^{a1}Z^{a2}, B = X^{b1}Z^{b2} is (1 - omega^{a2 b1 - a1 b2}) AB.
inline i64 commutator_arg(const Gpm& a, const Gpm& b) {
    return mod(a.t() * b.s() - a.s() * b.t(), a.d());
}

inline CosFingerprint invariant1(std::span<const Gpm> ms) {
    const i64 d = detail::common_dim(ms);
    DiffTable dt(ms);
    std::vector<i64> args;
    args.reserve(dt.all().size() * dt.all().size());
    for (const auto& a : dt.all())
        for (const auto& b : dt.all()) args.push_back(commutator_arg(a, b));
    return {d, std::move(args)};
}

inline i64 invariant2(std::span<const Gpm> ms, i64 a) {
    const i64 d = detail::common_dim(ms);
    detail::check_power(a, d);
    const DiffTable dt(ms);
    i64 count = 0;
    for (const auto& v : dt.all())
        if (v.scaled(a).is_identity()) ++count;
    return count;
}

inline i64 invariant3(std::span<const Gpm> ms, i64 a) {
    const i64 d = detail::common_dim(ms);
    detail::check_power(a, d);
    DiffTable dt(ms);
    const auto h = detail::diff_histogram(dt.all(), d);
    auto count = [&](const Gpm& g) { return i64(h[std::size_t(g.s() * d + g.t())]); };
    i64 total = 0;
    for (const auto& v : dt.all()) total += count(-v.scaled(a)) * count(-v.scaled(1 - a));
    return total;
}

inline CosFingerprint invariant1(const GpmSet& s) { return invariant1(s.members()); }
inline i64 invariant2(const GpmSet& s, i64 a) { return invariant2(s.members(), a); }
inline i64 invariant3(const GpmSet& s, i64 a) { return invariant3(s.members(), a); }

/// {M_1^t, ..., M_n^t}, keeping collisions.
inline std::vector<Gpm> powered_set(std::span<const Gpm> ms, i64 t) {
    const i64 d = detail::common_dim(ms);
    detail::check_power(t, d);
    std::vector<Gpm> out;
    out.reserve(ms.size());
    for (const auto& g : ms) out.push_back(g.scaled(t));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Gpm> powered_set(const GpmSet& s, i64 t) { return powered_set(s.members(), t); }

/// Which a-values and powers enter a fingerprint.
struct ProbeSet {
    std::vector<i64> i2;
    std::vector<i64> i3;
    std::vector<i64> powers;

    /// All a for I2; a in {2, p, d/p} and powers {p, d/p} otherwise.
    static ProbeSet standard(i64 d) {
        ProbeSet ps;
        for (i64 a = 1; a < d; ++a) ps.i2.push_back(a);
        const i64 p = factorize(d, d).front().prime;
        auto add = [d](std::vector<i64>& v, i64 x) {
            if (x > 0 && x < d && std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
        };
        for (i64 a : {i64(2), p, d / p}) add(ps.i3, a);
        for (i64 t : {p, d / p}) add(ps.powers, t);
        std::sort(ps.i3.begin(), ps.i3.end());
        std::sort(ps.powers.begin(), ps.powers.end());
        return ps;
    }

    /// Every a and every power in (0, d).
    static ProbeSet exhaustive(i64 d) {
        ProbeSet ps;
        for (i64 a = 1; a < d; ++a) ps.i2.push_back(a);
        ps.i3 = ps.i2;
        ps.powers = ps.i2;
        return ps;
    }
};

struct PoweredInvariants {
    CosFingerprint i1;
    std::map<i64, i64> i3;
    friend bool operator==(const PoweredInvariants&, const PoweredInvariants&) = default;
};

struct InvariantVector {
    CosFingerprint i1;
    std::map<i64, i64> i2;
    std::map<i64, i64> i3;
    std::map<i64, PoweredInvariants> powered;

    friend bool operator==(const InvariantVector&, const InvariantVector&) = default;

    /// Flat integer encoding; equal keys iff equal vectors.
    std::vector<i64> key() const {
        std::vector<i64> k;
        auto put_fp = [&k](const CosFingerprint& f) {
            k.push_back(i64(f.folded().size()));
            k.insert(k.end(), f.folded().begin(), f.folded().end());
        };
        auto put_map = [&k](const std::map<i64, i64>& m) {
            k.push_back(i64(m.size()));
            for (auto [a, v] : m) {
                k.push_back(a);
                k.push_back(v);
            }
        };
        put_fp(i1);
        put_map(i2);
        put_map(i3);
        k.push_back(i64(powered.size()));
        for (const auto& [t, pw] : powered) {
            k.push_back(t);
            put_fp(pw.i1);
            put_map(pw.i3);
        }
        return k;
    }
};

inline InvariantVector invariant_vector(std::span<const Gpm> ms, const ProbeSet& probes) {
    InvariantVector iv{invariant1(ms), {}, {}, {}};
    for (i64 a : probes.i2) iv.i2[a] = invariant2(ms, a);
    for (i64 a : probes.i3) iv.i3[a] = invariant3(ms, a);
    for (i64 t : probes.powers) {
        const auto mt = powered_set(ms, t);
        PoweredInvariants pw{invariant1(mt), {}};
        for (i64 a : probes.i3) pw.i3[a] = invariant3(mt, a);
        iv.powered.emplace(t, std::move(pw));
    }
    return iv;
}

inline InvariantVector invariant_vector(const GpmSet& s, const ProbeSet& probes) {
    return invariant_vector(s.members(), probes);
}

inline InvariantVector invariant_vector(const GpmSet& s, std::span<const i64> powers, std::span<const i64> a_values) {
    ProbeSet ps{{a_values.begin(), a_values.end()}, {a_values.begin(), a_values.end()}, {powers.begin(), powers.end()}};
    return invariant_vector(s.members(), ps);
}

}  // namespace gbslu
