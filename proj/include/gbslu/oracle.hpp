#pragma once

// Dense complex-matrix checks, independent of the exponent-vector engine.

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gbslu/gpm.hpp"
#include "gbslu/modmath.hpp"

namespace gbslu::oracle {

using cd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

inline constexpr i64 kDefaultMatrixCap = 64;
inline constexpr double kDefaultTolerance = 1e-9;

struct DenseUnitary {
    CMatrix m;
    std::string label;

    i64 dim() const { return m.rows(); }
    double unitarity_error() const {
        return (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
    }
    bool is_unitary(double tol = kDefaultTolerance) const { return unitarity_error() < tol; }
};

inline void check_cap(i64 d, i64 cap) {
    if (d < 2) throw OutOfRange("matrix dimension must be >= 2");
    if (d > cap) throw CapExceeded("matrix dimension " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
}

inline cd omega_pow(i64 m, i64 d) { return std::polar(1.0, 2.0 * std::numbers::pi * double(mod(m, d)) / double(d)); }

/// X^s Z^t: |j> -> omega^{tj} |j+s>.
inline DenseUnitary build_gpm_matrix(const Gpm& g, i64 cap = kDefaultMatrixCap) {
    const i64 d = g.d();
    check_cap(d, cap);
    CMatrix m = CMatrix::Zero(d, d);
    for (i64 j = 0; j < d; ++j) m(mod(j + g.s(), d), j) = omega_pow(g.t() * j, d);
    return {std::move(m), "X^" + std::to_string(g.s()) + "Z^" + std::to_string(g.t())};
}

enum class CliffordMatrix { P, R, VWord, VDirect, QWord, QDirect };

inline CMatrix mpow(const CMatrix& a, i64 k) {
    CMatrix r = CMatrix::Identity(a.rows(), a.cols());
    for (i64 i = 0; i < k; ++i) r = r * a;
    return r;
}

inline DenseUnitary build_clifford(CliffordMatrix name, i64 d, i64 k = 1, i64 cap = kDefaultMatrixCap) {
    check_cap(d, cap);
    auto P = [d] {
        CMatrix m = CMatrix::Zero(d, d);
        for (i64 j = 0; j < d; ++j)
            m(j, j) = d % 2 ? omega_pow(j * (j - 1) / 2, d) : std::polar(1.0, std::numbers::pi * double(j * j) / double(d));
        return m;
    };
    auto R = [d] {
        CMatrix m(d, d);
        const double norm = 1.0 / std::sqrt(double(d));
        for (i64 a = 0; a < d; ++a)
            for (i64 b = 0; b < d; ++b) m(a, b) = norm * omega_pow(a * b, d);
        return m;
    };
    switch (name) {
        case CliffordMatrix::P: return {P(), "P"};
        case CliffordMatrix::R: return {R(), "R"};
        case CliffordMatrix::VWord: {
            const CMatrix p = P(), r = R();
            return {p * p * r * p * r * p * p, "P^2RPRP^2"};
        }
        case CliffordMatrix::VDirect: {
            const CMatrix p = P(), r = R();
            return {r * p.adjoint() * r.adjoint(), "V"};
        }
        case CliffordMatrix::QWord: {
            const i64 ki = inv_mod(k, d);
            const CMatrix p = P(), r = R();
            return {r * mpow(p, ki) * r * mpow(p, mod(k, d)) * r * mpow(p, ki), "Q_" + std::to_string(k) + " word"};
        }
        case CliffordMatrix::QDirect: {
            const i64 ki = inv_mod(k, d);
            CMatrix m = CMatrix::Zero(d, d);
            for (i64 j = 0; j < d; ++j) m(mod(ki * j, d), j) = 1.0;
            return {std::move(m), "Q_" + std::to_string(k)};
        }
    }
    throw OutOfRange("build_clifford: unknown name");
}

/// W|j + c p^t> = |(j + c(k p^{alpha-s} + p^t)) mod p^alpha>, 0 <= j < p^t.
inline DenseUnitary build_w(i64 p, int alpha, int s, int t, i64 k, i64 cap = kDefaultMatrixCap) {
    if (s < 0 || t < 0 || s + t >= alpha) throw PreconditionViolated("build_w: need s + t < alpha");
    if (k < 1 || k >= ipow(p, s)) throw PreconditionViolated("build_w: need 1 <= k < p^s");
    const i64 d = ipow(p, alpha);
    check_cap(d, cap);
    const i64 pt = ipow(p, t), step = k * ipow(p, alpha - s) + pt;
    CMatrix m = CMatrix::Zero(d, d);
    for (i64 j = 0; j < pt; ++j)
        for (i64 c = 0; c < ipow(p, alpha - t); ++c) m(mod(j + c * step, d), j + c * pt) += 1.0;
    return {std::move(m), "W(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(k) + ")"};
}

/// |r + c p^{alpha-s}> -> |r + (m c mod p^s) p^{alpha-s}>: rescales X^{p^{alpha-s}} by m and fixes Z^{p^s}.
inline DenseUnitary build_split(i64 p, int alpha, int s, i64 m, i64 cap = kDefaultMatrixCap) {
    if (s < 1 || s >= alpha) throw PreconditionViolated("build_split: need 1 <= s < alpha");
    const i64 d = ipow(p, alpha);
    check_cap(d, cap);
    if (!coprime(m, d)) throw NonInvertible("build_split: multiplier must be a unit");
    const i64 a = ipow(p, alpha - s), ps = ipow(p, s);
    CMatrix u = CMatrix::Zero(d, d);
    for (i64 r = 0; r < a; ++r)
        for (i64 c = 0; c < ps; ++c) u(r + mod(m * c, ps) * a, r + c * a) = 1.0;
    return {std::move(u), "SPLIT(" + std::to_string(s) + "," + std::to_string(m) + ")"};
}

/// ||A - e^{i theta} B||_max with theta read off the largest entry of B.
inline double phase_distance(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("phase_distance: shapes differ");
    Eigen::Index r = 0, c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    const cd ratio = a(r, c) / b(r, c);
    const cd phase = std::abs(ratio) > 0 ? ratio / std::abs(ratio) : cd(1.0);
    return (a - phase * b).cwiseAbs().maxCoeff();
}

inline bool verify_conjugation(const CMatrix& u, const Gpm& a, const Gpm& b, double tol = kDefaultTolerance) {
    if (u.rows() != a.d() || a.d() != b.d()) throw DimensionMismatch("verify_conjugation: dimensions differ");
    const CMatrix lhs = u * build_gpm_matrix(a, u.rows()).m * u.adjoint();
    return phase_distance(lhs, build_gpm_matrix(b, u.rows()).m) < tol;
}

/// Whether a^dagger b is a single GPM up to phase.
inline std::optional<Gpm> pauli_coset_match(const CMatrix& a, const CMatrix& b, double tol = kDefaultTolerance) {
    const i64 d = a.rows();
    const CMatrix m = a.adjoint() * b;
    for (i64 s = 0; s < d; ++s)
        for (i64 t = 0; t < d; ++t) {
            const Gpm g(s, t, d);
            const cd tr = (build_gpm_matrix(g, d).m.adjoint() * m).trace();
            if (std::abs(std::abs(tr) - double(d)) < tol * double(d)) return g;
        }
    return std::nullopt;
}

struct NumericPowered {
    double i1 = 0;
    std::map<i64, double> i3;
};

struct NumericInvariants {
    double i1 = 0;
    std::map<i64, double> i2;
    std::map<i64, double> i3;
    std::map<i64, NumericPowered> powered;
};

namespace detail {

inline std::vector<CMatrix> deltas(const std::vector<CMatrix>& ms) {
    std::vector<CMatrix> out;
    for (const auto& mi : ms)
        for (const auto& mj : ms) out.push_back(mi.adjoint() * mj);
    return out;
}

inline double i1_literal(const std::vector<CMatrix>& dl, i64 d) {
    double sum = 0;
    for (const auto& a : dl)
        for (const auto& b : dl) {
            const CMatrix c = a * b - b * a;
            sum += (c * c.adjoint()).trace().real();
        }
    return sum / double(d);
}

// Tr(A B) without forming the product.
inline cd trace_product(const CMatrix& a, const CMatrix& b) { return a.transpose().cwiseProduct(b).sum(); }

// pw[k][i] = dl[i]^k for k in [0, d).
inline std::vector<std::vector<CMatrix>> powers_of(const std::vector<CMatrix>& dl, i64 d) {
    auto pw = std::vector<std::vector<CMatrix>>(std::size_t(d));
    pw[0].assign(dl.size(), CMatrix::Identity(d, d));
    for (i64 k = 1; k < d; ++k)
        for (std::size_t i = 0; i < dl.size(); ++i) pw[std::size_t(k)].push_back(pw[std::size_t(k - 1)][i] * dl[i]);
    return pw;
}

inline double i3_literal(const std::vector<CMatrix>& dl, const std::vector<std::vector<CMatrix>>& pw, i64 a, i64 d) {
    const auto& pa = pw[std::size_t(mod(a, d))];
    const auto& pb = pw[std::size_t(mod(1 - a, d))];
    double sum = 0;
    for (std::size_t i = 0; i < dl.size(); ++i) {
        double s1 = 0, s2 = 0;
        for (const auto& e : dl) {
            s1 += std::abs(trace_product(pa[i], e));
            s2 += std::abs(trace_product(pb[i], e));
        }
        sum += s1 * s2;
    }
    return sum / double(d * d);
}

}  // namespace detail

/// Evaluates the trace formulas on explicit matrices.
inline NumericInvariants numeric_invariants(std::span<const Gpm> set, std::span<const i64> a_values,
                                            std::span<const i64> powers, i64 cap = kDefaultMatrixCap) {
    if (set.empty()) throw PreconditionViolated("numeric_invariants: empty set");
    const i64 d = set.front().d();
    check_cap(d, cap);
    std::vector<CMatrix> ms;
    for (const auto& g : set) ms.push_back(build_gpm_matrix(g, cap).m);
    const auto dl = detail::deltas(ms);
    const auto pw = detail::powers_of(dl, d);
    NumericInvariants out;
    out.i1 = detail::i1_literal(dl, d);
    for (i64 a : a_values) {
        double s = 0;
        for (const auto& x : pw[std::size_t(mod(a, d))]) s += std::abs(x.trace());
        out.i2[a] = s / double(d);
        out.i3[a] = detail::i3_literal(dl, pw, a, d);
    }
    for (i64 t : powers) {
        std::vector<CMatrix> mt;
        for (const auto& m : ms) mt.push_back(mpow(m, t));
        const auto dt = detail::deltas(mt);
        const auto pwt = detail::powers_of(dt, d);
        NumericPowered np;
        np.i1 = detail::i1_literal(dt, d);
        for (i64 a : a_values) np.i3[a] = detail::i3_literal(dt, pwt, a, d);
        out.powered[t] = std::move(np);
    }
    return out;
}

/// (I (x) U_{s,t}) sum_k |kk> / sqrt(d).
inline Eigen::VectorXcd gbs_vector(const Gpm& g, i64 cap = kDefaultMatrixCap) {
    const i64 d = g.d();
    const CMatrix u = build_gpm_matrix(g, cap).m;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d * d);
    for (i64 k = 0; k < d; ++k)
        for (i64 j = 0; j < d; ++j) v(k * d + j) += u(j, k) / std::sqrt(double(d));
    return v;
}

inline cd gbs_overlap(const Gpm& g1, const Gpm& g2, i64 cap = kDefaultMatrixCap) {
    require_same_dim(g1, g2);
    return gbs_vector(g1, cap).dot(gbs_vector(g2, cap));
}

// ---------------------------------------------------------------------------
// Suites. Each returns the list of failing cases.

struct SuiteResult {
    explicit SuiteResult(std::string n) : name(std::move(n)) {}

    std::string name;
    int checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

inline SuiteResult verify_lemma1(i64 p, int alpha, double tol = kDefaultTolerance, i64 cap = kDefaultMatrixCap) {
    SuiteResult r{"w-conjugation p=" + std::to_string(p) + " alpha=" + std::to_string(alpha)};
    const i64 d = ipow(p, alpha);
    for (int s = 1; s < alpha; ++s)
        for (int t = 0; s + t < alpha; ++t)
            for (i64 k = 1; k < ipow(p, s); ++k) {
                const auto w = build_w(p, alpha, s, t, k, cap);
                const std::string tag = w.label;
                r.expect(w.unitarity_error() < tol, tag + " not unitary");
                r.expect(verify_conjugation(w.m, Gpm(0, ipow(p, s), d), Gpm(0, ipow(p, s), d), tol), tag + " moves Z^{p^s}");
                r.expect(verify_conjugation(w.m, Gpm(ipow(p, t), 0, d), Gpm(k * ipow(p, alpha - s) + ipow(p, t), 0, d), tol),
                         tag + " wrong image of X^{p^t}");
            }
    return r;
}

inline SuiteResult verify_splits(i64 p, int alpha, double tol = kDefaultTolerance, i64 cap = kDefaultMatrixCap) {
    SuiteResult r{"splits p=" + std::to_string(p) + " alpha=" + std::to_string(alpha)};
    const i64 d = ipow(p, alpha);
    for (int s = 1; s < alpha; ++s)
        for (i64 m : units(d)) {
            const auto u = build_split(p, alpha, s, m, cap);
            r.expect(u.unitarity_error() < tol, u.label + " not unitary");
            r.expect(verify_conjugation(u.m, Gpm(0, ipow(p, s), d), Gpm(0, ipow(p, s), d), tol), u.label + " moves Z^{p^s}");
            r.expect(verify_conjugation(u.m, Gpm(ipow(p, alpha - s), 0, d), Gpm(m * ipow(p, alpha - s), 0, d), tol),
                     u.label + " wrong image of X^{p^{alpha-s}}");
        }
    return r;
}

inline SuiteResult verify_clifford_words(i64 d, double tol = kDefaultTolerance, i64 cap = kDefaultMatrixCap) {
    SuiteResult r{"clifford d=" + std::to_string(d)};
    const Gpm x(1, 0, d), z(0, 1, d), xz(1, 1, d);
    const auto P = build_clifford(CliffordMatrix::P, d, 1, cap);
    const auto R = build_clifford(CliffordMatrix::R, d, 1, cap);
    r.expect(P.unitarity_error() < tol, "P not unitary");
    r.expect(R.unitarity_error() < tol, "R not unitary");
    r.expect(verify_conjugation(P.m, x, xz, tol) && verify_conjugation(P.m, z, z, tol), "P action");
    r.expect(verify_conjugation(R.m, x, z, tol) && verify_conjugation(R.m, z, Gpm(-1, 0, d), tol), "R action");
    const auto vw = build_clifford(CliffordMatrix::VWord, d, 1, cap);
    const auto vd = build_clifford(CliffordMatrix::VDirect, d, 1, cap);
    r.expect(vw.unitarity_error() < tol, "V word not unitary");
    r.expect(verify_conjugation(vw.m, x, x, tol) && verify_conjugation(vw.m, z, xz, tol), "V word action");
    r.expect(verify_conjugation(vd.m, x, x, tol) && verify_conjugation(vd.m, z, xz, tol), "V direct action");
    r.expect(pauli_coset_match(vw.m, vd.m, tol).has_value(), "V word and V direct differ beyond a Pauli factor");
    for (i64 k : units(d)) {
        const auto qw = build_clifford(CliffordMatrix::QWord, d, k, cap);
        const auto qd = build_clifford(CliffordMatrix::QDirect, d, k, cap);
        const Gpm xk(inv_mod(k, d), 0, d), zk(0, k, d);
        const std::string tag = "Q_" + std::to_string(k);
        r.expect(qw.unitarity_error() < tol, tag + " word not unitary");
        r.expect(verify_conjugation(qw.m, x, xk, tol) && verify_conjugation(qw.m, z, zk, tol), tag + " word action");
        r.expect(verify_conjugation(qd.m, x, xk, tol) && verify_conjugation(qd.m, z, zk, tol), tag + " direct action");
        r.expect(pauli_coset_match(qw.m, qd.m, tol).has_value(), tag + " word and direct differ beyond a Pauli factor");
    }
    return r;
}

/// Tr(X^s Z^t) is d exactly when s = t = 0, else 0.
inline SuiteResult verify_traces(i64 d, double tol = kDefaultTolerance, i64 cap = kDefaultMatrixCap) {
    SuiteResult r{"traces d=" + std::to_string(d)};
    for (i64 s = 0; s < d; ++s)
        for (i64 t = 0; t < d; ++t) {
            const double tr = std::abs(build_gpm_matrix(Gpm(s, t, d), cap).m.trace());
            const double want = (s == 0 && t == 0) ? double(d) : 0.0;
            r.expect(std::abs(tr - want) < tol, "trace of X^" + std::to_string(s) + "Z^" + std::to_string(t));
        }
    return r;
}

inline SuiteResult verify_overlaps(i64 d, int samples = 200, std::uint64_t seed = 7, double tol = 1e-12,
                                   i64 cap = kDefaultMatrixCap) {
    SuiteResult r{"overlaps d=" + std::to_string(d)};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<i64> u(0, d - 1);
    for (int i = 0; i < samples; ++i) {
        const Gpm a(u(rng), u(rng), d), b(u(rng), u(rng), d);
        const cd ov = gbs_overlap(a, b, cap);
        const cd tr = (build_gpm_matrix(a, cap).m.adjoint() * build_gpm_matrix(b, cap).m).trace() / double(d);
        r.expect(std::abs(ov - tr) < tol, "overlap " + to_string(a) + " vs " + to_string(b));
    }
    return r;
}

inline SuiteResult verify_lemma3(i64 p, int alpha) {
    SuiteResult r{"self-inverse p=" + std::to_string(p) + " alpha=" + std::to_string(alpha)};
    const auto sols = solve_self_inverse(p, alpha);
    if (ipow(p, alpha) == 3) {
        r.expect(sols == std::vector<i64>{2}, "expected the single solution 2 mod 3");
        return r;
    }
    const std::size_t want = p % 6 == 1 ? 2 : 0;
    r.expect(sols.size() == want, "expected " + std::to_string(want) + " solutions, got " + std::to_string(sols.size()));
    for (i64 x : sols) r.expect(mod(x, p) != 2, "solution " + std::to_string(x) + " is 2 mod p");
    if (p >= 5) r.expect(count_quadratic_check(p, alpha) == !sols.empty(), "quadratic residue check disagrees");
    return r;
}

}  // namespace gbslu::oracle
