#pragma once

// Orbit enumeration of GPM pairs and triples under the generator catalog,
// separation of orbits by invariant fingerprints and the k vs -k sign
// obstruction, and the closed-form class counts.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbslu/invariants.hpp"
#include "gbslu/transform.hpp"

namespace gbslu {

// ---------------------------------------------------------------------------
// Count formulas

enum class FormulaKind { Pairs, TriplesP2, TriplesPAlpha };

struct CountFormula {
    FormulaKind kind;
    i64 d = 0;  // Pairs
    i64 p = 0;
    int alpha = 0;
};

namespace detail {

// Exact rational with i64 parts; enough for every formula argument below the enumeration caps.
struct Rational {
    i64 num = 0, den = 1;

    Rational(i64 n = 0, i64 dd = 1) : num(n), den(dd) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    bool integral() const { return den == 1; }
    i64 floor() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }
};

}  // namespace detail

inline i64 triples_p2(i64 p) {
    if (!is_prime(p) || p < 3) throw OutOfDomain("TRIPLES_P2 needs an odd prime p");
    const i64 sign = (p / 3) % 2 == 0 ? 1 : -1;
    const detail::Rational mid(3 * (p - 2) + 6 * sign * p, 18);
    return (5 * p * p) / 6 + mid.floor() + 3;
}

/// The five per-family sums for p >= 5 and even alpha >= 4.
inline std::array<detail::Rational, 5> palpha_case_counts(i64 p, int a) {
    using detail::Rational;
    const bool one_mod_six = p % 6 == 1;
    const i64 pa = ipow(p, a);
    std::array<Rational, 5> c;
    c[0] = Rational(i64(a) * a, 4);
    c[1] = Rational(2 * pa * p * p * p - a * p * p * p - 2 * p * p * p + a * p, 4 * (p - 1) * (p - 1) * (p + 1));
    c[2] = Rational((p + 1) * (pa - 1), 6 * (p - 1)) + (one_mod_six ? Rational(2 * a, 3) : Rational(0));
    if (one_mod_six)
        c[3] = Rational((2 * a - 2) * pa * p * p + 2 * pa * p - (2 + 2 * a) * pa + (2 - a) * p * p - 2 * p + a + 2,
                        12 * (p * p - 1));
    else
        c[3] = Rational((2 * a - 2) * pa * p * p - (2 + 2 * a) * pa - 6 * pa * p + (3 * a + 2) * p * p + 6 * p - 3 * a + 2,
                        12 * (p * p - 1));
    c[4] = Rational(2 * pa - a * p * p + a - 2, 12 * (p - 1) * (p - 1)) +
           (one_mod_six ? Rational(i64(a) * (a - 2), 6) : Rational(0));
    return c;
}

inline i64 expected_count(const CountFormula& f) {
    switch (f.kind) {
        case FormulaKind::Pairs: return divisor_count(factorize(f.d));
        case FormulaKind::TriplesP2: return triples_p2(f.p);
        case FormulaKind::TriplesPAlpha: {
            using detail::Rational;
            if (!is_prime(f.p)) throw OutOfDomain("TRIPLES_PALPHA needs a prime p");
            if (f.alpha % 2 != 0) throw OutOfDomain("TRIPLES_PALPHA is only given for even alpha");
            Rational total;
            if (f.p == 2) {
                if (f.alpha <= 2) throw OutOfDomain("TRIPLES_PALPHA with p = 2 needs alpha > 2");
                const i64 a = f.alpha;
                total = Rational((3 * a + 19) * ipow(2, f.alpha), 18) + Rational(a * a, 2) - Rational(7 * a, 4) -
                        Rational(5, 9);
            } else {
                if (f.p < 5 || f.alpha < 4) throw OutOfDomain("TRIPLES_PALPHA with odd p needs p >= 5 and alpha >= 4");
                for (const auto& c : palpha_case_counts(f.p, f.alpha)) total = total + c;
            }
            if (!total.integral()) throw OutOfDomain("TRIPLES_PALPHA evaluates to a non-integer here");
            return total.num;
        }
    }
    throw OutOfDomain("unknown formula");
}

/// The formula whose domain covers triples in dimension d, if any.
inline std::optional<CountFormula> triple_formula(i64 d) {
    const auto pp = prime_power(d);
    if (!pp) return std::nullopt;
    const i64 p = pp->prime;
    const int a = pp->exponent;
    if (a == 2 && p >= 3) return CountFormula{FormulaKind::TriplesP2, 0, p, 2};
    if (a % 2 == 0 && ((p == 2 && a > 2) || (p >= 5 && a >= 4))) return CountFormula{FormulaKind::TriplesPAlpha, 0, p, a};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sign separator for {I,Z^{p^s},X^{kp^t}Z^{t'p^s}}

enum class Feasibility { Feasible, Infeasible };

/// Necessary condition for {I,Z^{p^s},X^{kp^t}Z^{t'p^s}} ~ {I,Z^{p^s},X^{-kp^t}Z^{t'p^s}}.
inline Feasibility theorem1_separator(i64 p, int alpha, int s, int t, i64 tp) {
    if (!is_prime(p)) throw PreconditionViolated("theorem1_separator: p must be prime");
    if (s < 0 || s >= t) throw PreconditionViolated("theorem1_separator: need 0 <= s < t");
    if (s + t >= alpha) throw PreconditionViolated("theorem1_separator: need s + t < alpha");
    const i64 q = ipow(p, t - s);
    if (tp <= 1 || tp >= q) throw PreconditionViolated("theorem1_separator: need 1 < t' < p^(t-s)");
    bool ok = false;
    if (p >= 3) ok = tp == 2 || tp == (q + 1) / 2 || tp == q - 1;
    else if (s + t + 1 == alpha) ok = true;
    else ok = tp == 2 || tp == q - 1;
    return ok ? Feasibility::Feasible : Feasibility::Infeasible;
}

// ---------------------------------------------------------------------------
// Orbit store

enum class Mode { Pairs, Triples };
enum class Separation { Invariant, Theorem1, Unseparated };
enum class Status { Verified, Partial };

inline const char* to_string(Mode m) { return m == Mode::Pairs ? "pairs" : "triples"; }
inline const char* to_string(Separation s) {
    switch (s) {
        case Separation::Invariant: return "INVARIANT";
        case Separation::Theorem1: return "THEOREM1";
        default: return "UNSEPARATED";
    }
}
inline const char* to_string(Status s) { return s == Status::Verified ? "VERIFIED" : "PARTIAL"; }

inline constexpr i64 kDefaultTripleCap = 32;
inline constexpr i64 kDefaultPairCap = 512;

/// Orbits of normalized sets {I, v} or {I, v, w} under the generator catalog.
///
/// Sets are indexed by their non-identity members encoded as s*d + t; triples
/// use a*D + b with a < b. Orbits are explored breadth-first in increasing
/// index order, so each orbit's first state is its lexicographic minimum. A
/// BFS tree is kept for witness traces.
class OrbitStore {
public:
    OrbitStore(i64 d, Mode mode, i64 cap)
        : d_(d), dd_(d * d), mode_(mode), gens_(generator_catalog(d, mode == Mode::Pairs ? 2 : 3)) {
        if (d < 2) throw OutOfRange("OrbitStore: dimension must be >= 2");
        if (d > cap) throw DimensionTooLarge("dimension " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
        for (const auto& g : gens_) inverses_.push_back(g.kind == MoveKind::Pivot ? g : inverse_move(g, d));
        const i64 n = mode == Mode::Pairs ? dd_ : dd_ * dd_;
        cls_.assign(std::size_t(n), -1);
        parent_.assign(std::size_t(n), -1);
        via_.assign(std::size_t(n), -1);
        explore();
    }

    i64 d() const noexcept { return d_; }
    Mode mode() const noexcept { return mode_; }
    std::size_t class_count() const noexcept { return reps_.size(); }
    std::size_t state_count() const noexcept { return states_; }
    const std::vector<Move>& generators() const noexcept { return gens_; }

    /// Index of the orbit's lexicographically least state.
    i64 representative_index(std::size_t c) const { return reps_.at(c); }
    i64 orbit_size(std::size_t c) const { return sizes_.at(c); }

    std::vector<Gpm> decode(i64 idx) const {
        if (mode_ == Mode::Pairs) return {Gpm::identity(d_), gpm_of(idx)};
        return {Gpm::identity(d_), gpm_of(idx / dd_), gpm_of(idx % dd_)};
    }

    /// States in index order, each listed once.
    std::vector<i64> states() const {
        std::vector<i64> out;
        for (std::size_t i = 0; i < cls_.size(); ++i)
            if (cls_[i] >= 0) out.push_back(i64(i));
        return out;
    }

    int class_of_index(i64 idx) const { return cls_.at(std::size_t(idx)); }

    /// Class of a set containing I; -1 if it is not a normalized member of the universe.
    int class_of(std::span<const Gpm> ms) const {
        const auto idx = index_of(ms);
        return idx ? cls_[std::size_t(*idx)] : -1;
    }

    std::optional<i64> index_of(std::span<const Gpm> ms) const {
        const std::size_t want = mode_ == Mode::Pairs ? 2 : 3;
        if (ms.size() != want) return std::nullopt;
        std::vector<i64> codes;
        bool have_identity = false;
        for (const auto& g : ms) {
            if (g.d() != d_) return std::nullopt;
            if (g.is_identity() && !have_identity) {
                have_identity = true;
                continue;
            }
            codes.push_back(code(g));
        }
        if (!have_identity) return std::nullopt;
        if (mode_ == Mode::Pairs) return codes[0];
        std::sort(codes.begin(), codes.end());
        if (codes[0] == 0 || codes[0] == codes[1]) return std::nullopt;
        return codes[0] * dd_ + codes[1];
    }

    /// Move tokens taking the state to its representative.
    std::vector<std::string> witness(i64 idx) const {
        std::vector<std::string> out;
        for (i64 cur = idx; parent_[std::size_t(cur)] >= 0; cur = parent_[std::size_t(cur)]) {
            const Move& inv = inverses_[std::size_t(via_[std::size_t(cur)])];
            if (inv.kind != MoveKind::Pivot) {
                out.push_back(inv.label);
                continue;
            }
            // cur = pivot_j(par); the pivot back uses -par_j, which sits in cur.
            const auto par = decode(parent_[std::size_t(cur)]);
            const auto here = set_of(cur);
            const Gpm back = -sorted(par)[inv.pivot];
            const auto pos = std::find(here.begin(), here.end(), back) - here.begin();
            out.push_back(moves::pivot(std::size_t(pos)).label);
        }
        return out;
    }

    /// Nonempty-set form of a state, for replay.
    GpmSet set_of(i64 idx) const {
        auto ms = decode(idx);
        if (mode_ == Mode::Pairs && ms[1].is_identity()) throw PreconditionViolated("degenerate pair {I,I} is not a set");
        return {d_, std::move(ms)};
    }

    /// Index of the image of a state under a generator, or -1 if the guard fails.
    i64 step(i64 idx, const Move& mv) const {
        if (mode_ == Mode::Pairs) {
            const Gpm v = gpm_of(idx);
            if (mv.kind == MoveKind::Pivot) return code(-v);
            if (!mv.applies(v)) return -1;
            return code(mv.image(v));
        }
        const Gpm v = gpm_of(idx / dd_), w = gpm_of(idx % dd_);
        i64 a, b;
        if (mv.kind == MoveKind::Pivot) {
            if (mv.pivot == 1) {
                a = code(-v);
                b = code(Gpm(w.s() - v.s(), w.t() - v.t(), d_));
            } else {
                a = code(-w);
                b = code(Gpm(v.s() - w.s(), v.t() - w.t(), d_));
            }
        } else {
            if (!mv.applies(v) || !mv.applies(w)) return -1;
            a = code(mv.image(v));
            b = code(mv.image(w));
        }
        if (a > b) std::swap(a, b);
        return a * dd_ + b;
    }

private:
    static std::vector<Gpm> sorted(std::vector<Gpm> v) {
        std::sort(v.begin(), v.end());
        return v;
    }
    Gpm gpm_of(i64 code) const { return {code / d_, code % d_, d_}; }
    i64 code(const Gpm& g) const { return g.s() * d_ + g.t(); }

    bool valid(i64 idx) const {
        if (mode_ == Mode::Pairs) return true;
        const i64 a = idx / dd_, b = idx % dd_;
        return a >= 1 && a < b;
    }

    void explore() {
        std::deque<i64> queue;
        const i64 n = i64(cls_.size());
        for (i64 start = 0; start < n; ++start) {
            if (!valid(start) || cls_[std::size_t(start)] >= 0) continue;
            const int c = int(reps_.size());
            reps_.push_back(start);
            sizes_.push_back(0);
            cls_[std::size_t(start)] = c;
            queue.push_back(start);
            while (!queue.empty()) {
                const i64 cur = queue.front();
                queue.pop_front();
                ++sizes_.back();
                ++states_;
                for (std::size_t g = 0; g < gens_.size(); ++g) {
                    const i64 nxt = step(cur, gens_[g]);
                    if (nxt < 0 || cls_[std::size_t(nxt)] >= 0) continue;
                    cls_[std::size_t(nxt)] = c;
                    parent_[std::size_t(nxt)] = cur;
                    via_[std::size_t(nxt)] = std::int16_t(g);
                    queue.push_back(nxt);
                }
            }
        }
    }

    i64 d_, dd_;
    Mode mode_;
    std::vector<Move> gens_;
    std::vector<Move> inverses_;
    std::vector<std::int32_t> cls_;
    std::vector<i64> parent_;
    std::vector<std::int16_t> via_;
    std::vector<i64> reps_;
    std::vector<i64> sizes_;
    std::size_t states_ = 0;
};

// ---------------------------------------------------------------------------
// Reports

struct ClassReport {
    std::vector<Gpm> representative;
    i64 orbit_size = 0;
    InvariantVector invariants;
    Separation separation = Separation::Invariant;
    std::vector<std::string> witness;
    std::string witness_from;

    friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

struct Theorem1Check {
    int s, t;
    i64 k, t_prime;
    Feasibility verdict;
    int class_n, class_mirror;

    bool merged() const { return class_n == class_mirror; }
    bool contradicts() const { return merged() == (verdict == Feasibility::Infeasible); }
};

struct Classification {
    i64 dimension = 0;
    Mode mode = Mode::Triples;
    std::vector<ClassReport> classes;
    std::optional<i64> expected_count;
    Status status = Status::Verified;
    i64 lower_bound = 0;
    std::vector<std::string> issues;
    std::vector<Theorem1Check> theorem1;

    friend bool operator==(const Classification& a, const Classification& b) {
        return a.dimension == b.dimension && a.mode == b.mode && a.classes == b.classes &&
               a.expected_count == b.expected_count && a.status == b.status && a.lower_bound == b.lower_bound &&
               a.issues == b.issues;
    }
};

enum class ProbeChoice { Exhaustive, Standard };

struct ClassifyOptions {
    ProbeChoice probes = ProbeChoice::Exhaustive;
    bool witnesses = false;
    i64 cap = kDefaultTripleCap;
};

inline ProbeSet make_probes(i64 d, ProbeChoice c) {
    return c == ProbeChoice::Exhaustive ? ProbeSet::exhaustive(d) : ProbeSet::standard(d);
}

/// Every N_{k,t'} against its mirror N_{-k,t'} in the universe.
inline std::vector<Theorem1Check> theorem1_scan(const OrbitStore& orbits) {
    std::vector<Theorem1Check> out;
    const auto pp = prime_power(orbits.d());
    if (!pp || orbits.mode() != Mode::Triples) return out;
    const i64 p = pp->prime, d = orbits.d();
    const int alpha = pp->exponent;
    for (int s = 0; s < alpha; ++s)
        for (int t = s + 1; s + t < alpha; ++t)
            for (i64 k = 1; k < ipow(p, alpha - t); ++k) {
                if (k % p == 0) continue;
                for (i64 tp = 2; tp < ipow(p, t - s); ++tp) {
                    const Gpm z(0, ipow(p, s), d);
                    const std::vector<Gpm> n{Gpm::identity(d), z, Gpm(k * ipow(p, t), tp * ipow(p, s), d)};
                    const std::vector<Gpm> m{Gpm::identity(d), z, Gpm(-k * ipow(p, t), tp * ipow(p, s), d)};
                    out.push_back({s, t, k, tp, theorem1_separator(p, alpha, s, t, tp), orbits.class_of(n), orbits.class_of(m)});
                }
            }
    return out;
}

namespace detail {

inline void verify_pairs_gcd(const OrbitStore& orbits, std::vector<std::string>& issues) {
    for (i64 idx : orbits.states()) {
        const auto ms = orbits.decode(idx);
        if (ms[1].is_identity()) continue;
        const auto target = gcd_rule(GpmSet(orbits.d(), ms));
        if (orbits.class_of(target.members()) != orbits.class_of_index(idx))
            issues.push_back("gcd rule leaves the orbit of " + to_string(std::span<const Gpm>(ms)));
    }
}

}  // namespace detail

/// Fingerprints, separator splits and formula cross-checks for a computed orbit store.
inline Classification separate_and_verify(const OrbitStore& orbits, const ClassifyOptions& opt = {}) {
    Classification out;
    out.dimension = orbits.d();
    out.mode = orbits.mode();
    const i64 d = orbits.d();
    const auto probes = make_probes(d, opt.probes);

    std::map<std::vector<i64>, std::vector<std::size_t>> cells;
    for (std::size_t c = 0; c < orbits.class_count(); ++c) {
        ClassReport r;
        r.representative = orbits.decode(orbits.representative_index(c));
        r.orbit_size = orbits.orbit_size(c);
        r.invariants = invariant_vector(r.representative, probes);
        cells[r.invariants.key()].push_back(c);
        out.classes.push_back(std::move(r));
    }

    out.theorem1 = theorem1_scan(orbits);
    std::map<std::pair<int, int>, bool> t1_split;
    for (const auto& chk : out.theorem1) {
        if (chk.class_n < 0 || chk.class_mirror < 0) continue;
        if (chk.merged() && chk.verdict == Feasibility::Infeasible)
            out.issues.push_back("orbit merges N_{" + std::to_string(chk.k) + "," + std::to_string(chk.t_prime) +
                                 "} (s=" + std::to_string(chk.s) + ",t=" + std::to_string(chk.t) +
                                 ") with its mirror although it is infeasible");
        if (!chk.merged() && chk.verdict == Feasibility::Infeasible)
            t1_split[{std::min(chk.class_n, chk.class_mirror), std::max(chk.class_n, chk.class_mirror)}] = true;
        if (!chk.merged() && chk.verdict == Feasibility::Feasible)
            out.issues.push_back("feasible pair N_{" + std::to_string(chk.k) + "," + std::to_string(chk.t_prime) +
                                 "} (s=" + std::to_string(chk.s) + ",t=" + std::to_string(chk.t) +
                                 ") not merged with its mirror");
    }

    for (const auto& [key, members] : cells) {
        bool resolved = true;
        for (std::size_t i = 0; i < members.size() && resolved; ++i)
            for (std::size_t j = i + 1; j < members.size() && resolved; ++j)
                resolved = t1_split.count({int(members[i]), int(members[j])}) > 0;
        const Separation sep = members.size() == 1 ? Separation::Invariant
                               : resolved          ? Separation::Theorem1
                                                   : Separation::Unseparated;
        out.lower_bound += resolved ? i64(members.size()) : 1;
        for (auto c : members) out.classes[c].separation = sep;
        if (!resolved) {
            std::string names;
            for (auto c : members) names += " {" + to_string(std::span<const Gpm>(out.classes[c].representative)) + "}";
            out.issues.push_back("classes share a fingerprint:" + names);
        }
    }

    if (orbits.mode() == Mode::Pairs) {
        out.expected_count = expected_count({FormulaKind::Pairs, d});
        detail::verify_pairs_gcd(orbits, out.issues);
    } else if (auto f = triple_formula(d)) {
        out.expected_count = expected_count(*f);
    }
    const i64 n = i64(orbits.class_count());
    if (out.expected_count && *out.expected_count != n)
        out.issues.push_back("orbit count " + std::to_string(n) + " differs from formula value " +
                             std::to_string(*out.expected_count));
    if (orbits.mode() == Mode::Triples && !out.expected_count) {
        if (auto pp = prime_power(d); pp && pp->exponent >= 2) {
            const double centre = double(pp->exponent + 3) * double(d) / 6.0;
            if (double(n) < 0.5 * centre || double(n) > 1.5 * centre)
                out.issues.push_back("orbit count " + std::to_string(n) + " outside the asymptotic sanity band");
        }
    }

    if (opt.witnesses) {
        std::vector<i64> last(orbits.class_count(), -1);
        for (i64 idx : orbits.states()) last[std::size_t(orbits.class_of_index(idx))] = idx;
        for (std::size_t c = 0; c < orbits.class_count(); ++c) {
            auto& r = out.classes[c];
            r.witness_from = to_string(std::span<const Gpm>(orbits.decode(last[c])));
            if (orbits.mode() == Mode::Pairs && !orbits.decode(last[c])[1].is_identity())
                r.witness = {"RULE(gcd)"};
            else
                r.witness = orbits.witness(last[c]);
        }
    }

    out.status = out.issues.empty() ? Status::Verified : Status::Partial;
    return out;
}

inline Classification enumerate_pairs(i64 d, const ClassifyOptions& opt = {}) {
    OrbitStore orbits(d, Mode::Pairs, std::max(opt.cap, kDefaultPairCap));
    return separate_and_verify(orbits, opt);
}

inline Classification enumerate_triples(i64 d, const ClassifyOptions& opt = {}) {
    OrbitStore orbits(d, Mode::Triples, opt.cap);
    return separate_and_verify(orbits, opt);
}

// ---------------------------------------------------------------------------
// Families of the p^2 classification

/// Family 1..5 of every class for d = p^2 (0 when no family form lies in the orbit).
inline std::vector<int> theorem3_families(const OrbitStore& orbits) {
    const auto pp = prime_power(orbits.d());
    if (!pp || pp->exponent != 2 || orbits.mode() != Mode::Triples)
        throw OutOfDomain("theorem3_families needs triples with d = p^2");
    const i64 p = pp->prime, d = orbits.d();
    std::vector<int> fam(orbits.class_count(), 0);
    auto mark = [&](int family, Gpm a, Gpm b) {
        const std::vector<Gpm> ms{Gpm::identity(d), a, b};
        const int c = orbits.class_of(ms);
        if (c >= 0 && (fam[std::size_t(c)] == 0 || fam[std::size_t(c)] > family)) fam[std::size_t(c)] = family;
    };
    const Gpm z(0, 1, d), zp(0, p, d);
    for (i64 s = 1; s < d; ++s) mark(1, z, Gpm(s, 0, d));
    for (i64 k = 1; k < p; ++k)
        for (i64 s2 = 2; s2 < p; ++s2) mark(2, z, Gpm(k * p, s2, d));
    for (i64 s3 = 2; s3 < d; ++s3) mark(3, z, Gpm(0, s3, d));
    mark(4, zp, Gpm(p, 0, d));
    for (i64 s4 = 2; s4 < p; ++s4) mark(5, zp, Gpm(0, s4 * p, d));
    return fam;
}

inline std::array<i64, 5> theorem3_family_formulas(i64 p) {
    return {(p * p) / 2, ((p - 1) / 2) * (2 * (p / 6) + 1), (p * p - 2 * p + 1) / 6 + (p - 1) / 2 + 1, 1, p / 6 + 1};
}

// ---------------------------------------------------------------------------
// Table rows

struct TableRow {
    std::vector<Gpm> representative;
    double i1 = 0;
    std::optional<i64> i2;         // at a = d/p
    std::optional<i64> i3;         // at a = 2
    std::optional<i64> i3_powered;  // at a = 2 on M^p
};

struct TableProbes {
    i64 a_i2;
    std::optional<i64> power;
};

inline TableProbes table_probes(i64 d) {
    const i64 p = factorize(d, d).front().prime;
    return {d / p, p < d ? std::optional<i64>(p) : std::nullopt};
}

inline TableRow table_row(std::span<const Gpm> ms) {
    const i64 d = ms.front().d();
    const auto tp = table_probes(d);
    TableRow r{{ms.begin(), ms.end()}, invariant1(ms).numeric(), {}, {}, {}};
    if (tp.a_i2 > 0 && tp.a_i2 < d) r.i2 = invariant2(ms, tp.a_i2);
    if (d > 2) r.i3 = invariant3(ms, 2);
    if (d > 2 && tp.power) r.i3_powered = invariant3(powered_set(ms, *tp.power), 2);
    return r;
}

inline std::vector<TableRow> table_report(const Classification& cls) {
    std::vector<TableRow> rows;
    for (const auto& c : cls.classes) rows.push_back(table_row(c.representative));
    return rows;
}

}  // namespace gbslu
