#pragma once

#include <CLI11.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "gbslu/gbslu.hpp"

namespace gbslu::cli {

enum Exit : int { kOk = 0, kFailure = 1, kUsage = 2, kCap = 3 };

namespace detail {

inline void emit(std::ostream& out, const Classification& c, OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: out << to_json(c).dump(2) << '\n'; break;
        case OutputFormat::Csv: write_csv(out, c); break;
        case OutputFormat::Text: write_text(out, c); break;
    }
}

inline int report_invariants(std::ostream& out, const GpmSet& set, std::vector<i64> as, std::vector<i64> pows,
                             OutputFormat fmt) {
    const i64 d = set.d();
    for (i64 a : as)
        if (a <= 0 || a >= d) throw PowerOutOfRange("--a value " + std::to_string(a) + " outside (0, d)");
    for (i64 t : pows)
        if (t <= 0 || t >= d) throw PowerOutOfRange("--pow value " + std::to_string(t) + " outside (0, d)");
    const auto iv = invariant_vector(set, pows, as);
    if (fmt == OutputFormat::Json) {
        ordered_json j;
        j["dimension"] = d;
        j["set"] = to_string(set);
        j["invariants"] = to_json(iv);
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "set " << to_string(set) << " in dimension " << d << '\n';
    out << "I1 = " << gbslu::detail::fixed2(iv.i1.numeric()) << '\n';
    for (auto [a, v] : iv.i2) out << "I2[a=" << a << "] = " << v << '\n';
    for (auto [a, v] : iv.i3) out << "I3[a=" << a << "] = " << v << '\n';
    for (const auto& [t, pw] : iv.powered) {
        out << "M^" << t << ": I1 = " << gbslu::detail::fixed2(pw.i1.numeric()) << '\n';
        for (auto [a, v] : pw.i3) out << "M^" << t << ": I3[a=" << a << "] = " << v << '\n';
    }
    return kOk;
}

inline int run_verify(std::ostream& out, i64 d, const Config& cfg) {
    using namespace oracle;
    if (d < 2) throw OutOfRange("dimension must be >= 2");
    if (d > cfg.matrix_cap) throw CapExceeded("dimension " + std::to_string(d) + " exceeds matrix cap");
    std::vector<SuiteResult> suites;
    suites.push_back(verify_traces(d, cfg.tolerance, cfg.matrix_cap));
    suites.push_back(verify_overlaps(d, 200, 7, 1e-12, cfg.matrix_cap));
    suites.push_back(verify_clifford_words(d, cfg.tolerance, cfg.matrix_cap));
    if (auto pp = prime_power(d)) {
        suites.push_back(verify_lemma3(pp->prime, pp->exponent));
        if (pp->exponent >= 2) {
            suites.push_back(verify_lemma1(pp->prime, pp->exponent, cfg.tolerance, cfg.matrix_cap));
            suites.push_back(verify_splits(pp->prime, pp->exponent, cfg.tolerance, cfg.matrix_cap));
        }
    }
    bool ok = true;
    for (const auto& s : suites) {
        out << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks)\n";
        for (const auto& f : s.failures) out << "  " << f << '\n';
        ok = ok && s.passed();
    }
    return ok ? kOk : kFailure;
}

}  // namespace detail

/// Runs the command line; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local-unitary classification of generalized Bell state sets"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key=value config file (default: $GBSLU_CONFIG)");

    i64 dim = 0;
    std::string format;
    bool witnesses = false;
    std::string set_text;
    std::vector<i64> as, pows;
    std::vector<i64> prime_power_args;

    auto* pairs = app.add_subcommand("pairs", "Classify GPM pairs {I, X^s Z^t}");
    pairs->add_option("--dim", dim, "dimension d")->required();
    pairs->add_option("--format", format, "json|csv|text");

    auto* triples = app.add_subcommand("triples", "Classify GPM triples");
    triples->add_option("--dim", dim, "dimension d")->required();
    triples->add_option("--format", format, "json|csv|text");
    triples->add_flag("--emit-witnesses", witnesses, "record a move trace per class");

    auto* inv = app.add_subcommand("invariants", "Exact invariants of one set");
    inv->add_option("--dim", dim, "dimension d")->required();
    inv->add_option("--set", set_text, "members as \"s,t;s,t;...\"")->required();
    inv->add_option("--a", as, "a-values for I2 and I3")->delimiter(',');
    inv->add_option("--pow", pows, "powers t for the powered set")->delimiter(',');
    inv->add_option("--format", format, "json|text");

    auto* verify = app.add_subcommand("verify", "Run the dense-matrix verification suites");
    auto* vdim = verify->add_option("--dim", dim, "dimension d");
    auto* vpp = verify->add_option("--prime-power", prime_power_args, "p alpha")->expected(2);
    vdim->excludes(vpp);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        const Config cfg = load_config(config_path.empty() ? std::nullopt : std::optional<std::string>(config_path));
        const OutputFormat fmt = format.empty() ? cfg.format : parse_format(format);
        ClassifyOptions opt{cfg.probes, witnesses, cfg.triple_cap};

        if (pairs->parsed()) {
            if (dim < 2) throw OutOfRange("--dim must be >= 2");
            opt.cap = cfg.pair_cap;
            OrbitStore orbits(dim, Mode::Pairs, cfg.pair_cap);
            const auto c = separate_and_verify(orbits, opt);
            detail::emit(out, c, fmt);
            return c.status == Status::Verified ? kOk : kFailure;
        }
        if (triples->parsed()) {
            if (dim < 2) throw OutOfRange("--dim must be >= 2");
            const auto c = enumerate_triples(dim, opt);
            detail::emit(out, c, fmt);
            return c.status == Status::Verified ? kOk : kFailure;
        }
        if (inv->parsed()) {
            if (dim < 2) throw OutOfRange("--dim must be >= 2");
            const auto set = parse_gpm_set(set_text, dim);
            return detail::report_invariants(out, set, as, pows, fmt);
        }
        if (verify->parsed()) {
            if (!prime_power_args.empty()) {
                const i64 p = prime_power_args[0];
                const i64 a = prime_power_args[1];
                if (p < 2 || a < 1) throw OutOfRange("--prime-power needs p >= 2 and alpha >= 1");
                i64 d = 1;
                for (i64 i = 0; i < a; ++i) {
                    if (d > cfg.matrix_cap / p) throw CapExceeded("p^alpha exceeds matrix cap");
                    d *= p;
                }
                if (!is_prime(p)) throw OutOfRange("--prime-power needs a prime p");
                dim = d;
            } else if (dim == 0) {
                throw OutOfRange("verify needs --dim or --prime-power");
            }
            return detail::run_verify(out, dim, cfg);
        }
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCap;
    } catch (const DimensionTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kCap;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace gbslu::cli
