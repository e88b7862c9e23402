#pragma once

#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gbslu/classify.hpp"

namespace gbslu {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json int_map(const std::map<i64, i64>& m) {
    ordered_json j = ordered_json::object();
    for (auto [a, v] : m) j[std::to_string(a)] = v;
    return j;
}

inline std::map<i64, i64> parse_int_map(const ordered_json& j) {
    std::map<i64, i64> m;
    for (auto it = j.begin(); it != j.end(); ++it) m[std::stoll(it.key())] = it.value().get<i64>();
    return m;
}

inline Separation parse_separation(const std::string& s) {
    if (s == "INVARIANT") return Separation::Invariant;
    if (s == "THEOREM1") return Separation::Theorem1;
    if (s == "UNSEPARATED") return Separation::Unseparated;
    throw ParseError("unknown separation '" + s + "'");
}

inline std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);
    return buf;
}

}  // namespace detail

inline ordered_json to_json(const InvariantVector& iv) {
    ordered_json j;
    j["I1_args"] = iv.i1.args();
    j["I1"] = iv.i1.numeric();
    j["I2"] = detail::int_map(iv.i2);
    j["I3"] = detail::int_map(iv.i3);
    ordered_json pw = ordered_json::object();
    for (const auto& [t, p] : iv.powered) {
        ordered_json e;
        e["I1_args"] = p.i1.args();
        e["I1"] = p.i1.numeric();
        e["I3"] = detail::int_map(p.i3);
        pw[std::to_string(t)] = std::move(e);
    }
    j["powered"] = std::move(pw);
    return j;
}

inline InvariantVector invariants_from_json(const ordered_json& j, i64 d) {
    InvariantVector iv;
    iv.i1 = CosFingerprint(d, j.at("I1_args").get<std::vector<i64>>());
    iv.i2 = detail::parse_int_map(j.at("I2"));
    iv.i3 = detail::parse_int_map(j.at("I3"));
    for (auto it = j.at("powered").begin(); it != j.at("powered").end(); ++it)
        iv.powered[std::stoll(it.key())] = {CosFingerprint(d, it.value().at("I1_args").get<std::vector<i64>>()),
                                            detail::parse_int_map(it.value().at("I3"))};
    return iv;
}

inline ordered_json to_json(const Classification& c) {
    ordered_json j;
    j["dimension"] = c.dimension;
    j["mode"] = to_string(c.mode);
    ordered_json classes = ordered_json::array();
    for (const auto& r : c.classes) {
        ordered_json e;
        e["representative"] = to_string(std::span<const Gpm>(r.representative));
        e["orbit_size"] = r.orbit_size;
        e["invariants"] = to_json(r.invariants);
        e["separation"] = to_string(r.separation);
        e["witness"] = r.witness;
        e["witness_from"] = r.witness_from;
        classes.push_back(std::move(e));
    }
    j["classes"] = std::move(classes);
    j["expected_count"] = c.expected_count ? ordered_json(*c.expected_count) : ordered_json(nullptr);
    j["status"] = to_string(c.status);
    j["lower_bound"] = c.lower_bound;
    j["issues"] = c.issues;
    return j;
}

inline Classification classification_from_json(const ordered_json& j) {
    try {
        Classification c;
        c.dimension = j.at("dimension").get<i64>();
        const auto mode = j.at("mode").get<std::string>();
        if (mode != "pairs" && mode != "triples") throw ParseError("unknown mode '" + mode + "'");
        c.mode = mode == "pairs" ? Mode::Pairs : Mode::Triples;
        for (const auto& e : j.at("classes")) {
            ClassReport r;
            r.representative = parse_gpm_list(e.at("representative").get<std::string>(), c.dimension);
            r.orbit_size = e.at("orbit_size").get<i64>();
            r.invariants = invariants_from_json(e.at("invariants"), c.dimension);
            r.separation = detail::parse_separation(e.at("separation").get<std::string>());
            r.witness = e.at("witness").get<std::vector<std::string>>();
            r.witness_from = e.at("witness_from").get<std::string>();
            c.classes.push_back(std::move(r));
        }
        if (!j.at("expected_count").is_null()) c.expected_count = j.at("expected_count").get<i64>();
        const auto status = j.at("status").get<std::string>();
        if (status != "VERIFIED" && status != "PARTIAL") throw ParseError("unknown status '" + status + "'");
        c.status = status == "VERIFIED" ? Status::Verified : Status::Partial;
        c.lower_bound = j.at("lower_bound").get<i64>();
        c.issues = j.at("issues").get<std::vector<std::string>>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

inline std::string csv_header() { return "representative,I1,I2_a,I3_2,I3_2_powt"; }

inline std::string opt_str(const std::optional<i64>& v) { return v ? std::to_string(*v) : std::string("-"); }

inline void write_csv(std::ostream& os, const Classification& c) {
    const auto tp = table_probes(c.dimension);
    os << "# d=" << c.dimension << " I2_a: a=" << tp.a_i2 << " I3_2_powt: t=" << opt_str(tp.power) << '\n';
    os << csv_header() << '\n';
    for (const auto& row : table_report(c))
        os << '"' << to_string(std::span<const Gpm>(row.representative)) << "\"," << detail::fixed2(row.i1) << ','
           << opt_str(row.i2) << ',' << opt_str(row.i3) << ',' << opt_str(row.i3_powered) << '\n';
}

inline void write_text(std::ostream& os, const Classification& c) {
    const auto tp = table_probes(c.dimension);
    os << to_string(c.mode) << " in dimension " << c.dimension << ": " << c.classes.size() << " classes";
    os << " (expected " << (c.expected_count ? std::to_string(*c.expected_count) : std::string("n/a")) << ", lower bound "
       << c.lower_bound << ") " << to_string(c.status) << '\n';
    os << "representative | orbit | I1 | I2_" << tp.a_i2 << " | I3_2 | I3_2 on M^" << opt_str(tp.power) << " | separation\n";
    const auto rows = table_report(c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = c.classes[i];
        os << to_string(std::span<const Gpm>(r.representative)) << " | " << r.orbit_size << " | " << detail::fixed2(rows[i].i1)
           << " | " << opt_str(rows[i].i2) << " | " << opt_str(rows[i].i3) << " | " << opt_str(rows[i].i3_powered) << " | "
           << to_string(r.separation) << '\n';
        if (!r.witness_from.empty()) {
            os << "  witness from " << r.witness_from << ":";
            for (const auto& w : r.witness) os << ' ' << w;
            os << '\n';
        }
    }
    for (const auto& issue : c.issues) os << "issue: " << issue << '\n';
}

}  // namespace gbslu
