#pragma once

// key=value configuration; '#' starts a comment.

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "gbslu/classify.hpp"
#include "gbslu/oracle.hpp"

namespace gbslu {

enum class OutputFormat { Json, Csv, Text };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "text") return OutputFormat::Text;
    throw ParseError("unknown format '" + s + "' (json|csv|text)");
}

struct Config {
    i64 triple_cap = kDefaultTripleCap;
    i64 pair_cap = kDefaultPairCap;
    i64 matrix_cap = oracle::kDefaultMatrixCap;
    double tolerance = oracle::kDefaultTolerance;
    OutputFormat format = OutputFormat::Text;
    ProbeChoice probes = ProbeChoice::Exhaustive;

    void validate() const {
        if (triple_cap < 2 || pair_cap < 2 || matrix_cap < 2) throw ParseError("config: caps must be >= 2");
        if (!(tolerance > 0 && tolerance <= 1e-3)) throw ParseError("config: tolerance must lie in (0, 1e-3]");
    }
};

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline Config parse_config(std::istream& in) {
    Config c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
        const auto key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        try {
            if (key == "triple_cap") c.triple_cap = std::stoll(value);
            else if (key == "pair_cap") c.pair_cap = std::stoll(value);
            else if (key == "matrix_cap") c.matrix_cap = std::stoll(value);
            else if (key == "tolerance") c.tolerance = std::stod(value);
            else if (key == "format") c.format = parse_format(value);
            else if (key == "probes") {
                if (value == "exhaustive") c.probes = ProbeChoice::Exhaustive;
                else if (value == "standard") c.probes = ProbeChoice::Standard;
                else throw ParseError("unknown probe set '" + value + "'");
            } else
                throw ParseError("unknown key '" + key + "'");
        } catch (const std::logic_error&) {
            throw ParseError("config line " + std::to_string(lineno) + ": bad value '" + value + "'");
        }
    }
    c.validate();
    return c;
}

inline Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    return parse_config(in);
}

/// Explicit path, else $GBSLU_CONFIG, else defaults.
inline Config load_config(const std::optional<std::string>& path) {
    if (path) return load_config_file(*path);
    if (const char* env = std::getenv("GBSLU_CONFIG"); env && *env) return load_config_file(env);
    return {};
}

}  // namespace gbslu
