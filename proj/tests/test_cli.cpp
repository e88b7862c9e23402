#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace gbslu;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pairs subcommand") {
    auto r = run({"pairs", "--dim", "12", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(j.at("classes").size() == 6);
    CHECK(j.at("status") == "VERIFIED");

    r = run({"pairs", "--dim", "9", "--format", "json"});
    CHECK(r.code == 0);
    std::vector<std::string> reps;
    const auto j9 = ordered_json::parse(r.out);
    for (const auto& c : j9.at("classes")) reps.push_back(c.at("representative").get<std::string>());
    CHECK(std::find(reps.begin(), reps.end(), "0,0;0,1") != reps.end());
    CHECK(std::find(reps.begin(), reps.end(), "0,0;0,3") != reps.end());

    CHECK(run({"pairs", "--dim", "1"}).code == 2);
    CHECK(run({"pairs"}).code == 2);
    CHECK(run({"pairs", "--dim", "ten"}).code == 2);
    CHECK(run({"pairs", "--dim", "600"}).code == 3);
}

TEST_CASE("triples subcommand") {
    auto r = run({"triples", "--dim", "9", "--format", "json", "--emit-witnesses"});
    CHECK(r.code == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(j.at("classes").size() == 9);
    for (const auto& c : j.at("classes")) CHECK(c.contains("witness"));

    r = run({"triples", "--dim", "8", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find(csv_header()) != std::string::npos);

    r = run({"triples", "--dim", "25"});
    CHECK(r.code == 0);
    CHECK(r.out.find("21 classes") != std::string::npos);

    CHECK(run({"triples", "--dim", "40"}).code == 3);
    CHECK(run({"triples", "--dim", "9", "--format", "xml"}).code == 2);
}

TEST_CASE("invariants subcommand") {
    auto r = run({"invariants", "--dim", "9", "--set", "0,0;0,1;3,0", "--a", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("I2[a=3] = 5") != std::string::npos);

    r = run({"invariants", "--dim", "8", "--set", "0,0;0,1;4,2", "--a", "4", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(ordered_json::parse(r.out).at("invariants").at("I2").at("4") == 5);

    r = run({"invariants", "--dim", "9", "--set", "0,0;0,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("I1 = 0.00") != std::string::npos);

    r = run({"invariants", "--dim", "9", "--set", "0,0;0,1;1,0", "--a", "2", "--pow", "3"});
    CHECK(r.out.find("M^3: I3[a=2] = 33") != std::string::npos);

    CHECK(run({"invariants", "--dim", "9", "--set", "0,0;x"}).code == 2);
    CHECK(run({"invariants", "--dim", "9", "--set", "0,0;0,1", "--a", "9"}).code == 2);
    CHECK(run({"invariants", "--dim", "9"}).code == 2);
}

TEST_CASE("verify subcommand") {
    auto r = run({"verify", "--prime-power", "3", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("w-conjugation") != std::string::npos);
    CHECK(run({"verify", "--prime-power", "2", "3"}).code == 0);
    r = run({"verify", "--dim", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS self-inverse") != std::string::npos);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "--prime-power", "4", "2"}).code == 2);
    CHECK(run({"verify", "--dim", "9", "--prime-power", "3", "2"}).code == 2);
    CHECK(run({"verify", "--prime-power", "2", "70"}).code == 3);
    CHECK(run({"verify", "--dim", "100"}).code == 3);
}

TEST_CASE("global options and configuration") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);

    const std::string path = "gbslu_test_config.conf";
    {
        std::ofstream f(path);
        f << "triple_cap = 8\nformat = json\n";
    }
    CHECK(run({"--config", path, "triples", "--dim", "9"}).code == 3);
    auto r = run({"--config", path, "triples", "--dim", "8"});
    CHECK(r.code == 0);
    CHECK(ordered_json::parse(r.out).at("dimension") == 8);
    {
        std::ofstream f(path);
        f << "nonsense\n";
    }
    CHECK(run({"--config", path, "pairs", "--dim", "6"}).code == 2);
    std::remove(path.c_str());
    CHECK(run({"--config", "/nonexistent.conf", "pairs", "--dim", "6"}).code == 2);
}
