#include <catch_amalgamated.hpp>

#include <set>

#include "gbslu/classify.hpp"

using namespace gbslu;

namespace {

std::vector<Gpm> triple(i64 d, std::pair<i64, i64> a, std::pair<i64, i64> b) {
    return {Gpm::identity(d), Gpm(a.first, a.second, d), Gpm(b.first, b.second, d)};
}

}  // namespace

TEST_CASE("pair classes are the divisors of d") {
    for (i64 d = 2; d <= 60; ++d) {
        const auto cls = enumerate_pairs(d);
        INFO("d = " << d);
        CHECK(i64(cls.classes.size()) == divisor_count(factorize(d)));
        CHECK(cls.expected_count == divisor_count(factorize(d)));
        CHECK(cls.status == Status::Verified);
        std::vector<i64> got;
        for (const auto& c : cls.classes) {
            REQUIRE(c.representative.size() == 2);
            CHECK(c.representative[1].s() == 0);
            got.push_back(c.representative[1].t() == 0 ? d : c.representative[1].t());
        }
        std::sort(got.begin(), got.end());
        CHECK(got == divisors(d));
    }
}

TEST_CASE("pair examples") {
    CHECK(enumerate_pairs(12).classes.size() == 6);
    CHECK(enumerate_pairs(7).classes.size() == 2);
    const auto nine = enumerate_pairs(9);
    REQUIRE(nine.classes.size() == 3);
    CHECK(nine.classes[1].representative[1] == Gpm(0, 1, 9));
    CHECK(nine.classes[2].representative[1] == Gpm(0, 3, 9));
}

TEST_CASE("triple counts for small prime powers") {
    struct Case {
        i64 d;
        std::size_t classes;
        bool has_formula;
    };
    for (auto [d, n, formula] : {Case{4, 4, false}, Case{9, 9, true}, Case{16, 28, true}, Case{25, 21, true},
                                 Case{27, 32, false}}) {
        const auto cls = enumerate_triples(d);
        INFO("d = " << d);
        for (const auto& issue : cls.issues) UNSCOPED_INFO(issue);
        CHECK(cls.classes.size() == n);
        CHECK(cls.expected_count.has_value() == formula);
        CHECK(cls.lower_bound == i64(n));
        CHECK(cls.status == Status::Verified);
    }
}

TEST_CASE("d = 8 enumeration separates every orbit") {
    const auto cls = enumerate_triples(8);
    CHECK(cls.classes.size() == 12);
    CHECK(cls.lower_bound == 12);
    CHECK_FALSE(cls.expected_count.has_value());
    CHECK(cls.status == Status::Verified);
    const OrbitStore orbits(8, Mode::Triples, 32);
    const std::vector<std::vector<Gpm>> published{
        triple(8, {0, 1}, {1, 0}), triple(8, {0, 1}, {2, 0}), triple(8, {0, 1}, {3, 0}), triple(8, {0, 1}, {4, 0}),
        triple(8, {0, 2}, {2, 0}), triple(8, {0, 2}, {4, 0}), triple(8, {0, 1}, {4, 2}), triple(8, {0, 1}, {0, 2}),
        triple(8, {0, 1}, {0, 3}), triple(8, {0, 1}, {0, 4}), triple(8, {0, 2}, {0, 4})};
    std::set<int> seen;
    for (const auto& ms : published) seen.insert(orbits.class_of(ms));
    CHECK(seen.size() == published.size());
    CHECK_FALSE(seen.count(-1));
}

TEST_CASE("composite dimensions have no formula") {
    const auto cls = enumerate_triples(6);
    CHECK_FALSE(cls.expected_count.has_value());
    CHECK(cls.classes.size() >= 2);
    CHECK_THROWS_AS(enumerate_triples(33), DimensionTooLarge);
    CHECK_THROWS_AS(OrbitStore(40, Mode::Triples, 32), DimensionTooLarge);
}

TEST_CASE("lexicographic representatives") {
    const OrbitStore orbits(9, Mode::Triples, 32);
    for (i64 idx : orbits.states()) {
        const auto c = std::size_t(orbits.class_of_index(idx));
        CHECK(orbits.representative_index(c) <= idx);
    }
    i64 total = 0;
    for (std::size_t c = 0; c < orbits.class_count(); ++c) total += orbits.orbit_size(c);
    CHECK(std::size_t(total) == orbits.state_count());
    CHECK(orbits.state_count() == 80 * 79 / 2);
}

TEST_CASE("witness traces replay to the representative") {
    for (i64 d : {4, 8, 9, 16}) {
        ClassifyOptions opt;
        opt.witnesses = true;
        const auto cls = enumerate_triples(d, opt);
        for (const auto& c : cls.classes) {
            const auto start = parse_gpm_set(c.witness_from, d);
            CHECK(replay(start, c.witness) == GpmSet(d, c.representative));
        }
    }
    const OrbitStore orbits(9, Mode::Triples, 32);
    for (i64 idx : orbits.states()) {
        const auto rep = orbits.set_of(orbits.representative_index(std::size_t(orbits.class_of_index(idx))));
        CHECK(replay(orbits.set_of(idx), orbits.witness(idx)) == rep);
    }
}

TEST_CASE("pair witnesses use the gcd rule") {
    ClassifyOptions opt;
    opt.witnesses = true;
    const auto cls = enumerate_pairs(12, opt);
    for (const auto& c : cls.classes) {
        if (c.representative[1].is_identity()) continue;
        CHECK(replay(parse_gpm_set(c.witness_from, 12), c.witness) == GpmSet(12, c.representative));
    }
}

TEST_CASE("theorem1_separator examples") {
    CHECK(theorem1_separator(3, 2, 0, 1, 2) == Feasibility::Feasible);
    CHECK(theorem1_separator(5, 2, 0, 1, 4) == Feasibility::Feasible);
    CHECK(theorem1_separator(5, 2, 0, 1, 2) == Feasibility::Feasible);
    CHECK(theorem1_separator(5, 2, 0, 1, 3) == Feasibility::Feasible);
    CHECK(theorem1_separator(7, 2, 0, 1, 3) == Feasibility::Infeasible);
    CHECK(theorem1_separator(7, 2, 0, 1, 5) == Feasibility::Infeasible);
    CHECK(theorem1_separator(2, 4, 0, 2, 3) == Feasibility::Feasible);
    CHECK(theorem1_separator(2, 5, 0, 3, 5) == Feasibility::Infeasible);
    CHECK(theorem1_separator(2, 4, 0, 3, 5) == Feasibility::Feasible);
    CHECK_THROWS_AS(theorem1_separator(4, 2, 0, 1, 2), PreconditionViolated);
    CHECK_THROWS_AS(theorem1_separator(3, 2, 1, 1, 2), PreconditionViolated);
    CHECK_THROWS_AS(theorem1_separator(3, 2, 0, 2, 2), PreconditionViolated);
    CHECK_THROWS_AS(theorem1_separator(3, 2, 0, 1, 3), PreconditionViolated);
}

TEST_CASE("separator verdicts agree with the orbits at d = 9 and 25") {
    for (i64 d : {9, 25}) {
        const OrbitStore orbits(d, Mode::Triples, 32);
        const auto checks = theorem1_scan(orbits);
        CHECK_FALSE(checks.empty());
        for (const auto& chk : checks) CHECK_FALSE(chk.contradicts());
    }
}

TEST_CASE("count formulas") {
    CHECK(triples_p2(3) == 9);
    CHECK(triples_p2(5) == 21);
    CHECK(triples_p2(7) == 46);
    CHECK(expected_count({FormulaKind::Pairs, 36}) == 9);
    CHECK(expected_count({FormulaKind::TriplesPAlpha, 0, 2, 4}) == 28);
    CHECK_THROWS_AS(triples_p2(2), OutOfDomain);
    CHECK_THROWS_AS(triples_p2(9), OutOfDomain);
    CHECK_THROWS_AS(expected_count({FormulaKind::TriplesPAlpha, 0, 2, 3}), OutOfDomain);
    CHECK_THROWS_AS(expected_count({FormulaKind::TriplesPAlpha, 0, 2, 2}), OutOfDomain);
    CHECK_THROWS_AS(expected_count({FormulaKind::TriplesPAlpha, 0, 3, 4}), OutOfDomain);
    CHECK_THROWS_AS(expected_count({FormulaKind::TriplesPAlpha, 0, 6, 4}), OutOfDomain);
    CHECK(triple_formula(9)->kind == FormulaKind::TriplesP2);
    CHECK(triple_formula(16)->kind == FormulaKind::TriplesPAlpha);
    CHECK_FALSE(triple_formula(8).has_value());
    CHECK_FALSE(triple_formula(27).has_value());
    CHECK_FALSE(triple_formula(12).has_value());
    CHECK_FALSE(triple_formula(81).has_value());
}

TEST_CASE("p^2 family counts at d = 25") {
    const OrbitStore orbits(25, Mode::Triples, 32);
    const auto fam = theorem3_families(orbits);
    std::array<i64, 5> got{};
    for (int f : fam) {
        REQUIRE(f >= 1);
        ++got[std::size_t(f - 1)];
    }
    CHECK(got == theorem3_family_formulas(5));
    CHECK(got[1] == 2);
    CHECK_THROWS_AS(theorem3_families(OrbitStore(8, Mode::Triples, 32)), OutOfDomain);
}

TEST_CASE("classification is deterministic") {
    ClassifyOptions opt;
    opt.witnesses = true;
    CHECK(enumerate_triples(9, opt) == enumerate_triples(9, opt));
    CHECK(enumerate_triples(8, opt) == enumerate_triples(8, opt));
}

TEST_CASE("standard probes are weaker than exhaustive ones") {
    ClassifyOptions opt;
    opt.probes = ProbeChoice::Standard;
    const auto cls = enumerate_triples(9, opt);
    CHECK(cls.classes.size() == 9);
    CHECK(cls.lower_bound <= 9);
}

TEST_CASE("table rows") {
    auto row = [](i64 d, std::pair<i64, i64> a, std::pair<i64, i64> b) { return table_row(triple(d, a, b)); };
    const auto r1 = row(9, {0, 1}, {3, 2});
    CHECK(std::round(r1.i1) == 72);
    CHECK(r1.i2 == 3);
    CHECK(r1.i3 == 27);
    CHECK(r1.i3_powered == 81);
    const auto r2 = row(8, {0, 2}, {2, 0});
    CHECK(std::round(r2.i1) == 96);
    CHECK(r2.i2 == 9);
    CHECK(r2.i3 == 27);
    CHECK(r2.i3_powered == 63);
    const auto r3 = row(9, {0, 3}, {0, 6});
    CHECK(r3.i1 == 0);
    CHECK(r3.i2 == 9);
    CHECK(r3.i3 == 81);
    CHECK(r3.i3_powered == 729);
    CHECK_FALSE(row(7, {0, 1}, {1, 0}).i3_powered.has_value());
}

TEST_CASE("d = 49 matches the p^2 formula", "[slow]") {
    ClassifyOptions opt;
    opt.cap = 49;
    const auto cls = enumerate_triples(49, opt);
    CHECK(cls.classes.size() == 46);
    CHECK(cls.status == Status::Verified);
}
