#include <catch_amalgamated.hpp>

#include "gbslu/invariants.hpp"
#include "gbslu/oracle.hpp"

using namespace gbslu;
using namespace gbslu::oracle;
using Catch::Matchers::WithinAbs;

TEST_CASE("build_gpm_matrix examples") {
    CHECK((build_gpm_matrix(Gpm(0, 0, 5)).m - CMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-15);
    CMatrix xz(2, 2);
    xz << 0, -1, 1, 0;
    CHECK((build_gpm_matrix(Gpm(1, 1, 2)).m - xz).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(build_gpm_matrix(Gpm(3, 2, 9)).m.trace()) < 1e-12);
    CHECK_THROWS_AS(build_gpm_matrix(Gpm(0, 1, 65)), CapExceeded);
    CHECK_NOTHROW(build_gpm_matrix(Gpm(0, 1, 65), 65));
}

TEST_CASE("Clifford matrices") {
    const auto r = build_clifford(CliffordMatrix::R, 3);
    CHECK(r.unitarity_error() < 1e-12);
    for (i64 d = 3; d <= 12; ++d) {
        const auto vw = build_clifford(CliffordMatrix::VWord, d);
        const auto vd = build_clifford(CliffordMatrix::VDirect, d);
        INFO("d = " << d);
        CHECK(vw.is_unitary());
        CHECK(verify_conjugation(vw.m, Gpm(0, 1, d), Gpm(1, 1, d)));
        CHECK(verify_conjugation(vd.m, Gpm(0, 1, d), Gpm(1, 1, d)));
    }
    const auto q = build_clifford(CliffordMatrix::QWord, 9, 2);
    CHECK(verify_conjugation(q.m, Gpm(1, 0, 9), Gpm(5, 0, 9)));
    CHECK_THROWS_AS(build_clifford(CliffordMatrix::QWord, 9, 3), NonInvertible);
    CHECK_THROWS_AS(build_clifford(CliffordMatrix::P, 100), CapExceeded);
}

TEST_CASE("build_w examples") {
    const auto w = build_w(3, 2, 1, 0, 1);
    CHECK(w.unitarity_error() < 1e-12);
    for (i64 col = 0; col < 9; ++col) CHECK(w.m.col(col).cwiseAbs().sum() == 1.0);
    CHECK(verify_conjugation(w.m, Gpm(0, 3, 9), Gpm(0, 3, 9)));
    CHECK(verify_conjugation(w.m, Gpm(1, 0, 9), Gpm(4, 0, 9)));
    CHECK_THROWS_AS(build_w(3, 2, 1, 1, 1), PreconditionViolated);
    CHECK_THROWS_AS(build_w(3, 2, 1, 0, 3), PreconditionViolated);
}

TEST_CASE("split operators") {
    for (auto [p, alpha] : {std::pair{2, 3}, {3, 2}, {2, 4}, {3, 3}, {5, 2}}) {
        const auto r = verify_splits(p, alpha);
        INFO(r.name);
        for (const auto& f : r.failures) UNSCOPED_INFO(f);
        CHECK(r.passed());
        CHECK(r.checks > 0);
    }
    CHECK_THROWS_AS(build_split(3, 2, 0, 2), PreconditionViolated);
    CHECK_THROWS_AS(build_split(3, 2, 1, 3), NonInvertible);
}

TEST_CASE("verify_conjugation examples") {
    const CMatrix id = CMatrix::Identity(9, 9);
    CHECK(verify_conjugation(id, Gpm(2, 5, 9), Gpm(2, 5, 9)));
    const auto p = build_clifford(CliffordMatrix::P, 9);
    const auto r = build_clifford(CliffordMatrix::R, 9);
    CHECK(verify_conjugation(p.m, Gpm(1, 0, 9), Gpm(1, 1, 9)));
    CHECK_FALSE(verify_conjugation(r.m, Gpm(1, 0, 9), Gpm(1, 0, 9)));
    CHECK(verify_conjugation(r.m, Gpm(1, 0, 9), Gpm(0, 1, 9)));
    CHECK_THROWS_AS(verify_conjugation(id, Gpm(1, 0, 8), Gpm(1, 0, 8)), DimensionMismatch);
}

TEST_CASE("numeric invariant examples") {
    const std::vector<i64> a4{4}, none;
    const std::vector<Gpm> izx{Gpm(0, 0, 9), Gpm(0, 1, 9), Gpm(1, 0, 9)};
    CHECK(std::round(numeric_invariants(izx, none, none).i1 * 100) / 100 == 11.23);
    const std::vector<Gpm> izx4{Gpm(0, 0, 8), Gpm(0, 1, 8), Gpm(4, 0, 8)};
    CHECK_THAT(numeric_invariants(izx4, a4, none).i2.at(4), WithinAbs(5.0, 1e-9));
    const std::vector<Gpm> comm{Gpm(0, 0, 8), Gpm(0, 1, 8), Gpm(0, 3, 8)};
    CHECK_THAT(numeric_invariants(comm, none, none).i1, WithinAbs(0.0, 1e-9));
}

TEST_CASE("numeric invariants agree with the exact engine on sampled sets") {
    for (i64 d : {5, 6, 8, 9}) {
        std::vector<i64> all;
        for (i64 a = 1; a < d; ++a) all.push_back(a);
        for (i64 v = 1; v < d * d; v += 7)
            for (i64 w = v + 1; w < d * d; w += 11) {
                const std::vector<Gpm> ms{Gpm(0, 0, d), Gpm(v / d, v % d, d), Gpm(w / d, w % d, d)};
                const auto num = numeric_invariants(ms, all, all);
                const auto ex = invariant_vector(ms, ProbeSet::exhaustive(d));
                CHECK_THAT(num.i1, WithinAbs(ex.i1.numeric(), 1e-9));
                for (i64 a : all) {
                    CHECK_THAT(num.i2.at(a), WithinAbs(double(ex.i2.at(a)), 1e-9));
                    CHECK_THAT(num.i3.at(a), WithinAbs(double(ex.i3.at(a)), 1e-9));
                }
                for (i64 t : all) {
                    CHECK_THAT(num.powered.at(t).i1, WithinAbs(ex.powered.at(t).i1.numeric(), 1e-9));
                    for (i64 a : all)
                        CHECK_THAT(num.powered.at(t).i3.at(a), WithinAbs(double(ex.powered.at(t).i3.at(a)), 1e-9));
                }
            }
    }
}

TEST_CASE("gbs_overlap examples") {
    CHECK(std::abs(gbs_overlap(Gpm(2, 3, 5), Gpm(2, 3, 5)) - 1.0) < 1e-12);
    CHECK(std::abs(gbs_overlap(Gpm(0, 0, 5), Gpm(0, 1, 5))) < 1e-12);
    CHECK(std::abs(gbs_overlap(Gpm(1, 1, 4), Gpm(1, 1, 4)) - 1.0) < 1e-12);
    CHECK_THROWS_AS(gbs_overlap(Gpm(0, 0, 4), Gpm(0, 0, 5)), DimensionMismatch);
}

TEST_CASE("verification suites pass") {
    for (i64 d = 2; d <= 12; ++d) {
        for (const auto& r : {verify_traces(d), verify_overlaps(d), verify_clifford_words(d)}) {
            INFO(r.name);
            for (const auto& f : r.failures) UNSCOPED_INFO(f);
            CHECK(r.passed());
        }
    }
    for (auto [p, alpha] : {std::pair{2, 3}, {3, 2}, {2, 4}, {3, 3}}) {
        const auto r = verify_lemma1(p, alpha);
        INFO(r.name);
        CHECK(r.passed());
    }
    for (auto [p, alpha] : {std::pair{7, 1}, {7, 2}, {13, 1}, {5, 1}, {2, 3}, {3, 1}, {3, 3}})
        CHECK(verify_lemma3(p, alpha).passed());
}

TEST_CASE("pauli_coset_match finds the Pauli factor") {
    const CMatrix a = build_clifford(CliffordMatrix::P, 7).m;
    const CMatrix b = a * build_gpm_matrix(Gpm(3, 2, 7)).m;
    CHECK(pauli_coset_match(a, b) == Gpm(3, 2, 7));
    CHECK_FALSE(pauli_coset_match(a, build_clifford(CliffordMatrix::R, 7).m).has_value());
}
