#include <catch_amalgamated.hpp>

#include "gbslu/gpm.hpp"
#include "gbslu/oracle.hpp"

using namespace gbslu;

namespace {

Eigen::MatrixXcd mat(const Gpm& g) { return oracle::build_gpm_matrix(g).m; }

double dist(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("Gpm reduces exponents") {
    Gpm g(-1, 10, 9);
    CHECK(g.s() == 8);
    CHECK(g.t() == 1);
    CHECK_THROWS_AS(Gpm(0, 0, 1), OutOfRange);
    CHECK(Gpm::identity(5).is_identity());
    CHECK(Gpm(1, 2, 9) < Gpm(2, 0, 9));
}

TEST_CASE("gpm_product examples") {
    auto xz = gpm_product(Gpm(1, 0, 5), Gpm(0, 1, 5));
    CHECK(xz.gpm == Gpm(1, 1, 5));
    CHECK(xz.phase == 0);
    auto zx = gpm_product(Gpm(0, 1, 5), Gpm(1, 0, 5));
    CHECK(zx.gpm == Gpm(1, 1, 5));
    CHECK(zx.phase == 1);
    auto p = gpm_product(Gpm(3, 2, 9), Gpm(4, 5, 9));
    CHECK(p.gpm == Gpm(7, 7, 9));
    CHECK(p.phase == 8);
    CHECK_THROWS_AS(gpm_product(Gpm(1, 0, 4), Gpm(1, 0, 5)), DimensionMismatch);
}

TEST_CASE("gpm_product matches explicit matrices") {
    for (i64 d : {2, 3, 4, 6, 8, 9})
        for (i64 s1 = 0; s1 < d; ++s1)
            for (i64 t1 = 0; t1 < d; t1 += 2)
                for (i64 s2 = 0; s2 < d; s2 += 3)
                    for (i64 t2 = 0; t2 < d; ++t2) {
                        Gpm a(s1, t1, d), b(s2, t2, d);
                        auto r = gpm_product(a, b);
                        CHECK(dist(mat(a) * mat(b), oracle::omega_pow(r.phase, d) * mat(r.gpm)) < 1e-9);
                    }
}

TEST_CASE("gpm_dagger examples and matrix check") {
    auto i = gpm_dagger(Gpm(0, 0, 7));
    CHECK(i.gpm == Gpm(0, 0, 7));
    CHECK(i.phase == 0);
    auto x = gpm_dagger(Gpm(1, 0, 9));
    CHECK(x.gpm == Gpm(8, 0, 9));
    CHECK(x.phase == 0);
    auto g = gpm_dagger(Gpm(2, 3, 8));
    CHECK(g.gpm == Gpm(6, 5, 8));
    CHECK(g.phase == 6);
    for (i64 d : {3, 8, 9})
        for (i64 s = 0; s < d; ++s)
            for (i64 t = 0; t < d; ++t) {
                Gpm a(s, t, d);
                auto r = gpm_dagger(a);
                const Eigen::MatrixXcd dag = oracle::omega_pow(r.phase, d) * mat(r.gpm);
                CHECK(dist(dag, mat(a).adjoint()) < 1e-9);
                CHECK(dist(dag * mat(a), Eigen::MatrixXcd::Identity(d, d)) < 1e-9);
            }
}

TEST_CASE("GpmSet canonical form and validation") {
    GpmSet s(9, {{3, 0}, {0, 0}, {0, 1}});
    CHECK(to_string(s) == "0,0;0,1;3,0");
    CHECK(s.contains_identity());
    CHECK(GpmSet(9, {{0, 1}, {0, 0}}) == GpmSet(9, {{0, 0}, {0, 10}}));
    CHECK_THROWS_AS(GpmSet(9, {{0, 1}, {0, 10}}), PreconditionViolated);
    CHECK_THROWS_AS(GpmSet(9, {{0, 1}}), PreconditionViolated);
    CHECK_THROWS_AS(GpmSet(9, std::vector<Gpm>{Gpm(0, 0, 9), Gpm(0, 1, 8)}), DimensionMismatch);
}

TEST_CASE("diff_table examples") {
    auto dt = diff_table(GpmSet(4, {{0, 0}, {0, 1}}));
    CHECK(dt.at(0, 1) == Gpm(0, 1, 4));
    CHECK(dt.at(1, 0) == Gpm(0, 3, 4));

    auto dt9 = diff_table(GpmSet(9, {{0, 0}, {0, 1}, {1, 0}}));
    std::vector<Gpm> off;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(dt9.at(i, i).is_identity());
            CHECK(dt9.at(i, j) == -dt9.at(j, i));
            if (i != j) off.push_back(dt9.at(i, j));
        }
    std::sort(off.begin(), off.end());
    std::vector<Gpm> want{Gpm(0, 1, 9), Gpm(0, 8, 9), Gpm(1, 0, 9), Gpm(8, 0, 9), Gpm(1, 8, 9), Gpm(8, 1, 9)};
    std::sort(want.begin(), want.end());
    CHECK(off == want);
}

TEST_CASE("parse_gpm_set accepts canonical text") {
    CHECK(parse_gpm_set(" 3,0 ; 0,0;0,1 ", 9) == GpmSet(9, {{0, 0}, {0, 1}, {3, 0}}));
    CHECK(parse_gpm_list("0,0;-1,12", 9)[1] == Gpm(8, 3, 9));
    CHECK(parse_gpm_list("1,1;1,1", 9).size() == 2);
}

TEST_CASE("parse_gpm_set rejects malformed text") {
    CHECK_THROWS_AS(parse_gpm_set("", 9), ParseError);
    CHECK_THROWS_AS(parse_gpm_set("0,0;1", 9), ParseError);
    CHECK_THROWS_AS(parse_gpm_set("0,0;1,2,3", 9), ParseError);
    CHECK_THROWS_AS(parse_gpm_set("0,0;a,1", 9), ParseError);
    CHECK_THROWS_AS(parse_gpm_set("0,0;1,", 9), ParseError);
    CHECK_THROWS_AS(parse_gpm_set("0,0;", 9), ParseError);
    CHECK_THROWS_AS(parse_gpm_set("0,0;0,9", 9), PreconditionViolated);
}
