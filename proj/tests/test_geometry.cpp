#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "waring/generate.hpp"
#include "waring/geometry.hpp"

using namespace waring;

namespace {

std::vector<Rational> range(long lo, long hi) {
    std::vector<Rational> out;
    for (long v = lo; v <= hi; ++v) out.emplace_back(v);
    return out;
}

// 2n+3 = 9 points in P^3 with h_Z(2) = 7 but five of them on a line: no
// (2n+1)-subset in LGP, so no curve certificate can be issued.
PointSet sharpness_fixture() {
    return PointSet({{1, 0, 0, 0},
                     {1, 1, 1, 1},
                     {1, 2, 3, 6},
                     {1, 5, 2, 10}, // (1, a, b, ab) on the quadric xw = yz
                     {0, 0, 1, 0},
                     {0, 0, 1, 1},
                     {0, 0, 1, 2},
                     {0, 0, 1, 3},
                     {0, 0, 1, 4}}); // on a ruling line of the quadric
}

} // namespace

TEST_CASE("vandermonde_points") {
    const auto z = vandermonde_points(1, {0, 1});
    CHECK(z.point(0) == std::vector<Rational>{1, 0});
    CHECK(z.point(1) == std::vector<Rational>{1, 1});

    const auto v9 = vandermonde_points(4, range(0, 8));
    CHECK(v9.size() == 9);
    CHECK(v9.point(2) == std::vector<Rational>{1, 2, 4, 8, 16});

    const auto v7 = vandermonde_points(3, range(0, 6));
    CHECK(kruskal_rank(v7) == 4);

    CHECK_THROWS_AS(vandermonde_points(3, {0, 1, 1}), InputError);
}

TEST_CASE("degree-2 kernel of 7 curve points in P^3") {
    const auto z = vandermonde_points(3, range(0, 6));
    const auto m = evaluation_matrix(z, 2);
    CHECK(hilbert_function(z, 2) == 7); // 2n+1
    CHECK(kernel_basis(m).cols() == 3); // 10 - 7
    CHECK(oracle::nullity(m) == 3);
}

TEST_CASE("gkr_inequality_check on the reference configurations") {
    const PointSet conic({{1, 0, 0}, {1, 1, 1}, {1, 2, 4}, {1, 3, 9}, {1, 4, 16}, {1, 5, 25}});
    CHECK(gkr_inequality_check(conic, 2).holds);

    const PointSet general({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {2, 1, 5}});
    CHECK(gkr_inequality_check(general, 1).holds);

    // Vandermonde points at their socle degree
    const auto v = vandermonde_points(3, range(0, 8));
    const auto profile = hilbert_profile(v);
    CHECK(gkr_inequality_check(v, profile.socle_degree).holds);

    const PointSet line_plus({{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(gkr_inequality_check(line_plus, 1), CBNotSatisfied);
}

TEST_CASE("gkr inequality holds whenever CB does (theorem as oracle)") {
    std::mt19937_64 rng(41);
    int exercised = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const long n = 2 + rng() % 3;
        const auto z = random_document(n, n + 3 + rng() % 6, rng(), 4).point_set();
        const auto profile = hilbert_profile(z);
        for (long i = 1; i <= profile.socle_degree; ++i) {
            if (satisfies_cb(z, i).holds) {
                ++exercised;
                CHECK(gkr_inequality_check(z, i).holds);
            }
        }
    }
    CHECK(exercised > 10);
}

TEST_CASE("macaulay_check") {
    CHECK(macaulay_check(std::vector<long>{1, 2, 2, 1}));
    CHECK(macaulay_check(std::vector<long>{1, 2, 1, 1, 1}));
    CHECK_FALSE(macaulay_check(std::vector<long>{1, 2, 0, 1}));
    CHECK_FALSE(macaulay_check(std::vector<long>{1, 3, 2, 3}));
}

TEST_CASE("castelnuovo_certificate verdicts") {
    SUBCASE("curve points give ON_RNC") {
        const auto z = vandermonde_points(4, range(0, 10)); // 2n+3 = 11 points
        const auto cert = castelnuovo_certificate(z);
        CHECK(cert.verdict == RncVerdict::ON_RNC);
        CHECK(cert.h2 == 9);
        REQUIRE(cert.lgp_subset.has_value());
        CHECK(cert.lgp_subset->size() == 9);
        CHECK(is_lgp(z));
    }
    SUBCASE("sharpness fixture gives NO_LGP_SUBSET") {
        const auto cert = castelnuovo_certificate(sharpness_fixture());
        CHECK(cert.verdict == RncVerdict::NO_LGP_SUBSET);
        CHECK(cert.h2 == 7);
    }
    SUBCASE("generic points give H2_TOO_BIG") {
        const PointSet z({{1, 0, 0, 0},
                          {0, 1, 0, 0},
                          {0, 0, 1, 0},
                          {0, 0, 0, 1},
                          {1, 1, 1, 1},
                          {1, 2, 3, 4},
                          {1, 3, 7, 2},
                          {2, 1, 5, 3},
                          {1, 4, 2, 7}});
        CHECK(is_lgp(z));
        const auto cert = castelnuovo_certificate(z);
        CHECK(cert.verdict == RncVerdict::H2_TOO_BIG);
        CHECK(cert.h2 == 9);
    }
    SUBCASE("too few points") {
        const auto cert = castelnuovo_certificate(vandermonde_points(3, range(0, 6)));
        CHECK(cert.verdict == RncVerdict::TOO_FEW_POINTS);
    }
}

TEST_CASE("apolar_pencil") {
    SUBCASE("binary quartic with three nodes") {
        const auto cert = apolar_pencil({1, 1, 1}, {0, 1, 2}, 1);
        CHECK(cert.catalecticant.rows() == 2);
        CHECK(cert.catalecticant.cols() == 4);
        // Hankel of b_k = sum_i lambda_i^k
        CHECK(cert.catalecticant(0, 0) == 3);
        CHECK(cert.catalecticant(1, 3) == 17);
        CHECK(cert.kernel_dim == 2);
        CHECK(oracle::nullity(cert.catalecticant) == 2);
    }
    SUBCASE("the n = 4 curve decomposition") {
        const auto cert = apolar_pencil(std::vector<Rational>(9, Rational(1)), range(0, 8), 4);
        CHECK(cert.catalecticant.rows() == 8);
        CHECK(cert.catalecticant.cols() == 10);
        CHECK(cert.kernel_dim == 2);
        CHECK(oracle::nullity(cert.catalecticant) == 2);
    }
    SUBCASE("kernel vectors annihilate the catalecticant exactly") {
        const auto cert = apolar_pencil({1, Rational(1, 2), -2, 3, 1}, {0, 1, -1, 2, Rational(1, 3)}, 2);
        for (std::size_t k = 0; k < cert.kernel_dim; ++k) {
            CHECK(annihilates(cert.catalecticant, cert.kernel, k));
        }
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(apolar_pencil({1, 1}, {0, 1}, 1), InputError);       // wrong length
        CHECK_THROWS_AS(apolar_pencil({1, 0, 1}, {0, 1, 2}, 1), InputError); // zero weight
        CHECK_THROWS_AS(apolar_pencil({1, 1, 1}, {0, 1, 1}, 1), InputError); // repeated lambda
    }
}
