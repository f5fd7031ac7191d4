#include "midcube/certify.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace midcube;

namespace {

// Coefficients (descending) of the product of (x - v)^m, multiplied out one linear factor at a time.
std::vector<BigInt> expand_factors(const std::vector<std::pair<long, long>>& factors) {
    std::vector<BigInt> p{1};
    for (auto [v, m] : factors)
        for (long t = 0; t < m; ++t) {
            std::vector<BigInt> next(p.size() + 1, 0);
            for (std::size_t i = 0; i < p.size(); ++i) {
                next[i] += p[i];
                next[i + 1] -= v * p[i];
            }
            p = std::move(next);
        }
    return p;
}

mpz_class eval(const std::vector<BigInt>& poly, long x) {
    mpz_class acc = 0;
    for (const BigInt& c : poly) acc = acc * x + c;
    return acc;
}

mpz_class det_shifted(const SparseGraph& g, long x) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (Vertex i = 0; i < n; ++i) {
        m[i][i] = x;
        for (Vertex j : g.neighbors(i)) m[i][j] = -1;
    }
    return oracle::bareiss_det(std::move(m));
}

}  // namespace

TEST_SUITE("certify") {

TEST_CASE("verify_eigenvector examples") {
    const SparseGraph m3 = build_middle_cube(1);
    const std::vector<BigRational> ones(6, 1);
    CHECK(verify_eigenvector(m3, ones, 2));
    CHECK_FALSE(verify_eigenvector(m3, ones, 1));
    CHECK_FALSE(verify_eigenvector(m3, std::vector<BigRational>(6, 0), 0));
    CHECK_FALSE(verify_eigenvector(m3, std::vector<BigRational>(5, 1), 2));

    std::vector<BigRational> alternating(6);
    for (std::size_t i = 0; i < 6; ++i) alternating[i] = i < 3 ? 1 : -1;
    CHECK(verify_eigenvector(m3, alternating, -2));

    const EigenbasisBlock bad{1, 0, 1, lift_block(1, 0).vectors};
    CHECK_FALSE(verify_block(m3, bad));
    CHECK(verify_block(m3, lift_block(1, 0)));
}

TEST_CASE("dense adjacency") {
    const IntMatrix a = dense_adjacency(build_middle_cube(1), 10);
    CHECK(a == a.transpose());
    for (std::size_t i = 0; i < 6; ++i) {
        BigInt row = 0;
        for (std::size_t j = 0; j < 6; ++j) row += a(i, j);
        CHECK(row == 2);
    }
    CHECK_THROWS_AS(dense_adjacency(build_middle_cube(2), 10), CapExceeded);
}

TEST_CASE("M_3 squared has diagonal 2 and K_3 blocks") {
    const IntMatrix a = dense_adjacency(build_middle_cube(1), 6);
    const IntMatrix sq = matmul(a, a);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            const bool same_layer = (i < 3) == (j < 3);
            CHECK(sq(i, j) == (i == j ? 2 : same_layer ? 1 : 0));
        }
}

TEST_CASE("M squared identity for k <= 5") {
    for (int k = 1; k <= 5; ++k) {
        const MSquaredReport r = check_m_squared(k);
        CHECK(r.complement_isomorphism);
        CHECK(r.square_matches);
        CHECK(r.order == 2 * binomial_u64(2 * k + 1, k));
    }
    CHECK(verify_m_squared(2));
    CHECK_THROWS_AS(check_m_squared(6), CapExceeded);
    CHECK_THROWS_AS(check_m_squared(0), std::out_of_range);
}

TEST_CASE("moment certification for k <= 6") {
    for (int k = 1; k <= 6; ++k) {
        const MomentReport r = moment_report(build_middle_cube(k), middle_cube_spectrum(k));
        CHECK(r.passed);
        CHECK(r.order_matches);
        CHECK(r.moments.size() == static_cast<std::size_t>(2 * k + 3));
        for (const auto& m : r.moments) CHECK(m.observed == m.expected);
    }
}

TEST_CASE("moment p = 2 on M_3 is the handshake count") {
    const MomentReport r = moment_report(build_middle_cube(1), middle_cube_spectrum(1));
    REQUIRE(r.moments.size() > 2);
    CHECK(r.moments[2].observed == 12);
    CHECK(r.moments[2].expected == 2 * 1 + 2 * 1 + 1 * 4 + 1 * 4);
}

TEST_CASE("moment certification rejects wrong tables") {
    const SparseGraph m5 = build_middle_cube(2);
    SpectrumTable swapped{BigInt(20)};
    for (long v : {1L, -1L}) swapped.add(v, 4);
    for (long v : {2L, -2L}) swapped.add(v, 5);
    for (long v : {3L, -3L}) swapped.add(v, 1);
    CHECK_FALSE(certify_by_moments(m5, swapped));

    SpectrumTable short_order = middle_cube_spectrum(2);
    short_order.add(0, 1);
    CHECK_FALSE(certify_by_moments(m5, short_order));
    CHECK_FALSE(certify_by_moments(build_middle_cube(3), middle_cube_spectrum(2)));
}

TEST_CASE("johnson spectra pass moment certification for n <= 8, m <= n/2") {
    for (int n = 2; n <= 8; ++n)
        for (int m = 1; 2 * m <= n; ++m) CHECK(certify_by_moments(build_johnson(n, m), johnson_spectrum(n, m)));
}

TEST_CASE("characteristic polynomial examples") {
    const std::vector<BigInt> m3 = characteristic_polynomial_oracle(build_middle_cube(1));
    CHECK(m3 == std::vector<BigInt>{1, 0, -6, 0, 9, 0, -4});
    CHECK(m3 == expand_factors({{1, 2}, {-1, 2}, {2, 1}, {-2, 1}}));

    const SparseGraph k2 = SparseGraph::from_edges(2, {{0, 1}});
    CHECK(characteristic_polynomial_oracle(k2) == std::vector<BigInt>{1, 0, -1});

    const auto m5 = characteristic_polynomial_oracle(build_middle_cube(2));
    CHECK(m5 == expand_factors({{1, 5}, {-1, 5}, {2, 4}, {-2, 4}, {3, 1}, {-3, 1}}));
    CHECK(m5 == polynomial_from_spectrum(middle_cube_spectrum(2)));

    CHECK_THROWS_AS(characteristic_polynomial_oracle(build_hypercube(7)), CapExceeded);
}

TEST_CASE("characteristic polynomial agrees with the spectrum product for k <= 3") {
    for (int k = 1; k <= 3; ++k) {
        const SparseGraph g = build_middle_cube(k);
        const auto poly = characteristic_polynomial_oracle(g);
        CHECK(poly.size() == g.num_vertices() + 1);
        CHECK(poly.front() == 1);
        CHECK(poly == polynomial_from_spectrum(middle_cube_spectrum(k)));
    }
}

TEST_CASE("characteristic polynomial matches fraction-free determinants at integer points") {
    for (const SparseGraph& g : {build_middle_cube(1), build_middle_cube(2), build_johnson(6, 3), build_hypercube(4)}) {
        const auto poly = characteristic_polynomial_oracle(g);
        for (long x = -5; x <= 5; ++x) REQUIRE(eval(poly, x) == det_shifted(g, x));
    }
}

TEST_CASE("incidence matrices M_{r,r-1} have full rank for n <= 11") {
    for (int n = 3; n <= 11; n += 2)
        for (int r = 1; 2 * r <= n - 1; ++r) CHECK(incidence_has_full_rank(n, r));
    for (int n = 2; n <= 10; ++n)
        for (int r = 1; 2 * r <= n - 1; ++r) CHECK(incidence_has_full_rank(n, r));
}

}  // TEST_SUITE
