#include "midcube/certify.hpp"

#include <stdexcept>
#include <string>

namespace midcube {

bool verify_eigenvector(const SparseGraph& g, std::span<const BigRational> v, long lambda) {
    if (v.size() != g.num_vertices()) return false;
    bool nonzero = false;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        if (sgn(v[u]) != 0) nonzero = true;
        BigRational acc = 0;
        for (Vertex w : g.neighbors(u)) acc += v[w];
        if (acc != lambda * v[u]) return false;
    }
    return nonzero;
}

bool verify_block(const SparseGraph& g, const EigenbasisBlock& block) {
    for (std::size_t r = 0; r < block.vectors.rows(); ++r)
        if (!verify_eigenvector(g, block.vectors.row(r), block.eigenvalue)) return false;
    return true;
}

IntMatrix dense_adjacency(const SparseGraph& g, std::size_t max_vertices) {
    if (g.num_vertices() > max_vertices)
        throw CapExceeded("dense adjacency: " + std::to_string(g.num_vertices()) + " vertices exceeds cap " +
                          std::to_string(max_vertices));
    IntMatrix a(g.num_vertices(), g.num_vertices());
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        for (Vertex w : g.neighbors(u)) a(u, w) = 1;
    return a;
}

MSquaredReport check_m_squared(int k) {
    if (k < 1) throw std::out_of_range("M^2 check needs k >= 1");
    if (k > kMSquaredMaxK)
        throw CapExceeded("M^2 check needs 1 <= k <= " + std::to_string(kMSquaredMaxK));
    const int n = 2 * k + 1;
    GraphCaps caps;
    caps.max_middle_k = k;
    const SparseGraph middle = build_middle_cube(k, caps);
    const SparseGraph lower_johnson = build_johnson(n, k, caps);
    const SparseGraph upper_johnson = build_johnson(n, k + 1, caps);
    const SubsetOrdering lower(n, k);
    const SubsetOrdering upper(n, k + 1);
    const std::size_t half = lower.size();

    MSquaredReport report;
    report.order = middle.num_vertices();

    const auto lower_sets = lower.enumerate();
    report.complement_isomorphism = true;
    for (std::size_t a = 0; a < half && report.complement_isomorphism; ++a) {
        const std::size_t ca = upper.rank(lower_sets[a].complement());
        for (std::size_t b = 0; b < half; ++b) {
            const std::size_t cb = upper.rank(lower_sets[b].complement());
            if (lower_johnson.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)) !=
                upper_johnson.has_edge(static_cast<Vertex>(ca), static_cast<Vertex>(cb))) {
                report.complement_isomorphism = false;
                break;
            }
        }
    }

    const IntMatrix a = dense_adjacency(middle, middle.num_vertices());
    const IntMatrix square = matmul(a, a);
    IntMatrix expected(2 * half, 2 * half);
    for (std::size_t i = 0; i < 2 * half; ++i) expected(i, i) = k + 1;
    for (std::size_t i = 0; i < half; ++i) {
        for (Vertex w : lower_johnson.neighbors(static_cast<Vertex>(i))) expected(i, w) += 1;
        for (Vertex w : upper_johnson.neighbors(static_cast<Vertex>(i))) expected(half + i, half + w) += 1;
    }
    report.square_matches = square == expected;
    return report;
}

bool verify_m_squared(int k) { return check_m_squared(k).passed(); }

MomentReport moment_report(const SparseGraph& g, const SpectrumTable& table) {
    MomentReport report;
    const int d = static_cast<int>(table.distinct_count());
    report.order_matches = table.total_multiplicity() == table.order() &&
                           table.order() == static_cast<unsigned long>(g.num_vertices());
    const std::vector<BigInt> traces = trace_powers(g, d);
    bool all = true;
    for (int p = 0; p <= d; ++p) {
        BigInt expected = 0;
        for (const auto& [value, mult] : table.entries()) {
            BigInt power;
            const BigInt base = value;
            mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(p));
            expected += mult * power;
        }
        all = all && traces[static_cast<std::size_t>(p)] == expected;
        report.moments.push_back({p, traces[static_cast<std::size_t>(p)], expected});
    }
    report.passed = all && report.order_matches;
    return report;
}

bool certify_by_moments(const SparseGraph& g, const SpectrumTable& table) { return moment_report(g, table).passed; }

std::vector<BigInt> characteristic_polynomial_oracle(const SparseGraph& g) {
    const std::size_t n = g.num_vertices();
    if (n > kCharpolyMaxVertices)
        throw CapExceeded("characteristic polynomial oracle: " + std::to_string(n) + " vertices exceeds cap " +
                          std::to_string(kCharpolyMaxVertices));
    const std::vector<BigInt> power_sums = trace_powers(g, static_cast<int>(n));
    // Newton: j e_j = sum_{i=1..j} (-1)^{i-1} e_{j-i} p_i; coefficient of λ^{N-j} is (-1)^j e_j.
    std::vector<BigInt> e(n + 1, 0);
    e[0] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        BigInt acc = 0;
        for (std::size_t i = 1; i <= j; ++i) {
            if (i % 2 == 1)
                acc += e[j - i] * power_sums[i];
            else
                acc -= e[j - i] * power_sums[i];
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(j)))
            throw std::logic_error("Newton identity produced a non-integral coefficient");
        mpz_divexact_ui(e[j].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(j));
    }
    std::vector<BigInt> coeffs(n + 1);
    for (std::size_t j = 0; j <= n; ++j) coeffs[j] = (j % 2 == 0) ? e[j] : BigInt(-e[j]);
    return coeffs;
}

std::vector<BigInt> polynomial_from_spectrum(const SpectrumTable& table) {
    std::vector<BigInt> poly{1};
    for (const auto& [value, mult] : table.entries()) {
        if (!mult.fits_ulong_p()) throw CapExceeded("polynomial_from_spectrum: multiplicity too large to expand");
        for (unsigned long t = 0; t < mult.get_ui(); ++t) {
            // poly *= (λ - value), descending coefficients.
            poly.push_back(0);
            for (std::size_t i = poly.size() - 1; i > 0; --i) poly[i] -= value * poly[i - 1];
        }
    }
    return poly;
}

bool incidence_has_full_rank(int n, int r) {
    if (r < 1 || r > n) throw std::out_of_range("incidence rank check needs 1 <= r <= n");
    return binomial(n, r - 1) == static_cast<unsigned long>(rank(incidence_matrix({n, r, r - 1})));
}

}  // namespace midcube
