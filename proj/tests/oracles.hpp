// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.
#ifndef MIDCUBE_TESTS_ORACLES_HPP
#define MIDCUBE_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Elements = std::vector<int>;

/// All i-subsets of {1..n} as sorted element lists, ordered by colex
/// (compare the reversed element lists lexicographically).
inline std::vector<Elements> colex_subsets(int n, int i) {
    std::vector<Elements> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Elements e;
        for (int b = 0; b < n; ++b)
            if ((mask >> b) & 1U) e.push_back(b + 1);
        if (static_cast<int>(e.size()) == i) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const Elements& a, const Elements& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

/// Multiplicative formula, independent of Pascal's rule.
inline mpz_class factorial_binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class num = 1;
    mpz_class den = 1;
    for (long t = 1; t <= k; ++t) {
        num *= n - k + t;
        den *= t;
    }
    return num / den;
}

/// Fraction-free determinant of a square integer matrix.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Leibniz expansion, for tiny matrices only.
inline mpz_class permutation_det(const std::vector<std::vector<mpz_class>>& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    mpz_class det = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        mpz_class term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) term *= a[i][p[i]];
        det += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return det;
}

/// Brute-force isomorphism test on tiny dense adjacency matrices.
inline bool isomorphic(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) return false;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) ok = a[i][j] == b[p[i]][p[j]];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Masks of all size-t subsets of the set bits of mask.
inline std::vector<std::uint64_t> submasks_of_size(std::uint64_t mask, int t) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = mask;; s = (s - 1) & mask) {
        if (__builtin_popcountll(s) == t) out.push_back(s);
        if (s == 0) break;
    }
    return out;
}

}  // namespace oracle

#endif  // MIDCUBE_TESTS_ORACLES_HPP
