#include "midcube/exactla.hpp"

#include <cstdint>

namespace midcube {

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    return out;
}

RationalMatrix matmul(const RationalMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    // Column lists of nonzeros in b keep the lift cost proportional to its support.
    std::vector<std::vector<std::size_t>> support(b.rows());
    for (std::size_t l = 0; l < b.rows(); ++l)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (sgn(b(l, j)) != 0) support[l].push_back(j);

    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const BigRational& x = a(i, l);
            if (sgn(x) == 0) continue;
            for (std::size_t j : support[l]) {
                if (b(l, j) == 1)
                    c(i, j) += x;
                else
                    c(i, j) += x * BigRational(b(l, j));
            }
        }
    return c;
}

RrefResult rref(RationalMatrix m) {
    RrefResult out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t pivot_row = 0;
    std::vector<std::size_t> nonzero;
    BigRational factor;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t found = pivot_row;
        while (found < rows && sgn(m(found, col)) == 0) ++found;
        if (found == rows) continue;
        m.swap_rows(pivot_row, found);

        const BigRational inv = 1 / m(pivot_row, col);
        nonzero.clear();
        for (std::size_t c = col; c < cols; ++c) {
            if (sgn(m(pivot_row, c)) == 0) continue;
            m(pivot_row, c) *= inv;
            nonzero.push_back(c);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || sgn(m(r, col)) == 0) continue;
            factor = m(r, col);
            for (std::size_t c : nonzero) m(r, c) -= factor * m(pivot_row, c);
        }
        out.pivot_columns.push_back(col);
        ++pivot_row;
    }
    out.rank = out.pivot_columns.size();
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

std::size_t rank(const IntMatrix& m) { return rref(to_rational(m)).rank; }

RationalMatrix right_kernel_basis(const RationalMatrix& m) {
    const RrefResult reduced = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : reduced.pivot_columns) is_pivot[c] = true;

    RationalMatrix basis(cols - reduced.rank, cols);
    std::size_t out_row = 0;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        basis(out_row, free) = 1;
        for (std::size_t i = 0; i < reduced.rank; ++i) basis(out_row, reduced.pivot_columns[i]) = -reduced.reduced(i, free);
        ++out_row;
    }
    return basis;
}

namespace {

template <typename T>
std::vector<T> matvec_impl(const SparseGraph& g, std::span<const T> v) {
    if (v.size() != g.num_vertices())
        throw std::invalid_argument("sparse_matvec: vector length " + std::to_string(v.size()) + " != " +
                                    std::to_string(g.num_vertices()) + " vertices");
    std::vector<T> out(v.size());
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        T acc = 0;
        for (Vertex w : g.neighbors(u)) acc += v[w];
        out[u] = std::move(acc);
    }
    return out;
}

// Walk vectors A^j e_u stay supported on the ball of radius j around u;
// tracking the support keeps early powers cheap on large graphs.
template <typename Scalar, typename Acc>
void accumulate_traces(const SparseGraph& g, int max_power, std::vector<Acc>& traces) {
    const std::size_t n = g.num_vertices();
    const int half = (max_power + 1) / 2;
    std::vector<std::vector<Scalar>> walks(static_cast<std::size_t>(half) + 1, std::vector<Scalar>(n, Scalar(0)));
    std::vector<Vertex> support;
    std::vector<Vertex> next_support;
    std::vector<std::uint8_t> in_next(n, 0);
    std::vector<std::vector<Vertex>> supports(static_cast<std::size_t>(half) + 1);

    for (Vertex u = 0; u < n; ++u) {
        walks[0][u] = 1;
        supports[0].assign(1, u);
        for (int j = 1; j <= half; ++j) {
            auto& prev = walks[static_cast<std::size_t>(j - 1)];
            auto& cur = walks[static_cast<std::size_t>(j)];
            next_support.clear();
            for (Vertex w : supports[static_cast<std::size_t>(j - 1)])
                for (Vertex x : g.neighbors(w)) {
                    if (!in_next[x]) {
                        in_next[x] = 1;
                        next_support.push_back(x);
                    }
                    cur[x] += prev[w];
                }
            for (Vertex x : next_support) in_next[x] = 0;
            supports[static_cast<std::size_t>(j)] = next_support;
        }
        // trace(A^p) contribution = <A^a e_u, A^b e_u> with a = floor(p/2), b = p - a.
        for (int p = 0; p <= max_power; ++p) {
            const auto a = static_cast<std::size_t>(p / 2);
            const auto b = static_cast<std::size_t>(p - p / 2);
            Acc sum = 0;
            const auto& small = supports[a].size() <= supports[b].size() ? supports[a] : supports[b];
            for (Vertex x : small) sum += Acc(walks[a][x]) * Acc(walks[b][x]);
            traces[static_cast<std::size_t>(p)] += sum;
        }
        for (int j = 0; j <= half; ++j)
            for (Vertex x : supports[static_cast<std::size_t>(j)]) walks[static_cast<std::size_t>(j)][x] = 0;
    }
}

}  // namespace

std::vector<BigInt> sparse_matvec(const SparseGraph& g, std::span<const BigInt> v) { return matvec_impl(g, v); }

std::vector<BigRational> sparse_matvec(const SparseGraph& g, std::span<const BigRational> v) {
    return matvec_impl(g, v);
}

std::vector<BigInt> trace_powers(const SparseGraph& g, int max_power) {
    if (max_power < 0 || max_power > kMaxTraceSeriesPower)
        throw std::out_of_range("trace power must be in [0, " + std::to_string(kMaxTraceSeriesPower) + "]");
    const std::size_t n = g.num_vertices();
    std::vector<BigInt> out(static_cast<std::size_t>(max_power) + 1, 0);
    if (n == 0) return out;

    // Entries of A^j e_u are at most d^j; each trace is at most n * d^p.
    const BigInt d = static_cast<unsigned long>(g.max_degree());
    BigInt entry_bound;
    BigInt trace_bound;
    mpz_pow_ui(entry_bound.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>((max_power + 1) / 2));
    mpz_pow_ui(trace_bound.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(max_power));
    trace_bound *= static_cast<unsigned long>(n);
    const bool machine_fits = mpz_sizeinbase(entry_bound.get_mpz_t(), 2) < 62 &&
                              mpz_sizeinbase(trace_bound.get_mpz_t(), 2) < 126;

    if (machine_fits) {
        std::vector<unsigned __int128> traces(out.size(), 0);
        accumulate_traces<std::int64_t, unsigned __int128>(g, max_power, traces);
        for (std::size_t p = 0; p < out.size(); ++p) {
            const auto hi = static_cast<std::uint64_t>(traces[p] >> 64);
            const auto lo = static_cast<std::uint64_t>(traces[p]);
            BigInt value;
            mpz_import(value.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &hi);
            value <<= 64;
            BigInt low;
            mpz_import(low.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &lo);
            out[p] = value + low;
        }
    } else {
        accumulate_traces<BigInt, BigInt>(g, max_power, out);
    }
    return out;
}

BigInt trace_power(const SparseGraph& g, int p) {
    if (p < 0 || p > kMaxTracePower)
        throw std::out_of_range("trace power must be in [0, " + std::to_string(kMaxTracePower) + "]");
    return trace_powers(g, p)[static_cast<std::size_t>(p)];
}

}  // namespace midcube
