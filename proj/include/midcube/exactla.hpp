#ifndef MIDCUBE_EXACTLA_HPP
#define MIDCUBE_EXACTLA_HPP

#include "midcube/graphs.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace midcube {

using BigInt = mpz_class;
/// GMP keeps mpq values canonical: reduced, positive denominator, zero as 0/1.
using BigRational = mpq_class;

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<BigRational>;
using IntMatrix = Matrix<BigInt>;

RationalMatrix to_rational(const IntMatrix& m);

/// Exact product; skips zero entries of the left factor. Throws
/// std::invalid_argument when inner dimensions differ.
template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const T& x = a(i, l);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const T& y = b(l, j);
                if (sgn(y) != 0) c(i, j) += x * y;
            }
        }
    return c;
}

/// Mixed product for lifting rational weights through 0/1 incidence matrices.
RationalMatrix matmul(const RationalMatrix& a, const IntMatrix& b);

/// Horizontal concatenation [a | b].
template <typename T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row counts differ");
    Matrix<T> out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

struct RrefResult {
    RationalMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination. The pivot of each column is the first nonzero
/// entry at or below the current row; the reduced form is unique anyway.
RrefResult rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Rows form a basis of {x : m x^T = 0}: one row per free column f with
/// x_f = 1, the other free coordinates 0, and pivot coordinates read off rref.
RationalMatrix right_kernel_basis(const RationalMatrix& m);

/// (A v)_u = sum of v over the neighbours of u. Throws std::invalid_argument
/// on a length mismatch.
std::vector<BigInt> sparse_matvec(const SparseGraph& g, std::span<const BigInt> v);
std::vector<BigRational> sparse_matvec(const SparseGraph& g, std::span<const BigRational> v);

inline constexpr int kMaxTracePower = 64;
/// Power-sum series feed the characteristic polynomial, which needs one
/// power per vertex (up to 80).
inline constexpr int kMaxTraceSeriesPower = 128;

/// trace(A^p) for every p in [0, max_power], as sums over start vertices u
/// of <A^a e_u, A^b e_u> with a + b = p. Uses machine integers when the walk
/// counts provably fit, GMP integers otherwise.
std::vector<BigInt> trace_powers(const SparseGraph& g, int max_power);

/// Single trace(A^p), 0 <= p <= kMaxTracePower.
BigInt trace_power(const SparseGraph& g, int p);

}  // namespace midcube

#endif  // MIDCUBE_EXACTLA_HPP
