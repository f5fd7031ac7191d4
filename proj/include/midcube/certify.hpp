#ifndef MIDCUBE_CERTIFY_HPP
#define MIDCUBE_CERTIFY_HPP

#include "midcube/exactla.hpp"
#include "midcube/graphs.hpp"
#include "midcube/spectrum.hpp"

#include <span>
#include <vector>

namespace midcube {

/// True iff v is nonzero and A v = lambda v exactly. A length mismatch is false.
bool verify_eigenvector(const SparseGraph& g, std::span<const BigRational> v, long lambda);

/// Checks every row of block.vectors against its eigenvalue on g.
bool verify_block(const SparseGraph& g, const EigenbasisBlock& block);

/// Dense 0/1 adjacency matrix; refuses graphs with more than max_vertices vertices.
IntMatrix dense_adjacency(const SparseGraph& g, std::size_t max_vertices);

inline constexpr int kMSquaredMaxK = 5;

struct MSquaredReport {
    /// J(n,k) on colex k-sets equals J(n,k+1) on colex (k+1)-sets under A -> S \ A.
    bool complement_isomorphism = false;
    /// M^2 = blockdiag(J(n,k), J(n,k+1)) + (k+1) I, entry for entry.
    bool square_matches = false;
    std::size_t order = 0;

    bool passed() const noexcept { return complement_isomorphism && square_matches; }
};

MSquaredReport check_m_squared(int k);
bool verify_m_squared(int k);

struct MomentCheck {
    int power = 0;
    BigInt observed;  // trace(A^p)
    BigInt expected;  // sum of mult * lambda^p
};

struct MomentReport {
    std::vector<MomentCheck> moments;
    bool order_matches = false;
    bool passed = false;
};

/// Matches trace(A^p) against the table for p = 0..d, d = distinct eigenvalues.
MomentReport moment_report(const SparseGraph& g, const SpectrumTable& table);
bool certify_by_moments(const SparseGraph& g, const SpectrumTable& table);

inline constexpr std::size_t kCharpolyMaxVertices = 80;

/// det(λI - A), coefficients from λ^N down to λ^0, via Newton's identities on
/// exact power sums.
std::vector<BigInt> characteristic_polynomial_oracle(const SparseGraph& g);

/// Π (λ - v)^mult over the table, expanded; same coefficient order.
std::vector<BigInt> polynomial_from_spectrum(const SpectrumTable& table);

/// rank(M_{r,r-1}) == C(n, r-1).
bool incidence_has_full_rank(int n, int r);

}  // namespace midcube

#endif  // MIDCUBE_CERTIFY_HPP
