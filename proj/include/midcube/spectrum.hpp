#ifndef MIDCUBE_SPECTRUM_HPP
#define MIDCUBE_SPECTRUM_HPP

#include "midcube/combinatorics.hpp"
#include "midcube/exactla.hpp"

#include <map>
#include <span>
#include <vector>

namespace midcube {

/// Integer eigenvalues with exact multiplicities.
class SpectrumTable {
public:
    SpectrumTable() = default;
    explicit SpectrumTable(BigInt order) : order_(std::move(order)) {}

    /// Adds to the multiplicity of value; coinciding values merge.
    void add(long value, const BigInt& multiplicity);

    const std::map<long, BigInt>& entries() const noexcept { return entries_; }
    const BigInt& order() const noexcept { return order_; }
    BigInt multiplicity(long value) const;
    std::size_t distinct_count() const noexcept { return entries_.size(); }
    BigInt total_multiplicity() const;
    bool is_symmetric() const;

    friend bool operator==(const SpectrumTable&, const SpectrumTable&) = default;

private:
    std::map<long, BigInt> entries_;
    BigInt order_ = 0;
};

/// ±i for i = 1..k+1, each with multiplicity C(n, k+1-i) - C(n, k-i), n = 2k+1.
SpectrumTable middle_cube_spectrum(int k);

/// (m-i)(n-m-i) - i with multiplicity C(n, i) - C(n, i-1), i = 0..min(m, n-m).
SpectrumTable johnson_spectrum(int n, int m);

/// Multiplicities of eigenvalues k+1, k, ..., 1 for k = 1..k_max, concatenated.
std::vector<BigInt> multiplicity_sequence(int k_max);

struct IncidenceSpec {
    int n = 0;
    int i = 0;
    int j = 0;
};

/// Entries above this count are refused by the dense incidence builders.
inline constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 22;

/// C(n,i) x C(n,j) 0/1 matrix; entry (r,s) is 1 when one subset contains the
/// other. Rows and columns follow colex order. Requires i != j.
IntMatrix incidence_matrix(const IncidenceSpec& spec);

/// Containment matrix for lo <= hi: entry (r,s) is 1 iff A_r (lo-set) ⊆ A_s (hi-set).
/// With lo == hi this is the identity.
IntMatrix containment_matrix(int n, int lo, int hi);

/// Basis (rows) of the weights x on r-subsets with, for every (r-1)-subset R,
/// sum over i outside R of x[R + {i}] = 0. For r = 0 there are no
/// constraints and the basis is the single row (1).
RationalMatrix constraint_kernel(int n, int r);

/// Weight on r-subsets extended to any A ⊆ S by summing over the r-subsets of A.
class SubsetWeight {
public:
    SubsetWeight(int n, int r, std::span<const BigRational> coords);

    int n() const noexcept { return ordering_.n(); }
    int r() const noexcept { return ordering_.i(); }
    BigRational operator()(const Subset& a) const;

private:
    SubsetOrdering ordering_;
    std::vector<BigRational> coords_;
};

struct EigenbasisBlock {
    int k = 0;
    int r = 0;
    long eigenvalue = 0;
    /// Rows are eigenvectors of length 2 C(2k+1, k), lower layer first.
    RationalMatrix vectors;
};

/// Upper bound on k for the dense eigenbasis pipeline.
inline constexpr int kDefaultEigenbasisMaxK = 5;

/// constraint_kernel(2k+1, r) times [M_{r,k} | M_{r,k+1}], eigenvalue k+1-r.
EigenbasisBlock lift_block(int k, int r);

/// Negates the upper-layer coordinates, mapping eigenvalue λ to -λ.
EigenbasisBlock sign_flip(const EigenbasisBlock& block);

/// lift_block(k, r) followed by its sign flip, for r = 0..k.
std::vector<EigenbasisBlock> full_eigenbasis(int k, int max_k = kDefaultEigenbasisMaxK);

}  // namespace midcube

#endif  // MIDCUBE_SPECTRUM_HPP
