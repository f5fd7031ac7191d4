#include "midcube/spectrum.hpp"

#include "midcube/graphs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace midcube {

void SpectrumTable::add(long value, const BigInt& multiplicity) {
    auto [it, inserted] = entries_.try_emplace(value, multiplicity);
    if (!inserted) it->second += multiplicity;
}

BigInt SpectrumTable::multiplicity(long value) const {
    const auto it = entries_.find(value);
    return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt SpectrumTable::total_multiplicity() const {
    BigInt sum = 0;
    for (const auto& [value, mult] : entries_) sum += mult;
    return sum;
}

bool SpectrumTable::is_symmetric() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [this](const auto& e) { return multiplicity(-e.first) == e.second; });
}

SpectrumTable middle_cube_spectrum(int k) {
    if (k < 1) throw std::out_of_range("middle cube spectrum needs k >= 1");
    const long n = 2L * k + 1;
    SpectrumTable table(2 * binomial(n, k));
    for (long i = 1; i <= k + 1; ++i) {
        const BigInt mult = binomial(n, k + 1 - i) - binomial(n, k - i);
        table.add(-i, mult);
        table.add(i, mult);
    }
    return table;
}

SpectrumTable johnson_spectrum(int n, int m) {
    if (m < 1 || m > n) throw std::out_of_range("johnson spectrum needs 1 <= m <= n");
    // The formula is symmetric in m <-> n-m; past n/2 the multiplicities would go negative.
    const long depth = std::min(m, n - m);
    SpectrumTable table(binomial(n, m));
    for (long i = 0; i <= depth; ++i) {
        const long value = (m - i) * (n - m - i) - i;
        table.add(value, binomial(n, i) - binomial(n, i - 1));
    }
    return table;
}

std::vector<BigInt> multiplicity_sequence(int k_max) {
    if (k_max < 1) throw std::out_of_range("multiplicity sequence needs k_max >= 1");
    std::vector<BigInt> out;
    for (long k = 1; k <= k_max; ++k) {
        const long n = 2 * k + 1;
        for (long i = k + 1; i >= 1; --i) out.push_back(binomial(n, k + 1 - i) - binomial(n, k - i));
    }
    return out;
}

namespace {

void check_dense_size(std::uint64_t rows, std::uint64_t cols, const char* what) {
    if (rows != 0 && cols > kMaxDenseEntries / rows)
        throw CapExceeded(std::string(what) + ": " + std::to_string(rows) + "x" + std::to_string(cols) +
                          " exceeds the dense size cap");
}

}  // namespace

IntMatrix containment_matrix(int n, int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("containment_matrix needs lo <= hi");
    const SubsetOrdering rows(n, lo);
    const SubsetOrdering cols(n, hi);
    check_dense_size(rows.size(), cols.size(), "containment matrix");
    IntMatrix m(rows.size(), cols.size());
    const auto small = rows.enumerate();
    const auto big = cols.enumerate();
    for (std::size_t r = 0; r < small.size(); ++r)
        for (std::size_t s = 0; s < big.size(); ++s)
            if (small[r].is_subset_of(big[s])) m(r, s) = 1;
    return m;
}

IntMatrix incidence_matrix(const IncidenceSpec& spec) {
    if (spec.n < 0 || spec.n > kMaxGroundSet) throw std::out_of_range("incidence matrix: n out of range");
    if (spec.i == spec.j) throw std::invalid_argument("incidence matrix needs i != j");
    if (spec.i < 0 || spec.j < 0 || spec.i > spec.n || spec.j > spec.n)
        throw std::out_of_range("incidence matrix: subset sizes must lie in [0, n]");
    if (spec.i < spec.j) return containment_matrix(spec.n, spec.i, spec.j);
    return containment_matrix(spec.n, spec.j, spec.i).transpose();
}

RationalMatrix constraint_kernel(int n, int r) {
    if (n < 1 || n > kMaxGroundSet || r < 0 || 2 * r > n - 1)
        throw std::out_of_range("constraint kernel needs 0 <= r <= (n-1)/2, got n=" + std::to_string(n) +
                                " r=" + std::to_string(r));
    if (r == 0) return RationalMatrix::identity(1);
    // x M_{r,r-1} = 0  <=>  M_{r,r-1}^T x^T = 0.
    const IntMatrix constraints = incidence_matrix({n, r, r - 1});
    return right_kernel_basis(to_rational(constraints).transpose());
}

SubsetWeight::SubsetWeight(int n, int r, std::span<const BigRational> coords)
    : ordering_(n, r), coords_(coords.begin(), coords.end()) {
    if (coords_.size() != ordering_.size())
        throw std::invalid_argument("subset weight needs one coordinate per r-subset");
}

BigRational SubsetWeight::operator()(const Subset& a) const {
    if (a.ground_size() != n()) throw std::invalid_argument("subset weight: ground set mismatch");
    BigRational sum = 0;
    const int size = a.cardinality();
    if (size < r()) return sum;
    // Walk the r-subsets of A by choosing positions inside A's element list.
    const std::vector<int> members = a.elements();
    const SubsetOrdering positions(size, r());
    for (const Subset& pick : positions.enumerate()) {
        std::uint64_t bits = 0;
        for (int p : pick.elements()) bits |= std::uint64_t{1} << (members[static_cast<std::size_t>(p - 1)] - 1);
        sum += coords_[ordering_.rank_bits(bits)];
    }
    return sum;
}

EigenbasisBlock lift_block(int k, int r) {
    if (k < 1 || k > kMiddleCubeHardCap || r < 0 || r > k)
        throw std::out_of_range("lift_block needs 0 <= r <= k, k >= 1");
    const int n = 2 * k + 1;
    const RationalMatrix kernel = constraint_kernel(n, r);
    const IntMatrix lift = hconcat(containment_matrix(n, r, k), containment_matrix(n, r, k + 1));
    return {k, r, static_cast<long>(k + 1 - r), matmul(kernel, lift)};
}

EigenbasisBlock sign_flip(const EigenbasisBlock& block) {
    EigenbasisBlock out = block;
    out.eigenvalue = -block.eigenvalue;
    const std::size_t half = binomial_u64(2 * block.k + 1, block.k);
    if (out.vectors.cols() != 2 * half) throw std::invalid_argument("sign_flip: vector length does not match k");
    for (std::size_t row = 0; row < out.vectors.rows(); ++row)
        for (std::size_t c = half; c < out.vectors.cols(); ++c) out.vectors(row, c) = -out.vectors(row, c);
    return out;
}

std::vector<EigenbasisBlock> full_eigenbasis(int k, int max_k) {
    if (k < 1) throw std::out_of_range("full_eigenbasis needs k >= 1");
    if (k > max_k) throw CapExceeded("full_eigenbasis: k=" + std::to_string(k) + " exceeds cap " + std::to_string(max_k));
    std::vector<EigenbasisBlock> blocks;
    blocks.reserve(2 * static_cast<std::size_t>(k + 1));
    for (int r = 0; r <= k; ++r) {
        EigenbasisBlock block = lift_block(k, r);
        EigenbasisBlock flipped = sign_flip(block);
        blocks.push_back(std::move(block));
        blocks.push_back(std::move(flipped));
    }
    return blocks;
}

}  // namespace midcube
