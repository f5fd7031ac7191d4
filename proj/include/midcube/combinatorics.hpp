#ifndef MIDCUBE_COMBINATORICS_HPP
#define MIDCUBE_COMBINATORICS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace midcube {

/// Largest ground set a Subset can describe; one machine word per subset.
inline constexpr int kMaxGroundSet = 63;

/// A subset of {1, ..., n} stored as a bit mask (bit j-1 set iff j is a member).
class Subset {
public:
    Subset() = default;
    /// Throws std::invalid_argument if n is outside [0, 63] or bits has a
    /// member above n.
    Subset(std::uint64_t bits, int n);
    /// Builds a subset from 1-based element labels.
    static Subset from_elements(const std::vector<int>& elements, int n);

    std::uint64_t bits() const noexcept { return bits_; }
    int ground_size() const noexcept { return n_; }
    int cardinality() const noexcept;
    bool contains(int element) const noexcept;
    bool is_subset_of(const Subset& other) const noexcept;
    Subset complement() const noexcept;
    Subset with(int element) const;
    Subset without(int element) const;

    /// Sorted 1-based elements.
    std::vector<int> elements() const;
    /// Debug/CSV text form, e.g. "{1,3,4}".
    std::string to_string() const;

    friend bool operator==(const Subset&, const Subset&) = default;

private:
    std::uint64_t bits_ = 0;
    int n_ = 0;
};

/// Colex comparison: compares the largest differing element.
bool colex_less(const Subset& a, const Subset& b) noexcept;

/// Exact C(n, k); zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// C(n, k) as a machine word for n <= 63 (always fits).
std::uint64_t binomial_u64(int n, int k);

/// Colexicographic indexing of the i-subsets of {1, ..., n}.
class SubsetOrdering {
public:
    SubsetOrdering(int n, int i);

    int n() const noexcept { return n_; }
    int i() const noexcept { return i_; }
    std::uint64_t size() const noexcept { return size_; }

    /// Throws std::out_of_range when idx >= size().
    Subset unrank(std::uint64_t idx) const;
    /// Throws std::invalid_argument on a cardinality or ground-set mismatch.
    std::uint64_t rank(const Subset& a) const;
    /// rank() without validation, for hot loops over known-good masks.
    std::uint64_t rank_bits(std::uint64_t bits) const noexcept;
    std::vector<Subset> enumerate() const;

private:
    int n_;
    int i_;
    std::uint64_t size_;
};

}  // namespace midcube

#endif  // MIDCUBE_COMBINATORICS_HPP
