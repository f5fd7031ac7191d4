#include "midcube/combinatorics.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace midcube {

namespace {

using PascalTable = std::array<std::array<std::uint64_t, kMaxGroundSet + 1>, kMaxGroundSet + 1>;

const PascalTable& pascal() {
    static const PascalTable table = [] {
        PascalTable t{};
        for (int n = 0; n <= kMaxGroundSet; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
        }
        return t;
    }();
    return table;
}

std::uint64_t mask_below(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_element(int element, int n) {
    if (element < 1 || element > n)
        throw std::invalid_argument("element " + std::to_string(element) + " outside {1.." +
                                    std::to_string(n) + "}");
}

}  // namespace

Subset::Subset(std::uint64_t bits, int n) : bits_(bits), n_(n) {
    if (n < 0 || n > kMaxGroundSet) throw std::invalid_argument("ground set size must be in [0, 63]");
    if ((bits & ~mask_below(n)) != 0) throw std::invalid_argument("subset has a member above n");
}

Subset Subset::from_elements(const std::vector<int>& elements, int n) {
    std::uint64_t bits = 0;
    for (int e : elements) {
        check_element(e, n);
        bits |= std::uint64_t{1} << (e - 1);
    }
    return Subset(bits, n);
}

int Subset::cardinality() const noexcept { return std::popcount(bits_); }

bool Subset::contains(int element) const noexcept {
    return element >= 1 && element <= n_ && ((bits_ >> (element - 1)) & 1U) != 0;
}

bool Subset::is_subset_of(const Subset& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
}

Subset Subset::complement() const noexcept {
    Subset c;
    c.bits_ = ~bits_ & mask_below(n_);
    c.n_ = n_;
    return c;
}

Subset Subset::with(int element) const {
    check_element(element, n_);
    return Subset(bits_ | (std::uint64_t{1} << (element - 1)), n_);
}

Subset Subset::without(int element) const {
    check_element(element, n_);
    return Subset(bits_ & ~(std::uint64_t{1} << (element - 1)), n_);
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string Subset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) s += ',';
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

bool colex_less(const Subset& a, const Subset& b) noexcept {
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(diff));
    return (b.bits() & top) != 0;
}

mpz_class binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::uint64_t binomial_u64(int n, int k) {
    if (n < 0 || n > kMaxGroundSet) throw std::invalid_argument("binomial_u64: n must be in [0, 63]");
    if (k < 0 || k > n) return 0;
    return pascal()[n][k];
}

SubsetOrdering::SubsetOrdering(int n, int i) : n_(n), i_(i) {
    if (n < 0 || n > kMaxGroundSet) throw std::invalid_argument("ordering: n must be in [0, 63]");
    if (i < 0 || i > n) throw std::invalid_argument("ordering: cardinality must be in [0, n]");
    size_ = binomial_u64(n, i);
}

Subset SubsetOrdering::unrank(std::uint64_t idx) const {
    if (idx >= size_) throw std::out_of_range("unrank: index " + std::to_string(idx) + " out of range");
    // Greedy colex decoding: the t-th largest element a is the largest with C(a-1, t) <= idx.
    std::uint64_t bits = 0;
    int upper = n_;
    for (int t = i_; t >= 1; --t) {
        int a = upper;
        while (binomial_u64(a - 1, t) > idx) --a;
        idx -= binomial_u64(a - 1, t);
        bits |= std::uint64_t{1} << (a - 1);
        upper = a - 1;
    }
    return Subset(bits, n_);
}

std::uint64_t SubsetOrdering::rank_bits(std::uint64_t bits) const noexcept {
    std::uint64_t r = 0;
    int t = 1;
    for (std::uint64_t b = bits; b != 0; b &= b - 1, ++t) r += pascal()[std::countr_zero(b)][t];
    return r;
}

std::uint64_t SubsetOrdering::rank(const Subset& a) const {
    if (a.ground_size() != n_) throw std::invalid_argument("rank: ground set mismatch");
    if (a.cardinality() != i_)
        throw std::invalid_argument("rank: expected a " + std::to_string(i_) + "-subset, got " + a.to_string());
    return rank_bits(a.bits());
}

std::vector<Subset> SubsetOrdering::enumerate() const {
    std::vector<Subset> out;
    out.reserve(size_);
    if (i_ == 0) {
        out.emplace_back(0, n_);
        return out;
    }
    // Gosper's hack walks masks of fixed popcount in increasing numeric order, which is colex.
    std::uint64_t v = mask_below(i_);
    for (std::uint64_t idx = 0; idx < size_; ++idx) {
        out.emplace_back(v, n_);
        const std::uint64_t c = v & (~v + 1);
        const std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
    return out;
}

}  // namespace midcube
