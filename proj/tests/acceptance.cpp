// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.
#include "midcube/certify.hpp"
#include "midcube/hamiltonian.hpp"
#include "midcube/spectrum.hpp"
#include "midspec_cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace midcube;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Reference table: rows n = 3, 5, 7, 9; columns eigenvalue -5..-1, 1..5; 0 marks a blank cell.
constexpr long kTable[4][10] = {
    {0, 0, 0, 1, 2, 2, 1, 0, 0, 0},
    {0, 0, 1, 4, 5, 5, 4, 1, 0, 0},
    {0, 1, 6, 14, 14, 14, 14, 6, 1, 0},
    {1, 8, 27, 48, 42, 42, 48, 27, 8, 1},
};

Outcome table_reproduction() {
    std::ostringstream out, err;
    const int code = midspec::run({"--format", "csv", "table", "--kmax", "4"}, out, err);
    if (code != 0) return {false, "exit " + std::to_string(code)};
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);  // header
    int populated = 0, blanks = 0, row = 0;
    for (; std::getline(lines, line); ++row) {
        if (row >= 4) return {false, "extra row"};
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.emplace_back();
        if (cells.size() != 11 || cells[0] != std::to_string(2 * row + 3)) return {false, "bad row " + line};
        for (int c = 0; c < 10; ++c) {
            const long want = kTable[row][c];
            const std::string expect = want == 0 ? "" : std::to_string(want);
            if (cells[static_cast<std::size_t>(c) + 1] != expect) return {false, "cell mismatch in row " + cells[0]};
            ++(want == 0 ? blanks : populated);
        }
    }
    if (row != 4) return {false, "expected 4 rows"};
    return {true, std::to_string(populated) + " populated and " + std::to_string(blanks) + " blank cells exact"};
}

Outcome eigenbasis_certification() {
    std::string counts;
    for (int k = 1; k <= 5; ++k) {
        const int n = 2 * k + 1;
        const SparseGraph g = build_middle_cube(k);
        std::size_t total = 0;
        for (int r = 0; r <= k; ++r) {
            const EigenbasisBlock block = lift_block(k, r);
            if (binomial(n, r) - binomial(n, r - 1) != static_cast<unsigned long>(block.vectors.rows()))
                return {false, "dimension at k=" + std::to_string(k) + " r=" + std::to_string(r)};
            if (block.eigenvalue != k + 1 - r || !verify_block(g, block) || !verify_block(g, sign_flip(block)))
                return {false, "eigen equation at k=" + std::to_string(k) + " r=" + std::to_string(r)};
            total += 2 * block.vectors.rows();
        }
        if (total != g.num_vertices()) return {false, "total at k=" + std::to_string(k)};
        counts += (counts.empty() ? "" : ", ") + std::to_string(total);
    }
    return {true, "certified vectors per k: " + counts};
}

Outcome m_squared() {
    for (int k = 1; k <= 4; ++k)
        if (!verify_m_squared(k)) return {false, "k=" + std::to_string(k)};
    return {true, "k = 1..4"};
}

Outcome moments() {
    for (int k = 1; k <= 6; ++k) {
        const MomentReport r = moment_report(build_middle_cube(k), middle_cube_spectrum(k));
        if (!r.passed || r.moments.size() != static_cast<std::size_t>(2 * k + 3)) return {false, "k=" + std::to_string(k)};
    }
    return {true, "k = 1..6, p = 0..2k+2"};
}

Outcome charpoly() {
    for (int k = 1; k <= 3; ++k) {
        const int n = 2 * k + 1;
        // Expand the product of (x - i)^m_i (x + i)^m_i directly.
        std::vector<BigInt> p{1};
        for (int i = 1; i <= k + 1; ++i) {
            const BigInt m = binomial(n, k + 1 - i) - binomial(n, k - i);
            for (long root : {static_cast<long>(i), -static_cast<long>(i)})
                for (unsigned long t = 0; t < m.get_ui(); ++t) {
                    std::vector<BigInt> next(p.size() + 1, 0);
                    for (std::size_t j = 0; j < p.size(); ++j) {
                        next[j] += p[j];
                        next[j + 1] -= root * p[j];
                    }
                    p = std::move(next);
                }
        }
        if (characteristic_polynomial_oracle(build_middle_cube(k)) != p) return {false, "k=" + std::to_string(k)};
    }
    return {true, "k = 1..3"};
}

Outcome incidence_rank() {
    int count = 0;
    for (int n = 3; n <= 11; n += 2)
        for (int r = 1; 2 * r <= n - 1; ++r, ++count)
            if (!incidence_has_full_rank(n, r)) return {false, "n=" + std::to_string(n) + " r=" + std::to_string(r)};
    return {true, std::to_string(count) + " matrices"};
}

Outcome johnson() {
    int count = 0;
    for (int n = 2; n <= 8; ++n)
        for (int m = 1; 2 * m <= n; ++m, ++count)
            if (!certify_by_moments(build_johnson(n, m), johnson_spectrum(n, m)))
                return {false, "J(" + std::to_string(n) + "," + std::to_string(m) + ")"};
    SpectrumTable t52{BigInt(10)};
    t52.add(6, 1);
    t52.add(1, 4);
    t52.add(-2, 5);
    if (!(johnson_spectrum(5, 2) == t52)) return {false, "J(5,2) table"};
    return {true, std::to_string(count) + " graphs certified, J(5,2) = {6:1, 1:4, -2:5}"};
}

Outcome oeis_prefix() {
    const auto seq = multiplicity_sequence(3);
    const std::vector<long> want = {1, 2, 1, 4, 5, 1, 6, 14, 14};
    if (seq.size() != want.size()) return {false, "length"};
    for (std::size_t i = 0; i < want.size(); ++i)
        if (seq[i] != want[i]) return {false, "entry " + std::to_string(i)};
    return {true, "1, 2, 1, 4, 5, 1, 6, 14, 14"};
}

Outcome hamiltonian() {
    std::string detail;
    for (int k = 1; k <= 3; ++k) {
        const auto start = std::chrono::steady_clock::now();
        const SparseGraph g = build_middle_cube(k);
        const SearchResult r = find_hamiltonian_cycle(g);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!r.cycle || !verify_cycle(g, *r.cycle)) return {false, "k=" + std::to_string(k) + ": " + r.note};
        if (k == 3 && secs >= 60) return {false, "k=3 took " + std::to_string(secs) + " s"};
        detail += "k=" + std::to_string(k) + " (" + std::to_string(r.expansions) + " expansions) ";
    }
    return {true, detail + "verified"};
}

Outcome extension_identities() {
    std::mt19937_64 rng(20240611);
    long trials = 0;
    for (int n = 3; n <= 7; ++n) {
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (int r = 1; r <= 3 && 2 * r <= n - 1; ++r) {
            const RationalMatrix basis = constraint_kernel(n, r);
            const SubsetOrdering small(n, r - 1);
            for (std::size_t row = 0; row < basis.rows(); ++row) {
                const SubsetWeight f(n, r, basis.row(row));
                auto F = [&](std::uint64_t bits) { return f(Subset(bits, n)); };
                // Sum of f(R + {i}) over (r-1)-subsets R of `inside`.
                auto sum_over = [&](std::uint64_t inside, std::uint64_t i) {
                    BigRational s = 0;
                    for (const Subset& R : small.enumerate())
                        if ((R.bits() & ~inside) == 0) s += F(R.bits() | i);
                    return s;
                };
                for (int t = 0; t < 25; ++t, ++trials) {
                    const std::uint64_t a = std::uniform_int_distribution<std::uint64_t>(0, full)(rng);
                    const BigRational fa = F(a);
                    BigRational outside = 0, inside = 0;
                    for (int e = 0; e < n; ++e) {
                        const std::uint64_t i = std::uint64_t{1} << e;
                        if (a & i) {
                            inside += sum_over(a & ~i, i);
                        } else {
                            const BigRational s = sum_over(a, i);
                            if (F(a | i) != fa + s) return {false, "add-element identity at n=" + std::to_string(n)};
                            outside += s;
                        }
                    }
                    if (outside != -r * fa) return {false, "outside-sum identity at n=" + std::to_string(n)};
                    if (inside != r * fa) return {false, "inside-sum identity at n=" + std::to_string(n)};
                }
            }
        }
    }
    if (trials < 1000) return {false, "only " + std::to_string(trials) + " trials"};
    return {true, std::to_string(trials) + " randomized trials, zero failures"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"table --kmax 4 reproduces the multiplicity table", table_reproduction},
        {"constructive eigenbasis for k = 1..5", eigenbasis_certification},
        {"M^2 identity for k = 1..4", m_squared},
        {"moment certification for k = 1..6", moments},
        {"characteristic polynomial equals the spectrum product for k = 1..3", charpoly},
        {"incidence rank M_{r,r-1} is full for odd n <= 11", incidence_rank},
        {"johnson spectra certified for n <= 8", johnson},
        {"multiplicity sequence prefix", oeis_prefix},
        {"hamiltonian cycles for k = 1..3", hamiltonian},
        {"subset-sum extension identities", extension_identities},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.ok) ++failures;
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ' ' << criteria[i].first << " -- " << o.detail << " ("
                  << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s)\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
