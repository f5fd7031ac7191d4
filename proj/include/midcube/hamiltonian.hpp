#ifndef MIDCUBE_HAMILTONIAN_HPP
#define MIDCUBE_HAMILTONIAN_HPP

#include "midcube/graphs.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace midcube {

/// Cyclic vertex order; the closing edge back to vertices.front() is implied.
struct CycleCertificate {
    std::vector<Vertex> vertices;
    std::size_t graph_order = 0;

    friend bool operator==(const CycleCertificate&, const CycleCertificate&) = default;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 20'000'000;

struct SearchResult {
    /// Empty means "unknown": the budget ran out or no cycle can exist. It
    /// never asserts that the graph is non-Hamiltonian.
    std::optional<CycleCertificate> cycle;
    std::uint64_t expansions = 0;
    std::string note;
};

/// Depth-first search from vertex 0, trying neighbours with the fewest
/// unvisited neighbours first. A branch is cut when an unvisited vertex is
/// left with fewer than two usable neighbours or the unvisited vertices stop
/// being connected. Deterministic for a given (graph, budget).
SearchResult find_hamiltonian_cycle(const SparseGraph& g, std::uint64_t budget = kDefaultSearchBudget);

/// Linear-time check of the certificate against g.
bool verify_cycle(const SparseGraph& g, const CycleCertificate& c);

/// Rotates to start at the smallest vertex and picks the direction whose
/// second vertex is smaller.
CycleCertificate canonical_cycle(CycleCertificate c);

}  // namespace midcube

#endif  // MIDCUBE_HAMILTONIAN_HPP
