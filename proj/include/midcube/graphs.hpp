#ifndef MIDCUBE_GRAPHS_HPP
#define MIDCUBE_GRAPHS_HPP

#include "midcube/combinatorics.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace midcube {

using Vertex = std::uint32_t;

/// Raised when a generator or dense routine would exceed its size guard.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Undirected simple graph in compressed adjacency form. Neighbor lists are
/// sorted; the graph is immutable once built.
class SparseGraph {
public:
    SparseGraph() = default;

    /// Builds from an edge list; duplicate edges collapse. Throws
    /// std::invalid_argument on self-loops or out-of-range endpoints.
    static SparseGraph from_edges(std::size_t num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);
    /// Takes neighbour lists as given (each list is sorted, nothing else is
    /// checked); validate() reports asymmetry, loops and duplicates.
    static SparseGraph from_adjacency(const std::vector<std::vector<Vertex>>& adjacency);
    /// Compressed form: neighbours of v are neighbors[offsets[v] .. offsets[v+1]).
    static SparseGraph from_csr(std::vector<std::size_t> offsets, std::vector<Vertex> neighbors);

    std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::span<const Vertex> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    bool has_edge(Vertex u, Vertex v) const;
    std::size_t max_degree() const noexcept;

    const std::optional<std::vector<Subset>>& labels() const noexcept { return labels_; }
    /// Side (0 or 1) of each vertex, when the generator knows a two-colouring.
    const std::optional<std::vector<std::uint8_t>>& bipartition() const noexcept { return bipartition_; }

    void set_labels(std::vector<Subset> labels);
    void set_bipartition(std::vector<std::uint8_t> sides);

    /// Sorted edge list with u < v.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    friend bool operator==(const SparseGraph& a, const SparseGraph& b) {
        return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
    }

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> neighbors_;
    std::optional<std::vector<Subset>> labels_;
    std::optional<std::vector<std::uint8_t>> bipartition_;
};

struct GraphCaps {
    int max_hypercube_dim = 24;
    int max_middle_k = 8;
    int max_johnson_n = 20;
    std::uint64_t max_vertices = 5'408'312;
};

/// Hard ceiling on the middle-cube half-size; M_25 has 5,408,312 vertices.
inline constexpr int kMiddleCubeHardCap = 12;

SparseGraph build_hypercube(int n, const GraphCaps& caps = {});

/// Lower layer (k-subsets, colex) first, then the upper layer ((k+1)-subsets, colex).
SparseGraph build_middle_cube(int k, const GraphCaps& caps = {});

/// Vertices are the m-subsets of {1..n} in colex order.
SparseGraph build_johnson(int n, int m, const GraphCaps& caps = {});

/// Induced subgraph of Q_{2k+1} on weights k and k+1, relabelled to the
/// build_middle_cube vertex order.
SparseGraph extract_middle_subgraph(const SparseGraph& hypercube, int k);

struct ValidationReport {
    std::map<std::size_t, std::size_t> degree_histogram;  // degree -> vertex count
    std::size_t components = 0;
    bool bipartite = false;
    bool symmetric = true;
    bool simple = true;  // no loops, no duplicate neighbours
    bool bipartition_respected = true;

    bool connected() const noexcept { return components <= 1; }
    std::optional<std::size_t> regular_degree() const;
};

ValidationReport validate(const SparseGraph& g);

/// BFS two-colouring; empty when the graph has an odd cycle.
std::optional<std::vector<std::uint8_t>> two_coloring(const SparseGraph& g);

}  // namespace midcube

#endif  // MIDCUBE_GRAPHS_HPP
