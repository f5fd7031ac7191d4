#include "midcube/graphs.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace midcube {

SparseGraph SparseGraph::from_edges(std::size_t num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<std::vector<Vertex>> adj(num_vertices);
    for (auto [u, v] : edges) {
        if (u >= num_vertices || v >= num_vertices) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return from_adjacency(adj);
}

SparseGraph SparseGraph::from_adjacency(const std::vector<std::vector<Vertex>>& adjacency) {
    std::vector<std::size_t> offsets{0};
    std::vector<Vertex> flat;
    offsets.reserve(adjacency.size() + 1);
    for (const auto& list : adjacency) {
        flat.insert(flat.end(), list.begin(), list.end());
        offsets.push_back(flat.size());
    }
    return from_csr(std::move(offsets), std::move(flat));
}

SparseGraph SparseGraph::from_csr(std::vector<std::size_t> offsets, std::vector<Vertex> neighbors) {
    if (offsets.empty() || offsets.front() != 0 || offsets.back() != neighbors.size())
        throw std::invalid_argument("malformed adjacency offsets");
    const std::size_t n = offsets.size() - 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (offsets[v + 1] < offsets[v]) throw std::invalid_argument("malformed adjacency offsets");
        std::sort(neighbors.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
                  neighbors.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
    }
    for (Vertex w : neighbors)
        if (w >= n) throw std::invalid_argument("neighbour index out of range");
    SparseGraph g;
    g.offsets_ = std::move(offsets);
    g.neighbors_ = std::move(neighbors);
    return g;
}

bool SparseGraph::has_edge(Vertex u, Vertex v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t SparseGraph::max_degree() const noexcept {
    std::size_t best = 0;
    for (std::size_t v = 0; v + 1 < offsets_.size(); ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
    return best;
}

void SparseGraph::set_labels(std::vector<Subset> labels) {
    if (labels.size() != num_vertices()) throw std::invalid_argument("label count does not match vertex count");
    labels_ = std::move(labels);
}

void SparseGraph::set_bipartition(std::vector<std::uint8_t> sides) {
    if (sides.size() != num_vertices()) throw std::invalid_argument("bipartition size does not match vertex count");
    bipartition_ = std::move(sides);
}

std::vector<std::pair<Vertex, Vertex>> SparseGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(num_edges());
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

void check_vertex_cap(std::uint64_t count, const GraphCaps& caps, const char* what) {
    if (count > caps.max_vertices || count > std::uint64_t{UINT32_MAX})
        throw CapExceeded(std::string(what) + ": " + std::to_string(count) + " vertices exceeds the cap of " +
                          std::to_string(caps.max_vertices));
}

}  // namespace

SparseGraph build_hypercube(int n, const GraphCaps& caps) {
    if (n < 1 || n > caps.max_hypercube_dim)
        throw std::out_of_range("hypercube dimension must be in [1, " + std::to_string(caps.max_hypercube_dim) + "]");
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::size_t> offsets(count + 1);
    std::vector<Vertex> nb;
    nb.reserve(count * static_cast<std::uint64_t>(n));
    for (std::uint64_t v = 0; v < count; ++v) {
        offsets[v] = nb.size();
        for (int b = 0; b < n; ++b) nb.push_back(static_cast<Vertex>(v ^ (std::uint64_t{1} << b)));
    }
    offsets[count] = nb.size();
    SparseGraph g = SparseGraph::from_csr(std::move(offsets), std::move(nb));
    std::vector<std::uint8_t> sides(count);
    for (std::uint64_t v = 0; v < count; ++v) sides[v] = static_cast<std::uint8_t>(std::popcount(v) & 1);
    g.set_bipartition(std::move(sides));
    return g;
}

SparseGraph build_middle_cube(int k, const GraphCaps& caps) {
    const int cap = std::min(caps.max_middle_k, kMiddleCubeHardCap);
    if (k < 1 || k > cap) throw std::out_of_range("middle cube k must be in [1, " + std::to_string(cap) + "]");
    const int n = 2 * k + 1;
    const SubsetOrdering lower(n, k);
    const SubsetOrdering upper(n, k + 1);
    const std::uint64_t half = lower.size();
    check_vertex_cap(2 * half, caps, "middle cube");

    std::vector<Subset> labels = lower.enumerate();
    {
        auto up = upper.enumerate();
        labels.insert(labels.end(), up.begin(), up.end());
    }
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::size_t> offsets(2 * half + 1);
    std::vector<Vertex> nb;
    nb.reserve(2 * half * static_cast<std::uint64_t>(k + 1));
    for (std::uint64_t v = 0; v < 2 * half; ++v) {
        offsets[v] = nb.size();
        const std::uint64_t bits = labels[v].bits();
        if (v < half) {
            for (std::uint64_t free = full & ~bits; free != 0; free &= free - 1)
                nb.push_back(static_cast<Vertex>(half + upper.rank_bits(bits | (free & (~free + 1)))));
        } else {
            for (std::uint64_t mem = bits; mem != 0; mem &= mem - 1)
                nb.push_back(static_cast<Vertex>(lower.rank_bits(bits & ~(mem & (~mem + 1)))));
        }
    }
    offsets[2 * half] = nb.size();
    SparseGraph g = SparseGraph::from_csr(std::move(offsets), std::move(nb));
    std::vector<std::uint8_t> sides(2 * half, 0);
    std::fill(sides.begin() + static_cast<std::ptrdiff_t>(half), sides.end(), std::uint8_t{1});
    g.set_labels(std::move(labels));
    g.set_bipartition(std::move(sides));
    return g;
}

SparseGraph build_johnson(int n, int m, const GraphCaps& caps) {
    if (n < 1 || n > caps.max_johnson_n || m < 1 || m > n)
        throw std::out_of_range("johnson graph needs 1 <= m <= n <= " + std::to_string(caps.max_johnson_n));
    const SubsetOrdering ord(n, m);
    check_vertex_cap(ord.size(), caps, "johnson graph");
    std::vector<Subset> labels = ord.enumerate();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::size_t> offsets(ord.size() + 1);
    std::vector<Vertex> nb;
    nb.reserve(ord.size() * static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n - m));
    // |u ∩ v| = m-1 means v is u with one member swapped for one non-member.
    for (std::uint64_t v = 0; v < ord.size(); ++v) {
        offsets[v] = nb.size();
        const std::uint64_t bits = labels[v].bits();
        for (std::uint64_t mem = bits; mem != 0; mem &= mem - 1)
            for (std::uint64_t free = full & ~bits; free != 0; free &= free - 1) {
                const std::uint64_t swapped = (bits & ~(mem & (~mem + 1))) | (free & (~free + 1));
                nb.push_back(static_cast<Vertex>(ord.rank_bits(swapped)));
            }
    }
    offsets[ord.size()] = nb.size();
    SparseGraph g = SparseGraph::from_csr(std::move(offsets), std::move(nb));
    g.set_labels(std::move(labels));
    return g;
}

SparseGraph extract_middle_subgraph(const SparseGraph& hypercube, int k) {
    if (k < 1 || k > kMiddleCubeHardCap) throw std::out_of_range("middle cube k out of range");
    const int n = 2 * k + 1;
    if (hypercube.num_vertices() != (std::size_t{1} << n))
        throw std::invalid_argument("hypercube dimension does not match 2k+1 = " + std::to_string(n));
    const SubsetOrdering lower(n, k);
    const SubsetOrdering upper(n, k + 1);
    const std::uint64_t half = lower.size();

    // Map hypercube vertex -> middle-cube index, or -1 when outside the two middle layers.
    auto relabel = [&](std::uint64_t v) -> std::int64_t {
        const int w = std::popcount(v);
        if (w == k) return static_cast<std::int64_t>(lower.rank_bits(v));
        if (w == k + 1) return static_cast<std::int64_t>(half + upper.rank_bits(v));
        return -1;
    };

    std::vector<std::vector<Vertex>> adj(2 * half);
    std::vector<Subset> labels(2 * half);
    for (std::uint64_t v = 0; v < hypercube.num_vertices(); ++v) {
        const std::int64_t idx = relabel(v);
        if (idx < 0) continue;
        labels[static_cast<std::size_t>(idx)] = Subset(v, n);
        for (Vertex w : hypercube.neighbors(static_cast<Vertex>(v))) {
            const std::int64_t widx = relabel(w);
            if (widx >= 0) adj[static_cast<std::size_t>(idx)].push_back(static_cast<Vertex>(widx));
        }
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    SparseGraph g = SparseGraph::from_adjacency(adj);
    std::vector<std::uint8_t> sides(2 * half, 0);
    std::fill(sides.begin() + static_cast<std::ptrdiff_t>(half), sides.end(), std::uint8_t{1});
    g.set_labels(std::move(labels));
    g.set_bipartition(std::move(sides));
    return g;
}

std::optional<std::size_t> ValidationReport::regular_degree() const {
    if (degree_histogram.size() != 1) return std::nullopt;
    return degree_histogram.begin()->first;
}

std::optional<std::vector<std::uint8_t>> two_coloring(const SparseGraph& g) {
    constexpr std::uint8_t kUnset = 2;
    std::vector<std::uint8_t> side(g.num_vertices(), kUnset);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (side[s] != kUnset) continue;
        side[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (side[w] == kUnset) {
                    side[w] = static_cast<std::uint8_t>(1 - side[u]);
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

ValidationReport validate(const SparseGraph& g) {
    ValidationReport report;
    const std::size_t n = g.num_vertices();
    for (Vertex v = 0; v < n; ++v) {
        ++report.degree_histogram[g.degree(v)];
        const auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] == v) report.simple = false;
            if (i > 0 && nb[i] == nb[i - 1]) report.simple = false;
            if (!g.has_edge(nb[i], v)) report.symmetric = false;
        }
    }

    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++report.components;
        seen[s] = true;
        queue.push_back(s);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
        }
    }

    report.bipartite = report.simple && two_coloring(g).has_value();
    if (const auto& sides = g.bipartition()) {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex w : g.neighbors(u))
                if ((*sides)[u] == (*sides)[w]) report.bipartition_respected = false;
    }
    return report;
}

}  // namespace midcube
