#include "midcube/hamiltonian.hpp"

#include <algorithm>

namespace midcube {

namespace {

class Search {
public:
    Search(const SparseGraph& g, std::uint64_t budget)
        : g_(g), budget_(budget), n_(g.num_vertices()), visited_(n_, 0), interior_(n_, 0), usable_(n_, 0),
          unvisited_degree_(n_, 0), queue_(n_), mark_(n_, 0) {
        for (Vertex v = 0; v < n_; ++v) {
            usable_[v] = static_cast<int>(g.degree(v));
            unvisited_degree_[v] = static_cast<int>(g.degree(v));
        }
    }

    SearchResult run() {
        SearchResult result;
        constexpr Vertex start = 0;
        visit(start);
        frames_.push_back(make_frame(start));
        while (!frames_.empty()) {
            if (path_.size() == n_ && g_.has_edge(path_.back(), start)) {
                result.cycle = CycleCertificate{path_, n_};
                break;
            }
            Frame& top = frames_.back();
            if (top.next == top.candidates.size()) {
                retreat();
                continue;
            }
            if (expansions_ == budget_) {
                result.note = "budget exhausted";
                break;
            }
            ++expansions_;
            const Vertex v = top.candidates[top.next++];
            advance(v);
            if (feasible()) {
                frames_.push_back(make_frame(v));
            } else {
                undo_advance();
            }
        }
        if (!result.cycle && result.note.empty()) result.note = "search space exhausted without a cycle";
        result.expansions = expansions_;
        return result;
    }

private:
    struct Frame {
        std::vector<Vertex> candidates;
        std::size_t next = 0;
    };

    Frame make_frame(Vertex v) const {
        Frame f;
        for (Vertex w : g_.neighbors(v))
            if (!visited_[w]) f.candidates.push_back(w);
        std::stable_sort(f.candidates.begin(), f.candidates.end(), [this](Vertex a, Vertex b) {
            return unvisited_degree_[a] < unvisited_degree_[b];
        });
        return f;
    }

    void visit(Vertex v) {
        visited_[v] = 1;
        path_.push_back(v);
        for (Vertex w : g_.neighbors(v)) --unvisited_degree_[w];
    }

    void unvisit() {
        const Vertex v = path_.back();
        path_.pop_back();
        visited_[v] = 0;
        for (Vertex w : g_.neighbors(v)) ++unvisited_degree_[w];
    }

    // The previous end becomes interior unless it is the start, which must stay usable to close the cycle.
    void advance(Vertex v) {
        const Vertex end = path_.back();
        if (path_.size() > 1) set_interior(end, true);
        visit(v);
    }

    void undo_advance() {
        unvisit();
        if (path_.size() > 1) set_interior(path_.back(), false);
    }

    void retreat() {
        frames_.pop_back();
        if (frames_.empty()) return;
        undo_advance();
    }

    void set_interior(Vertex v, bool on) {
        interior_[v] = on ? 1 : 0;
        for (Vertex w : g_.neighbors(v)) usable_[w] += on ? -1 : 1;
    }

    bool feasible() {
        const std::size_t remaining = n_ - path_.size();
        if (remaining == 0) return g_.has_edge(path_.back(), path_.front());
        if (unvisited_degree_[path_.front()] == 0) return false;
        // Only neighbours of the vertex that just became interior lost a usable neighbour.
        if (path_.size() > 2) {
            const Vertex fresh = path_[path_.size() - 2];
            for (Vertex w : g_.neighbors(fresh))
                if (!visited_[w] && usable_[w] < 2) return false;
        }
        return unvisited_connected(remaining);
    }

    // BFS over unvisited vertices from the current end's unvisited neighbours.
    bool unvisited_connected(std::size_t remaining) {
        ++stamp_;
        std::size_t head = 0;
        std::size_t tail = 0;
        for (Vertex w : g_.neighbors(path_.back()))
            if (!visited_[w] && mark_[w] != stamp_) {
                mark_[w] = stamp_;
                queue_[tail++] = w;
                break;
            }
        while (head < tail) {
            const Vertex u = queue_[head++];
            for (Vertex w : g_.neighbors(u))
                if (!visited_[w] && mark_[w] != stamp_) {
                    mark_[w] = stamp_;
                    queue_[tail++] = w;
                }
        }
        return tail == remaining;
    }

    const SparseGraph& g_;
    std::uint64_t budget_;
    std::size_t n_;
    std::vector<std::uint8_t> visited_;
    std::vector<std::uint8_t> interior_;
    std::vector<int> usable_;
    std::vector<int> unvisited_degree_;
    std::vector<Vertex> queue_;
    std::vector<std::uint64_t> mark_;
    std::uint64_t stamp_ = 0;
    std::uint64_t expansions_ = 0;
    std::vector<Vertex> path_;
    std::vector<Frame> frames_;
};

}  // namespace

SearchResult find_hamiltonian_cycle(const SparseGraph& g, std::uint64_t budget) {
    SearchResult result;
    const std::size_t n = g.num_vertices();
    if (n < 3) {
        result.note = "fewer than three vertices: no cycle";
        return result;
    }
    if (budget == 0) {
        result.note = "budget exhausted";
        return result;
    }
    if (const auto sides = two_coloring(g)) {
        const auto ones = static_cast<std::size_t>(std::count(sides->begin(), sides->end(), std::uint8_t{1}));
        if (2 * ones != n) {
            result.note = "bipartite with unequal parts: parity rules out a Hamiltonian cycle";
            return result;
        }
    }
    if (validate(g).components != 1) {
        result.note = "graph is disconnected";
        return result;
    }
    result = Search(g, budget).run();
    if (result.cycle) result.cycle = canonical_cycle(std::move(*result.cycle));
    return result;
}

bool verify_cycle(const SparseGraph& g, const CycleCertificate& c) {
    const std::size_t n = g.num_vertices();
    if (c.graph_order != n || c.vertices.size() != n || n < 3) return false;
    std::vector<std::uint8_t> seen(n, 0);
    for (Vertex v : c.vertices) {
        if (v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % n])) return false;
    return true;
}

CycleCertificate canonical_cycle(CycleCertificate c) {
    auto& v = c.vertices;
    if (v.size() < 3) return c;
    std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
    if (v.back() < v[1]) std::reverse(v.begin() + 1, v.end());
    return c;
}

}  // namespace midcube
