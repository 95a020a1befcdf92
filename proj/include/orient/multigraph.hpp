#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orient {

using VertexId = int;
using EdgeId = int;

// One undirected edge of a multigraph. Edges are distinct objects even when
// they share endpoints; the id is the edge's index in MultiGraph::edges().
struct Edge {
    VertexId u = -1;
    VertexId v = -1;

    bool operator==(const Edge&) const = default;

    VertexId other(VertexId w) const {
        if (w == u) return v;
        if (w == v) return u;
        throw std::invalid_argument("Edge::other: vertex not an endpoint");
    }
};

// Undirected multigraph. Parallel edges are allowed, loops are not.
// Vertices are 0..n-1, edge ids are dense 0..m-1. Immutable after
// construction, so instances can be shared freely across threads.
class MultiGraph {
public:
    MultiGraph(int vertex_count, std::vector<Edge> edges,
               std::vector<std::string> labels = {})
        : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
        if (n_ <= 0) throw std::invalid_argument("MultiGraph: vertex_count must be positive");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
            throw std::invalid_argument("MultiGraph: label count must match vertex count");
        adjacency_.assign(n_, {});
        for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
            const Edge& ed = edges_[e];
            if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
                throw std::out_of_range("MultiGraph: edge endpoint out of range");
            if (ed.u == ed.v)
                throw std::invalid_argument("MultiGraph: loops are not allowed");
            adjacency_[ed.u].push_back(e);
            adjacency_[ed.v].push_back(e);
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    // Ids of edges incident to v, in edge-id order of insertion.
    const std::vector<EdgeId>& incident_edges(VertexId v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    int degree(VertexId v) const { return static_cast<int>(incident_edges(v).size()); }

    std::string label(VertexId v) const {
        check_vertex(v);
        if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
        return std::to_string(v + 1);
    }

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("MultiGraph: vertex id out of range");
    }

    // Number of edges between u and v, counting multiplicity.
    int multiplicity(VertexId u, VertexId v) const {
        check_vertex(u);
        check_vertex(v);
        int c = 0;
        for (EdgeId e : adjacency_[u])
            if (edges_[e].other(u) == v) ++c;
        return c;
    }

    bool is_simple() const {
        for (VertexId v = 0; v < n_; ++v) {
            std::vector<VertexId> nbrs;
            for (EdgeId e : adjacency_[v]) nbrs.push_back(edges_[e].other(v));
            std::sort(nbrs.begin(), nbrs.end());
            if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) return false;
        }
        return true;
    }

    bool is_connected() const {
        std::vector<char> seen(n_, 0);
        std::vector<VertexId> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : adjacency_[v]) {
                VertexId u = edges_[e].other(v);
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
        return reached == n_;
    }

    // Subgraph induced by `keep` (ascending relabel). Returns the subgraph and
    // the old id of each new vertex. `keep` must be nonempty.
    std::pair<MultiGraph, std::vector<VertexId>> induced_subgraph(
        std::span<const VertexId> keep) const {
        std::vector<VertexId> old_of(keep.begin(), keep.end());
        std::sort(old_of.begin(), old_of.end());
        old_of.erase(std::unique(old_of.begin(), old_of.end()), old_of.end());
        if (old_of.empty())
            throw std::invalid_argument("induced_subgraph: empty vertex set");
        std::vector<int> new_of(n_, -1);
        for (int i = 0; i < static_cast<int>(old_of.size()); ++i) {
            check_vertex(old_of[i]);
            new_of[old_of[i]] = i;
        }
        std::vector<Edge> sub_edges;
        for (const Edge& ed : edges_)
            if (new_of[ed.u] >= 0 && new_of[ed.v] >= 0)
                sub_edges.push_back({new_of[ed.u], new_of[ed.v]});
        return {MultiGraph(static_cast<int>(old_of.size()), std::move(sub_edges)),
                std::move(old_of)};
    }

    bool operator==(const MultiGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<EdgeId>> adjacency_;
};

// d(v, Y): number of edges from v into the set Y, counting multiplicity.
// Loops do not exist, so v's own membership in Y contributes nothing.
inline int cut_degree(const MultiGraph& g, VertexId v, std::span<const VertexId> Y) {
    g.check_vertex(v);
    std::vector<char> in_y(g.vertex_count(), 0);
    for (VertexId y : Y) {
        g.check_vertex(y);
        in_y[y] = 1;
    }
    int c = 0;
    for (EdgeId e : g.incident_edges(v))
        if (in_y[g.edge(e).other(v)]) ++c;
    return c;
}

inline int cut_degree(const MultiGraph& g, VertexId v, const std::vector<VertexId>& Y) {
    return cut_degree(g, v, std::span<const VertexId>(Y));
}

}  // namespace orient
