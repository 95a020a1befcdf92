#pragma once

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

#include "orient/multigraph.hpp"

namespace orient {

// A permutation of all vertices together with its inverse position index.
class VertexOrder {
public:
    explicit VertexOrder(std::vector<VertexId> sequence) : seq_(std::move(sequence)) {
        const int n = static_cast<int>(seq_.size());
        pos_.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            VertexId v = seq_[i];
            if (v < 0 || v >= n || pos_[v] != -1)
                throw std::invalid_argument("VertexOrder: sequence is not a permutation");
            pos_[v] = i;
        }
    }

    static VertexOrder identity(int n) {
        std::vector<VertexId> seq(n);
        std::iota(seq.begin(), seq.end(), 0);
        return VertexOrder(std::move(seq));
    }

    int size() const { return static_cast<int>(seq_.size()); }
    const std::vector<VertexId>& sequence() const { return seq_; }
    VertexId at(int i) const { return seq_.at(i); }
    int position(VertexId v) const { return pos_.at(v); }
    bool before(VertexId u, VertexId v) const { return position(u) < position(v); }

    VertexOrder reversed() const {
        std::vector<VertexId> r(seq_.rbegin(), seq_.rend());
        return VertexOrder(std::move(r));
    }

    bool operator==(const VertexOrder& other) const { return seq_ == other.seq_; }

private:
    std::vector<VertexId> seq_;
    std::vector<int> pos_;
};

// Direction assignment for every edge of a multigraph. Stored as one bit per
// edge: forward means the edge points u -> v as listed in the graph.
class Orientation {
public:
    Orientation(const MultiGraph& g, std::vector<char> forward)
        : forward_(std::move(forward)) {
        if (static_cast<int>(forward_.size()) != g.edge_count())
            throw std::invalid_argument("Orientation: one direction bit per edge required");
        indegree_.assign(g.vertex_count(), 0);
        outdegree_.assign(g.vertex_count(), 0);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            ++outdegree_[tail(g, e)];
            ++indegree_[head(g, e)];
        }
    }

    bool is_forward(EdgeId e) const { return forward_.at(e) != 0; }
    VertexId tail(const MultiGraph& g, EdgeId e) const {
        return is_forward(e) ? g.edge(e).u : g.edge(e).v;
    }
    VertexId head(const MultiGraph& g, EdgeId e) const {
        return is_forward(e) ? g.edge(e).v : g.edge(e).u;
    }

    // rho(v) and delta(v); rho(v) + delta(v) = d(v) always holds.
    int indegree(VertexId v) const { return indegree_.at(v); }
    int outdegree(VertexId v) const { return outdegree_.at(v); }

    bool operator==(const Orientation& other) const { return forward_ == other.forward_; }

private:
    std::vector<char> forward_;
    std::vector<int> indegree_;
    std::vector<int> outdegree_;
};

// Directs every edge from the earlier endpoint to the later one. The result
// is acyclic by construction; parallel edges end up co-oriented.
inline Orientation orientation_from_order(const MultiGraph& g, const VertexOrder& order) {
    if (order.size() != g.vertex_count())
        throw std::invalid_argument("orientation_from_order: order size mismatch");
    std::vector<char> forward(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        forward[e] = order.before(g.edge(e).u, g.edge(e).v) ? 1 : 0;
    return Orientation(g, std::move(forward));
}

// Raised when a topological order is requested for a cyclic orientation.
// Carries one directed cycle as the certificate (vertex sequence; each
// consecutive pair, wrapping around, is connected by an arc).
class CycleError : public std::runtime_error {
public:
    explicit CycleError(std::vector<VertexId> cycle)
        : std::runtime_error("orientation contains a directed cycle"),
          cycle_(std::move(cycle)) {}
    const std::vector<VertexId>& cycle() const { return cycle_; }

private:
    std::vector<VertexId> cycle_;
};

namespace detail {

// Finds a directed cycle among `alive` vertices by walking out-arcs.
inline std::vector<VertexId> find_directed_cycle(const MultiGraph& g,
                                                 const Orientation& o,
                                                 const std::vector<char>& alive) {
    const int n = g.vertex_count();
    std::vector<int> state(n, 0);  // 0 unseen, 1 on current path, 2 done
    std::vector<VertexId> parent(n, -1);
    std::vector<VertexId> cycle;
    auto dfs = [&](auto self, VertexId v) -> bool {
        state[v] = 1;
        for (EdgeId e : g.incident_edges(v)) {
            if (o.tail(g, e) != v) continue;
            VertexId w = o.head(g, e);
            if (!alive[w]) continue;
            if (state[w] == 1) {
                cycle.push_back(w);
                for (VertexId x = v; x != w; x = parent[x]) cycle.push_back(x);
                std::reverse(cycle.begin() + 1, cycle.end());
                return true;
            }
            if (state[w] == 0) {
                parent[w] = v;
                if (self(self, w)) return true;
            }
        }
        state[v] = 2;
        return false;
    };
    for (VertexId start = 0; start < n; ++start)
        if (alive[start] && state[start] == 0 && dfs(dfs, start)) return cycle;
    return {};
}

}  // namespace detail

// Kahn's algorithm with deterministic tie-breaking: among current sources the
// lowest vertex id goes first. Throws CycleError (with a cycle certificate)
// if the orientation is not acyclic.
inline VertexOrder topological_order(const MultiGraph& g, const Orientation& o) {
    const int n = g.vertex_count();
    std::vector<int> remaining_in(n);
    for (VertexId v = 0; v < n; ++v) remaining_in[v] = o.indegree(v);
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> sources;
    for (VertexId v = 0; v < n; ++v)
        if (remaining_in[v] == 0) sources.push(v);
    std::vector<VertexId> seq;
    seq.reserve(n);
    while (!sources.empty()) {
        VertexId v = sources.top();
        sources.pop();
        seq.push_back(v);
        for (EdgeId e : g.incident_edges(v)) {
            if (o.tail(g, e) != v) continue;
            VertexId w = o.head(g, e);
            if (--remaining_in[w] == 0) sources.push(w);
        }
    }
    if (static_cast<int>(seq.size()) != n) {
        std::vector<char> alive(n, 1);
        for (VertexId v : seq) alive[v] = 0;
        throw CycleError(detail::find_directed_cycle(g, o, alive));
    }
    return VertexOrder(std::move(seq));
}

}  // namespace orient
