#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orient/multigraph.hpp"
#include "orient/orientation.hpp"
#include "orient/solve.hpp"

namespace orient {

class DisconnectedInputError : public std::runtime_error {
public:
    DisconnectedInputError() : std::runtime_error("input graph is not connected") {}
};

struct StNumberingResult {
    std::optional<VertexOrder> order;        // starts with s, ends with t
    std::optional<VertexId> cut_vertex;      // certificate when G + st is not biconnected
    bool biconnected() const { return order.has_value(); }
};

namespace detail {

// Simple-graph adjacency of G plus one extra s-t edge; parallel edges
// collapse (they change neither cut vertices nor neighbor sets).
inline std::vector<std::vector<VertexId>> simplified_plus_st(const MultiGraph& g,
                                                             VertexId s, VertexId t) {
    const int n = g.vertex_count();
    std::vector<std::vector<VertexId>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    adj[s].push_back(t);
    adj[t].push_back(s);
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

// Lowpoint articulation check; returns a cut vertex or nullopt. Assumes the
// graph is connected.
inline std::optional<VertexId> find_cut_vertex(const std::vector<std::vector<VertexId>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> pre(n, -1), low(n, 0);
    int counter = 0;
    std::optional<VertexId> cut;
    auto dfs = [&](auto self, VertexId v, VertexId parent) -> void {
        pre[v] = low[v] = counter++;
        int children = 0;
        for (VertexId u : adj[v]) {
            if (pre[u] == -1) {
                ++children;
                self(self, u, v);
                low[v] = std::min(low[v], low[u]);
                if (parent != -1 && low[u] >= pre[v] && !cut) cut = v;
            } else if (u != parent) {
                low[v] = std::min(low[v], pre[u]);
            }
        }
        if (parent == -1 && children > 1 && !cut) cut = v;
    };
    dfs(dfs, 0, -1);
    return cut;
}

}  // namespace detail

// Order beginning with s and ending with t in which every other vertex has a
// neighbor earlier and a neighbor later. Exists iff G + st is biconnected;
// otherwise a cut vertex of G + st is returned as the certificate.
//
// Construction: DFS the simplified G + st from t with s as the first child,
// then peel one chain per back edge in preorder (back edge plus the tree
// path climbing to the first already-covered vertex). After the
// biconnectivity check these chains are the initial cycle through the s-t
// edge followed by open ears, and splicing each ear's interior right after
// its earlier endpoint keeps the order property intact.
inline StNumberingResult st_numbering(const MultiGraph& g, VertexId s, VertexId t) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) throw std::invalid_argument("st_numbering: s and t must differ");
    if (!g.is_connected()) throw DisconnectedInputError();

    const int n = g.vertex_count();
    if (n == 2) return {VertexOrder({s, t}), std::nullopt};

    auto adj = detail::simplified_plus_st(g, s, t);
    if (auto cut = detail::find_cut_vertex(adj)) return {std::nullopt, cut};

    // DFS numbering rooted at t; s is forced to be the first (and, since the
    // graph is biconnected, only) child of the root.
    std::vector<int> pre(n, -1);
    std::vector<VertexId> parent(n, -1), by_pre(n);
    int counter = 0;
    auto dfs = [&](auto self, VertexId v) -> void {
        pre[v] = counter;
        by_pre[counter++] = v;
        auto visit = [&](VertexId u) {
            if (pre[u] == -1) {
                parent[u] = v;
                self(self, u);
            }
        };
        if (v == t) visit(s);
        for (VertexId u : adj[v]) visit(u);
    };
    dfs(dfs, t);

    std::vector<char> covered(n, 0);
    covered[t] = 1;
    std::vector<VertexId> order;
    auto position_of = [&](VertexId v) {
        return static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin());
    };

    for (int i = 0; i < n; ++i) {
        VertexId v = by_pre[i];
        for (VertexId u : adj[v]) {
            if (pre[u] < pre[v] || parent[u] == v) continue;  // keep back edges at the ancestor end
            if (covered[u]) continue;                         // ear with no interior
            if (!covered[v])
                throw std::logic_error("st_numbering: chain start not covered");
            std::vector<VertexId> interior;
            VertexId cur = u;
            while (!covered[cur]) {
                covered[cur] = 1;
                interior.push_back(cur);
                cur = parent[cur];
            }
            if (order.empty()) {
                // Initial cycle through the s-t edge: the climb from u ends at
                // t and passes s last, so the reversal runs s .. u, then t.
                if (interior.back() != s || cur != t)
                    throw std::logic_error("st_numbering: initial chain misses the s-t edge");
                order.assign(interior.rbegin(), interior.rend());
                order.push_back(t);
                continue;
            }
            // Open ear between v and cur: splice the interior directly after
            // the earlier endpoint, walking from that endpoint inwards.
            int pv = position_of(v), pc = position_of(cur);
            if (pv < pc) {
                order.insert(order.begin() + pv + 1, interior.begin(), interior.end());
            } else {
                order.insert(order.begin() + pc + 1, interior.rbegin(), interior.rend());
            }
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw std::logic_error("st_numbering: chains did not cover every vertex");
    return {VertexOrder(std::move(order)), std::nullopt};
}

// k = l = 1 case of the arc-disjoint-paths problem: feasible iff G + st is
// biconnected, with the st-numbering as the witness order.
inline SolveResult solve_pr1_k1(const Pr1Instance& inst) {
    if (inst.k != 1 || inst.l != 1)
        throw std::invalid_argument("solve_pr1_k1: requires k = l = 1");
    StNumberingResult r = st_numbering(inst.graph, inst.s, inst.t);
    if (!r.biconnected())
        return SolveResult::infeasible_at(InfeasibilityReason::NotBiconnected, *r.cut_vertex);
    return SolveResult::feasible(std::move(*r.order));
}

}  // namespace orient
