#pragma once

// Shared test utilities: deterministic instance generators, small-graph
// catalogs, and brute-force reference solvers that stay independent of the
// library's solver code paths (they only use the verifiers).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "orient/bounds.hpp"
#include "orient/multigraph.hpp"
#include "orient/orientation.hpp"
#include "orient/verify.hpp"

namespace testsupport {

using namespace orient;

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random multigraph on n vertices with m edges; when connect is set, the
// first n-1 edges form a random spanning tree (requires m >= n-1).
inline MultiGraph random_multigraph(Rng& rng, int n, int m, bool connect = true) {
    std::vector<Edge> edges;
    int start = 0;
    if (connect && n > 1) {
        for (VertexId v = 1; v < n; ++v) edges.push_back({rand_int(rng, 0, v - 1), v});
        start = n - 1;
    }
    for (int i = start; i < m; ++i) {
        int u = rand_int(rng, 0, n - 1);
        int v = rand_int(rng, 0, n - 2);
        if (v >= u) ++v;
        edges.push_back({u, v});
    }
    return MultiGraph(n, std::move(edges));
}

// Random bounds with f(v) + g(v) <= d(v).
inline DegreeBounds random_bounds(Rng& rng, const MultiGraph& g) {
    std::vector<int> f(g.vertex_count()), out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        f[v] = rand_int(rng, 0, g.degree(v));
        out[v] = rand_int(rng, 0, g.degree(v) - f[v]);
    }
    return DegreeBounds(g, std::move(f), std::move(out));
}

// Random one-sided bounds: each vertex gets a lower bound on indegree, or
// on outdegree, or nothing.
inline DegreeBounds random_disjoint_bounds(Rng& rng, const MultiGraph& g) {
    std::vector<int> f(g.vertex_count(), 0), out(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        switch (rand_int(rng, 0, 2)) {
            case 0: f[v] = rand_int(rng, 0, g.degree(v)); break;
            case 1: out[v] = rand_int(rng, 0, g.degree(v)); break;
            default: break;
        }
    }
    return DegreeBounds(g, std::move(f), std::move(out));
}

// All orders, first feasible by the degree-and-acyclicity verifier. This is
// the reference answer the subset-DP solver is measured against.
inline std::optional<VertexOrder> feasible_order_by_enumeration(const DcaopInstance& inst) {
    std::vector<VertexId> perm(inst.graph.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        VertexOrder order(perm);
        if (verify_dcaop(inst, orientation_from_order(inst.graph, order)).ok()) return order;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// Same, against the flow verifier.
inline std::optional<VertexOrder> feasible_pr1_order_by_enumeration(const Pr1Instance& inst) {
    std::vector<VertexId> perm(inst.graph.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        VertexOrder order(perm);
        if (verify_pr1(inst, orientation_from_order(inst.graph, order)).ok()) return order;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// Every simple graph on n vertices as an edge bitmask over the pair list
// (i < j in lexicographic order).
inline std::vector<std::pair<VertexId, VertexId>> vertex_pairs(int n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

inline MultiGraph graph_from_mask(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                  std::uint32_t mask) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back({pairs[i].first, pairs[i].second});
    return MultiGraph(n, std::move(edges));
}

// Simple graphs on exactly n vertices, optionally deduplicated up to
// isomorphism by canonical (minimum) adjacency mask over all relabelings and
// optionally restricted to connected ones.
inline std::vector<MultiGraph> simple_graphs(int n, bool up_to_isomorphism,
                                             bool connected_only) {
    auto pairs = vertex_pairs(n);
    const int p = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> perms;
    if (up_to_isomorphism) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::vector<int> pair_index(n * n, -1);
    for (int i = 0; i < p; ++i)
        pair_index[pairs[i].first * n + pairs[i].second] = i;
    auto index_of = [&](int a, int b) { return pair_index[std::min(a, b) * n + std::max(a, b)]; };

    std::vector<MultiGraph> result;
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
        if (up_to_isomorphism) {
            std::uint32_t canon = mask;
            for (const auto& perm : perms) {
                std::uint32_t relabeled = 0;
                for (int i = 0; i < p; ++i)
                    if (mask >> i & 1)
                        relabeled |= 1u << index_of(perm[pairs[i].first], perm[pairs[i].second]);
                canon = std::min(canon, relabeled);
            }
            if (canon != mask) continue;
        }
        MultiGraph g = graph_from_mask(n, pairs, mask);
        if (!connected_only || g.is_connected()) result.push_back(std::move(g));
    }
    return result;
}

inline std::vector<MultiGraph> connected_simple_graphs(int n, bool up_to_isomorphism) {
    return simple_graphs(n, up_to_isomorphism, true);
}

// Connected multigraphs on exactly n vertices with exactly m edges: every
// multiset of vertex pairs, filtered for connectivity.
inline void enumerate_connected_multigraphs(int n, int m,
                                            const std::function<void(const MultiGraph&)>& fn) {
    auto pairs = vertex_pairs(n);
    const int p = static_cast<int>(pairs.size());
    std::vector<int> mult(p, 0);
    auto rec = [&](auto self, int slot, int remaining) -> void {
        if (slot == p) {
            if (remaining != 0) return;
            std::vector<Edge> edges;
            for (int i = 0; i < p; ++i)
                for (int c = 0; c < mult[i]; ++c)
                    edges.push_back({pairs[i].first, pairs[i].second});
            MultiGraph g(n, std::move(edges));
            if (g.is_connected()) fn(g);
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            mult[slot] = c;
            self(self, slot + 1, remaining - c);
        }
        mult[slot] = 0;
    };
    rec(rec, 0, m);
}

// All bound vectors f with 0 <= f(v) <= d(v) and g == 0.
inline void enumerate_indegree_bounds(const MultiGraph& g,
                                      const std::function<void(const std::vector<int>&)>& fn) {
    const int n = g.vertex_count();
    std::vector<int> f(n, 0);
    auto rec = [&](auto self, int v) -> void {
        if (v == n) {
            fn(f);
            return;
        }
        for (int x = 0; x <= g.degree(v); ++x) {
            f[v] = x;
            self(self, v + 1);
        }
        f[v] = 0;
    };
    rec(rec, 0);
}

// All bound pairs (f, g) with f(v) + g(v) <= d(v) at every vertex.
inline void enumerate_all_bounds(
    const MultiGraph& g,
    const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
    const int n = g.vertex_count();
    std::vector<int> f(n, 0), out(n, 0);
    auto rec = [&](auto self, int v) -> void {
        if (v == n) {
            fn(f, out);
            return;
        }
        for (int lo = 0; lo <= g.degree(v); ++lo)
            for (int hi = 0; lo + hi <= g.degree(v); ++hi) {
                f[v] = lo;
                out[v] = hi;
                self(self, v + 1);
            }
        f[v] = out[v] = 0;
    };
    rec(rec, 0);
}

}  // namespace testsupport
