#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "orient/io.hpp"

namespace orient {

namespace detail {

inline int uniform(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Connected random multigraph: a random spanning tree plus random extra
// edges. Requires m >= n - 1.
inline MultiGraph random_connected_multigraph(std::mt19937& rng, int n, int m) {
    if (n < 1) throw std::invalid_argument("generate: need at least one vertex");
    if (m < n - 1)
        throw std::invalid_argument("generate: need at least n-1 edges for connectivity");
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) edges.push_back({uniform(rng, 0, v - 1), v});
    while (static_cast<int>(edges.size()) < m) {
        int u = uniform(rng, 0, n - 1);
        int v = uniform(rng, 0, n - 2);
        if (v >= u) ++v;
        edges.push_back({u, v});
    }
    return MultiGraph(n, std::move(edges));
}

}  // namespace detail

// Seeded random instance of the requested kind. The same (kind, n, m, seed,
// k, l) always yields byte-identical output. For dcaop the seed also picks a
// bound style (mixed, lower-only, one-sided, strict) so the generated corpus
// exercises all solver dispatch paths; for pr1, k and l fall back to random
// values in 1..3 when not given. For nae, n is the variable count and m the
// clause count.
inline ParsedInstance generate_instance(const std::string& kind, int n, int m,
                                        std::uint32_t seed, int k = 0, int l = 0) {
    std::mt19937 rng(seed);
    if (kind == "dcaop") {
        MultiGraph g = detail::random_connected_multigraph(rng, n, m);
        std::vector<int> f(n, 0), out(n, 0);
        switch (detail::uniform(rng, 0, 3)) {
            case 0:  // mixed bounds
                for (VertexId v = 0; v < n; ++v) {
                    f[v] = detail::uniform(rng, 0, g.degree(v));
                    out[v] = detail::uniform(rng, 0, g.degree(v) - f[v]);
                }
                break;
            case 1:  // lower bounds only
                for (VertexId v = 0; v < n; ++v) f[v] = detail::uniform(rng, 0, g.degree(v));
                break;
            case 2:  // one-sided
                for (VertexId v = 0; v < n; ++v)
                    if (detail::uniform(rng, 0, 1))
                        f[v] = detail::uniform(rng, 0, g.degree(v));
                    else
                        out[v] = detail::uniform(rng, 0, g.degree(v));
                break;
            default:  // strict
                for (VertexId v = 0; v < n; ++v) {
                    f[v] = detail::uniform(rng, 0, g.degree(v));
                    out[v] = g.degree(v) - f[v];
                }
        }
        DegreeBounds bounds(g, std::move(f), std::move(out));
        return DcaopInstance(std::move(g), std::move(bounds));
    }
    if (kind == "pr1") {
        if (n < 2) throw std::invalid_argument("generate: pr1 needs at least two vertices");
        MultiGraph g = detail::random_connected_multigraph(rng, n, m);
        VertexId s = detail::uniform(rng, 0, n - 1);
        VertexId t = detail::uniform(rng, 0, n - 2);
        if (t >= s) ++t;
        int kk = k > 0 ? k : detail::uniform(rng, 1, 3);
        int ll = l > 0 ? l : detail::uniform(rng, 1, 3);
        return Pr1Instance(std::move(g), s, t, kk, ll);
    }
    if (kind == "vc") {
        MultiGraph g = detail::random_connected_multigraph(rng, n, m);
        int kk = k > 0 ? k : detail::uniform(rng, 0, n);
        if (kk > n) throw std::invalid_argument("generate: cover budget above vertex count");
        return VcInstance(std::move(g), kk);
    }
    if (kind == "nae") {
        std::vector<std::array<int, 3>> clauses;
        for (int j = 0; j < m; ++j) {
            std::array<int, 3> clause;
            for (int& lit : clause) {
                lit = detail::uniform(rng, 1, n);
                if (detail::uniform(rng, 0, 1)) lit = -lit;
            }
            clauses.push_back(clause);
        }
        return NaeInstance(n, std::move(clauses));
    }
    throw std::invalid_argument("generate: unknown kind '" + kind + "'");
}

}  // namespace orient
