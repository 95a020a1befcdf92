#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "orient/multigraph.hpp"

namespace orient {

// Raised when the per-vertex bounds cannot hold under any orientation
// because f(v) + g(v) > d(v) at some vertex. Carries the offending vertex.
class ImmediatelyInfeasibleError : public std::runtime_error {
public:
    ImmediatelyInfeasibleError(VertexId v, int f, int g, int d)
        : std::runtime_error("bounds infeasible at vertex " + std::to_string(v + 1) +
                             ": f+g = " + std::to_string(f + g) + " > d = " + std::to_string(d)),
          vertex_(v) {}
    VertexId vertex() const { return vertex_; }

private:
    VertexId vertex_;
};

// Per-vertex indegree lower bounds f and outdegree lower bounds g. An
// orientation is bounded by (f, g) when f(v) <= rho(v) <= d(v) - g(v) for
// every v. Construction rejects bounds with f(v) + g(v) > d(v).
class DegreeBounds {
public:
    DegreeBounds(const MultiGraph& g, std::vector<int> f, std::vector<int> out_g)
        : f_(std::move(f)), g_(std::move(out_g)) {
        const int n = g.vertex_count();
        if (static_cast<int>(f_.size()) != n || static_cast<int>(g_.size()) != n)
            throw std::invalid_argument("DegreeBounds: one bound pair per vertex required");
        for (VertexId v = 0; v < n; ++v) {
            if (f_[v] < 0 || g_[v] < 0)
                throw std::invalid_argument("DegreeBounds: bounds must be nonnegative");
            if (f_[v] + g_[v] > g.degree(v))
                throw ImmediatelyInfeasibleError(v, f_[v], g_[v], g.degree(v));
        }
    }

    static DegreeBounds zeros(const MultiGraph& g) {
        return DegreeBounds(g, std::vector<int>(g.vertex_count(), 0),
                            std::vector<int>(g.vertex_count(), 0));
    }

    int f(VertexId v) const { return f_.at(v); }
    int g(VertexId v) const { return g_.at(v); }
    const std::vector<int>& f_values() const { return f_; }
    const std::vector<int>& g_values() const { return g_; }

    int f_total() const { return std::accumulate(f_.begin(), f_.end(), 0); }

    bool is_strict(const MultiGraph& graph, VertexId v) const {
        return f_.at(v) + g_.at(v) == graph.degree(v);
    }
    bool all_strict(const MultiGraph& graph) const {
        for (VertexId v = 0; v < graph.vertex_count(); ++v)
            if (!is_strict(graph, v)) return false;
        return true;
    }
    bool g_all_zero() const {
        for (int x : g_)
            if (x != 0) return false;
        return true;
    }
    // fg == 0 everywhere: each vertex carries only one kind of bound.
    bool disjoint_sided() const {
        for (size_t i = 0; i < f_.size(); ++i)
            if (f_[i] > 0 && g_[i] > 0) return false;
        return true;
    }

    bool operator==(const DegreeBounds& other) const {
        return f_ == other.f_ && g_ == other.g_;
    }

private:
    std::vector<int> f_;
    std::vector<int> g_;
};

// Degree-constrained acyclic orientation instance: find an acyclic
// orientation of `graph` bounded by `bounds`.
struct DcaopInstance {
    MultiGraph graph;
    DegreeBounds bounds;

    DcaopInstance(MultiGraph g, DegreeBounds b) : graph(std::move(g)), bounds(std::move(b)) {
        if (static_cast<int>(bounds.f_values().size()) != graph.vertex_count())
            throw std::invalid_argument("DcaopInstance: bounds/graph size mismatch");
    }

    bool operator==(const DcaopInstance& other) const {
        return graph == other.graph && bounds == other.bounds;
    }
};

// Arc-disjoint-paths orientation instance: find an acyclic orientation with
// k arc-disjoint directed paths from s to every other vertex v and l from
// every v to t.
struct Pr1Instance {
    MultiGraph graph;
    VertexId s;
    VertexId t;
    int k;
    int l;

    Pr1Instance(MultiGraph g, VertexId s_, VertexId t_, int k_, int l_)
        : graph(std::move(g)), s(s_), t(t_), k(k_), l(l_) {
        graph.check_vertex(s);
        graph.check_vertex(t);
        if (s == t) throw std::invalid_argument("Pr1Instance: s and t must differ");
        if (k < 1 || l < 1) throw std::invalid_argument("Pr1Instance: k and l must be >= 1");
    }

    bool operator==(const Pr1Instance& other) const {
        return graph == other.graph && s == other.s && t == other.t && k == other.k &&
               l == other.l;
    }
};

// Bounds equivalent to a Pr1 instance: f(v) = k and g(v) = l inside, s is
// forced to be a source (g(s) = d(s)) and t a sink (f(t) = d(t)). Throws
// ImmediatelyInfeasibleError when some vertex has f(v) + g(v) > d(v).
inline DcaopInstance pr1_to_dcaop_bounds(const Pr1Instance& inst) {
    const MultiGraph& g = inst.graph;
    const int n = g.vertex_count();
    std::vector<int> f(n, inst.k), out(n, inst.l);
    f[inst.s] = 0;
    out[inst.s] = g.degree(inst.s);
    f[inst.t] = g.degree(inst.t);
    out[inst.t] = 0;
    return DcaopInstance(g, DegreeBounds(g, std::move(f), std::move(out)));
}

}  // namespace orient
