#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orient/bounds.hpp"
#include "orient/multigraph.hpp"
#include "orient/orientation.hpp"
#include "orient/verify.hpp"

namespace orient {

enum class InfeasibilityReason {
    None,
    ViolatedCondition,      // a violating vertex set exists (certificate attached)
    SumMismatch,            // strict bounds with f(V) != |E|
    NotBiconnected,         // st-numbering: G + st has a cut vertex
    ImmediatelyInfeasible,  // f(v) + g(v) > d(v) at some vertex
    ExhaustiveSearch,       // complete search found no witness
};

inline const char* to_string(InfeasibilityReason r) {
    switch (r) {
        case InfeasibilityReason::None: return "none";
        case InfeasibilityReason::ViolatedCondition: return "violated_condition";
        case InfeasibilityReason::SumMismatch: return "sum_mismatch";
        case InfeasibilityReason::NotBiconnected: return "not_biconnected";
        case InfeasibilityReason::ImmediatelyInfeasible: return "immediately_infeasible";
        case InfeasibilityReason::ExhaustiveSearch: return "exhaustive_search";
    }
    return "unknown";
}

// Either a witness order (whose induced orientation satisfies the solved
// problem) or an infeasibility reason, with a certificate where one exists.
struct SolveResult {
    std::optional<VertexOrder> order;
    std::optional<ViolationCertificate> certificate;
    InfeasibilityReason reason = InfeasibilityReason::None;
    std::optional<VertexId> blocking_vertex;  // cut vertex or over-constrained vertex

    bool is_feasible() const { return order.has_value(); }

    static SolveResult feasible(VertexOrder o) {
        SolveResult r;
        r.order = std::move(o);
        return r;
    }
    static SolveResult infeasible(InfeasibilityReason why) {
        SolveResult r;
        r.reason = why;
        return r;
    }
    static SolveResult infeasible(ViolationCertificate cert) {
        SolveResult r;
        r.reason = InfeasibilityReason::ViolatedCondition;
        r.certificate = std::move(cert);
        return r;
    }
    static SolveResult infeasible_at(InfeasibilityReason why, VertexId v) {
        SolveResult r;
        r.reason = why;
        r.blocking_vertex = v;
        return r;
    }
};

// Greedy elimination for indegree lower bounds only (g == 0). Repeatedly
// emits the lowest-id vertex whose residual bound is zero; emitting v lowers
// every remaining neighbor's residual by the multiplicity towards v, because
// v now precedes it. If at some step no residual hits zero, the remaining
// set X is returned as the certificate: every x in X still needs more
// predecessors than it has neighbors outside X.
inline SolveResult greedy_min_indegree_orient(const MultiGraph& g, std::vector<int> f) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n)
        throw std::invalid_argument("greedy_min_indegree_orient: one bound per vertex");
    for (VertexId v = 0; v < n; ++v)
        if (f[v] < 0 || f[v] > g.degree(v))
            throw std::invalid_argument("greedy_min_indegree_orient: need 0 <= f(v) <= d(v)");

    std::vector<char> placed(n, 0);
    std::vector<VertexId> seq;
    seq.reserve(n);
    for (int step = 0; step < n; ++step) {
        VertexId pick = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (!placed[v] && f[v] == 0) {
                pick = v;
                break;
            }
        }
        if (pick == -1) {
            ViolationCertificate cert;
            cert.side = BoundSide::Indegree;
            for (VertexId v = 0; v < n; ++v)
                if (!placed[v]) cert.violating_set.push_back(v);
            return SolveResult::infeasible(std::move(cert));
        }
        placed[pick] = 1;
        seq.push_back(pick);
        for (EdgeId e : g.incident_edges(pick)) {
            VertexId w = g.edge(e).other(pick);
            if (!placed[w] && f[w] > 0) --f[w];
        }
    }
    return SolveResult::feasible(VertexOrder(std::move(seq)));
}

// All-strict case: feasible iff f(V) = |E| and the greedy succeeds, and then
// every indegree meets its bound with equality (the total over all vertices
// is |E|, so pointwise >= forces =).
inline SolveResult solve_strict(const MultiGraph& g, const DegreeBounds& bounds) {
    if (!bounds.all_strict(g))
        throw std::invalid_argument("solve_strict: every vertex must satisfy f(v)+g(v)=d(v)");
    if (bounds.f_total() != g.edge_count())
        return SolveResult::infeasible(InfeasibilityReason::SumMismatch);
    return greedy_min_indegree_orient(g, bounds.f_values());
}

// One-sided bounds (f(v)g(v) = 0 everywhere). Vertices split into
// A = {g > 0}, B = {no bounds}, C = {f > 0}; an orientation exists iff one
// exists with all of A ordered first and all of C last. Both sides reduce to
// the greedy: on G[A] the residual outdegree demands become indegree demands
// of the reversed order, on G[C] the residual indegree demands apply as is.
inline SolveResult solve_disjoint_bounds(const MultiGraph& g, const DegreeBounds& bounds) {
    const int n = g.vertex_count();
    if (!bounds.disjoint_sided())
        throw std::invalid_argument("solve_disjoint_bounds: need f(v)g(v) = 0 for every vertex");

    std::vector<VertexId> a_side, b_side, c_side;
    for (VertexId v = 0; v < n; ++v) {
        if (bounds.g(v) > 0)
            a_side.push_back(v);
        else if (bounds.f(v) > 0)
            c_side.push_back(v);
        else
            b_side.push_back(v);
    }

    // Residual demand once all edges leaving the part are accounted for:
    // every A vertex sends its outside edges forward, every C vertex receives
    // its outside edges from behind. The greedy meets the demands as
    // indegrees; for A the order is then reversed, turning them into
    // outdegrees while keeping the part's orientation acyclic.
    auto run_part = [&](const std::vector<VertexId>& part, const std::vector<int>& demand,
                        BoundSide side, bool reverse,
                        std::vector<VertexId>& out) -> std::optional<SolveResult> {
        if (part.empty()) return std::nullopt;
        auto [sub, old_of] = g.induced_subgraph(part);
        std::vector<int> residual(sub.vertex_count());
        for (int i = 0; i < sub.vertex_count(); ++i) {
            int outside = g.degree(old_of[i]) - sub.degree(i);
            residual[i] = std::max(demand[old_of[i]] - outside, 0);
        }
        SolveResult r = greedy_min_indegree_orient(sub, residual);
        if (!r.is_feasible()) {
            ViolationCertificate lifted;
            lifted.side = side;
            for (VertexId x : r.certificate->violating_set)
                lifted.violating_set.push_back(old_of[x]);
            return SolveResult::infeasible(std::move(lifted));
        }
        std::vector<VertexId> local = r.order->sequence();
        if (reverse) std::reverse(local.begin(), local.end());
        for (VertexId x : local) out.push_back(old_of[x]);
        return std::nullopt;
    };

    std::vector<VertexId> seq;
    if (auto fail = run_part(a_side, bounds.g_values(), BoundSide::Outdegree, true, seq))
        return *fail;
    seq.insert(seq.end(), b_side.begin(), b_side.end());
    if (auto fail = run_part(c_side, bounds.f_values(), BoundSide::Indegree, false, seq))
        return *fail;
    return SolveResult::feasible(VertexOrder(std::move(seq)));
}

}  // namespace orient
