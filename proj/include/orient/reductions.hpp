#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orient/bounds.hpp"
#include "orient/multigraph.hpp"
#include "orient/oracle.hpp"
#include "orient/orientation.hpp"
#include "orient/verify.hpp"

namespace orient {

// Raised when an order or assignment offered as a reduction witness fails
// the target instance's own verifier. The message names the violated bound.
class WitnessError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string describe_first_failure(const DcaopVerdict& verdict) {
    if (!verdict.failures.empty()) {
        const BoundFailure& f = verdict.failures.front();
        return "vertex " + std::to_string(f.vertex + 1) + " has indegree " +
               std::to_string(f.indegree) + ", allowed range [" +
               std::to_string(f.required_min) + ", " + std::to_string(f.allowed_max) + "]";
    }
    if (verdict.cycle) return "orientation contains a directed cycle";
    return "ok";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Vertex-Cover -> bounded acyclic orientation
// ---------------------------------------------------------------------------

// Bookkeeping for the cover reduction. The produced graph has one vertex per
// source vertex, one per source edge, and a hub y; the hub is strict with
// f(y) = m + kM and g(y) = (n-k)M, where M = m + 1 outweighs any edge count.
struct VcReductionMap {
    int n = 0;  // source vertices, ids 0..n-1 in the produced graph
    int m = 0;  // source edges; edge e becomes vertex n + e
    int k = 0;  // cover budget
    int M = 0;  // parallel-edge multiplier, m + 1
    std::vector<Edge> source_edges;

    VertexId edge_vertex(EdgeId e) const { return n + e; }
    VertexId hub() const { return n + m; }
    bool is_original(VertexId v) const { return v < n; }
    bool is_edge_vertex(VertexId v) const { return v >= n && v < n + m; }
};

inline std::pair<DcaopInstance, VcReductionMap> vc_to_dcaop(const VcInstance& inst) {
    const MultiGraph& g = inst.graph;
    VcReductionMap map;
    map.n = g.vertex_count();
    map.m = g.edge_count();
    map.k = inst.k;
    map.M = map.m + 1;
    map.source_edges = g.edges();

    const VertexId y = map.hub();
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < map.m; ++e) {
        edges.push_back({g.edge(e).u, map.edge_vertex(e)});
        edges.push_back({g.edge(e).v, map.edge_vertex(e)});
    }
    for (EdgeId e = 0; e < map.m; ++e) edges.push_back({y, map.edge_vertex(e)});
    for (VertexId v = 0; v < map.n; ++v)
        for (int copy = 0; copy < map.M; ++copy) edges.push_back({y, v});

    MultiGraph produced(map.n + map.m + 1, std::move(edges));
    std::vector<int> f(map.n, 0), out(map.n, 0);
    f.insert(f.end(), map.m, 1);
    out.insert(out.end(), map.m, 0);
    f.push_back(map.m + map.k * map.M);
    out.push_back((map.n - map.k) * map.M);
    DegreeBounds bounds(produced, std::move(f), std::move(out));
    return {DcaopInstance(std::move(produced), std::move(bounds)), std::move(map)};
}

// Witness order for a cover T: T ascending, with every edge-vertex whose
// endpoints both lie in T spliced in just before its later endpoint, then the
// remaining edge-vertices, the hub, and finally the uncovered vertices. Each
// edge-vertex ends up with indegree exactly 1 and the hub with m + kM.
inline VertexOrder cover_to_order(const VcReductionMap& map, std::vector<VertexId> cover) {
    std::sort(cover.begin(), cover.end());
    if (std::adjacent_find(cover.begin(), cover.end()) != cover.end())
        throw std::invalid_argument("cover_to_order: repeated vertex in cover");
    if (static_cast<int>(cover.size()) != map.k)
        throw std::invalid_argument("cover_to_order: cover size must equal k");
    std::vector<char> in_cover(map.n, 0);
    for (VertexId v : cover) {
        if (v < 0 || v >= map.n)
            throw std::invalid_argument("cover_to_order: cover vertex out of range");
        in_cover[v] = 1;
    }
    for (const Edge& e : map.source_edges)
        if (!in_cover[e.u] && !in_cover[e.v])
            throw std::invalid_argument("cover_to_order: set does not cover every edge");

    std::vector<int> cover_pos(map.n, -1);
    for (int i = 0; i < static_cast<int>(cover.size()); ++i) cover_pos[cover[i]] = i;

    // both_in[v]: edge-vertices to place immediately before cover vertex v.
    std::vector<std::vector<VertexId>> both_in(map.n);
    std::vector<VertexId> one_in;
    for (EdgeId e = 0; e < map.m; ++e) {
        const Edge& ed = map.source_edges[e];
        if (in_cover[ed.u] && in_cover[ed.v]) {
            VertexId later = cover_pos[ed.u] > cover_pos[ed.v] ? ed.u : ed.v;
            both_in[later].push_back(map.edge_vertex(e));
        } else {
            one_in.push_back(map.edge_vertex(e));
        }
    }

    std::vector<VertexId> seq;
    for (VertexId v : cover) {
        seq.insert(seq.end(), both_in[v].begin(), both_in[v].end());
        seq.push_back(v);
    }
    seq.insert(seq.end(), one_in.begin(), one_in.end());
    seq.push_back(map.hub());
    for (VertexId v = 0; v < map.n; ++v)
        if (!in_cover[v]) seq.push_back(v);
    return VertexOrder(std::move(seq));
}

// Reads a cover back out of a witness order: the original vertices preceding
// the hub. The order must actually be a witness; the bound counting then
// forces exactly k originals (and every edge-vertex) before the hub.
inline std::vector<VertexId> orientation_to_cover(const VcReductionMap& map,
                                                  const DcaopInstance& produced,
                                                  const VertexOrder& order) {
    DcaopVerdict verdict = verify_dcaop(produced, orientation_from_order(produced.graph, order));
    if (!verdict.ok())
        throw WitnessError("orientation_to_cover: " + detail::describe_first_failure(verdict));
    std::vector<VertexId> cover;
    for (VertexId v = 0; v < map.n; ++v)
        if (order.before(v, map.hub())) cover.push_back(v);
    if (static_cast<int>(cover.size()) != map.k)
        throw std::logic_error("orientation_to_cover: hub bound accounting failed");
    std::vector<char> in_cover(map.n, 0);
    for (VertexId v : cover) in_cover[v] = 1;
    for (const Edge& e : map.source_edges)
        if (!in_cover[e.u] && !in_cover[e.v])
            throw std::logic_error("orientation_to_cover: extracted set misses an edge");
    return cover;
}

// ---------------------------------------------------------------------------
// Multigraph -> simple graph, preserving bounded acyclic orientations
// ---------------------------------------------------------------------------

// Midpoint bookkeeping for edge subdivisions: source edge e gains midpoint
// w_e = n + e with f(w_e) = g(w_e) = 1, so w_e sits strictly between the two
// endpoints in any witness.
struct SplitMap {
    int n = 0;
    int m = 0;
    VertexId midpoint(EdgeId e) const { return n + e; }
    bool is_midpoint(VertexId v) const { return v >= n; }
    EdgeId source_edge(VertexId midpoint_vertex) const { return midpoint_vertex - n; }
};

inline std::pair<DcaopInstance, SplitMap> split_to_simple(const DcaopInstance& inst) {
    const MultiGraph& g = inst.graph;
    SplitMap map{g.vertex_count(), g.edge_count()};
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < map.m; ++e) {
        edges.push_back({g.edge(e).u, map.midpoint(e)});
        edges.push_back({map.midpoint(e), g.edge(e).v});
    }
    MultiGraph produced(map.n + map.m, std::move(edges));
    std::vector<int> f = inst.bounds.f_values(), out = inst.bounds.g_values();
    f.insert(f.end(), map.m, 1);
    out.insert(out.end(), map.m, 1);
    DegreeBounds bounds(produced, std::move(f), std::move(out));
    return {DcaopInstance(std::move(produced), std::move(bounds)), std::move(map)};
}

// Forward witness: each midpoint goes immediately after the earlier endpoint
// of its edge (ties between midpoints broken by edge id), giving it exactly
// one predecessor and one successor neighbor.
inline VertexOrder split_witness_forward(const SplitMap& map, const MultiGraph& source,
                                         const VertexOrder& source_order) {
    std::vector<std::vector<VertexId>> after(map.n);
    for (EdgeId e = 0; e < map.m; ++e) {
        const Edge& ed = source.edge(e);
        VertexId earlier = source_order.before(ed.u, ed.v) ? ed.u : ed.v;
        after[earlier].push_back(map.midpoint(e));
    }
    std::vector<VertexId> seq;
    for (VertexId v : source_order.sequence()) {
        seq.push_back(v);
        seq.insert(seq.end(), after[v].begin(), after[v].end());
    }
    return VertexOrder(std::move(seq));
}

// Backward witness: drop the midpoints. A valid witness forces each midpoint
// strictly between its endpoints, so the restriction induces the contracted
// orientation.
inline VertexOrder split_witness_backward(const SplitMap& map, const VertexOrder& produced_order) {
    std::vector<VertexId> seq;
    for (VertexId v : produced_order.sequence())
        if (!map.is_midpoint(v)) seq.push_back(v);
    return VertexOrder(std::move(seq));
}

// ---------------------------------------------------------------------------
// Bounded acyclic orientation -> arc-disjoint-paths instance
// ---------------------------------------------------------------------------

// s and t bookkeeping for the degree-padding reduction: k = l = max degree,
// vertex v receives k - f(v) parallel edges from s and k - g(v) from t.
struct Dcaop2Pr1Map {
    int n = 0;
    int k = 0;
    VertexId s() const { return n; }
    VertexId t() const { return n + 1; }
};

inline std::pair<Pr1Instance, Dcaop2Pr1Map> dcaop_to_pr1(const DcaopInstance& inst) {
    const MultiGraph& g = inst.graph;
    Dcaop2Pr1Map map;
    map.n = g.vertex_count();
    int max_degree = 0;
    for (VertexId v = 0; v < map.n; ++v) max_degree = std::max(max_degree, g.degree(v));
    map.k = std::max(max_degree, 1);  // k, l must stay positive even for edgeless graphs

    std::vector<Edge> edges = g.edges();
    for (VertexId v = 0; v < map.n; ++v)
        for (int copy = 0; copy < map.k - inst.bounds.f(v); ++copy)
            edges.push_back({map.s(), v});
    for (VertexId v = 0; v < map.n; ++v)
        for (int copy = 0; copy < map.k - inst.bounds.g(v); ++copy)
            edges.push_back({map.t(), v});
    MultiGraph produced(map.n + 2, std::move(edges));
    return {Pr1Instance(std::move(produced), map.s(), map.t(), map.k, map.k), std::move(map)};
}

// Forward witness: s first, t last, original order in between; every s-edge
// then points out of s and every t-edge into t, raising each indegree and
// outdegree to at least k.
inline VertexOrder dcaop2pr1_witness_forward(const Dcaop2Pr1Map& map,
                                             const VertexOrder& source_order) {
    std::vector<VertexId> seq{map.s()};
    seq.insert(seq.end(), source_order.sequence().begin(), source_order.sequence().end());
    seq.push_back(map.t());
    return VertexOrder(std::move(seq));
}

// Backward witness: restriction to the original vertices.
inline VertexOrder dcaop2pr1_witness_backward(const Dcaop2Pr1Map& map,
                                              const VertexOrder& produced_order) {
    std::vector<VertexId> seq;
    for (VertexId v : produced_order.sequence())
        if (v < map.n) seq.push_back(v);
    return VertexOrder(std::move(seq));
}

// ---------------------------------------------------------------------------
// Not-all-equal 3SAT -> arc-disjoint-paths with k = l = 2
// ---------------------------------------------------------------------------

// Vertex roles of the k = l = 2 hardness gadget. The skeleton chain
// a_0 .. a_{4n+2m+1} is rigid in any witness; variable gates y_i / z_i and
// clause vertices C_j hang between consecutive skeleton vertices, and the 2n
// literal vertices tie into the gates, their clauses, and both terminals.
struct NaeGadgetMap {
    int n = 0;  // variables
    int m = 0;  // clauses
    std::vector<std::array<int, 3>> clauses;

    int skeleton_length() const { return 4 * n + 2 * m + 2; }
    VertexId a(int i) const { return i; }  // 0 <= i <= 4n + 2m + 1
    VertexId y(int i) const { return skeleton_length() + (i - 1); }
    VertexId z(int i) const { return skeleton_length() + n + (i - 1); }
    VertexId clause_vertex(int j) const { return skeleton_length() + 2 * n + (j - 1); }
    VertexId literal_vertex(int lit) const {
        int base = skeleton_length() + 2 * n + m;
        return lit > 0 ? base + (lit - 1) : base + n + (-lit - 1);
    }
    VertexId s() const { return a(0); }
    VertexId t() const { return a(4 * n + 2 * m + 1); }
    int vertex_count() const { return 8 * n + 3 * m + 2; }

    // Gate sitting between a(2r-1) and a(2r), for r = 1 .. 2n + m.
    VertexId gate(int r) const {
        if (r <= n) return y(r);
        if (r <= n + m) return clause_vertex(r - n);
        return z(r - n - m);
    }
};

inline std::pair<Pr1Instance, NaeGadgetMap> nae_to_pr1(const NaeInstance& inst) {
    NaeGadgetMap map;
    map.n = inst.variable_count;
    map.m = static_cast<int>(inst.clauses.size());
    map.clauses = inst.clauses;
    const int n = map.n, m = map.m;

    std::vector<Edge> edges;
    // Skeleton: doubled rungs, single links, and one gate path per link.
    for (int i = 0; i <= 2 * n + m; ++i) {
        edges.push_back({map.a(2 * i), map.a(2 * i + 1)});
        edges.push_back({map.a(2 * i), map.a(2 * i + 1)});
    }
    for (int i = 1; i <= 2 * n + m; ++i) edges.push_back({map.a(2 * i - 1), map.a(2 * i)});
    for (int i = 1; i <= n; ++i) {
        edges.push_back({map.a(2 * i - 1), map.y(i)});
        edges.push_back({map.y(i), map.a(2 * i)});
    }
    for (int i = 1; i <= n; ++i) {
        edges.push_back({map.a(2 * n + 2 * m + 2 * i - 1), map.z(i)});
        edges.push_back({map.z(i), map.a(2 * n + 2 * m + 2 * i)});
    }
    for (int j = 1; j <= m; ++j) {
        edges.push_back({map.a(2 * n + 2 * j - 1), map.clause_vertex(j)});
        edges.push_back({map.clause_vertex(j), map.a(2 * n + 2 * j)});
    }
    // Literal wiring: both literals of a variable reach its two gates, each
    // clause reaches its three literals, and every literal gets doubled
    // edges to both terminals.
    for (int i = 1; i <= n; ++i) {
        edges.push_back({map.literal_vertex(i), map.y(i)});
        edges.push_back({map.literal_vertex(-i), map.y(i)});
        edges.push_back({map.literal_vertex(i), map.z(i)});
        edges.push_back({map.literal_vertex(-i), map.z(i)});
    }
    for (int j = 1; j <= m; ++j)
        for (int lit : map.clauses[j - 1])
            edges.push_back({map.clause_vertex(j), map.literal_vertex(lit)});
    for (int i = 1; i <= n; ++i)
        for (int lit : {i, -i}) {
            edges.push_back({map.s(), map.literal_vertex(lit)});
            edges.push_back({map.s(), map.literal_vertex(lit)});
            edges.push_back({map.literal_vertex(lit), map.t()});
            edges.push_back({map.literal_vertex(lit), map.t()});
        }

    MultiGraph produced(map.vertex_count(), std::move(edges));
    return {Pr1Instance(std::move(produced), map.s(), map.t(), 2, 2), std::move(map)};
}

// Witness order for a not-all-equal assignment: the skeleton in index order
// with each gate between its two neighbors, True literals right after a_1,
// False literals right after z_n. Rejected if some clause would end up with
// all three literals on one side (indegree 4 or 1 at the clause vertex).
inline VertexOrder assignment_to_order(const NaeGadgetMap& map,
                                       const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != map.n)
        throw std::invalid_argument("assignment_to_order: one value per variable required");
    for (int j = 1; j <= map.m; ++j) {
        int true_count = 0;
        for (int lit : map.clauses[j - 1])
            if (NaeInstance::literal_value(lit, assignment)) ++true_count;
        if (true_count == 0 || true_count == 3)
            throw std::invalid_argument(
                "assignment_to_order: clause " + std::to_string(j) +
                " has all literals equal; clause vertex would get indegree " +
                (true_count == 3 ? std::string("4") : std::string("1")));
    }

    std::vector<VertexId> true_literals, false_literals;
    for (int i = 1; i <= map.n; ++i)
        for (int lit : {i, -i})
            (NaeInstance::literal_value(lit, assignment) ? true_literals : false_literals)
                .push_back(map.literal_vertex(lit));
    std::sort(true_literals.begin(), true_literals.end());
    std::sort(false_literals.begin(), false_literals.end());

    std::vector<VertexId> seq{map.a(0), map.a(1)};
    seq.insert(seq.end(), true_literals.begin(), true_literals.end());
    for (int r = 1; r <= 2 * map.n + map.m; ++r) {
        seq.push_back(map.gate(r));
        if (r == 2 * map.n + map.m)
            seq.insert(seq.end(), false_literals.begin(), false_literals.end());
        seq.push_back(map.a(2 * r));
        seq.push_back(map.a(2 * r + 1));
    }
    return VertexOrder(std::move(seq));
}

// Reads the assignment back out of a witness: a variable is True iff its
// positive literal precedes a_{2n}. The order must be a verified witness; the
// skeleton is then forced into canonical position, and each gate pins exactly
// one of the two literals before it.
inline std::vector<bool> order_to_assignment(const NaeGadgetMap& map,
                                             const Pr1Instance& produced,
                                             const VertexOrder& order) {
    Pr1Verdict verdict = verify_pr1(produced, orientation_from_order(produced.graph, order));
    if (!verdict.ok()) {
        // Name the first skeleton vertex out of canonical position, if any.
        for (int i = 0; i + 1 < map.skeleton_length(); ++i)
            if (order.before(map.a(i + 1), map.a(i)))
                throw WitnessError("order_to_assignment: skeleton vertex a_" +
                                   std::to_string(i + 1) + " precedes a_" + std::to_string(i));
        for (int r = 1; r <= 2 * map.n + map.m; ++r)
            if (order.before(map.gate(r), map.a(2 * r - 1)) ||
                order.before(map.a(2 * r), map.gate(r)))
                throw WitnessError("order_to_assignment: gate vertex " + std::to_string(r) +
                                   " is not between its skeleton neighbors");
        throw WitnessError("order_to_assignment: order is not a valid witness");
    }
    std::vector<bool> assignment(map.n);
    for (int i = 1; i <= map.n; ++i)
        assignment[i - 1] = order.before(map.literal_vertex(i), map.a(2 * map.n));
    NaeInstance source(map.n, map.clauses);
    if (!source.satisfied_by(assignment))
        throw std::logic_error("order_to_assignment: extracted assignment is not not-all-equal");
    return assignment;
}

// ---------------------------------------------------------------------------
// Arc-disjoint-paths (k = l = 2) -> simple graph with four terminals
// ---------------------------------------------------------------------------

// Simple-graph form of the k = l = 2 problem: every vertex outside the four
// terminals needs two neighbors before it and two after it. Feasibility is
// a bound check with f = g = 2 off the terminals, so the subset-DP solver
// applies directly.
struct Problem3Instance {
    MultiGraph graph;
    VertexId s1, s2, t1, t2;
    // Midpoints: source edge e between two non-terminals became w_e; -1 for
    // edges that kept their identity (those touching s or t).
    std::vector<VertexId> midpoint_of;
    int source_n = 0;
    VertexId source_s = -1, source_t = -1;

    bool is_terminal(VertexId v) const { return v == s1 || v == s2 || v == t1 || v == t2; }

    // Compares the instance itself, not the reduction bookkeeping.
    bool operator==(const Problem3Instance& other) const {
        return graph == other.graph && s1 == other.s1 && s2 == other.s2 && t1 == other.t1 &&
               t2 == other.t2;
    }
};

inline DcaopInstance problem3_to_dcaop(const Problem3Instance& inst) {
    const int n = inst.graph.vertex_count();
    std::vector<int> f(n, 2), out(n, 2);
    for (VertexId v : {inst.s1, inst.s2, inst.t1, inst.t2}) f[v] = out[v] = 0;
    return DcaopInstance(inst.graph, DegreeBounds(inst.graph, std::move(f), std::move(out)));
}

inline Problem3Instance pr1_to_problem3(const Pr1Instance& inst) {
    if (inst.k != 2 || inst.l != 2)
        throw std::invalid_argument("pr1_to_problem3: requires k = l = 2");
    const MultiGraph& g = inst.graph;
    const int n = g.vertex_count();
    const VertexId s = inst.s, t = inst.t;

    auto touches_terminal = [&](const Edge& e) {
        return e.u == s || e.v == s || e.u == t || e.v == t;
    };
    // Terminal-adjacent parallel classes of size > 2 cannot be divided
    // between two terminal copies without staying parallel.
    std::map<std::pair<VertexId, VertexId>, int> terminal_mult;
    for (const Edge& e : g.edges())
        if (touches_terminal(e))
            ++terminal_mult[{std::min(e.u, e.v), std::max(e.u, e.v)}];
    for (const auto& [pair, count] : terminal_mult)
        if (count > 2)
            throw std::invalid_argument(
                "pr1_to_problem3: terminal edge multiplicity " + std::to_string(count) +
                " between vertices " + std::to_string(pair.first + 1) + " and " +
                std::to_string(pair.second + 1) + " exceeds 2");

    const VertexId s2 = n, t2 = n + 1;
    std::vector<VertexId> midpoint_of(g.edge_count(), -1);
    VertexId next_id = n + 2;
    std::vector<Edge> edges;
    std::map<std::pair<VertexId, VertexId>, int> seen;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (!touches_terminal(ed)) {
            VertexId w = next_id++;
            midpoint_of[e] = w;
            edges.push_back({w, ed.u});
            edges.push_back({w, ed.v});
            edges.push_back({w, s});
            edges.push_back({w, t});
            continue;
        }
        int copy = seen[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}]++;
        VertexId u = ed.u, v = ed.v;
        if (copy == 1) {  // second parallel copy moves to the second terminal pair
            if (u == s) u = s2;
            if (v == s) v = s2;
            if (u == t) u = t2;
            if (v == t) v = t2;
        }
        edges.push_back({u, v});
    }
    return Problem3Instance{MultiGraph(next_id, std::move(edges)),
                            s, s2, t, t2, std::move(midpoint_of), n, s, t};
}

// Forward witness: terminals bracket the order (s1, s2 first, t1, t2 last);
// each midpoint goes right after the earlier endpoint of its source edge, so
// its predecessors are exactly s1 and that endpoint.
inline VertexOrder problem3_witness_forward(const Problem3Instance& map,
                                            const VertexOrder& source_order) {
    std::vector<std::vector<VertexId>> after(map.source_n);
    for (EdgeId e = 0; e < static_cast<int>(map.midpoint_of.size()); ++e) {
        // Reconstruct endpoints from the produced graph: midpoint edges list
        // (w,u), (w,v), (w,s1), (w,t1) in construction order.
        VertexId w = map.midpoint_of[e];
        if (w < 0) continue;
        VertexId u = -1, v = -1;
        for (EdgeId pe : map.graph.incident_edges(w)) {
            VertexId other = map.graph.edge(pe).other(w);
            if (other == map.s1 || other == map.t1) continue;
            (u == -1 ? u : v) = other;
        }
        VertexId earlier = source_order.before(u, v) ? u : v;
        after[earlier].push_back(w);
    }
    std::vector<VertexId> seq{map.s1, map.s2};
    for (VertexId v : source_order.sequence()) {
        if (v == map.source_s || v == map.source_t) continue;
        seq.push_back(v);
        seq.insert(seq.end(), after[v].begin(), after[v].end());
    }
    seq.push_back(map.t1);
    seq.push_back(map.t2);
    return VertexOrder(std::move(seq));
}

// Backward witness: the source's internal vertices in produced order,
// bracketed by s and t.
inline VertexOrder problem3_witness_backward(const Problem3Instance& map,
                                             const VertexOrder& produced_order) {
    std::vector<VertexId> seq{map.source_s};
    for (VertexId v : produced_order.sequence())
        if (v < map.source_n && v != map.source_s && v != map.source_t) seq.push_back(v);
    seq.push_back(map.source_t);
    return VertexOrder(std::move(seq));
}

}  // namespace orient
