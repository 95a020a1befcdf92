#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orient/bounds.hpp"
#include "orient/solve.hpp"
#include "orient/verify.hpp"

namespace orient {

// Hard size caps for the exponential solvers. Exceeding a cap raises
// TooLargeError rather than silently truncating the search.
inline constexpr int kSubsetDpVertexCap = 24;
inline constexpr int kBruteForceVertexCap = 20;

class TooLargeError : public std::runtime_error {
public:
    TooLargeError(const std::string& what, int size, int cap)
        : std::runtime_error(what + ": instance size " + std::to_string(size) +
                             " exceeds cap " + std::to_string(cap)) {}
};

namespace detail {

// d(v, S) for bitmask sets S, decomposed into multiplicity bitplanes so a
// query costs one popcount per plane.
class SubsetDegrees {
public:
    explicit SubsetDegrees(const MultiGraph& g) : n_(g.vertex_count()) {
        std::vector<std::vector<int>> mult(n_, std::vector<int>(n_, 0));
        int max_mult = 0;
        for (const Edge& e : g.edges()) {
            max_mult = std::max(max_mult, ++mult[e.u][e.v]);
            ++mult[e.v][e.u];
        }
        planes_ = 1;
        while ((1 << planes_) <= max_mult) ++planes_;
        bits_.assign(n_ * planes_, 0);
        for (VertexId v = 0; v < n_; ++v)
            for (VertexId u = 0; u < n_; ++u)
                for (int k = 0; k < planes_; ++k)
                    if (mult[v][u] >> k & 1) bits_[v * planes_ + k] |= 1u << u;
    }

    int degree_to(VertexId v, std::uint32_t set) const {
        int d = 0;
        for (int k = 0; k < planes_; ++k)
            d += std::popcount(bits_[v * planes_ + k] & set) << k;
        return d;
    }

private:
    int n_;
    int planes_;
    std::vector<std::uint32_t> bits_;
};

}  // namespace detail

// Exact decision procedure for bounded acyclic orientations, by dynamic
// programming over placed-vertex subsets. Placing v directly after the set S
// fixes rho(v) = d(v, S) and delta(v) = d(v, V \ (S + v)), so feasibility of
// a prefix depends only on the set of placed vertices, not their order:
// can(S) holds iff the remaining vertices can be appended after S. Witness
// reconstruction walks forward from the empty set taking the lowest-id
// placeable vertex whose successor state is completable.
inline SolveResult dcaop_oracle(const DcaopInstance& inst, int cap = kSubsetDpVertexCap) {
    const MultiGraph& g = inst.graph;
    const int n = g.vertex_count();
    if (n > cap || cap > 31) throw TooLargeError("dcaop_oracle", n, std::min(cap, 31));
    const detail::SubsetDegrees deg(g);
    const std::uint32_t full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1);
    const auto& f = inst.bounds.f_values();
    const auto& gl = inst.bounds.g_values();

    auto placeable = [&](VertexId v, std::uint32_t placed) {
        return f[v] <= deg.degree_to(v, placed) &&
               gl[v] <= deg.degree_to(v, full & ~placed & ~(1u << v));
    };

    std::vector<char> can(std::size_t(full) + 1, 0);
    can[full] = 1;
    for (std::uint32_t s = full; s-- > 0;) {
        std::uint32_t rest = full & ~s;
        while (rest) {
            VertexId v = std::countr_zero(rest);
            rest &= rest - 1;
            if (can[s | (1u << v)] && placeable(v, s)) {
                can[s] = 1;
                break;
            }
        }
    }
    if (!can[0]) return SolveResult::infeasible(InfeasibilityReason::ExhaustiveSearch);

    std::vector<VertexId> seq;
    std::uint32_t placed = 0;
    while (placed != full) {
        for (VertexId v = 0; v < n; ++v) {
            if (placed >> v & 1) continue;
            if (placeable(v, placed) && can[placed | (1u << v)]) {
                seq.push_back(v);
                placed |= 1u << v;
                break;
            }
        }
    }
    return SolveResult::feasible(VertexOrder(std::move(seq)));
}

// Oracle for the arc-disjoint-paths problem via the bound translation. A
// feasible witness is re-checked with the max-flow verifier before returning.
inline SolveResult pr1_oracle(const Pr1Instance& inst, int cap = kSubsetDpVertexCap) {
    const int n = inst.graph.vertex_count();
    if (n > cap || cap > 31) throw TooLargeError("pr1_oracle", n, std::min(cap, 31));
    std::optional<DcaopInstance> translated;
    try {
        translated = pr1_to_dcaop_bounds(inst);
    } catch (const ImmediatelyInfeasibleError& err) {
        return SolveResult::infeasible_at(InfeasibilityReason::ImmediatelyInfeasible,
                                          err.vertex());
    }
    SolveResult result = dcaop_oracle(*translated, cap);
    if (result.is_feasible()) {
        Orientation o = orientation_from_order(inst.graph, *result.order);
        if (!verify_pr1(inst, o).ok())
            throw std::logic_error("pr1_oracle: witness failed the flow check");
    }
    return result;
}

// Vertex-cover instance: does `graph` have a cover of exactly k vertices?
struct VcInstance {
    MultiGraph graph;
    int k;

    VcInstance(MultiGraph g, int k_) : graph(std::move(g)), k(k_) {
        if (k < 0 || k > graph.vertex_count())
            throw std::invalid_argument("VcInstance: k must be in [0, n]");
    }

    bool covers(const std::vector<VertexId>& set) const {
        std::vector<char> in(graph.vertex_count(), 0);
        for (VertexId v : set) in[v] = 1;
        for (const Edge& e : graph.edges())
            if (!in[e.u] && !in[e.v]) return false;
        return true;
    }

    bool operator==(const VcInstance& other) const {
        return graph == other.graph && k == other.k;
    }
};

// Exhaustive vertex-cover search. Masks are scanned in increasing value, so
// the returned cover is the lexicographically first by lowest ids; covers
// smaller than k are padded with the lowest unused ids (supersets of covers
// are covers).
inline std::optional<std::vector<VertexId>> vc_oracle(const VcInstance& inst,
                                                      int cap = kBruteForceVertexCap) {
    const int n = inst.graph.vertex_count();
    if (n > cap || cap > 31) throw TooLargeError("vc_oracle", n, std::min(cap, 31));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > inst.k) continue;
        std::vector<VertexId> set;
        for (VertexId v = 0; v < n; ++v)
            if (mask >> v & 1) set.push_back(v);
        if (!inst.covers(set)) continue;
        for (VertexId v = 0; static_cast<int>(set.size()) < inst.k; ++v)
            if (!(mask >> v & 1)) set.push_back(v);
        std::sort(set.begin(), set.end());
        return set;
    }
    return std::nullopt;
}

// Not-all-equal 3SAT instance. A literal is a nonzero signed variable index:
// +i means x_i, -i means its negation. Clauses have exactly three literal
// slots; repeats inside a clause are allowed.
struct NaeInstance {
    int variable_count;
    std::vector<std::array<int, 3>> clauses;

    NaeInstance(int nvars, std::vector<std::array<int, 3>> cls)
        : variable_count(nvars), clauses(std::move(cls)) {
        if (variable_count < 1)
            throw std::invalid_argument("NaeInstance: need at least one variable");
        for (const auto& c : clauses)
            for (int lit : c)
                if (lit == 0 || std::abs(lit) > variable_count)
                    throw std::invalid_argument("NaeInstance: literal out of range");
    }

    static bool literal_value(int lit, const std::vector<bool>& assignment) {
        bool v = assignment[std::abs(lit) - 1];
        return lit > 0 ? v : !v;
    }

    // Every clause needs at least one True and at least one False literal.
    bool satisfied_by(const std::vector<bool>& assignment) const {
        for (const auto& c : clauses) {
            bool any_true = false, any_false = false;
            for (int lit : c) (literal_value(lit, assignment) ? any_true : any_false) = true;
            if (!any_true || !any_false) return false;
        }
        return true;
    }

    bool operator==(const NaeInstance& other) const {
        return variable_count == other.variable_count && clauses == other.clauses;
    }
};

// Exhaustive not-all-equal search; first satisfying assignment in increasing
// bitmask order (bit i = value of x_{i+1}).
inline std::optional<std::vector<bool>> nae_oracle(const NaeInstance& inst,
                                                   int cap = kBruteForceVertexCap) {
    const int n = inst.variable_count;
    if (n > cap || cap > 31) throw TooLargeError("nae_oracle", n, std::min(cap, 31));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<bool> assignment(n);
        for (int i = 0; i < n; ++i) assignment[i] = (mask >> i & 1) != 0;
        if (inst.satisfied_by(assignment)) return assignment;
    }
    return std::nullopt;
}

}  // namespace orient
