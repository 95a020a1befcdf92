#include <catch2/catch_amalgamated.hpp>

#include "orient/oracle.hpp"
#include "orient/reductions.hpp"
#include "test_support.hpp"

using namespace orient;
using testsupport::Rng;

namespace {

MultiGraph triangle() { return MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
MultiGraph path3() { return MultiGraph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("cover reduction shape on the path") {
    auto [inst, map] = vc_to_dcaop(VcInstance(path3(), 1));
    CHECK(map.M == 3);
    CHECK(inst.graph.vertex_count() == 6);
    CHECK(inst.bounds.f(map.hub()) == 2 + 3);
    CHECK(inst.bounds.g(map.hub()) == 2 * 3);
    CHECK(inst.graph.degree(map.hub()) == 2 + 3 * 3);
    for (EdgeId e = 0; e < map.m; ++e) {
        CHECK(inst.bounds.f(map.edge_vertex(e)) == 1);
        CHECK(inst.bounds.g(map.edge_vertex(e)) == 0);
        CHECK(inst.graph.degree(map.edge_vertex(e)) == 3);
    }
}

TEST_CASE("the hub is always strict") {
    Rng rng(10101);
    for (int trial = 0; trial < 100; ++trial) {
        int n = testsupport::rand_int(rng, 1, 6);
        int m = n == 1 ? 0 : testsupport::rand_int(rng, 0, 8);
        MultiGraph g = n == 1 ? MultiGraph(1, {}) : testsupport::random_multigraph(rng, n, m, false);
        VcInstance vc(g, testsupport::rand_int(rng, 0, n));
        auto [inst, map] = vc_to_dcaop(vc);
        CHECK(inst.bounds.f(map.hub()) + inst.bounds.g(map.hub()) ==
              inst.graph.degree(map.hub()));
        CHECK(inst.graph.degree(map.hub()) == map.m + map.n * map.M);
    }
}

TEST_CASE("cover reduction preserves feasibility on hand instances") {
    auto [k1, map1] = vc_to_dcaop(VcInstance(triangle(), 1));
    CHECK_FALSE(dcaop_oracle(k1).is_feasible());
    auto [k2, map2] = vc_to_dcaop(VcInstance(triangle(), 2));
    CHECK(dcaop_oracle(k2).is_feasible());
}

TEST_CASE("cover witness order on the path") {
    auto [inst, map] = vc_to_dcaop(VcInstance(path3(), 1));
    VertexOrder order = cover_to_order(map, {1});
    // cover vertex, both edge-vertices, hub, uncovered vertices
    CHECK(order.sequence() == std::vector<VertexId>{1, 3, 4, 5, 0, 2});
    Orientation o = orientation_from_order(inst.graph, order);
    CHECK(verify_dcaop(inst, o).ok());
    CHECK(o.indegree(map.hub()) == map.m + map.k * map.M);
    CHECK(orientation_to_cover(map, inst, order) == std::vector<VertexId>{1});
}

TEST_CASE("covered-both-ends edges sit between their endpoints") {
    auto [inst, map] = vc_to_dcaop(VcInstance(triangle(), 2));
    VertexOrder order = cover_to_order(map, {0, 1});
    // edge 0 joins the two cover vertices, so its vertex is spliced between them
    CHECK(order.before(0, map.edge_vertex(0)));
    CHECK(order.before(map.edge_vertex(0), 1));
    CHECK(order.before(map.edge_vertex(1), map.hub()));
    CHECK(order.before(map.edge_vertex(2), map.hub()));
    CHECK(verify_dcaop(inst, orientation_from_order(inst.graph, order)).ok());
    CHECK(orientation_to_cover(map, inst, order) == std::vector<VertexId>{0, 1});
}

TEST_CASE("empty cover of an edgeless graph") {
    MultiGraph lonely(3, {});
    auto [inst, map] = vc_to_dcaop(VcInstance(lonely, 0));
    VertexOrder order = cover_to_order(map, {});
    CHECK(order.at(0) == map.hub());
    Orientation o = orientation_from_order(inst.graph, order);
    CHECK(o.indegree(map.hub()) == 0);
    CHECK(verify_dcaop(inst, o).ok());
}

TEST_CASE("cover extraction rejects non-witness orders") {
    auto [inst, map] = vc_to_dcaop(VcInstance(path3(), 1));
    // no original vertex before the hub: rho(hub) = m < f(hub)
    VertexOrder bad({3, 4, 5, 0, 1, 2});
    CHECK_THROWS_AS(orientation_to_cover(map, inst, bad), WitnessError);
    CHECK_THROWS_AS(cover_to_order(map, {0}), std::invalid_argument);   // not a cover
    CHECK_THROWS_AS(cover_to_order(map, {0, 1}), std::invalid_argument);  // wrong size
}

TEST_CASE("an oracle witness for the reduced path decodes to the middle vertex") {
    auto [inst, map] = vc_to_dcaop(VcInstance(path3(), 1));
    SolveResult r = dcaop_oracle(inst);
    REQUIRE(r.is_feasible());
    CHECK(orientation_to_cover(map, inst, *r.order) == std::vector<VertexId>{1});
}

TEST_CASE("cover round trip through witness orders") {
    Rng rng(10102);
    for (int trial = 0; trial < 200; ++trial) {
        int n = testsupport::rand_int(rng, 1, 6);
        int m = n == 1 ? 0 : testsupport::rand_int(rng, 0, 7);
        MultiGraph g = n == 1 ? MultiGraph(1, {}) : testsupport::random_multigraph(rng, n, m, false);
        int k = testsupport::rand_int(rng, 0, n);
        VcInstance vc(g, k);
        auto cover = vc_oracle(vc);
        if (!cover) continue;
        auto [inst, map] = vc_to_dcaop(vc);
        VertexOrder order = cover_to_order(map, *cover);
        Orientation o = orientation_from_order(inst.graph, order);
        CHECK(verify_dcaop(inst, o).ok());
        CHECK(o.indegree(map.hub()) == map.m + map.k * map.M);
        CHECK(orientation_to_cover(map, inst, order) == *cover);
    }
}

TEST_CASE("subdividing edges yields a simple graph with unchanged feasibility") {
    MultiGraph dbl(2, {{0, 1}, {0, 1}});
    auto [simple, map] = split_to_simple(DcaopInstance(dbl, DegreeBounds::zeros(dbl)));
    CHECK(simple.graph.vertex_count() == 4);
    CHECK(simple.graph.edge_count() == 4);
    CHECK(simple.graph.is_simple());
    CHECK(simple.bounds.f(map.midpoint(0)) == 1);
    CHECK(simple.bounds.g(map.midpoint(0)) == 1);

    auto infeasible = DcaopInstance(triangle(), DegreeBounds(triangle(), {1, 1, 1}, {0, 0, 0}));
    auto [split_inf, map2] = split_to_simple(infeasible);
    CHECK_FALSE(dcaop_oracle(infeasible).is_feasible());
    CHECK_FALSE(dcaop_oracle(split_inf).is_feasible());
}

TEST_CASE("subdivision preserves the oracle answer and witnesses map across") {
    Rng rng(10103);
    for (int trial = 0; trial < 250; ++trial) {
        int n = testsupport::rand_int(rng, 2, 5);
        int m = testsupport::rand_int(rng, 1, 8);
        MultiGraph g = testsupport::random_multigraph(rng, n, m, false);
        DcaopInstance inst(g, testsupport::random_bounds(rng, g));
        auto [split, map] = split_to_simple(inst);
        CHECK(split.graph.is_simple());
        SolveResult src = dcaop_oracle(inst);
        SolveResult dst = dcaop_oracle(split);
        CHECK(src.is_feasible() == dst.is_feasible());
        if (src.is_feasible()) {
            VertexOrder forward = split_witness_forward(map, g, *src.order);
            CHECK(verify_dcaop(split, orientation_from_order(split.graph, forward)).ok());
        }
        if (dst.is_feasible()) {
            VertexOrder back = split_witness_backward(map, *dst.order);
            CHECK(verify_dcaop(inst, orientation_from_order(g, back)).ok());
        }
    }
}

TEST_CASE("degree padding reduction on a single edge") {
    MultiGraph k2(2, {{0, 1}});
    auto [pr1, map] = dcaop_to_pr1(DcaopInstance(k2, DegreeBounds::zeros(k2)));
    CHECK(map.k == 1);
    CHECK(pr1.graph.vertex_count() == 4);
    CHECK(pr1.graph.edge_count() == 5);
    CHECK(pr1.s == map.s());
    CHECK(pr1.t == map.t());
}

TEST_CASE("padded witness indegrees rise to k") {
    Rng rng(10104);
    for (int trial = 0; trial < 200; ++trial) {
        int n = testsupport::rand_int(rng, 1, 5);
        int m = n == 1 ? 0 : testsupport::rand_int(rng, 0, 8);
        MultiGraph g = n == 1 ? MultiGraph(1, {}) : testsupport::random_multigraph(rng, n, m, false);
        DcaopInstance inst(g, testsupport::random_bounds(rng, g));
        auto [pr1, map] = dcaop_to_pr1(inst);
        SolveResult src = dcaop_oracle(inst);
        SolveResult dst = pr1_oracle(pr1);
        CHECK(src.is_feasible() == dst.is_feasible());
        if (src.is_feasible()) {
            VertexOrder forward = dcaop2pr1_witness_forward(map, *src.order);
            Orientation before = orientation_from_order(g, *src.order);
            Orientation after = orientation_from_order(pr1.graph, forward);
            CHECK(verify_pr1(pr1, after).ok());
            for (VertexId v = 0; v < n; ++v) {
                CHECK(after.indegree(v) == before.indegree(v) + map.k - inst.bounds.f(v));
                CHECK(after.indegree(v) >= map.k);
            }
        }
        if (dst.is_feasible()) {
            VertexOrder back = dcaop2pr1_witness_backward(map, *dst.order);
            CHECK(verify_dcaop(inst, orientation_from_order(g, back)).ok());
        }
    }
}

TEST_CASE("gadget counts and degree profile") {
    // three variables, one clause: x1 or not-x2 or x3
    auto [pr1, map] = nae_to_pr1(NaeInstance(3, {{{1, -2, 3}}}));
    CHECK(pr1.graph.vertex_count() == 29);
    CHECK(pr1.graph.edge_count() == 76);
    CHECK(pr1.k == 2);
    CHECK(pr1.l == 2);
    CHECK(pr1.s == map.a(0));
    CHECK(pr1.t == map.a(4 * 3 + 2 * 1 + 1));
    for (int i = 1; i <= 4 * map.n + 2 * map.m; ++i) CHECK(pr1.graph.degree(map.a(i)) == 4);
    for (int i = 1; i <= map.n; ++i) {
        CHECK(pr1.graph.degree(map.y(i)) == 4);
        CHECK(pr1.graph.degree(map.z(i)) == 4);
    }
    for (int j = 1; j <= map.m; ++j) CHECK(pr1.graph.degree(map.clause_vertex(j)) == 5);
}

TEST_CASE("gadget degree profile holds for larger shapes") {
    Rng rng(10105);
    for (int trial = 0; trial < 20; ++trial) {
        int n = testsupport::rand_int(rng, 1, 5);
        int m = testsupport::rand_int(rng, 1, 6);
        std::vector<std::array<int, 3>> clauses;
        for (int j = 0; j < m; ++j) {
            std::array<int, 3> c;
            for (int& lit : c) {
                lit = testsupport::rand_int(rng, 1, n);
                if (testsupport::rand_int(rng, 0, 1)) lit = -lit;
            }
            clauses.push_back(c);
        }
        auto [pr1, map] = nae_to_pr1(NaeInstance(n, clauses));
        CHECK(pr1.graph.vertex_count() == 8 * n + 3 * m + 2);
        CHECK(pr1.graph.edge_count() == 22 * n + 8 * m + 2);
        for (int i = 1; i <= 4 * n + 2 * m; ++i) CHECK(pr1.graph.degree(map.a(i)) == 4);
        for (int i = 1; i <= n; ++i) {
            CHECK(pr1.graph.degree(map.y(i)) == 4);
            CHECK(pr1.graph.degree(map.z(i)) == 4);
        }
        for (int j = 1; j <= m; ++j) CHECK(pr1.graph.degree(map.clause_vertex(j)) == 5);
    }
}

TEST_CASE("unsatisfiable single-variable clause makes the gadget infeasible") {
    NaeInstance nae(1, {{{1, 1, 1}}});
    CHECK_FALSE(nae_oracle(nae).has_value());
    auto [pr1, map] = nae_to_pr1(nae);
    CHECK(pr1.graph.vertex_count() == 13);
    CHECK_FALSE(pr1_oracle(pr1).is_feasible());
}

TEST_CASE("assignment witness for the three-variable gadget") {
    NaeInstance nae(3, {{{1, -2, 3}}});
    auto [pr1, map] = nae_to_pr1(nae);
    std::vector<bool> assignment{true, true, false};  // literals: x1 true, -x2 false, x3 false
    VertexOrder order = assignment_to_order(map, assignment);
    Orientation o = orientation_from_order(pr1.graph, order);
    CHECK(verify_pr1(pr1, o).ok());
    // gates end with indegree and outdegree exactly two
    for (int i = 1; i <= map.n; ++i) {
        CHECK(o.indegree(map.y(i)) == 2);
        CHECK(o.outdegree(map.y(i)) == 2);
        CHECK(o.indegree(map.z(i)) == 2);
        CHECK(o.outdegree(map.z(i)) == 2);
    }
    // one True literal in the clause: indegree 2, outdegree 3
    CHECK(o.indegree(map.clause_vertex(1)) == 2);
    CHECK(o.outdegree(map.clause_vertex(1)) == 3);

    CHECK(order_to_assignment(map, pr1, order) == assignment);
}

TEST_CASE("two true literals flip the clause vertex profile") {
    NaeInstance nae(2, {{{1, 2, -1}}});
    auto [pr1, map] = nae_to_pr1(nae);
    // x1 = true, x2 = true: literals x1, x2 true and -x1 false
    VertexOrder order = assignment_to_order(map, {true, true});
    Orientation o = orientation_from_order(pr1.graph, order);
    CHECK(verify_pr1(pr1, o).ok());
    CHECK(o.indegree(map.clause_vertex(1)) == 3);
    CHECK(o.outdegree(map.clause_vertex(1)) == 2);
}

TEST_CASE("non-witness assignments are rejected with the clause named") {
    NaeInstance nae(1, {{{1, 1, 1}}});
    auto [pr1, map] = nae_to_pr1(nae);
    CHECK_THROWS_WITH(assignment_to_order(map, {true}),
                      Catch::Matchers::ContainsSubstring("clause 1") &&
                          Catch::Matchers::ContainsSubstring("indegree 4"));
    CHECK_THROWS_WITH(assignment_to_order(map, {false}),
                      Catch::Matchers::ContainsSubstring("indegree 1"));
}

TEST_CASE("assignment round trip over every satisfying assignment") {
    std::vector<NaeInstance> instances = {
        NaeInstance(1, {{{1, -1, 1}}}),
        NaeInstance(2, {{{1, 2, 2}}}),
        NaeInstance(2, {{{1, -2, 2}}, {{-1, 2, 1}}}),
        NaeInstance(2, {{{-1, -2, -2}}}),
    };
    for (const NaeInstance& nae : instances) {
        auto [pr1, map] = nae_to_pr1(nae);
        for (std::uint32_t mask = 0; mask < (1u << nae.variable_count); ++mask) {
            std::vector<bool> assignment(nae.variable_count);
            for (int i = 0; i < nae.variable_count; ++i) assignment[i] = (mask >> i & 1) != 0;
            if (!nae.satisfied_by(assignment)) continue;
            VertexOrder order = assignment_to_order(map, assignment);
            CHECK(verify_pr1(pr1, orientation_from_order(pr1.graph, order)).ok());
            CHECK(order_to_assignment(map, pr1, order) == assignment);
        }
    }
}

TEST_CASE("an oracle witness for the gadget decodes to a satisfying assignment") {
    NaeInstance nae(2, {{{1, -2, -2}}});
    auto [pr1, map] = nae_to_pr1(nae);
    SolveResult r = pr1_oracle(pr1);
    REQUIRE(r.is_feasible());
    std::vector<bool> assignment = order_to_assignment(map, pr1, *r.order);
    CHECK(nae.satisfied_by(assignment));
    // exactly one of each literal pair precedes its y gate (else the z gate
    // could not reach indegree two)
    for (int i = 1; i <= map.n; ++i) {
        bool pos = r.order->before(map.literal_vertex(i), map.y(i));
        bool neg = r.order->before(map.literal_vertex(-i), map.y(i));
        CHECK(pos != neg);
    }
}

TEST_CASE("order_to_assignment rejects a broken skeleton") {
    NaeInstance nae(1, {{{1, -1, 1}}});
    auto [pr1, map] = nae_to_pr1(nae);
    VertexOrder order = assignment_to_order(map, {true});
    std::vector<VertexId> seq = order.sequence();
    // swap a_1 and a_2 so the skeleton runs backwards
    auto p1 = std::find(seq.begin(), seq.end(), map.a(1));
    auto p2 = std::find(seq.begin(), seq.end(), map.a(2));
    std::iter_swap(p1, p2);
    CHECK_THROWS_AS(order_to_assignment(map, pr1, VertexOrder(seq)), WitnessError);
}

TEST_CASE("four-terminal form of a doubled path") {
    // s=0, u=1, v=2, t=3 with every edge doubled
    MultiGraph g(4, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}});
    Pr1Instance inst(g, 0, 3, 2, 2);
    Problem3Instance p3 = pr1_to_problem3(inst);
    CHECK(p3.graph.is_simple());
    // two midpoints, one per copy of the doubled internal edge
    int midpoints = 0;
    for (VertexId w : p3.midpoint_of)
        if (w >= 0) {
            ++midpoints;
            CHECK(p3.graph.degree(w) == 4);
        }
    CHECK(midpoints == 2);
    // doubled terminal edges split across the two copies
    CHECK(p3.graph.multiplicity(p3.s1, 1) == 1);
    CHECK(p3.graph.multiplicity(p3.s2, 1) == 1);
    CHECK(p3.graph.multiplicity(p3.t1, 2) == 1);
    CHECK(p3.graph.multiplicity(p3.t2, 2) == 1);

    SolveResult src = pr1_oracle(inst);
    SolveResult dst = dcaop_oracle(problem3_to_dcaop(p3));
    CHECK(src.is_feasible());
    CHECK(dst.is_feasible());
    VertexOrder forward = problem3_witness_forward(p3, *src.order);
    CHECK(verify_dcaop(problem3_to_dcaop(p3), orientation_from_order(p3.graph, forward)).ok());
    VertexOrder back = problem3_witness_backward(p3, *dst.order);
    CHECK(verify_pr1(inst, orientation_from_order(g, back)).ok());
}

TEST_CASE("four-terminal transform rejects heavy terminal multiplicities") {
    MultiGraph g(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}});
    CHECK_THROWS_AS(pr1_to_problem3(Pr1Instance(g, 0, 2, 2, 2)), std::invalid_argument);
}

TEST_CASE("four-terminal transform of a gadget stays simple with degree-4 midpoints") {
    auto [pr1, map] = nae_to_pr1(NaeInstance(1, {{{1, -1, 1}}}));
    Problem3Instance p3 = pr1_to_problem3(pr1);
    CHECK(p3.graph.is_simple());
    for (VertexId w : p3.midpoint_of)
        if (w >= 0) CHECK(p3.graph.degree(w) == 4);
    // a satisfying assignment's witness maps forward to the four-terminal form
    VertexOrder source_witness = assignment_to_order(map, {true});
    VertexOrder forward = problem3_witness_forward(p3, source_witness);
    CHECK(verify_dcaop(problem3_to_dcaop(p3), orientation_from_order(p3.graph, forward)).ok());
}

TEST_CASE("four-terminal feasibility matches the oracle on small instances") {
    Rng rng(10106);
    int compared = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = testsupport::rand_int(rng, 3, 5);
        int m = testsupport::rand_int(rng, n, 8);
        MultiGraph g = testsupport::random_multigraph(rng, n, m);
        Pr1Instance inst(g, 0, n - 1, 2, 2);
        std::optional<Problem3Instance> p3;
        try {
            p3 = pr1_to_problem3(inst);
        } catch (const std::invalid_argument&) {
            continue;  // terminal multiplicity above 2
        }
        CHECK(p3->graph.is_simple());
        if (p3->graph.vertex_count() > kSubsetDpVertexCap) continue;
        bool src = pr1_oracle(inst).is_feasible();
        bool dst;
        try {
            dst = dcaop_oracle(problem3_to_dcaop(*p3)).is_feasible();
        } catch (const ImmediatelyInfeasibleError&) {
            dst = false;  // some vertex has fewer than four neighbors
        }
        CHECK(src == dst);
        ++compared;
    }
    CHECK(compared > 30);
}
