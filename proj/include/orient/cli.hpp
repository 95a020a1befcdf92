#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orient/generate.hpp"
#include "orient/io.hpp"
#include "orient/oracle.hpp"
#include "orient/reductions.hpp"
#include "orient/solve.hpp"
#include "orient/st_numbering.hpp"

namespace orient::cli {

using nlohmann::json;

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

namespace detail {

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;

    const std::string& at(size_t i, const char* what) const {
        if (i >= positional.size())
            throw std::invalid_argument(std::string("missing argument: ") + what);
        return positional[i];
    }
    std::optional<std::string> flag(const std::string& name) const {
        auto it = flags.find(name);
        if (it == flags.end()) return std::nullopt;
        return it->second;
    }
    int int_flag(const std::string& name, int fallback) const {
        auto v = flag(name);
        return v ? std::stoi(*v) : fallback;
    }
};

inline Args split_args(const std::vector<std::string>& argv, size_t start) {
    Args args;
    for (size_t i = start; i < argv.size(); ++i) {
        const std::string& a = argv[i];
        if (a.rfind("--", 0) == 0) {
            if (i + 1 >= argv.size())
                throw std::invalid_argument("flag " + a + " needs a value");
            args.flags[a.substr(2)] = argv[++i];
        } else {
            args.positional.push_back(a);
        }
    }
    return args;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

inline std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
        if (!item.empty()) values.push_back(std::stoi(item));
    return values;
}

// files use 1-based vertex ids
inline VertexOrder parse_order(const std::string& csv, int n) {
    std::vector<int> raw = parse_csv_ints(csv);
    if (static_cast<int>(raw.size()) != n)
        throw std::invalid_argument("order must list every vertex exactly once");
    std::vector<VertexId> seq;
    for (int id : raw) seq.push_back(id - 1);
    return VertexOrder(std::move(seq));
}

inline json ids_1based(const std::vector<VertexId>& ids) {
    json arr = json::array();
    for (VertexId v : ids) arr.push_back(v + 1);
    return arr;
}

inline json order_json(const VertexOrder& order) { return ids_1based(order.sequence()); }

inline json solve_result_json(const SolveResult& r, const std::string& solver) {
    json j;
    j["solver"] = solver;
    if (r.is_feasible()) {
        j["status"] = "feasible";
        j["order"] = order_json(*r.order);
        return j;
    }
    j["status"] = "infeasible";
    j["reason"] = to_string(r.reason);
    if (r.certificate) {
        j["certificate"] = {
            {"kind", "violating_set"},
            {"side", r.certificate->side == BoundSide::Indegree ? "indegree" : "outdegree"},
            {"vertices", ids_1based(r.certificate->violating_set)}};
    } else if (r.reason == InfeasibilityReason::NotBiconnected) {
        j["certificate"] = {{"kind", "cut_vertex"}, {"vertex", *r.blocking_vertex + 1}};
    } else if (r.reason == InfeasibilityReason::ImmediatelyInfeasible && r.blocking_vertex) {
        j["certificate"] = {{"kind", "overloaded_vertex"}, {"vertex", *r.blocking_vertex + 1}};
    }
    return j;
}

// Dispatch rule for bounded-orientation instances: all-strict bounds run the
// exact greedy, pure lower bounds the plain greedy, one-sided bounds the
// partitioned greedy, anything else the subset DP.
inline json solve_dcaop(const DcaopInstance& inst, bool force_oracle) {
    if (force_oracle) return solve_result_json(dcaop_oracle(inst), "oracle");
    if (inst.bounds.all_strict(inst.graph))
        return solve_result_json(solve_strict(inst.graph, inst.bounds), "strict");
    if (inst.bounds.g_all_zero())
        return solve_result_json(
            greedy_min_indegree_orient(inst.graph, inst.bounds.f_values()), "greedy");
    if (inst.bounds.disjoint_sided())
        return solve_result_json(solve_disjoint_bounds(inst.graph, inst.bounds), "disjoint");
    return solve_result_json(dcaop_oracle(inst), "oracle");
}

inline json solve_pr1_dispatch(const Pr1Instance& inst, bool force_oracle) {
    if (!force_oracle && inst.k == 1 && inst.l == 1)
        return solve_result_json(solve_pr1_k1(inst), "st-numbering");
    return solve_result_json(pr1_oracle(inst), "oracle");
}

inline json solve_any(const ParsedInstance& inst, bool force_oracle) {
    if (const auto* d = std::get_if<DcaopInstance>(&inst)) return solve_dcaop(*d, force_oracle);
    if (const auto* p = std::get_if<Pr1Instance>(&inst))
        return solve_pr1_dispatch(*p, force_oracle);
    if (const auto* v = std::get_if<VcInstance>(&inst)) {
        json j;
        j["solver"] = "vc-exhaustive";
        if (auto cover = vc_oracle(*v)) {
            j["status"] = "feasible";
            j["cover"] = ids_1based(*cover);
        } else {
            j["status"] = "infeasible";
            j["reason"] = to_string(InfeasibilityReason::ExhaustiveSearch);
        }
        return j;
    }
    if (const auto* nae = std::get_if<NaeInstance>(&inst)) {
        json j;
        j["solver"] = "nae-exhaustive";
        if (auto assignment = nae_oracle(*nae)) {
            j["status"] = "feasible";
            json lits = json::array();
            for (int i = 0; i < nae->variable_count; ++i)
                lits.push_back((*assignment)[i] ? i + 1 : -(i + 1));
            j["assignment"] = lits;
        } else {
            j["status"] = "infeasible";
            j["reason"] = to_string(InfeasibilityReason::ExhaustiveSearch);
        }
        return j;
    }
    const auto& p3 = std::get<Problem3Instance>(inst);
    try {
        return solve_dcaop(problem3_to_dcaop(p3), force_oracle);
    } catch (const ImmediatelyInfeasibleError& err) {
        SolveResult r = SolveResult::infeasible_at(InfeasibilityReason::ImmediatelyInfeasible,
                                                   err.vertex());
        return solve_result_json(r, "bounds-check");
    }
}

inline json dcaop_verdict_json(const DcaopVerdict& verdict) {
    json j;
    j["acyclic"] = !verdict.cycle.has_value();
    if (verdict.cycle) j["cycle"] = ids_1based(*verdict.cycle);
    json failures = json::array();
    for (const BoundFailure& f : verdict.failures)
        failures.push_back({{"vertex", f.vertex + 1},
                            {"indegree", f.indegree},
                            {"required_min", f.required_min},
                            {"allowed_max", f.allowed_max}});
    j["failures"] = failures;
    return j;
}

inline json verify_instance(const ParsedInstance& inst, const Args& args) {
    json j;
    auto order_flag = args.flag("order");
    if (const auto* d = std::get_if<DcaopInstance>(&inst)) {
        if (!order_flag) throw std::invalid_argument("verify dcaop needs --order");
        VertexOrder order = parse_order(*order_flag, d->graph.vertex_count());
        DcaopVerdict verdict = verify_dcaop(*d, orientation_from_order(d->graph, order));
        j["status"] = verdict.ok() ? "feasible" : "infeasible";
        j["verdict"] = dcaop_verdict_json(verdict);
        return j;
    }
    if (const auto* p = std::get_if<Pr1Instance>(&inst)) {
        if (!order_flag) throw std::invalid_argument("verify pr1 needs --order");
        VertexOrder order = parse_order(*order_flag, p->graph.vertex_count());
        Pr1Verdict verdict = verify_pr1(*p, orientation_from_order(p->graph, order));
        j["status"] = verdict.ok() ? "feasible" : "infeasible";
        json flows = json::array();
        for (const FlowFailure& f : verdict.flows)
            flows.push_back({{"vertex", f.vertex + 1},
                             {"paths_from_source", f.paths_from_source},
                             {"paths_to_sink", f.paths_to_sink}});
        json failing = json::array();
        for (const FlowFailure& f : verdict.failures) failing.push_back(f.vertex + 1);
        j["verdict"] = {{"acyclic", !verdict.cycle.has_value()},
                        {"required_from_source", p->k},
                        {"required_to_sink", p->l},
                        {"flows", flows},
                        {"failing_vertices", failing}};
        if (verdict.cycle) j["verdict"]["cycle"] = ids_1based(*verdict.cycle);
        return j;
    }
    if (const auto* v = std::get_if<VcInstance>(&inst)) {
        auto cover_flag = args.flag("cover");
        if (!cover_flag) throw std::invalid_argument("verify vc needs --cover");
        std::vector<int> raw = parse_csv_ints(*cover_flag);
        std::vector<VertexId> cover;
        for (int id : raw) {
            if (id < 1 || id > v->graph.vertex_count())
                throw std::invalid_argument("cover vertex out of range");
            cover.push_back(id - 1);
        }
        json uncovered = json::array();
        std::vector<char> in(v->graph.vertex_count(), 0);
        for (VertexId x : cover) in[x] = 1;
        for (EdgeId e = 0; e < v->graph.edge_count(); ++e)
            if (!in[v->graph.edge(e).u] && !in[v->graph.edge(e).v])
                uncovered.push_back(e + 1);
        bool ok = uncovered.empty() && static_cast<int>(cover.size()) == v->k;
        j["status"] = ok ? "feasible" : "infeasible";
        j["verdict"] = {{"size", cover.size()},
                        {"required_size", v->k},
                        {"uncovered_edges", uncovered}};
        return j;
    }
    if (const auto* nae = std::get_if<NaeInstance>(&inst)) {
        auto assignment_flag = args.flag("assignment");
        if (!assignment_flag) throw std::invalid_argument("verify nae needs --assignment");
        std::vector<int> lits = parse_csv_ints(*assignment_flag);
        std::vector<bool> assignment(nae->variable_count, false);
        std::vector<char> seen(nae->variable_count, 0);
        for (int lit : lits) {
            int var = std::abs(lit);
            if (lit == 0 || var > nae->variable_count)
                throw std::invalid_argument("assignment literal out of range");
            seen[var - 1] = 1;
            assignment[var - 1] = lit > 0;
        }
        for (char s : seen)
            if (!s) throw std::invalid_argument("assignment must set every variable");
        json bad = json::array();
        for (size_t c = 0; c < nae->clauses.size(); ++c) {
            int true_count = 0;
            for (int lit : nae->clauses[c])
                if (NaeInstance::literal_value(lit, assignment)) ++true_count;
            if (true_count == 0 || true_count == 3) bad.push_back(c + 1);
        }
        j["status"] = bad.empty() ? "feasible" : "infeasible";
        j["verdict"] = {{"failing_clauses", bad}};
        return j;
    }
    const auto& p3 = std::get<Problem3Instance>(inst);
    if (!order_flag) throw std::invalid_argument("verify problem3 needs --order");
    VertexOrder order = parse_order(*order_flag, p3.graph.vertex_count());
    DcaopVerdict verdict =
        verify_dcaop(problem3_to_dcaop(p3), orientation_from_order(p3.graph, order));
    j["status"] = verdict.ok() ? "feasible" : "infeasible";
    j["verdict"] = dcaop_verdict_json(verdict);
    return j;
}

inline json instance_summary(const ParsedInstance& inst) {
    json j;
    j["kind"] = kind_name(inst);
    if (const auto* n = std::get_if<NaeInstance>(&inst)) {
        j["variables"] = n->variable_count;
        j["clauses"] = n->clauses.size();
        return j;
    }
    const MultiGraph* g = nullptr;
    if (const auto* d = std::get_if<DcaopInstance>(&inst)) g = &d->graph;
    if (const auto* p = std::get_if<Pr1Instance>(&inst)) g = &p->graph;
    if (const auto* v = std::get_if<VcInstance>(&inst)) g = &v->graph;
    if (const auto* q = std::get_if<Problem3Instance>(&inst)) g = &q->graph;
    j["vertices"] = g->vertex_count();
    j["edges"] = g->edge_count();
    return j;
}

inline ParsedInstance apply_reduction(const std::string& which, const ParsedInstance& source,
                                      json& extra) {
    if (which == "vc2dcaop") {
        const auto* vc = std::get_if<VcInstance>(&source);
        if (!vc) throw std::invalid_argument("vc2dcaop expects a vc instance");
        auto [produced, map] = vc_to_dcaop(*vc);
        extra = {{"M", map.M}, {"hub", map.hub() + 1}};
        return produced;
    }
    if (which == "dcaop2pr1") {
        const auto* d = std::get_if<DcaopInstance>(&source);
        if (!d) throw std::invalid_argument("dcaop2pr1 expects a dcaop instance");
        auto [produced, map] = dcaop_to_pr1(*d);
        extra = {{"k", map.k}, {"s", map.s() + 1}, {"t", map.t() + 1}};
        return produced;
    }
    if (which == "nae2pr1") {
        const auto* nae = std::get_if<NaeInstance>(&source);
        if (!nae) throw std::invalid_argument("nae2pr1 expects a nae instance");
        auto [produced, map] = nae_to_pr1(*nae);
        extra = {{"skeleton_length", map.skeleton_length()}};
        return produced;
    }
    if (which == "simplify") {
        const auto* d = std::get_if<DcaopInstance>(&source);
        if (!d) throw std::invalid_argument("simplify expects a dcaop instance");
        auto [produced, map] = split_to_simple(*d);
        extra = {{"midpoints", map.m}};
        return produced;
    }
    if (which == "pr1toP3") {
        const auto* p = std::get_if<Pr1Instance>(&source);
        if (!p) throw std::invalid_argument("pr1toP3 expects a pr1 instance");
        Problem3Instance produced = pr1_to_problem3(*p);
        extra = {{"terminals",
                  {produced.s1 + 1, produced.s2 + 1, produced.t1 + 1, produced.t2 + 1}}};
        return produced;
    }
    throw std::invalid_argument("unknown reduction '" + which + "'");
}

inline json map_witness(const std::string& which, const std::string& direction,
                        const ParsedInstance& source, const Args& args) {
    bool forward = direction == "forward";
    if (!forward && direction != "backward")
        throw std::invalid_argument("direction must be forward or backward");
    json j;
    j["status"] = "ok";
    j["reduction"] = which;
    j["direction"] = direction;

    if (which == "vc2dcaop") {
        const auto& vc = std::get<VcInstance>(source);
        auto [produced, map] = vc_to_dcaop(vc);
        if (forward) {
            auto flag = args.flag("cover");
            if (!flag) throw std::invalid_argument("forward map needs --cover");
            std::vector<VertexId> cover;
            for (int id : parse_csv_ints(*flag)) cover.push_back(id - 1);
            VertexOrder order = cover_to_order(map, cover);
            j["order"] = order_json(order);
            j["verified"] =
                verify_dcaop(produced, orientation_from_order(produced.graph, order)).ok();
        } else {
            auto flag = args.flag("order");
            if (!flag) throw std::invalid_argument("backward map needs --order");
            VertexOrder order = parse_order(*flag, produced.graph.vertex_count());
            j["cover"] = ids_1based(orientation_to_cover(map, produced, order));
            j["verified"] = true;
        }
        return j;
    }
    if (which == "dcaop2pr1") {
        const auto& d = std::get<DcaopInstance>(source);
        auto [produced, map] = dcaop_to_pr1(d);
        auto flag = args.flag("order");
        if (!flag) throw std::invalid_argument("witness map needs --order");
        if (forward) {
            VertexOrder order = parse_order(*flag, d.graph.vertex_count());
            VertexOrder mapped = dcaop2pr1_witness_forward(map, order);
            j["order"] = order_json(mapped);
            j["verified"] =
                verify_pr1(produced, orientation_from_order(produced.graph, mapped)).ok();
        } else {
            VertexOrder order = parse_order(*flag, produced.graph.vertex_count());
            VertexOrder mapped = dcaop2pr1_witness_backward(map, order);
            j["order"] = order_json(mapped);
            j["verified"] = verify_dcaop(d, orientation_from_order(d.graph, mapped)).ok();
        }
        return j;
    }
    if (which == "nae2pr1") {
        const auto& nae = std::get<NaeInstance>(source);
        auto [produced, map] = nae_to_pr1(nae);
        if (forward) {
            auto flag = args.flag("assignment");
            if (!flag) throw std::invalid_argument("forward map needs --assignment");
            std::vector<bool> assignment(nae.variable_count, false);
            for (int lit : parse_csv_ints(*flag)) {
                if (lit == 0 || std::abs(lit) > nae.variable_count)
                    throw std::invalid_argument("assignment literal out of range");
                assignment[std::abs(lit) - 1] = lit > 0;
            }
            VertexOrder order = assignment_to_order(map, assignment);
            j["order"] = order_json(order);
            j["verified"] =
                verify_pr1(produced, orientation_from_order(produced.graph, order)).ok();
        } else {
            auto flag = args.flag("order");
            if (!flag) throw std::invalid_argument("backward map needs --order");
            VertexOrder order = parse_order(*flag, produced.graph.vertex_count());
            std::vector<bool> assignment = order_to_assignment(map, produced, order);
            json lits = json::array();
            for (int i = 0; i < nae.variable_count; ++i)
                lits.push_back(assignment[i] ? i + 1 : -(i + 1));
            j["assignment"] = lits;
            j["verified"] = true;
        }
        return j;
    }
    if (which == "simplify") {
        const auto& d = std::get<DcaopInstance>(source);
        auto [produced, map] = split_to_simple(d);
        auto flag = args.flag("order");
        if (!flag) throw std::invalid_argument("witness map needs --order");
        if (forward) {
            VertexOrder order = parse_order(*flag, d.graph.vertex_count());
            VertexOrder mapped = split_witness_forward(map, d.graph, order);
            j["order"] = order_json(mapped);
            j["verified"] =
                verify_dcaop(produced, orientation_from_order(produced.graph, mapped)).ok();
        } else {
            VertexOrder order = parse_order(*flag, produced.graph.vertex_count());
            VertexOrder mapped = split_witness_backward(map, order);
            j["order"] = order_json(mapped);
            j["verified"] = verify_dcaop(d, orientation_from_order(d.graph, mapped)).ok();
        }
        return j;
    }
    if (which == "pr1toP3") {
        const auto& p = std::get<Pr1Instance>(source);
        Problem3Instance produced = pr1_to_problem3(p);
        auto flag = args.flag("order");
        if (!flag) throw std::invalid_argument("witness map needs --order");
        if (forward) {
            VertexOrder order = parse_order(*flag, p.graph.vertex_count());
            VertexOrder mapped = problem3_witness_forward(produced, order);
            j["order"] = order_json(mapped);
            j["verified"] = verify_dcaop(problem3_to_dcaop(produced),
                                         orientation_from_order(produced.graph, mapped))
                                .ok();
        } else {
            VertexOrder order = parse_order(*flag, produced.graph.vertex_count());
            VertexOrder mapped = problem3_witness_backward(produced, order);
            j["order"] = order_json(mapped);
            j["verified"] = verify_pr1(p, orientation_from_order(p.graph, mapped)).ok();
        }
        return j;
    }
    throw std::invalid_argument("unknown reduction '" + which + "'");
}

}  // namespace detail

// usage:
//   orient solve <file>
//   orient oracle <file>
//   orient verify <file> --order 1,3,2 | --cover 1,2 | --assignment 1,-2
//   orient reduce {vc2dcaop|dcaop2pr1|nae2pr1|simplify|pr1toP3} <in> <out>
//   orient map-witness {<reduction>} {forward|backward} <source-file> --order/...
//   orient gen --kind {dcaop|pr1|vc|nae} --n N --m M --seed S [--k K --l L] [--out file]
// All commands except a bare `gen` print one JSON document on stdout.
// Exit code 0 means the command reached a decision; 1 means an error.
inline CommandResult run_command(const std::vector<std::string>& argv) {
    json j;
    try {
        if (argv.empty()) throw std::invalid_argument("no command given");
        const std::string& command = argv[0];
        detail::Args args = detail::split_args(argv, 1);

        if (command == "solve" || command == "oracle") {
            ParsedInstance inst = parse_instance(detail::read_file(args.at(0, "instance file")));
            j = detail::solve_any(inst, command == "oracle");
        } else if (command == "verify") {
            ParsedInstance inst = parse_instance(detail::read_file(args.at(0, "instance file")));
            j = detail::verify_instance(inst, args);
        } else if (command == "reduce") {
            const std::string& which = args.at(0, "reduction name");
            ParsedInstance source =
                parse_instance(detail::read_file(args.at(1, "input file")));
            json extra;
            ParsedInstance produced = detail::apply_reduction(which, source, extra);
            std::string text = serialize_instance(produced);
            detail::write_file(args.at(2, "output file"), text);
            j["status"] = "ok";
            j["reduction"] = which;
            j["input"] = detail::instance_summary(source);
            j["output"] = detail::instance_summary(produced);
            j["output"]["file"] = args.at(2, "output file");
            j["parameters"] = extra;
        } else if (command == "map-witness") {
            const std::string& which = args.at(0, "reduction name");
            const std::string& direction = args.at(1, "direction");
            ParsedInstance source =
                parse_instance(detail::read_file(args.at(2, "source instance file")));
            j = detail::map_witness(which, direction, source, args);
        } else if (command == "gen") {
            auto kind = args.flag("kind");
            if (!kind) throw std::invalid_argument("gen needs --kind");
            int n = args.int_flag("n", 6);
            int m = args.int_flag("m", kind == "nae" ? 3 : 8);
            std::uint32_t seed = static_cast<std::uint32_t>(args.int_flag("seed", 1));
            ParsedInstance inst = generate_instance(*kind, n, m, seed, args.int_flag("k", 0),
                                                    args.int_flag("l", 0));
            std::string text = serialize_instance(inst);
            if (auto out = args.flag("out")) {
                detail::write_file(*out, text);
                j["status"] = "ok";
                j["instance"] = detail::instance_summary(inst);
                j["file"] = *out;
            } else {
                return {0, text};  // raw instance text for piping
            }
        } else {
            throw std::invalid_argument("unknown command '" + command + "'");
        }
    } catch (const std::exception& err) {
        json error;
        error["status"] = "error";
        error["error"] = err.what();
        return {1, error.dump(2) + "\n"};
    }
    return {0, j.dump(2) + "\n"};
}

}  // namespace orient::cli
