#pragma once

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orient/bounds.hpp"
#include "orient/multigraph.hpp"
#include "orient/oracle.hpp"
#include "orient/reductions.hpp"

namespace orient {

// Parse failure with 1-based line and column of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

using ParsedInstance =
    std::variant<DcaopInstance, Pr1Instance, VcInstance, NaeInstance, Problem3Instance>;

inline const char* kind_name(const ParsedInstance& inst) {
    switch (inst.index()) {
        case 0: return "dcaop";
        case 1: return "pr1";
        case 2: return "vc";
        case 3: return "nae";
        default: return "problem3";
    }
}

namespace detail {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

inline int parse_int(const Token& token, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.text.begin(), token.text.end(), value);
    if (ec != std::errc() || ptr != token.text.end())
        throw ParseError(line, token.column,
                         "expected an integer, got '" + std::string(token.text) + "'");
    return value;
}

// Line-oriented reader with '#' comments; keeps the current line number for
// error reporting.
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // next significant line's tokens; false at end of input
    bool next(std::vector<Token>& tokens, int& line_no) {
        while (pos_ < text_.size()) {
            size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos) end = text_.size();
            std::string_view line = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++line_;
            if (size_t hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            tokens = tokenize(line);
            if (!tokens.empty()) {
                line_no = line_;
                return true;
            }
        }
        return false;
    }

    int current_line() const { return line_; }

private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 0;
};

// Reads m edges in "e <u> <v>" lines (1-indexed vertices), rejecting loops.
inline std::vector<Edge> read_edges(LineReader& reader, int n, int m) {
    std::vector<Edge> edges;
    std::vector<Token> tokens;
    int line;
    while (static_cast<int>(edges.size()) < m) {
        if (!reader.next(tokens, line))
            throw ParseError(reader.current_line(), 1,
                             "expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(edges.size()));
        if (tokens[0].text != "e" || tokens.size() != 3)
            throw ParseError(line, tokens[0].column, "expected 'e <u> <v>'");
        int u = parse_int(tokens[1], line), v = parse_int(tokens[2], line);
        if (u < 1 || u > n) throw ParseError(line, tokens[1].column, "vertex id out of range");
        if (v < 1 || v > n) throw ParseError(line, tokens[2].column, "vertex id out of range");
        if (u == v) throw ParseError(line, tokens[1].column, "loops are not allowed");
        edges.push_back({u - 1, v - 1});
    }
    return edges;
}

inline void expect_end(LineReader& reader) {
    std::vector<Token> tokens;
    int line;
    if (reader.next(tokens, line))
        throw ParseError(line, tokens[0].column, "unexpected content after instance body");
}

}  // namespace detail

// Grammar, shared by all instance kinds ('#' starts a comment anywhere):
//   p dcaop <n> <m>        followed by optional 'v <id> <f> <g>' lines
//                          (defaults 0 0) and exactly m 'e <u> <v>' lines
//   p pr1 <n> <m> <s> <t> <k> <l>      then m edge lines
//   p vc <n> <m> <k>                   then m edge lines
//   p nae <vars> <clauses>             then 'c <l1> <l2> <l3>' lines
//   p problem3 <n> <m> <s1> <s2> <t1> <t2>   then m edge lines
// Vertices are 1-indexed in files and 0-indexed in memory.
inline ParsedInstance parse_instance(std::string_view text) {
    using namespace detail;
    LineReader reader(text);
    std::vector<Token> tokens;
    int line;
    if (!reader.next(tokens, line)) throw ParseError(1, 1, "empty instance");
    if (tokens[0].text != "p")
        throw ParseError(line, tokens[0].column, "expected header line 'p <kind> ...'");
    if (tokens.size() < 2) throw ParseError(line, tokens[0].column, "missing instance kind");
    std::string_view kind = tokens[1].text;

    auto want = [&](size_t count, const char* shape) {
        if (tokens.size() != count) throw ParseError(line, tokens[0].column, shape);
    };

    if (kind == "dcaop") {
        want(4, "expected 'p dcaop <n> <m>'");
        int n = parse_int(tokens[2], line), m = parse_int(tokens[3], line);
        if (n < 1) throw ParseError(line, tokens[2].column, "need at least one vertex");
        if (m < 0) throw ParseError(line, tokens[3].column, "negative edge count");
        std::vector<int> f(n, 0), g(n, 0);
        std::vector<char> seen(n, 0);
        std::vector<Edge> edges;
        while (reader.next(tokens, line)) {
            if (tokens[0].text == "v") {
                if (tokens.size() != 4)
                    throw ParseError(line, tokens[0].column, "expected 'v <id> <f> <g>'");
                int id = parse_int(tokens[1], line);
                if (id < 1 || id > n)
                    throw ParseError(line, tokens[1].column, "vertex id out of range");
                if (seen[id - 1])
                    throw ParseError(line, tokens[1].column, "duplicate bounds for vertex");
                seen[id - 1] = 1;
                f[id - 1] = parse_int(tokens[2], line);
                g[id - 1] = parse_int(tokens[3], line);
                if (f[id - 1] < 0 || g[id - 1] < 0)
                    throw ParseError(line, tokens[2].column, "bounds must be nonnegative");
            } else if (tokens[0].text == "e") {
                if (tokens.size() != 3)
                    throw ParseError(line, tokens[0].column, "expected 'e <u> <v>'");
                if (static_cast<int>(edges.size()) == m)
                    throw ParseError(line, tokens[0].column, "more edges than the header declares");
                int u = parse_int(tokens[1], line), v = parse_int(tokens[2], line);
                if (u < 1 || u > n)
                    throw ParseError(line, tokens[1].column, "vertex id out of range");
                if (v < 1 || v > n)
                    throw ParseError(line, tokens[2].column, "vertex id out of range");
                if (u == v) throw ParseError(line, tokens[1].column, "loops are not allowed");
                edges.push_back({u - 1, v - 1});
            } else {
                throw ParseError(line, tokens[0].column, "expected a 'v' or 'e' line");
            }
        }
        if (static_cast<int>(edges.size()) != m)
            throw ParseError(reader.current_line(), 1,
                             "header declares " + std::to_string(m) + " edges, got " +
                                 std::to_string(edges.size()));
        MultiGraph graph(n, std::move(edges));
        for (VertexId v = 0; v < n; ++v)
            if (f[v] + g[v] > graph.degree(v))
                throw ParseError(reader.current_line(), 1,
                                 "vertex " + std::to_string(v + 1) + " has f+g = " +
                                     std::to_string(f[v] + g[v]) + " > degree " +
                                     std::to_string(graph.degree(v)));
        DegreeBounds bounds(graph, std::move(f), std::move(g));
        return DcaopInstance(std::move(graph), std::move(bounds));
    }

    if (kind == "pr1" || kind == "problem3") {
        bool pr1 = kind == "pr1";
        want(8, pr1 ? "expected 'p pr1 <n> <m> <s> <t> <k> <l>'"
                    : "expected 'p problem3 <n> <m> <s1> <s2> <t1> <t2>'");
        int n = parse_int(tokens[2], line), m = parse_int(tokens[3], line);
        if (n < 1) throw ParseError(line, tokens[2].column, "need at least one vertex");
        int a = parse_int(tokens[4], line), b = parse_int(tokens[5], line);
        int c = parse_int(tokens[6], line), d = parse_int(tokens[7], line);
        if (pr1) {
            if (a < 1 || a > n) throw ParseError(line, tokens[4].column, "s out of range");
            if (b < 1 || b > n) throw ParseError(line, tokens[5].column, "t out of range");
            if (a == b) throw ParseError(line, tokens[5].column, "s and t must differ");
            if (c < 1) throw ParseError(line, tokens[6].column, "k must be at least 1");
            if (d < 1) throw ParseError(line, tokens[7].column, "l must be at least 1");
        } else {
            for (int term : {a, b, c, d})
                if (term < 1 || term > n)
                    throw ParseError(line, tokens[4].column, "terminal out of range");
            if (a == b || a == c || a == d || b == c || b == d || c == d)
                throw ParseError(line, tokens[4].column, "terminals must be distinct");
        }
        std::vector<Edge> edges = detail::read_edges(reader, n, m);
        detail::expect_end(reader);
        MultiGraph graph(n, std::move(edges));
        if (pr1) return Pr1Instance(std::move(graph), a - 1, b - 1, c, d);
        return Problem3Instance{std::move(graph), a - 1, b - 1, c - 1, d - 1, {}, 0, -1, -1};
    }

    if (kind == "vc") {
        want(5, "expected 'p vc <n> <m> <k>'");
        int n = parse_int(tokens[2], line), m = parse_int(tokens[3], line);
        int k = parse_int(tokens[4], line);
        if (n < 1) throw ParseError(line, tokens[2].column, "need at least one vertex");
        if (k < 0 || k > n) throw ParseError(line, tokens[4].column, "k must be in [0, n]");
        std::vector<Edge> edges = detail::read_edges(reader, n, m);
        detail::expect_end(reader);
        return VcInstance(MultiGraph(n, std::move(edges)), k);
    }

    if (kind == "nae") {
        want(4, "expected 'p nae <vars> <clauses>'");
        int nvars = parse_int(tokens[2], line), nclauses = parse_int(tokens[3], line);
        if (nvars < 1) throw ParseError(line, tokens[2].column, "need at least one variable");
        std::vector<std::array<int, 3>> clauses;
        while (static_cast<int>(clauses.size()) < nclauses) {
            if (!reader.next(tokens, line))
                throw ParseError(reader.current_line(), 1,
                                 "expected " + std::to_string(nclauses) + " clause lines, got " +
                                     std::to_string(clauses.size()));
            if (tokens[0].text != "c" || tokens.size() != 4)
                throw ParseError(line, tokens[0].column, "expected 'c <l1> <l2> <l3>'");
            std::array<int, 3> clause;
            for (int i = 0; i < 3; ++i) {
                clause[i] = parse_int(tokens[i + 1], line);
                if (clause[i] == 0 || std::abs(clause[i]) > nvars)
                    throw ParseError(line, tokens[i + 1].column, "literal out of range");
            }
            clauses.push_back(clause);
        }
        detail::expect_end(reader);
        return NaeInstance(nvars, std::move(clauses));
    }

    throw ParseError(line, tokens[1].column, "unknown instance kind '" + std::string(kind) + "'");
}

namespace detail {

inline void write_edges(std::ostringstream& out, const MultiGraph& g) {
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
}

}  // namespace detail

inline std::string serialize_instance(const ParsedInstance& inst) {
    std::ostringstream out;
    if (const auto* d = std::get_if<DcaopInstance>(&inst)) {
        out << "p dcaop " << d->graph.vertex_count() << " " << d->graph.edge_count() << "\n";
        for (VertexId v = 0; v < d->graph.vertex_count(); ++v)
            if (d->bounds.f(v) > 0 || d->bounds.g(v) > 0)
                out << "v " << v + 1 << " " << d->bounds.f(v) << " " << d->bounds.g(v) << "\n";
        detail::write_edges(out, d->graph);
    } else if (const auto* p = std::get_if<Pr1Instance>(&inst)) {
        out << "p pr1 " << p->graph.vertex_count() << " " << p->graph.edge_count() << " "
            << p->s + 1 << " " << p->t + 1 << " " << p->k << " " << p->l << "\n";
        detail::write_edges(out, p->graph);
    } else if (const auto* v = std::get_if<VcInstance>(&inst)) {
        out << "p vc " << v->graph.vertex_count() << " " << v->graph.edge_count() << " " << v->k
            << "\n";
        detail::write_edges(out, v->graph);
    } else if (const auto* n = std::get_if<NaeInstance>(&inst)) {
        out << "p nae " << n->variable_count << " " << n->clauses.size() << "\n";
        for (const auto& clause : n->clauses)
            out << "c " << clause[0] << " " << clause[1] << " " << clause[2] << "\n";
    } else {
        const auto& q = std::get<Problem3Instance>(inst);
        out << "p problem3 " << q.graph.vertex_count() << " " << q.graph.edge_count() << " "
            << q.s1 + 1 << " " << q.s2 + 1 << " " << q.t1 + 1 << " " << q.t2 + 1 << "\n";
        detail::write_edges(out, q.graph);
    }
    return out.str();
}

}  // namespace orient
