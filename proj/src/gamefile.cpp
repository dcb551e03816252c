#include "chipfire/gamefile.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace chipfire {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#')
            break;
        tokens.push_back(tok);
    }
    return tokens;
}

int parse_vertex(const std::string& tok, int vertex_count, int line) {
    std::size_t used = 0;
    int v;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected a vertex index, got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(line, "expected a vertex index, got '" + tok + "'");
    if (v < 0 || v >= vertex_count)
        throw ParseError(line, "vertex index out of range");
    return v;
}

BigInt parse_chip_count(const std::string& tok, int line) {
    for (std::size_t i = 0; i < tok.size(); ++i) {
        const char ch = tok[i];
        if (ch == '-' && i == 0)
            continue;
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError(line, "expected a chip count, got '" + tok + "'");
    }
    BigInt value;
    try {
        value = BigInt(tok);
    } catch (const std::exception&) {
        throw ParseError(line, "expected a chip count, got '" + tok + "'");
    }
    if (value < 0)
        throw ParseError(line, "negative chips");
    return value;
}

} // namespace

GadgetGame parse_game_file(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;

    bool directed = false;
    int vertex_count = -1;
    std::vector<Edge> edges;
    std::set<Edge> undirected_seen;
    std::map<int, BigInt> chips;
    std::optional<int> designated;
    std::optional<std::uint64_t> predicted;

    while (std::getline(is, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty())
            continue;

        if (vertex_count < 0) {
            if (tokens[0] != "digraph" && tokens[0] != "graph")
                throw ParseError(line_no, "expected header 'digraph N' or 'graph N'");
            if (tokens.size() != 2)
                throw ParseError(line_no, "header needs exactly one vertex count");
            directed = tokens[0] == "digraph";
            try {
                std::size_t used = 0;
                vertex_count = std::stoi(tokens[1], &used);
                if (used != tokens[1].size())
                    throw std::invalid_argument(tokens[1]);
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad vertex count '" + tokens[1] + "'");
            }
            if (vertex_count < 0)
                throw ParseError(line_no, "vertex count must be nonnegative");
            continue;
        }

        if (tokens[0] == "e") {
            if (tokens.size() != 3)
                throw ParseError(line_no, "edge needs two endpoints");
            int u = parse_vertex(tokens[1], vertex_count, line_no);
            int v = parse_vertex(tokens[2], vertex_count, line_no);
            if (u == v)
                throw ParseError(line_no, "self-loops are not allowed");
            if (!directed) {
                Edge key{std::min(u, v), std::max(u, v)};
                if (!undirected_seen.insert(key).second)
                    throw ParseError(line_no, "duplicate undirected edge");
            }
            edges.push_back({u, v});
        } else if (tokens[0] == "chips") {
            if (tokens.size() != 3)
                throw ParseError(line_no, "chips needs a vertex and a count");
            int v = parse_vertex(tokens[1], vertex_count, line_no);
            chips[v] = parse_chip_count(tokens[2], line_no);
        } else if (tokens[0] == "designated") {
            if (tokens.size() != 2)
                throw ParseError(line_no, "designated needs one vertex");
            designated = parse_vertex(tokens[1], vertex_count, line_no);
        } else if (tokens[0] == "period") {
            if (tokens.size() != 2)
                throw ParseError(line_no, "period needs one positive integer");
            long long p;
            try {
                std::size_t used = 0;
                p = std::stoll(tokens[1], &used);
                if (used != tokens[1].size())
                    throw std::invalid_argument(tokens[1]);
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad period '" + tokens[1] + "'");
            }
            if (p <= 0)
                throw ParseError(line_no, "period must be positive");
            predicted = static_cast<std::uint64_t>(p);
        } else {
            throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
        }
    }
    if (vertex_count < 0)
        throw ParseError(line_no == 0 ? 1 : line_no, "missing header");

    GadgetGame game;
    if (directed)
        game.graph = DirectedMultigraph(vertex_count, std::move(edges));
    else
        game.graph = UndirectedGraph(vertex_count, std::move(edges));
    game.initial.assign(vertex_count, 0);
    for (const auto& [v, k] : chips)
        game.initial[v] = k;
    game.designated_vertex = designated;
    game.predicted_period = predicted;
    return game;
}

std::string write_game_file(const GadgetGame& game) {
    std::ostringstream os;
    std::vector<Edge> edges;
    if (game.is_directed()) {
        os << "digraph " << game.digraph().vertex_count() << "\n";
        edges = game.digraph().sorted_edges();
    } else {
        os << "graph " << game.ungraph().vertex_count() << "\n";
        edges = game.ungraph().edges();
    }
    for (const auto& [u, v] : edges)
        os << "e " << u << " " << v << "\n";
    for (std::size_t v = 0; v < game.initial.size(); ++v)
        if (game.initial[v] != 0)
            os << "chips " << v << " " << game.initial[v] << "\n";
    if (game.designated_vertex)
        os << "designated " << *game.designated_vertex << "\n";
    if (game.predicted_period)
        os << "period " << *game.predicted_period << "\n";
    return os.str();
}

std::string export_dot(const GadgetGame& game) {
    std::ostringstream os;
    const int n = game.vertex_count();
    os << (game.is_directed() ? "digraph" : "graph") << " chipfire {\n";
    for (int v = 0; v < n; ++v) {
        os << "  v" << v << " [label=\"" << v << ":" << game.initial[v] << "\"";
        if (game.designated_vertex && *game.designated_vertex == v)
            os << " shape=doublecircle";
        os << "];\n";
    }
    if (game.is_directed()) {
        for (const auto& [u, v] : game.digraph().sorted_edges())
            os << "  v" << u << " -> v" << v << ";\n";
    } else {
        for (const auto& [u, v] : game.ungraph().edges())
            os << "  v" << u << " -- v" << v << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace chipfire
