#pragma once

#include "chipfire/constructions.hpp"

#include <stdexcept>
#include <string>

namespace chipfire {

/// Parse failure with the 1-based line it happened on.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(what + ", line " + std::to_string(line)), line(line) {}

    int line;
};

/// Line-oriented game format:
///   header: ("digraph" | "graph") <vertex count>
///   e <u> <v>          edge (directed or undirected per header)
///   chips <v> <count>  chip count; unlisted vertices hold 0
///   designated <v>     optional designated vertex
///   period <p>         optional predicted period
/// '#' starts a comment; blank lines are ignored; anything else is rejected.
GadgetGame parse_game_file(const std::string& text);

/// Canonical serialization: sorted edges, sorted nonzero chip records, then
/// meta lines. parse(write(g)) reproduces g; write(parse(t)) reproduces any
/// canonical t byte for byte.
std::string write_game_file(const GadgetGame& game);

/// GraphViz DOT with every vertex labelled "index:chips"; the designated
/// vertex, when present, is drawn doubly circled.
std::string export_dot(const GadgetGame& game);

} // namespace chipfire
