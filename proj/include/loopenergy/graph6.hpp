#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "loopenergy/graph.hpp"

namespace loopenergy {

// Malformed graph6 or sidecar input. offset() is the 0-based byte position
// in the offending line.
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(std::size_t offset, const std::string& what);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Decodes one graph6 line. A leading ">>graph6<<" header and a trailing
// newline are accepted; padding bits in the last byte are ignored.
Graph from_graph6(std::string_view text);

// Canonical graph6 encoding, without header or newline.
std::string to_graph6(const Graph& g);

// Parses "L: i1,i2,..." into loop indices. "L:" alone means no loops.
std::vector<Vertex> parse_loop_sidecar(std::string_view line);

// "L: i1,i2,..." for the sorted loop set; empty string when there are none.
std::string format_loop_sidecar(const std::vector<Vertex>& loops);

// One graph read from a graph6 stream, plus its loop sidecar if present.
struct GraphRecord {
    LoopedGraph graph;
    std::size_t line = 0;  // 1-based line of the graph6 text
};

// Reads a stream of graph6 lines, each optionally followed by an "L:" loop
// sidecar line. Blank lines are skipped. Parse errors are rethrown as
// InputError carrying the line number.
class InputError : public std::runtime_error {
public:
    InputError(std::size_t line, std::size_t offset, const std::string& what);
    std::size_t line() const noexcept { return line_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

std::vector<GraphRecord> read_graph_records(std::istream& in);

}  // namespace loopenergy
