#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopenergy/graph.hpp"

namespace loopenergy {

// Adjacency-matrix text blocks: one row of space-separated 0/1 entries per
// line, a 1 on the diagonal marking a loop. Blocks are separated by blank
// lines.

// Errors name cells with 1-based (row, column).
class MatrixTextError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_adjacency_block(const LoopedGraph& g);

// Reads every block in the stream. Rows may separate entries with spaces,
// tabs, commas or '&'.
std::vector<LoopedGraph> parse_adjacency_blocks(std::istream& in);

}  // namespace loopenergy
