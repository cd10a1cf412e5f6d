#include "loopenergy/matrix_text.hpp"

#include <string_view>

namespace loopenergy {

namespace {

std::string cell(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ',' || c == '&' || c == '\r'; }

std::vector<std::string> split_row(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_separator(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_separator(line[j])) ++j;
        if (j > i) tokens.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

LoopedGraph block_to_graph(const std::vector<std::vector<std::string>>& rows) {
    const std::size_t n = rows.size();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw MatrixTextError("matrix is not square: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            const std::string& t = rows[i][j];
            if (t != "0" && t != "1") {
                throw MatrixTextError("entry at " + cell(i, j) + " is not 0 or 1");
            }
            a[i][j] = t == "1";
        }
    }
    std::vector<Edge> edges;
    std::vector<Vertex> loops;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i]) loops.push_back(static_cast<Vertex>(i));
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a[i][j] != a[j][i]) throw MatrixTextError("asymmetric at " + cell(i, j));
            if (a[i][j]) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    }
    return LoopedGraph(Graph(n, std::move(edges)), std::move(loops));
}

}  // namespace

std::string format_adjacency_block(const LoopedGraph& g) {
    const std::size_t n = g.order();
    std::string out;
    out.reserve(n * 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j > 0) out.push_back(' ');
            const bool one = i == j ? g.has_loop(static_cast<Vertex>(i))
                                    : g.base().has_edge(static_cast<Vertex>(i),
                                                        static_cast<Vertex>(j));
            out.push_back(one ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

std::vector<LoopedGraph> parse_adjacency_blocks(std::istream& in) {
    std::vector<LoopedGraph> graphs;
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto tokens = split_row(line);
        if (tokens.empty()) {
            if (!rows.empty()) graphs.push_back(block_to_graph(rows));
            rows.clear();
            continue;
        }
        rows.push_back(std::move(tokens));
    }
    if (!rows.empty()) graphs.push_back(block_to_graph(rows));
    return graphs;
}

}  // namespace loopenergy
