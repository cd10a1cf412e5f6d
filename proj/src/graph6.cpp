#include "loopenergy/graph6.hpp"

#include <charconv>
#include <cstdint>

namespace loopenergy {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

bool in_alphabet(char c) { return c >= 63 && c <= 126; }

std::string_view trim_line_end(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

// Reads `count` 6-bit groups starting at pos as a big-endian integer.
std::uint64_t read_groups(std::string_view s, std::size_t pos, std::size_t count,
                          std::size_t base_offset) {
    std::uint64_t value = 0;
    for (std::size_t k = 0; k < count; ++k) {
        if (pos + k >= s.size()) {
            throw Graph6ParseError(base_offset + pos + k, "truncated vertex count");
        }
        const char c = s[pos + k];
        if (!in_alphabet(c)) {
            throw Graph6ParseError(base_offset + pos + k, "byte outside graph6 alphabet");
        }
        value = (value << 6) | static_cast<std::uint64_t>(c - kBias);
    }
    return value;
}

void append_order(std::string& out, std::uint64_t n) {
    auto push_groups = [&out, n](int groups) {
        for (int k = groups - 1; k >= 0; --k) {
            out.push_back(static_cast<char>(((n >> (6 * k)) & 0x3f) + kBias));
        }
    };
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        push_groups(3);
    } else {
        out.append("~~");
        push_groups(6);
    }
}

}  // namespace

Graph6ParseError::Graph6ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

InputError::InputError(std::size_t line, std::size_t offset, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line),
      offset_(offset) {}

Graph from_graph6(std::string_view text) {
    text = trim_line_end(text);
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (text.empty()) throw Graph6ParseError(base, "empty graph6 string");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (text[0] != '~') {
        n = read_groups(text, 0, 1, base);
        pos = 1;
    } else if (text.size() > 1 && text[1] == '~') {
        n = read_groups(text, 2, 6, base);
        pos = 8;
    } else {
        n = read_groups(text, 1, 3, base);
        pos = 4;
    }

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t expected = (bits + 5) / 6;
    const std::uint64_t available = text.size() - pos;
    for (std::size_t k = pos; k < text.size(); ++k) {
        if (!in_alphabet(text[k])) throw Graph6ParseError(base + k, "byte outside graph6 alphabet");
    }
    if (available < expected) {
        throw Graph6ParseError(base + text.size(),
                               "truncated edge data: expected " + std::to_string(expected) +
                                   " bytes, found " + std::to_string(available));
    }
    if (available > expected) {
        throw Graph6ParseError(base + pos + expected, "trailing bytes after edge data");
    }

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            const int group = text[pos + k / 6] - kBias;
            if (group & (0x20 >> (k % 6))) {
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
            }
        }
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    append_order(out, n);
    const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    std::vector<unsigned char> groups((bits + 5) / 6, 0);
    for (const auto& e : g.edges()) {
        // Column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
        const std::size_t k = static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u;
        groups[k / 6] |= static_cast<unsigned char>(0x20 >> (k % 6));
    }
    for (unsigned char c : groups) out.push_back(static_cast<char>(c + kBias));
    return out;
}

std::vector<Vertex> parse_loop_sidecar(std::string_view line) {
    line = trim_line_end(line);
    if (!line.starts_with("L:")) throw Graph6ParseError(0, "loop sidecar must start with \"L:\"");
    std::vector<Vertex> loops;
    std::size_t pos = 2;
    std::string_view rest = line.substr(pos);
    if (trim(rest).empty()) return loops;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
        std::string_view field = line.substr(pos, end - pos);
        std::size_t lead = 0;
        while (lead < field.size() && (field[lead] == ' ' || field[lead] == '\t')) ++lead;
        std::string_view token = trim(field);
        Vertex v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || v < 0) {
            throw Graph6ParseError(pos + lead, "expected a nonnegative loop index");
        }
        if (!loops.empty() && v <= loops.back()) {
            throw Graph6ParseError(pos + lead, "loop indices must be strictly increasing");
        }
        loops.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return loops;
}

std::string format_loop_sidecar(const std::vector<Vertex>& loops) {
    if (loops.empty()) return {};
    std::string out = "L: ";
    for (std::size_t i = 0; i < loops.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(loops[i]);
    }
    return out;
}

std::vector<GraphRecord> read_graph_records(std::istream& in) {
    std::vector<GraphRecord> records;
    std::string line;
    std::size_t lineno = 0;
    std::optional<GraphRecord> pending;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = trim_line_end(line);
        if (trim(view).empty()) continue;
        try {
            if (view.starts_with("L:")) {
                if (!pending) {
                    throw Graph6ParseError(0, "loop sidecar without a preceding graph6 line");
                }
                std::vector<Vertex> loops = parse_loop_sidecar(view);
                try {
                    pending->graph = LoopedGraph(pending->graph.base(), std::move(loops));
                } catch (const std::exception& e) {
                    throw Graph6ParseError(0, e.what());
                }
                records.push_back(std::move(*pending));
                pending.reset();
                continue;
            }
            if (pending) records.push_back(std::move(*pending));
            pending = GraphRecord{without_loops(from_graph6(view)), lineno};
        } catch (const Graph6ParseError& e) {
            throw InputError(lineno, e.offset(), e.what());
        }
    }
    if (pending) records.push_back(std::move(*pending));
    return records;
}

}  // namespace loopenergy
