#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopenergy/exact.hpp"
#include "loopenergy/graph.hpp"

namespace loopenergy {

// Hard cap on the enumerated order: 2^C(n,2) labeled graphs.
inline constexpr std::size_t kMaxSearchOrder = 8;
// Orders above this need SearchConfig::allow_large.
inline constexpr std::size_t kDefaultMaxSearchOrder = 5;
// Non-equal records with |gap| at or below this are flagged SUSPECT.
inline constexpr double kSuspectBound = 1e-6;

enum class SigmaPolicy { Interior, All };
enum class Dedupe { None, Spectral };
enum class RecordClass { Equal, LoopedGreater, SimpleGreater };

std::string_view to_string(RecordClass c);

struct SearchConfig {
    std::size_t n_min = 1;
    std::size_t n_max = kDefaultMaxSearchOrder;
    SigmaPolicy sigma_policy = SigmaPolicy::Interior;
    // Relative: a record is EQUAL when |gap| <= eq_tol * (1 + e_simple).
    double eq_tol = 1e-9;
    bool connected_only = false;
    Dedupe dedupe = Dedupe::None;
    bool allow_large = false;
    unsigned threads = 0;  // 0 = hardware concurrency

    // Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

struct SearchRecord {
    std::string graph6;
    std::vector<Vertex> loops;
    std::size_t sigma = 0;
    std::size_t n = 0;
    double e_simple = 0.0;
    double e_looped = 0.0;
    double gap = 0.0;
    RecordClass cls = RecordClass::Equal;
    bool suspect = false;
    // Set by the G u G^l family scan: whether min |lambda(G)| >= 1/2.
    std::optional<bool> theorem1_condition;

    // Emission order key.
    std::uint64_t graph_key = 0;
    std::uint64_t loop_mask = 0;
};

struct SearchSummary {
    std::size_t records = 0;
    std::size_t equal = 0;
    std::size_t looped_greater = 0;
    std::size_t simple_greater = 0;
    std::size_t suspect = 0;
    std::size_t deduplicated = 0;
};

using RecordSink = std::function<void(const SearchRecord&)>;

// Number of vertex pairs, C(n, 2).
std::size_t edge_slots(std::size_t n);

// Bit k of mask selects the k-th pair in graph6 order (0,1),(0,2),(1,2),...
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

bool is_connected(const Graph& g);

// Yields every labeled graph on n vertices once, in ascending edge-mask
// order, optionally skipping disconnected ones. Requires 1 <= n <= 8.
class GraphEnumerator {
public:
    GraphEnumerator(std::size_t n, bool connected_only);

    // Next graph, or nullopt once exhausted.
    std::optional<Graph> next();
    // Mask of the graph most recently returned by next().
    std::uint64_t mask() const noexcept { return current_; }

private:
    std::size_t n_;
    bool connected_only_;
    std::uint64_t next_mask_ = 0;
    std::uint64_t end_;
    std::uint64_t current_ = 0;
};

GraphEnumerator enumerate_graphs(std::size_t n, bool connected_only = false);

// Classifies one graph and loop placement.
SearchRecord make_record(const Graph& g, const std::vector<Vertex>& loops, double eq_tol);

// Every enumerated graph in [n_min, n_max] and every loop subset allowed by
// the sigma policy. Records reach the sink ordered by (n, graph mask, loop
// mask) regardless of the worker count.
SearchSummary scan(const SearchConfig& config, const RecordSink& sink);

// Same as scan, over a supplied corpus instead of the enumeration. Graphs
// whose order falls outside [n_min, n_max] are skipped; corpus position is
// the ordering key.
SearchSummary scan_corpus(const SearchConfig& config, const std::vector<Graph>& corpus,
                          const RecordSink& sink);

// One record per enumerated G (order in [n_min, n_max]) for the union
// G u G^l with loops on the second copy, tagged with theorem1_condition(G).
SearchSummary find_theorem_family_instances(const SearchConfig& config, const RecordSink& sink);

struct ExactCheck {
    HighPrecision gap;
    bool equal = false;
};

// Recomputes a record's gap from the certified roots of its exact
// characteristic polynomials.
ExactCheck recheck_exact(const SearchRecord& record);

std::string tsv_header(bool with_condition);
std::string format_tsv(const SearchRecord& r);
std::string format_jsonl(const SearchRecord& r);

// Locale-independent fixed 10-significant-digit rendering.
std::string format_number(double x);

}  // namespace loopenergy
