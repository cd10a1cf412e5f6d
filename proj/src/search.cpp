#include "loopenergy/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <fmt/format.h>
#include <json.hpp>

#include "loopenergy/energy.hpp"
#include "loopenergy/graph6.hpp"

namespace loopenergy {

namespace {

constexpr std::uint64_t kMasksPerUnit = 512;

struct Pending {
    SearchRecord record;
    std::string dedupe_key;
};

using UnitResult = std::vector<Pending>;

std::string spectral_key(std::size_t sigma, const Spectrum& simple, const Spectrum& looped) {
    std::string key = std::to_string(simple.size()) + ":" + std::to_string(sigma);
    for (const Spectrum* s : {&simple, &looped}) {
        key.push_back('|');
        for (double x : *s) {
            key += std::to_string(std::llround(x * 1e6));
            key.push_back(',');
        }
    }
    return key;
}

std::vector<Vertex> loops_from_mask(std::uint64_t mask, Vertex offset = 0) {
    std::vector<Vertex> loops;
    for (int v = 0; mask != 0; ++v, mask >>= 1) {
        if (mask & 1u) loops.push_back(v + offset);
    }
    return loops;
}

void classify(SearchRecord& r, double eq_tol) {
    r.gap = r.e_looped - r.e_simple;
    const double tol = eq_tol * (1.0 + r.e_simple);
    if (std::abs(r.gap) <= tol) {
        r.cls = RecordClass::Equal;
    } else {
        r.cls = r.gap > 0 ? RecordClass::LoopedGreater : RecordClass::SimpleGreater;
        r.suspect = std::abs(r.gap) <= kSuspectBound;
    }
}

bool sigma_allowed(SigmaPolicy policy, std::size_t sigma, std::size_t n) {
    return policy == SigmaPolicy::All || (sigma > 0 && sigma < n);
}

// All loop placements of one graph allowed by the policy, ascending by mask.
void scan_graph(const Graph& g, std::uint64_t key, const SearchConfig& config,
                UnitResult& out) {
    const std::size_t n = g.order();
    const EnergyReport simple = energy_simple(g);
    const std::string g6 = to_graph6(g);
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t lm = 0; lm < subsets; ++lm) {
        const auto sigma = static_cast<std::size_t>(std::popcount(lm));
        if (!sigma_allowed(config.sigma_policy, sigma, n)) continue;
        Pending p;
        SearchRecord& r = p.record;
        r.graph6 = g6;
        r.loops = loops_from_mask(lm);
        r.sigma = sigma;
        r.n = n;
        r.graph_key = key;
        r.loop_mask = lm;
        r.e_simple = simple.energy;
        const EnergyReport looped =
            sigma == 0 ? simple : energy_looped(LoopedGraph(g, r.loops));
        r.e_looped = looped.energy;
        classify(r, config.eq_tol);
        if (config.dedupe == Dedupe::Spectral) {
            p.dedupe_key = spectral_key(sigma, simple.spectrum, looped.spectrum);
        }
        out.push_back(std::move(p));
    }
}

class Emitter {
public:
    Emitter(const SearchConfig& config, const RecordSink& sink) : config_(config), sink_(sink) {}

    void emit(UnitResult& unit) {
        for (auto& p : unit) {
            if (config_.dedupe == Dedupe::Spectral && !seen_.insert(p.dedupe_key).second) {
                ++summary_.deduplicated;
                continue;
            }
            const SearchRecord& r = p.record;
            ++summary_.records;
            switch (r.cls) {
                case RecordClass::Equal: ++summary_.equal; break;
                case RecordClass::LoopedGreater: ++summary_.looped_greater; break;
                case RecordClass::SimpleGreater: ++summary_.simple_greater; break;
            }
            if (r.suspect) ++summary_.suspect;
            sink_(r);
        }
    }

    const SearchSummary& summary() const noexcept { return summary_; }

private:
    const SearchConfig& config_;
    const RecordSink& sink_;
    SearchSummary summary_;
    std::unordered_set<std::string> seen_;
};

unsigned worker_count(const SearchConfig& config) {
    if (config.threads > 0) return config.threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Runs work(i) for i in [0, units) on a pool and hands results to the
// emitter in index order, one bounded batch at a time.
template <typename Work>
SearchSummary run_ordered(const SearchConfig& config, const RecordSink& sink, std::size_t units,
                          Work work) {
    Emitter emitter(config, sink);
    const unsigned threads = worker_count(config);
    const std::size_t batch = std::size_t{threads} * 4;
    std::vector<UnitResult> results;
    for (std::size_t first = 0; first < units; first += batch) {
        const std::size_t count = std::min(batch, units - first);
        results.assign(count, {});
        if (threads == 1 || count == 1) {
            for (std::size_t i = 0; i < count; ++i) results[i] = work(first + i);
        } else {
            std::atomic<std::size_t> cursor{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t) {
                pool.emplace_back([&] {
                    for (std::size_t i; (i = cursor.fetch_add(1)) < count;) {
                        try {
                            results[i] = work(first + i);
                        } catch (...) {
                            std::lock_guard lock(failure_mutex);
                            if (!failure) failure = std::current_exception();
                        }
                    }
                });
            }
            pool.clear();
            if (failure) std::rethrow_exception(failure);
        }
        for (auto& r : results) emitter.emit(r);
    }
    return emitter.summary();
}

struct MaskRange {
    std::size_t n;
    std::uint64_t begin;
    std::uint64_t end;
};

std::vector<MaskRange> mask_units(const SearchConfig& config) {
    std::vector<MaskRange> units;
    for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
        const std::uint64_t total = std::uint64_t{1} << edge_slots(n);
        for (std::uint64_t b = 0; b < total; b += kMasksPerUnit) {
            units.push_back({n, b, std::min(total, b + kMasksPerUnit)});
        }
    }
    return units;
}

}  // namespace

std::string_view to_string(RecordClass c) {
    switch (c) {
        case RecordClass::Equal: return "EQUAL";
        case RecordClass::LoopedGreater: return "LOOPED_GREATER";
        case RecordClass::SimpleGreater: return "SIMPLE_GREATER";
    }
    return "?";
}

void SearchConfig::validate() const {
    if (n_min < 1) throw std::invalid_argument("n_min must be at least 1");
    if (n_min > n_max) throw std::invalid_argument("n_min must not exceed n_max");
    if (n_max > kMaxSearchOrder) {
        throw std::invalid_argument("n_max " + std::to_string(n_max) + " exceeds the hard cap of " +
                                    std::to_string(kMaxSearchOrder));
    }
    if (n_max > kDefaultMaxSearchOrder && !allow_large) {
        throw std::invalid_argument(
            "n_max " + std::to_string(n_max) + " enumerates 2^" +
            std::to_string(edge_slots(n_max)) +
            " labeled graphs, each with up to 2^n loop placements; pass the large-order "
            "acknowledgement to run it");
    }
    if (!(eq_tol > 0.0) || !std::isfinite(eq_tol)) {
        throw std::invalid_argument("eq_tol must be a positive finite number");
    }
}

std::size_t edge_slots(std::size_t n) { return n * (n > 0 ? n - 1 : 0) / 2; }

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            if (mask >> k & 1u) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    }
    return Graph(n, std::move(edges));
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.order();
    if (n <= 1) return true;
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

GraphEnumerator::GraphEnumerator(std::size_t n, bool connected_only)
    : n_(n), connected_only_(connected_only) {
    if (n < 1 || n > kMaxSearchOrder) {
        throw std::invalid_argument("enumeration order " + std::to_string(n) +
                                    " outside [1, " + std::to_string(kMaxSearchOrder) + "]");
    }
    end_ = std::uint64_t{1} << edge_slots(n);
}

std::optional<Graph> GraphEnumerator::next() {
    while (next_mask_ < end_) {
        const std::uint64_t mask = next_mask_++;
        Graph g = graph_from_mask(n_, mask);
        if (connected_only_ && !is_connected(g)) continue;
        current_ = mask;
        return g;
    }
    return std::nullopt;
}

GraphEnumerator enumerate_graphs(std::size_t n, bool connected_only) {
    return GraphEnumerator(n, connected_only);
}

SearchRecord make_record(const Graph& g, const std::vector<Vertex>& loops, double eq_tol) {
    const LoopedGraph looped = with_loops(g, loops);
    SearchRecord r;
    r.graph6 = to_graph6(g);
    r.loops = looped.loops();
    r.sigma = looped.sigma();
    r.n = g.order();
    for (Vertex v : r.loops) r.loop_mask |= std::uint64_t{1} << v;
    r.e_simple = energy_simple(g).energy;
    r.e_looped = energy_looped(looped).energy;
    classify(r, eq_tol);
    return r;
}

SearchSummary scan(const SearchConfig& config, const RecordSink& sink) {
    config.validate();
    const auto units = mask_units(config);
    return run_ordered(config, sink, units.size(), [&](std::size_t i) {
        const MaskRange& u = units[i];
        UnitResult out;
        for (std::uint64_t mask = u.begin; mask < u.end; ++mask) {
            Graph g = graph_from_mask(u.n, mask);
            if (config.connected_only && !is_connected(g)) continue;
            scan_graph(g, mask, config, out);
        }
        return out;
    });
}

SearchSummary scan_corpus(const SearchConfig& config, const std::vector<Graph>& corpus,
                          const RecordSink& sink) {
    config.validate();
    return run_ordered(config, sink, corpus.size(), [&](std::size_t i) {
        UnitResult out;
        const Graph& g = corpus[i];
        if (g.order() < config.n_min || g.order() > config.n_max) return out;
        if (config.connected_only && !is_connected(g)) return out;
        scan_graph(g, i, config, out);
        return out;
    });
}

SearchSummary find_theorem_family_instances(const SearchConfig& config, const RecordSink& sink) {
    config.validate();
    const auto units = mask_units(config);
    return run_ordered(config, sink, units.size(), [&](std::size_t i) {
        const MaskRange& u = units[i];
        UnitResult out;
        for (std::uint64_t mask = u.begin; mask < u.end; ++mask) {
            const Graph g = graph_from_mask(u.n, mask);
            if (config.connected_only && !is_connected(g)) continue;
            const LoopedGraph parts[] = {without_loops(g), with_all_loops(g)};
            const LoopedGraph h = union_looped(parts);
            const ConditionResult cond = theorem1_condition(g);

            Pending p;
            SearchRecord& r = p.record;
            r.graph6 = to_graph6(h.base());
            r.loops = h.loops();
            r.sigma = h.sigma();
            r.n = h.order();
            r.graph_key = mask;
            r.loop_mask = ((std::uint64_t{1} << u.n) - 1) << u.n;
            r.theorem1_condition = cond.holds;
            const EnergyReport simple = energy_simple(h.base());
            const EnergyReport looped = energy_looped(h);
            r.e_simple = simple.energy;
            r.e_looped = looped.energy;
            classify(r, config.eq_tol);
            if (config.dedupe == Dedupe::Spectral) {
                p.dedupe_key = spectral_key(r.sigma, simple.spectrum, looped.spectrum);
            }
            out.push_back(std::move(p));
        }
        return out;
    });
}

ExactCheck recheck_exact(const SearchRecord& record) {
    const LoopedGraph g(from_graph6(record.graph6), record.loops);
    ExactCheck check;
    check.gap = certified_energy_gap(g);
    check.equal = abs(check.gap) <= kCertifiedEqualityBound;
    return check;
}

std::string format_number(double x) { return fmt::format("{:#.10g}", x); }

std::string tsv_header(bool with_condition) {
    std::string h = "graph6\tloops\tsigma\tn\te_simple\te_looped\tgap\tclass\tflag";
    if (with_condition) h += "\tthm1_condition";
    return h;
}

std::string format_tsv(const SearchRecord& r) {
    std::string loops = r.loops.empty() ? "-" : format_loop_sidecar(r.loops).substr(3);
    std::string line = fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}", r.graph6, loops, r.sigma,
                                   r.n, format_number(r.e_simple), format_number(r.e_looped),
                                   format_number(r.gap), to_string(r.cls),
                                   r.suspect ? "SUSPECT" : "-");
    if (r.theorem1_condition) line += *r.theorem1_condition ? "\ttrue" : "\tfalse";
    return line;
}

std::string format_jsonl(const SearchRecord& r) {
    // Numbers are rendered by format_number so the JSON and TSV forms agree
    // digit for digit.
    std::string loops = "[";
    for (std::size_t i = 0; i < r.loops.size(); ++i) {
        if (i > 0) loops.push_back(',');
        loops += std::to_string(r.loops[i]);
    }
    loops.push_back(']');
    std::string line = fmt::format(
        "{{\"graph6\":{},\"loops\":{},\"sigma\":{},\"n\":{},\"e_simple\":{},\"e_looped\":{},"
        "\"gap\":{},\"class\":\"{}\",\"suspect\":{}",
        nlohmann::json(r.graph6).dump(), loops, r.sigma, r.n, format_number(r.e_simple),
        format_number(r.e_looped), format_number(r.gap), to_string(r.cls),
        r.suspect ? "true" : "false");
    if (r.theorem1_condition) {
        line += fmt::format(",\"thm1_condition\":{}", *r.theorem1_condition ? "true" : "false");
    }
    line.push_back('}');
    return line;
}

}  // namespace loopenergy
