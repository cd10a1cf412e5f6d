// loop_energy: energies of graphs with self-loops from the command line.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "loopenergy/energy.hpp"
#include "loopenergy/graph6.hpp"
#include "loopenergy/matrix_text.hpp"
#include "loopenergy/search.hpp"
#include "loopenergy/spectra.hpp"

namespace le = loopenergy;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kTheoremViolated = 1;
constexpr int kUsageOrParse = 2;
constexpr int kConditionFails = 3;
constexpr int kInternal = 4;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<le::GraphRecord> read_records(const std::string& path) {
    std::istringstream in(read_all(path));
    return le::read_graph_records(in);
}

// Eigenvalues within rounding of zero print as zero.
double snap(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

std::string join_numbers(const le::Spectrum& s) {
    std::string out;
    for (double x : s) {
        if (!out.empty()) out.push_back(' ');
        out += le::format_number(snap(x));
    }
    return out;
}

void print_report(std::ostream& out, const le::EnergyReport& r) {
    out << "n " << r.n << '\n'
        << "sigma " << r.sigma << '\n'
        << "shift " << le::format_number(r.shift) << '\n'
        << "spectrum " << join_numbers(r.spectrum) << '\n'
        << "energy " << le::format_number(r.energy) << '\n';
}

int cmd_energy(const std::string& input) {
    const auto records = read_records(input);
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i > 0) std::cout << '\n';
        print_report(std::cout, le::energy_looped(records[i].graph));
    }
    return kOk;
}

int cmd_spectrum(const std::string& input, bool with_charpoly) {
    const auto records = read_records(input);
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i > 0) std::cout << '\n';
        const auto a = le::adjacency_matrix(records[i].graph);
        std::cout << "spectrum " << join_numbers(le::eigenvalues(a)) << '\n';
        if (with_charpoly) {
            const le::CharPoly phi = le::char_poly(a);
            std::cout << "charpoly";
            for (const auto& c : phi.coefficients()) std::cout << ' ' << c;
            std::cout << '\n';
        }
    }
    return kOk;
}

int cmd_verify(const std::string& input, int theorem, std::size_t p, std::size_t q) {
    if (theorem == 2 && p + q == 0) throw UsageError("--p plus --q must be at least 1");
    const auto records = read_records(input);
    int status = kOk;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const le::Graph& g = records[i].graph.base();
        const le::TheoremVerdict v =
            theorem == 1 ? le::verify_theorem1(g) : le::verify_theorem2(g, p, q);
        if (i > 0) std::cout << '\n';
        std::cout << "graph6 " << le::to_graph6(g) << '\n';
        if (theorem == 2) std::cout << "p " << p << "\nq " << q << '\n';
        std::cout << "threshold " << le::format_number(v.threshold) << '\n'
                  << "condition " << (v.condition_holds ? "true" : "false") << '\n'
                  << "boundary " << (v.boundary ? "true" : "false") << '\n'
                  << "witness " << (v.witness ? le::format_number(snap(*v.witness)) : "-") << '\n'
                  << "lhs " << le::format_number(v.lhs_energy) << '\n'
                  << "rhs " << le::format_number(v.rhs_energy) << '\n'
                  << "gap " << le::format_number(v.abs_gap) << '\n'
                  << "tolerance " << le::format_number(v.tolerance()) << '\n';
        if (v.condition_holds && !v.equality_within_tolerance()) {
            std::cerr << "theorem violated for " << le::to_graph6(g) << ": gap "
                      << le::format_number(v.abs_gap) << " exceeds "
                      << le::format_number(v.tolerance()) << '\n';
            status = kTheoremViolated;
        } else if (!v.condition_holds && status == kOk) {
            status = kConditionFails;
        }
    }
    return status;
}

unsigned threads_from_env() {
    const char* raw = std::getenv("LOOP_ENERGY_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    char* end = nullptr;
    const unsigned long v = std::strtoul(raw, &end, 10);
    if (*end != '\0' || v > 1024) throw UsageError("LOOP_ENERGY_THREADS must be 0..1024");
    return static_cast<unsigned>(v);
}

struct SearchOptions {
    le::SearchConfig config;
    std::string sigma = "interior";
    std::string format = "tsv";
    std::string dedupe = "none";
    std::string family;
    std::string corpus;
    std::string out;
};

int cmd_search(SearchOptions opts) {
    if (opts.sigma == "interior") {
        opts.config.sigma_policy = le::SigmaPolicy::Interior;
    } else if (opts.sigma == "all") {
        opts.config.sigma_policy = le::SigmaPolicy::All;
    } else {
        throw UsageError("--sigma must be interior or all");
    }
    opts.config.dedupe = opts.dedupe == "spectral" ? le::Dedupe::Spectral : le::Dedupe::None;
    opts.config.threads = threads_from_env();
    try {
        opts.config.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::ofstream file;
    if (!opts.out.empty()) {
        file.open(opts.out, std::ios::binary | std::ios::trunc);
        if (!file) throw UsageError("cannot write " + opts.out);
    }
    std::ostream& out = opts.out.empty() ? std::cout : file;

    const bool family = !opts.family.empty();
    const bool jsonl = opts.format == "jsonl";
    if (!jsonl) out << le::tsv_header(family) << '\n';
    const le::RecordSink sink = [&](const le::SearchRecord& r) {
        out << (jsonl ? le::format_jsonl(r) : le::format_tsv(r)) << '\n';
    };

    le::SearchSummary summary;
    if (family) {
        summary = le::find_theorem_family_instances(opts.config, sink);
    } else if (!opts.corpus.empty()) {
        std::vector<le::Graph> corpus;
        for (auto& rec : read_records(opts.corpus)) corpus.push_back(rec.graph.base());
        summary = le::scan_corpus(opts.config, corpus, sink);
    } else {
        summary = le::scan(opts.config, sink);
    }
    out.flush();
    std::cerr << fmt::format(
        "records {} equal {} looped_greater {} simple_greater {} suspect {} deduplicated {}\n",
        summary.records, summary.equal, summary.looped_greater, summary.simple_greater,
        summary.suspect, summary.deduplicated);
    return kOk;
}

bool looks_like_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        bool any = false;
        for (char c : line) {
            if (c == '0' || c == '1') {
                any = true;
            } else if (c != ' ' && c != '\t' && c != ',' && c != '&' && c != '\r') {
                return false;
            }
        }
        if (any) return true;
    }
    return false;
}

int cmd_convert(const std::string& input, std::string to) {
    const std::string text = read_all(input);
    if (to.empty()) to = looks_like_matrix(text) ? "graph6" : "matrix";
    std::istringstream in(text);
    if (to == "matrix") {
        const auto records = le::read_graph_records(in);
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (i > 0) std::cout << '\n';
            std::cout << le::format_adjacency_block(records[i].graph);
        }
    } else {
        for (const auto& g : le::parse_adjacency_blocks(in)) {
            std::cout << le::to_graph6(g.base()) << '\n';
            if (g.sigma() > 0) std::cout << le::format_loop_sidecar(g.loops()) << '\n';
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy of graphs with self-loops"};
    app.require_subcommand(1);

    std::string input = "-";

    auto* energy = app.add_subcommand("energy", "Print n, sigma, shift, spectrum and energy");
    energy->add_option("input", input, "graph6 file with optional L: sidecars (- for stdin)");

    bool with_charpoly = false;
    auto* spectrum = app.add_subcommand("spectrum", "Print the adjacency spectrum");
    spectrum->add_option("input", input, "graph6 file (- for stdin)");
    spectrum->add_flag("--charpoly", with_charpoly, "Also print exact characteristic polynomial");

    auto* thm1 = app.add_subcommand("verify-thm1", "Check E(G u G^l) = 2E(G)");
    thm1->add_option("input", input, "graph6 file (- for stdin)");

    std::size_t p = 1;
    std::size_t q = 1;
    auto* thm2 = app.add_subcommand("verify-thm2", "Check E(pG u qG^l) = (p+q)E(G)");
    thm2->add_option("input", input, "graph6 file (- for stdin)");
    thm2->add_option("--p", p, "Loopless copies")->capture_default_str();
    thm2->add_option("--q", q, "Fully looped copies")->capture_default_str();

    SearchOptions sopts;
    auto* search = app.add_subcommand("search", "Scan small graphs for E(G) = E(G_sigma)");
    search->add_option("--n-min", sopts.config.n_min, "Smallest order")->capture_default_str();
    search->add_option("--n-max", sopts.config.n_max, "Largest order")->capture_default_str();
    search->add_option("--sigma", sopts.sigma, "interior or all")->capture_default_str();
    search->add_flag("--connected", sopts.config.connected_only, "Connected graphs only");
    search->add_option("--eq-tol", sopts.config.eq_tol, "Relative equality tolerance")
        ->capture_default_str();
    search->add_option("--format", sopts.format, "tsv or jsonl")
        ->check(CLI::IsMember({"tsv", "jsonl"}))
        ->capture_default_str();
    search->add_option("--dedupe", sopts.dedupe, "none or spectral")
        ->check(CLI::IsMember({"none", "spectral"}))
        ->capture_default_str();
    search->add_option("--family", sopts.family, "Scan G u G^l for enumerated G instead")
        ->check(CLI::IsMember({"thm1"}));
    search->add_option("--input", sopts.corpus, "Scan graphs from a graph6 file instead");
    search->add_option("--out", sopts.out, "Write records here instead of stdout");
    search->add_flag("--force-large", sopts.config.allow_large,
                     "Allow n > 5 (2^C(n,2) graphs per order)");

    std::string to;
    auto* convert = app.add_subcommand("convert", "Convert graph6+sidecar <-> adjacency matrix");
    convert->add_option("input", input, "Input file (- for stdin)");
    convert->add_option("--to", to, "matrix or graph6 (default: detect)")
        ->check(CLI::IsMember({"matrix", "graph6"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageOrParse;
    }

    try {
        if (*energy) return cmd_energy(input);
        if (*spectrum) return cmd_spectrum(input, with_charpoly);
        if (*thm1) return cmd_verify(input, 1, 1, 1);
        if (*thm2) return cmd_verify(input, 2, p, q);
        if (*search) return cmd_search(std::move(sopts));
        if (*convert) return cmd_convert(input, to);
    } catch (const le::InputError& e) {
        std::cerr << e.what() << '\n';
        return kUsageOrParse;
    } catch (const le::MatrixTextError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageOrParse;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsageOrParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsageOrParse;
}
