#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "loopenergy/graph.hpp"
#include "loopenergy/spectra.hpp"

namespace loopenergy {

// Energy of a (possibly looped) graph: sum |lambda_i - shift| with
// shift = sigma / n, and shift = 0 for the empty graph.
struct EnergyReport {
    std::size_t n = 0;
    std::size_t sigma = 0;
    Spectrum spectrum;
    double shift = 0.0;
    double energy = 0.0;
};

// Slack applied to every eigenvalue-magnitude hypothesis.
inline constexpr double kConditionSlack = 1e-9;

// Outcome of checking min |lambda_i| >= threshold on a base graph.
struct ConditionResult {
    bool holds = true;
    double threshold = 0.0;
    double min_abs_eigenvalue = 0.0;  // +inf for the empty graph
    std::optional<double> witness;    // set iff !holds
    bool boundary = false;            // min |lambda| within the slack of threshold
};

struct TheoremVerdict {
    bool condition_holds = false;
    double lhs_energy = 0.0;
    double rhs_energy = 0.0;
    double abs_gap = 0.0;
    std::optional<double> witness;
    bool boundary = false;
    double threshold = 0.0;

    // Gap bound 1e-8 * (1 + rhs) required whenever the condition holds.
    double tolerance() const noexcept { return 1e-8 * (1.0 + rhs_energy); }
    bool equality_within_tolerance() const noexcept { return abs_gap <= tolerance(); }
};

// Sum |lambda - shift| over a spectrum.
double shifted_abs_sum(const Spectrum& s, double shift);

EnergyReport energy_simple(const Graph& g);
EnergyReport energy_looped(const LoopedGraph& g);

// min |lambda_i(G)| >= 1/2.
ConditionResult theorem1_condition(const Graph& g);

// min |lambda_i(G)| >= max(p, q) / (p + q). Throws std::invalid_argument
// when p + q == 0.
ConditionResult theorem2_condition(const Graph& g, std::size_t p, std::size_t q);

// Builds G u G^l, compares its looped energy against 2 E(G).
TheoremVerdict verify_theorem1(const Graph& g);

// Builds p G u q G^l, compares its looped energy against (p + q) E(G).
// Throws std::invalid_argument when p + q == 0.
TheoremVerdict verify_theorem2(const Graph& g, std::size_t p, std::size_t q);

// Looped energy of p G u q G^l straight from the spectrum of G:
// sum_i p |lambda_i - q/m| + q |lambda_i + p/m|.
double union_family_energy_closed_form(const Spectrum& base, std::size_t p, std::size_t q);

// E(G_sigma) - E(G) for the given loop placement.
double energy_gap(const Graph& g, std::vector<Vertex> loops);

}  // namespace loopenergy
