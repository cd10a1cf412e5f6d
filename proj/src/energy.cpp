#include "loopenergy/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace loopenergy {

namespace {

ConditionResult check_min_magnitude(const Spectrum& s, double threshold) {
    ConditionResult r;
    r.threshold = threshold;
    r.min_abs_eigenvalue = std::numeric_limits<double>::infinity();
    double closest = 0.0;
    for (double x : s) {
        if (std::abs(x) < r.min_abs_eigenvalue) {
            r.min_abs_eigenvalue = std::abs(x);
            closest = x;
        }
    }
    r.holds = r.min_abs_eigenvalue >= threshold - kConditionSlack;
    r.boundary = std::abs(r.min_abs_eigenvalue - threshold) <= kConditionSlack;
    if (!r.holds) r.witness = closest;
    return r;
}

void require_copies(std::size_t p, std::size_t q) {
    if (p + q == 0) throw std::invalid_argument("p + q must be at least 1");
}

TheoremVerdict make_verdict(const ConditionResult& cond, double lhs, double rhs) {
    TheoremVerdict v;
    v.condition_holds = cond.holds;
    v.witness = cond.witness;
    v.boundary = cond.boundary;
    v.threshold = cond.threshold;
    v.lhs_energy = lhs;
    v.rhs_energy = rhs;
    v.abs_gap = std::abs(lhs - rhs);
    return v;
}

}  // namespace

double shifted_abs_sum(const Spectrum& s, double shift) {
    double total = 0.0;
    for (double x : s) total += std::abs(x - shift);
    return total;
}

EnergyReport energy_simple(const Graph& g) { return energy_looped(without_loops(g)); }

EnergyReport energy_looped(const LoopedGraph& g) {
    EnergyReport r;
    r.n = g.order();
    r.sigma = g.sigma();
    r.spectrum = eigenvalues(adjacency_matrix(g));
    r.shift = r.n == 0 ? 0.0 : static_cast<double>(r.sigma) / static_cast<double>(r.n);
    r.energy = shifted_abs_sum(r.spectrum, r.shift);
    return r;
}

ConditionResult theorem1_condition(const Graph& g) {
    return check_min_magnitude(eigenvalues(adjacency_matrix(g)), 0.5);
}

ConditionResult theorem2_condition(const Graph& g, std::size_t p, std::size_t q) {
    require_copies(p, q);
    const double threshold = static_cast<double>(std::max(p, q)) / static_cast<double>(p + q);
    return check_min_magnitude(eigenvalues(adjacency_matrix(g)), threshold);
}

TheoremVerdict verify_theorem1(const Graph& g) {
    const LoopedGraph parts[] = {without_loops(g), with_all_loops(g)};
    const double lhs = energy_looped(union_looped(parts)).energy;
    const double rhs = 2.0 * energy_simple(g).energy;
    return make_verdict(theorem1_condition(g), lhs, rhs);
}

TheoremVerdict verify_theorem2(const Graph& g, std::size_t p, std::size_t q) {
    require_copies(p, q);
    const double lhs = energy_looped(union_family(g, p, q)).energy;
    const double rhs = static_cast<double>(p + q) * energy_simple(g).energy;
    return make_verdict(theorem2_condition(g, p, q), lhs, rhs);
}

double union_family_energy_closed_form(const Spectrum& base, std::size_t p, std::size_t q) {
    require_copies(p, q);
    const double m = static_cast<double>(p + q);
    const double dp = static_cast<double>(p);
    const double dq = static_cast<double>(q);
    double total = 0.0;
    for (double x : base) total += dp * std::abs(x - dq / m) + dq * std::abs(x + dp / m);
    return total;
}

double energy_gap(const Graph& g, std::vector<Vertex> loops) {
    const LoopedGraph looped = with_loops(g, std::move(loops));
    return energy_looped(looped).energy - energy_simple(g).energy;
}

}  // namespace loopenergy
