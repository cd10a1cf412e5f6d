#include "loopenergy/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>

namespace loopenergy {

namespace {

using boost::multiprecision::cpp_rational;
using Poly = std::vector<cpp_rational>;  // lowest degree first

void normalize(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly from_char_poly(const CharPoly& phi) {
    const auto& c = phi.coefficients();
    Poly p(c.rbegin(), c.rend());
    normalize(p);
    return p;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long long>(k));
    normalize(d);
    return d;
}

// Returns quotient, leaves the remainder in num.
Poly divide(Poly& num, const Poly& den) {
    if (den.empty()) throw std::logic_error("polynomial division by zero");
    if (num.size() < den.size()) return {};
    Poly quot(num.size() - den.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const cpp_rational coef = num[k + den.size() - 1] / den.back();
        quot[k] = coef;
        if (coef == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= coef * den[j];
    }
    normalize(num);
    normalize(quot);
    return quot;
}

Poly gcd(Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = a;
        divide(r, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const cpp_rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

HighPrecision to_hp(const cpp_rational& r) {
    return HighPrecision(boost::multiprecision::numerator(r)) /
           HighPrecision(boost::multiprecision::denominator(r));
}

HighPrecision evaluate(const std::vector<HighPrecision>& p, const HighPrecision& x) {
    HighPrecision acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

}  // namespace

std::vector<RootCluster> certify_roots(const CharPoly& phi, const Spectrum& seed) {
    const std::size_t n = phi.degree();
    if (seed.size() != n) throw CertificationError("seed spectrum length does not match degree");
    if (n == 0) return {};

    const Poly p = from_char_poly(phi);
    const Poly g = gcd(p, derivative(p));
    Poly rem = p;
    const Poly sqfree = divide(rem, g);
    if (!rem.empty()) throw CertificationError("square-free division left a remainder");
    const std::size_t distinct = sqfree.size() - 1;

    // Group the descending seed into clusters of nearly equal values.
    std::vector<std::pair<double, std::size_t>> clusters;  // (sum, count)
    double anchor = seed[0];
    clusters.push_back({seed[0], 1});
    for (std::size_t i = 1; i < n; ++i) {
        if (anchor - seed[i] <= 1e-6 * (1.0 + std::abs(anchor))) {
            clusters.back().first += seed[i];
            ++clusters.back().second;
        } else {
            anchor = seed[i];
            clusters.push_back({seed[i], 1});
        }
    }
    if (clusters.size() != distinct) {
        throw CertificationError("found " + std::to_string(clusters.size()) +
                                 " eigenvalue clusters but the square-free part has degree " +
                                 std::to_string(distinct));
    }

    std::vector<HighPrecision> f;
    for (const auto& c : sqfree) f.push_back(to_hp(c));
    std::vector<HighPrecision> df;
    for (std::size_t k = 1; k < f.size(); ++k) df.push_back(f[k] * static_cast<int>(k));

    const HighPrecision step_tol{"1e-45"};
    std::vector<RootCluster> roots;
    for (const auto& [sum, count] : clusters) {
        const double start = sum / static_cast<double>(count);
        HighPrecision x = start;
        bool converged = false;
        for (int it = 0; it < 200; ++it) {
            const HighPrecision d = evaluate(df, x);
            if (d == 0) break;
            const HighPrecision step = evaluate(f, x) / d;
            x -= step;
            if (abs(step) <= step_tol * (1 + abs(x))) {
                converged = true;
                break;
            }
        }
        if (!converged || abs(x - start) > 1e-6 * (1.0 + std::abs(start))) {
            throw CertificationError("Newton refinement failed near " + std::to_string(start));
        }
        roots.push_back({x, count});
    }
    for (std::size_t i = 1; i < roots.size(); ++i) {
        if (roots[i - 1].value - roots[i].value <= HighPrecision("1e-20")) {
            throw CertificationError("refined roots collapsed onto each other");
        }
    }

    // prod (x - r_j)^{m_j} must reproduce phi.
    std::vector<HighPrecision> prod{1};
    for (const auto& root : roots) {
        for (std::size_t k = 0; k < root.multiplicity; ++k) {
            std::vector<HighPrecision> next(prod.size() + 1, 0);
            for (std::size_t j = 0; j < prod.size(); ++j) {
                next[j + 1] += prod[j];
                next[j] -= root.value * prod[j];
            }
            prod = std::move(next);
        }
    }
    for (std::size_t k = 0; k < p.size(); ++k) {
        const HighPrecision expected = to_hp(p[k]);
        if (abs(prod[k] - expected) > HighPrecision("1e-30") * (1 + abs(expected))) {
            throw CertificationError("root multiplicities do not reproduce the polynomial");
        }
    }
    return roots;
}

HighPrecision certified_energy(const LoopedGraph& g) {
    const std::size_t n = g.order();
    if (n == 0) return 0;
    const SymmetricMatrix a = adjacency_matrix(g);
    const auto roots = certify_roots(char_poly(a), eigenvalues(a));
    const HighPrecision shift = HighPrecision(g.sigma()) / HighPrecision(n);
    HighPrecision total = 0;
    for (const auto& r : roots) total += abs(r.value - shift) * static_cast<int>(r.multiplicity);
    return total;
}

HighPrecision certified_energy_gap(const LoopedGraph& g) {
    return certified_energy(g) - certified_energy(without_loops(g.base()));
}

}  // namespace loopenergy
