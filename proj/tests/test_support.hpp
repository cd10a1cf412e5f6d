#pragma once

// Independent oracles shared by the unit and acceptance suites. Nothing
// here calls into the eigensolver or the Faddeev-LeVerrier code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "loopenergy/graph.hpp"
#include "loopenergy/matrix.hpp"

namespace loopenergy::testing {

// Closed-form adjacency spectra, descending.
inline std::vector<double> path_spectrum(std::size_t n) {
    std::vector<double> s;
    for (std::size_t j = 1; j <= n; ++j) {
        s.push_back(2.0 * std::cos(std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(n + 1)));
    }
    return s;
}

inline std::vector<double> cycle_spectrum(std::size_t n) {
    std::vector<double> s;
    for (std::size_t j = 0; j < n; ++j) {
        s.push_back(2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(n)));
    }
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

inline std::vector<double> complete_spectrum(std::size_t n) {
    std::vector<double> s(n, -1.0);
    s[0] = static_cast<double>(n) - 1.0;
    return s;
}

// det(M) of an integer matrix by Bareiss fraction-free elimination.
inline __int128 bareiss_det(std::vector<std::vector<__int128>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    __int128 sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// det(xI - A) at an integer point x.
inline __int128 char_poly_at(const SymmetricMatrix& a, long long x) {
    const std::size_t n = a.size();
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = (i == j ? x : 0) - static_cast<__int128>(std::llround(a(i, j)));
        }
    }
    return bareiss_det(std::move(m));
}

// Sum |lambda - shift| for explicitly listed eigenvalues.
inline double abs_sum(const std::vector<double>& values, double shift) {
    double total = 0.0;
    for (double x : values) total += std::abs(x - shift);
    return total;
}

// Uniform random symmetric matrix with entries in [-1, 1].
inline SymmetricMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) m.set(i, j, dist(rng));
    }
    return m;
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Graph on n vertices from an edge mask in graph6 pair order, built
// without the library's search helpers.
inline Graph graph_with_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            if ((mask >> k) & 1u) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    }
    return Graph(n, std::move(edges));
}

inline std::uint64_t graph_count(std::size_t n) {
    return std::uint64_t{1} << (n * (n > 0 ? n - 1 : 0) / 2);
}

}  // namespace loopenergy::testing
