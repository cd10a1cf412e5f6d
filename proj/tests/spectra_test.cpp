#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "loopenergy/exact.hpp"
#include "loopenergy/graph.hpp"
#include "loopenergy/spectra.hpp"
#include "test_support.hpp"

namespace le = loopenergy;
namespace lt = loopenergy::testing;

namespace {

void expect_values_near(const le::Spectrum& s, const std::vector<double>& expected, double tol) {
    ASSERT_EQ(s.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(s[i], expected[i], tol) << i;
}

le::LoopedGraph triangle_pair() {
    const le::Graph k3 = le::complete_graph(3);
    const le::LoopedGraph parts[] = {le::without_loops(k3), le::with_all_loops(k3)};
    return le::union_looped(parts);
}

double residual(const le::SymmetricMatrix& a, const le::detail::EigenDecomposition& d,
                std::size_t col) {
    const std::size_t n = a.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double av = 0.0;
        for (std::size_t k = 0; k < n; ++k) av += a(i, k) * d.vectors[k * n + col];
        const double r = av - d.values[col] * d.vectors[i * n + col];
        s += r * r;
    }
    return std::sqrt(s);
}

}  // namespace

TEST(EigenvaluesTest, NamedSpectra) {
    expect_values_near(le::eigenvalues(le::adjacency_matrix(le::complete_graph(3))),
                       {2, -1, -1}, 1e-12);
    expect_values_near(le::eigenvalues(le::SymmetricMatrix(4)), {0, 0, 0, 0}, 0.0);
    expect_values_near(le::eigenvalues(le::adjacency_matrix(triangle_pair())),
                       {3, 2, 0, 0, -1, -1}, 1e-12);
    EXPECT_TRUE(le::eigenvalues(le::SymmetricMatrix(0)).empty());
}

TEST(EigenvaluesTest, ClosedFormFamilies) {
    for (std::size_t n = 1; n <= 12; ++n) {
        expect_values_near(le::eigenvalues(le::adjacency_matrix(le::path_graph(n))),
                           lt::path_spectrum(n), 1e-11);
        expect_values_near(le::eigenvalues(le::adjacency_matrix(le::complete_graph(n))),
                           lt::complete_spectrum(n), 1e-11);
        if (n >= 3) {
            expect_values_near(le::eigenvalues(le::adjacency_matrix(le::cycle_graph(n))),
                               lt::cycle_spectrum(n), 1e-11);
        }
    }
}

TEST(EigenvaluesTest, NonFiniteInputFailsLoudly) {
    le::SymmetricMatrix m(3);
    m.set(0, 1, std::numeric_limits<double>::quiet_NaN());
    EXPECT_THROW(le::eigenvalues(m), le::ConvergenceError);
    m.set(0, 1, std::numeric_limits<double>::infinity());
    EXPECT_THROW(le::eigenvalues(m), le::ConvergenceError);
}

TEST(EigenvaluesTest, ConvergenceErrorCarriesNorm) {
    const le::ConvergenceError e(0.25, 100);
    EXPECT_EQ(e.off_diagonal_norm(), 0.25);
    EXPECT_NE(std::string(e.what()).find("100 sweeps"), std::string::npos);
}

TEST(EigenvaluesTest, ResidualAndTraceOnRandomMatrices) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 24;
        const le::SymmetricMatrix a = lt::random_symmetric(rng, n);
        const auto d = le::detail::jacobi_eigen(a, true);
        const double bound = 1e-9 * (1.0 + a.frobenius_norm());
        for (std::size_t col = 0; col < n; ++col) ASSERT_LE(residual(a, d, col), bound);
        double sum = 0.0;
        for (double x : d.values) sum += x;
        EXPECT_NEAR(sum, a.trace(), 1e-9 * std::max(1.0, std::abs(a.trace())));
        EXPECT_TRUE(std::is_sorted(d.values.begin(), d.values.end(), std::greater<>()));
    }
}

TEST(EigenvaluesTest, PermutationAndShiftInvariance) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 16;
        const le::SymmetricMatrix a = lt::random_symmetric(rng, n);
        const le::Spectrum s = le::eigenvalues(a);
        const auto perm = lt::random_permutation(rng, n);
        expect_values_near(le::eigenvalues(a.permuted(perm)), s.values(), 1e-9);

        const double c = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
        expect_values_near(le::eigenvalues(a.shifted(c)), le::shift_spectrum(s, c).values(),
                           1e-9);
    }
}

TEST(EigenvaluesTest, BlockDiagonalMatchesUnionSpectrum) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<le::SymmetricMatrix> blocks;
        std::vector<le::Spectrum> spectra;
        for (int b = 0; b < 3; ++b) {
            blocks.push_back(lt::random_symmetric(rng, 1 + rng() % 5));
            spectra.push_back(le::eigenvalues(blocks.back()));
        }
        expect_values_near(le::eigenvalues(le::block_diagonal(blocks)),
                           le::union_spectrum(spectra).values(), 1e-8);
    }
}

TEST(SpectrumTest, ShiftSpectrum) {
    const le::Spectrum k3({2, -1, -1});
    EXPECT_EQ(le::shift_spectrum(k3, 1.0).values(), (std::vector<double>{3, 0, 0}));
    EXPECT_EQ(le::shift_spectrum(k3, 0.0), k3);
    const double r2 = std::sqrt(2.0);
    expect_values_near(le::shift_spectrum(le::Spectrum({r2, 0, -r2}), 1.0),
                       {1 + r2, 1, 1 - r2}, 1e-15);
}

TEST(SpectrumTest, UnionSpectrum) {
    const le::Spectrum parts[] = {le::Spectrum({2, -1, -1}), le::Spectrum({3, 0, 0})};
    EXPECT_EQ(le::union_spectrum(parts).values(), (std::vector<double>{3, 2, 0, 0, -1, -1}));
    EXPECT_EQ(le::union_spectrum(std::span(parts, 1)), parts[0]);

    // p copies of S and q copies of S + 1: each root with multiplicity p or q.
    const le::Spectrum base({1, -1});
    std::vector<le::Spectrum> family;
    for (int i = 0; i < 2; ++i) family.push_back(base);
    for (int i = 0; i < 3; ++i) family.push_back(le::shift_spectrum(base, 1.0));
    EXPECT_EQ(le::union_spectrum(family).values(),
              (std::vector<double>{2, 2, 2, 1, 1, 0, 0, 0, -1, -1}));
}

TEST(SpectrumTest, SortIsDescending) {
    EXPECT_EQ(le::Spectrum({-1, 3, 0}).values(), (std::vector<double>{3, 0, -1}));
}

TEST(CharPolyTest, SmallExamples) {
    using I = le::CharPoly::Integer;
    EXPECT_EQ(le::char_poly(le::adjacency_matrix(le::complete_graph(2))).coefficients(),
              (std::vector<I>{1, 0, -1}));
    EXPECT_EQ(le::char_poly(le::adjacency_matrix(le::with_loops(le::complete_graph(2), {0})))
                  .coefficients(),
              (std::vector<I>{1, -1, -1}));
    EXPECT_EQ(le::char_poly(le::adjacency_matrix(le::complete_graph(3))).coefficients(),
              (std::vector<I>{1, 0, -3, -2}));
    EXPECT_EQ(le::char_poly(le::SymmetricMatrix(0)).degree(), 0u);
    EXPECT_THROW(le::char_poly(le::SymmetricMatrix{{0.5}}), std::invalid_argument);
}

// Faddeev-LeVerrier against Bareiss determinants of xI - A at integer x.
TEST(CharPolyTest, AgreesWithDeterminantOracle) {
    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            const le::Graph g = lt::graph_with_mask(n, rng() % lt::graph_count(n));
            std::vector<le::Vertex> loops;
            for (std::size_t v = 0; v < n; ++v) {
                if (rng() % 3 == 0) loops.push_back(static_cast<le::Vertex>(v));
            }
            const le::SymmetricMatrix a = le::adjacency_matrix(le::LoopedGraph(g, loops));
            const le::CharPoly phi = le::char_poly(a);
            ASSERT_EQ(phi.degree(), n);
            EXPECT_EQ(phi.coefficients()[1], -static_cast<long long>(loops.size()));
            for (long long x = -3; x <= 3; ++x) {
                le::CharPoly::Integer value = 0;
                for (const auto& c : phi.coefficients()) value = value * x + c;
                EXPECT_EQ(value, static_cast<long long>(lt::char_poly_at(a, x)));
            }
        }
    }
}

TEST(CharPolyTest, LargerMatrixStaysExact) {
    // K_20: (x - 19)(x + 1)^19; c_n = (-1)^20 * det(A) = 19 * (-1)^19 * (-1)^20.
    const le::CharPoly phi = le::char_poly(le::adjacency_matrix(le::complete_graph(20)));
    EXPECT_EQ(phi.coefficients().back(), -19);
    EXPECT_NEAR(static_cast<double>(phi.evaluate(19.0L)), 0.0, 1e-3);
}

TEST(CertifyTest, RefinesRepeatedRoots) {
    const le::SymmetricMatrix a = le::adjacency_matrix(triangle_pair());
    const auto roots = le::certify_roots(le::char_poly(a), le::eigenvalues(a));
    ASSERT_EQ(roots.size(), 4u);
    const std::vector<std::pair<int, std::size_t>> expected = {{3, 1}, {2, 1}, {0, 2}, {-1, 2}};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_LT(abs(roots[i].value - expected[i].first), le::HighPrecision("1e-40"));
        EXPECT_EQ(roots[i].multiplicity, expected[i].second);
    }
}

TEST(CertifyTest, IrrationalRoots) {
    // P_3: {sqrt 2, 0, -sqrt 2}.
    const le::SymmetricMatrix a = le::adjacency_matrix(le::path_graph(3));
    const auto roots = le::certify_roots(le::char_poly(a), le::eigenvalues(a));
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_LT(abs(roots[0].value - sqrt(le::HighPrecision(2))), le::HighPrecision("1e-40"));
}

TEST(CertifyTest, RejectsInconsistentSeed) {
    const le::SymmetricMatrix a = le::adjacency_matrix(le::complete_graph(3));
    // Seed claims three distinct roots where the polynomial has two.
    EXPECT_THROW(le::certify_roots(le::char_poly(a), le::Spectrum({2, -0.9, -1.1})),
                 le::CertificationError);
    EXPECT_THROW(le::certify_roots(le::char_poly(a), le::Spectrum({2, -1})),
                 le::CertificationError);
}

TEST(CertifyTest, CertifiedEnergies) {
    EXPECT_LT(abs(le::certified_energy(triangle_pair()) - 8), le::HighPrecision("1e-40"));
    EXPECT_LT(abs(le::certified_energy_gap(triangle_pair())), le::kCertifiedEqualityBound);
    const auto gap = le::certified_energy_gap(le::with_loops(le::complete_graph(2), {0}));
    EXPECT_LT(abs(gap - (sqrt(le::HighPrecision(5)) - 2)), le::HighPrecision("1e-40"));
}
