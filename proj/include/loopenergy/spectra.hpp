#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "loopenergy/matrix.hpp"

namespace loopenergy {

// Real eigenvalues with multiplicity, sorted descending.
class Spectrum {
public:
    Spectrum() = default;

    // Sorts descending; equal values keep their input order.
    explicit Spectrum(std::vector<double> values);

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double sum() const noexcept;

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    std::vector<double> values_;
};

// Thrown when the Jacobi sweeps hit the cap before the off-diagonal mass
// drops below tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(double off_diagonal_norm, int sweeps);
    double off_diagonal_norm() const noexcept { return off_diagonal_norm_; }

private:
    double off_diagonal_norm_;
};

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kJacobiRelativeTolerance = 1e-12;

// Cyclic Jacobi eigenvalues of a symmetric matrix.
Spectrum eigenvalues(const SymmetricMatrix& m);

// Spectrum of A + cI given the spectrum of A.
Spectrum shift_spectrum(const Spectrum& s, double c);

// Spectrum of a block-diagonal matrix given the spectra of its blocks.
Spectrum union_spectrum(std::span<const Spectrum> parts);

// Monic characteristic polynomial det(xI - A) with exact integer
// coefficients: coefficients()[0] == 1 and coefficients()[k] multiplies
// x^(n-k).
class CharPoly {
public:
    using Integer = boost::multiprecision::cpp_int;

    explicit CharPoly(std::vector<Integer> coefficients);

    std::size_t degree() const noexcept { return coefficients_.size() - 1; }
    const std::vector<Integer>& coefficients() const noexcept { return coefficients_; }

    // Horner evaluation in long double.
    long double evaluate(long double x) const;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;

private:
    std::vector<Integer> coefficients_;
};

// Faddeev-LeVerrier recurrence in exact integer arithmetic. Throws
// std::invalid_argument if any entry is not an integer.
CharPoly char_poly(const SymmetricMatrix& m);

namespace detail {

// Eigenvalues (descending) with the matching unit eigenvectors as columns
// of a row-major n x n array. Exposed for residual checks in tests.
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<double> vectors;
    int sweeps = 0;
};

EigenDecomposition jacobi_eigen(const SymmetricMatrix& m, bool want_vectors);

}  // namespace detail

}  // namespace loopenergy
