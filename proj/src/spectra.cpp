#include "loopenergy/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace loopenergy {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    }
    return std::sqrt(2.0 * s);
}

void sort_descending(std::vector<double>& values) {
    std::stable_sort(values.begin(), values.end(), std::greater<>());
}

}  // namespace

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    sort_descending(values_);
}

double Spectrum::sum() const noexcept {
    return std::accumulate(values_.begin(), values_.end(), 0.0);
}

ConvergenceError::ConvergenceError(double off_diagonal_norm, int sweeps)
    : std::runtime_error("Jacobi eigensolver did not converge after " + std::to_string(sweeps) +
                         " sweeps; off-diagonal norm " + std::to_string(off_diagonal_norm)),
      off_diagonal_norm_(off_diagonal_norm) {}

namespace detail {

EigenDecomposition jacobi_eigen(const SymmetricMatrix& m, bool want_vectors) {
    const std::size_t n = m.size();
    std::vector<double> a(m.data().begin(), m.data().end());
    std::vector<double> v;
    if (want_vectors) {
        v.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    }

    const double norm = m.frobenius_norm();
    const double tol = kJacobiRelativeTolerance * (1.0 + norm);
    int sweep = 0;
    double off = off_diagonal_norm(a, n);
    if (!std::isfinite(norm)) throw ConvergenceError(off, sweep);
    while (!(off <= tol)) {
        if (sweep == kMaxJacobiSweeps || !std::isfinite(off)) throw ConvergenceError(off, sweep);
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // A <- J^T A J with J = [c s; -s c] in the (p, q) plane.
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                if (want_vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const double vkp = v[k * n + p];
                        const double vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        off = off_diagonal_norm(a, n);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });

    EigenDecomposition out;
    out.sweeps = sweep;
    out.values.reserve(n);
    for (std::size_t i : order) out.values.push_back(a[i * n + i]);
    if (want_vectors) {
        out.vectors.resize(n * n);
        for (std::size_t col = 0; col < n; ++col) {
            for (std::size_t k = 0; k < n; ++k) out.vectors[k * n + col] = v[k * n + order[col]];
        }
    }
    return out;
}

}  // namespace detail

Spectrum eigenvalues(const SymmetricMatrix& m) {
    return Spectrum(detail::jacobi_eigen(m, false).values);
}

Spectrum shift_spectrum(const Spectrum& s, double c) {
    std::vector<double> values = s.values();
    for (double& x : values) x += c;
    return Spectrum(std::move(values));
}

Spectrum union_spectrum(std::span<const Spectrum> parts) {
    std::vector<double> values;
    for (const auto& part : parts) values.insert(values.end(), part.begin(), part.end());
    return Spectrum(std::move(values));
}

CharPoly::CharPoly(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty() || coefficients_.front() != 1) {
        throw std::invalid_argument("characteristic polynomial must be monic");
    }
}

long double CharPoly::evaluate(long double x) const {
    long double acc = 0.0L;
    for (const auto& c : coefficients_) acc = acc * x + c.convert_to<long double>();
    return acc;
}

CharPoly char_poly(const SymmetricMatrix& m) {
    using Integer = CharPoly::Integer;
    if (!m.is_integral()) {
        throw std::invalid_argument("char_poly needs a matrix with integer entries");
    }
    const std::size_t n = m.size();
    std::vector<Integer> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = static_cast<long long>(m.data()[i]);

    std::vector<Integer> coeffs{1};
    std::vector<Integer> prev(n * n, 0);  // M_{k-1}
    std::vector<Integer> next(n * n);
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{k-1} I
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Integer s = 0;
                for (std::size_t l = 0; l < n; ++l) {
                    if (a[i * n + l] != 0) s += a[i * n + l] * prev[l * n + j];
                }
                next[i * n + j] = std::move(s);
            }
            next[i * n + i] += coeffs.back();
        }
        // c_k = -tr(A M_k) / k
        Integer tr = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i * n + l] != 0) tr += a[i * n + l] * next[l * n + i];
            }
        }
        const Integer kk = static_cast<long long>(k);
        if (tr % kk != 0) throw std::logic_error("Faddeev-LeVerrier division was not exact");
        coeffs.push_back(-tr / kk);
        std::swap(prev, next);
    }
    return CharPoly(std::move(coeffs));
}

}  // namespace loopenergy
