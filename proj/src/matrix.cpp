#include "loopenergy/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace loopenergy {

SymmetricMatrix::SymmetricMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

SymmetricMatrix::SymmetricMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_) {
        throw std::invalid_argument("matrix needs " + std::to_string(n_ * n_) + " entries, got " +
                                    std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (entries_[i * n_ + j] != entries_[j * n_ + i]) {
                throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) +
                                            ", " + std::to_string(j) + ")");
            }
        }
    }
}

SymmetricMatrix::SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()) {
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw std::invalid_argument("matrix rows must all have length " + std::to_string(n_));
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    *this = SymmetricMatrix(n_, std::move(entries_));
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
    entries_[i * n_ + j] = value;
    entries_[j * n_ + i] = value;
}

double SymmetricMatrix::trace() const noexcept {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += entries_[i * n_ + i];
    return t;
}

double SymmetricMatrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (double x : entries_) s += x * x;
    return std::sqrt(s);
}

bool SymmetricMatrix::is_integral() const noexcept {
    for (double x : entries_) {
        if (!std::isfinite(x) || x != std::nearbyint(x)) return false;
    }
    return true;
}

SymmetricMatrix SymmetricMatrix::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) throw std::invalid_argument("permutation size does not match matrix");
    SymmetricMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out.entries_[perm[i] * n_ + perm[j]] = entries_[i * n_ + j];
        }
    }
    return out;
}

SymmetricMatrix SymmetricMatrix::shifted(double c) const {
    SymmetricMatrix out = *this;
    for (std::size_t i = 0; i < n_; ++i) out.entries_[i * n_ + i] += c;
    return out;
}

SymmetricMatrix block_diagonal(std::span<const SymmetricMatrix> blocks) {
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.size();
    SymmetricMatrix out(total);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i; j < b.size(); ++j) out.set(offset + i, offset + j, b(i, j));
        }
        offset += b.size();
    }
    return out;
}

}  // namespace loopenergy
