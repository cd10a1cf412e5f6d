#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace loopenergy {

// Dense square real matrix. Symmetry is checked exactly at construction, so
// every instance satisfies entry(i, j) == entry(j, i).
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;

    // Zero matrix of dimension n.
    explicit SymmetricMatrix(std::size_t n);

    // Row-major entries; throws std::invalid_argument if the size is not n*n
    // or the entries are not exactly symmetric.
    SymmetricMatrix(std::size_t n, std::vector<double> entries);

    SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t size() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    // Writes both (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, double value);

    double trace() const noexcept;
    double frobenius_norm() const noexcept;

    // True when every entry is an integer value.
    bool is_integral() const noexcept;

    std::span<const double> data() const noexcept { return entries_; }

    // Returns P A P^T where P maps vertex i to perm[i].
    SymmetricMatrix permuted(std::span<const std::size_t> perm) const;

    // Returns A + c I.
    SymmetricMatrix shifted(double c) const;

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> entries_;
};

// Block-diagonal matrix with the given blocks in order.
SymmetricMatrix block_diagonal(std::span<const SymmetricMatrix> blocks);

}  // namespace loopenergy
