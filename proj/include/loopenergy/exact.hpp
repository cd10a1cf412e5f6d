#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "loopenergy/graph.hpp"
#include "loopenergy/spectra.hpp"

namespace loopenergy {

// Follow-up arithmetic for cases the double pipeline cannot settle: roots
// of the exact integer characteristic polynomial refined to ~50 digits.

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

struct RootCluster {
    HighPrecision value;
    std::size_t multiplicity = 0;
};

class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Refines the distinct roots of phi, seeded by a floating-point spectrum of
// the same matrix. Multiplicities come from clustering the seed; the result
// is accepted only if the clusters match the square-free part of phi and
// the product of (x - r)^m reproduces phi's coefficients. Throws
// CertificationError otherwise.
std::vector<RootCluster> certify_roots(const CharPoly& phi, const Spectrum& seed);

// sum_j m_j |r_j - sigma/n| over the certified roots of A(G_sigma).
HighPrecision certified_energy(const LoopedGraph& g);

// certified_energy(G_sigma) - certified_energy(G).
HighPrecision certified_energy_gap(const LoopedGraph& g);

// Gaps at or below this magnitude count as exact equality.
inline const HighPrecision kCertifiedEqualityBound{"1e-30"};

}  // namespace loopenergy
