#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "wigent/photonmix.hpp"

namespace wigent::sampling {

/// Uniform double in [0, 1) from the top 53 bits of one draw. Platform independent.
double uniform01(std::mt19937_64& rng);

/// Flat Dirichlet sample of the given length.
std::vector<double> dirichlet(std::mt19937_64& rng, std::size_t length);

/// Random non-increasing distribution with 1..max_length entries.
PhotonMixture random_passive(std::mt19937_64& rng, std::size_t max_length);

/// Random Wigner-positive mixture over at most max_photons + 1 Fock states,
/// drawn by rejection from flat Dirichlet proposals.
PhotonMixture random_positive_mixture(std::mt19937_64& rng, int max_photons = 6);

/// i-th point of the R2 low-discrepancy sequence folded into the triangle
/// p1, p2 >= 0, p1 + p2 <= 1.
std::pair<double, double> quasi_random_triangle(std::uint64_t i);

}  // namespace wigent::sampling
