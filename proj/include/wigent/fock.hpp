#pragma once

#include "wigent/quadrature.hpp"

namespace wigent::fock {

/// Largest photon number accepted by the Fock-state routines.
inline constexpr int kDefaultMaxPhoton = 256;

/// Throws InvalidArgument unless 0 <= n <= kDefaultMaxPhoton.
void check_index(int n);

/// Position-space wave function psi_n(x) of the n-th Fock state.
/// Evaluated with the normalized recurrence
///   psi_{k+1} = sqrt(2/(k+1)) x psi_k - sqrt(k/(k+1)) psi_{k-1},
/// which equals pi^{-1/4} 2^{-n/2} (n!)^{-1/2} H_n(x) e^{-x^2/2} without
/// forming the large Hermite values.
double wavefunction(int n, double x);

/// W_n(x, p) = (1/pi) (-1)^n L_n(2x^2 + 2p^2) exp(-x^2 - p^2).
double wigner_fock(int n, double x, double p);

/// rho_n(x) = psi_n(x)^2.
double marginal_density(int n, double x);

/// Shannon differential entropy -int rho_n ln rho_n dx.
double marginal_entropy(int n, const QuadratureSpec& quad = {});

/// Half-width of the x-range used for marginal integrals: sqrt(2n+1) + 12.
double marginal_cutoff(int n);

}  // namespace wigent::fock
