#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "wigent/beamsplit.hpp"
#include "wigent/photonmix.hpp"
#include "wigent/quadrature.hpp"

namespace wigent {

/// Order of a Wigner-Renyi entropy; 1 selects the Shannon entropy, +inf the
/// min-entropy.
struct RenyiOrder {
    double alpha;

    static RenyiOrder infinity() { return {std::numeric_limits<double>::infinity()}; }
    bool is_shannon() const { return alpha == 1.0; }
    bool is_infinite() const { return alpha == std::numeric_limits<double>::infinity(); }
};

/// Entropy powers of the beam-splitter output and of the weighted inputs.
struct EpiCheck {
    double output_power = 0.0;
    double weighted_inputs = 0.0;

    double margin() const { return output_power - weighted_inputs; }
    bool holds(double slack = 1e-6) const { return margin() >= -slack; }
};

enum class EpiRoute {
    automatic,   ///< exact Fock mixing at eta = 1/2, phase-space grid otherwise
    exact_fock,  ///< two-mode Fock construction for any eta
    grid,        ///< phase-space convolution on a grid
};

namespace entropy {

/// ln(pi) + 1, the entropy of the vacuum Wigner function.
double vacuum_entropy();

/// Upper radial limit for the entropy integrals of p: quad.radial_cutoff when
/// set, otherwise (12 + sqrt(2N)) / sqrt(min(alpha, 1)).
double radial_cutoff(const PhotonMixture& p, const QuadratureSpec& quad, double alpha = 1.0);

/// -int 2 pi r W(r) ln W(r) dr. Throws NotWignerPositive if the positivity scan
/// finds a negative value. W ln W is taken as 0 where W <= 0.
double wigner_entropy_radial(const PhotonMixture& p, const QuadratureSpec& quad = {});

/// Trapezoid-rule -sum W ln W dA on a grid. Values in [-1e-9, 0) are clipped to
/// zero; anything lower throws NegativeGrid. The grid must integrate to 1
/// within 1e-5.
double wigner_entropy_grid(const WignerGrid& w);

/// (1/(1-alpha)) ln int W^alpha dA, with alpha = 1 giving the Shannon entropy
/// and alpha = inf giving -ln max W. Throws Divergence for alpha = 0.
double wigner_renyi(const PhotonMixture& p, RenyiOrder order, const QuadratureSpec& quad = {});

/// Shannon entropy of the Husimi function.
double wehrl_entropy(const PhotonMixture& p, const QuadratureSpec& quad = {});

/// (2 pi e)^{-1} e^h.
double entropy_power(double h);

/// Shannon entropy of the x-marginal sum_k p_k rho_k(x).
double marginal_entropy_mixture(const PhotonMixture& p, const QuadratureSpec& quad = {});

struct GridSettings {
    double extent = 8.0;
    int resolution = 512;
};

/// Entropy-power inequality for two phase-invariant Wigner-positive inputs.
EpiCheck check_epi(const PhotonMixture& pa, const PhotonMixture& pb, double eta, const QuadratureSpec& quad = {},
                   EpiRoute route = EpiRoute::automatic, const GridSettings& grid = {});

/// (h(W_p), 2 sum_k p_k h(rho_k)) for a passive state p. Throws NotPassive otherwise.
std::pair<double, double> passive_bound_check(const PhotonMixture& p, const QuadratureSpec& quad = {});

/// Max |sum_k W_k(x,p) - sum_k psi_k(x)^2 psi_{n-k}(p)^2| over the sample points.
double verify_identity_eq38(int n, std::span<const std::pair<double, double>> samples);

/// Square grid of points, `points` per axis, covering [-half_width, half_width]^2.
std::vector<std::pair<double, double>> square_samples(int points, double half_width);

}  // namespace entropy
}  // namespace wigent
