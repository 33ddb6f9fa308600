#pragma once

#include <utility>

#include "wigent/photonmix.hpp"
#include "wigent/polycore.hpp"

namespace wigent {

/// Radial Wigner function W(r) = (1/pi) e^{-r^2} sum_k p_k (-1)^k L_k(2r^2)
/// of a phase-invariant state.
class RadialWigner {
public:
    explicit RadialWigner(PhotonMixture source) : source_(std::move(source)) {}

    const PhotonMixture& source() const { return source_; }

    double operator()(double r) const;
    /// ln W(r); -inf where W(r) <= 0. Finite far into the Gaussian tail.
    double log_value(double r) const;
    /// P(t) = sum_k p_k (-1)^k L_k(t), the sign-carrying factor of W at t = 2r^2.
    poly::ScaledValue polynomial(double t) const;

private:
    PhotonMixture source_;
};

enum class BoundaryKind {
    interior,     ///< strictly positive at every finite r
    curved,       ///< touches zero at some r > 0
    flat_facet,   ///< touches zero at the origin
    outside,      ///< negative somewhere
};

struct PositivityReport {
    bool is_positive = true;
    double min_value = 0.0;
    /// +inf when the infimum is the Gaussian tail.
    double argmin_r = 0.0;
    bool touches_zero = false;
    /// True when no finite local minimum reaches eps_pos and the reported
    /// minimum is the r -> infinity limit.
    bool tail_infimum = false;
    double max_value = 0.0;
    double argmax_r = 0.0;
    BoundaryKind boundary = BoundaryKind::interior;
};

namespace positivity {

inline constexpr double kPositivityTolerance = 1e-12;
inline constexpr int kScanSamples = 4096;

double radial_wigner(const PhotonMixture& p, double r);

/// sqrt(N + 6 sqrt(N) + 20), N = mixture length.
double scan_radius(const PhotonMixture& p);

/// Dense scan of W on [0, scan_radius] followed by golden-section refinement
/// of every bracketed extremum.
PositivityReport positivity_report(const PhotonMixture& p, double eps_pos = kPositivityTolerance);

/// (P(t), P'(t)) with P as in RadialWigner::polynomial.
std::pair<double, double> curved_boundary_residual(const PhotonMixture& p, double t);

/// Closed-form membership in the Wigner-positive part of the two-photon triangle.
bool two_photon_region_contains(double p1, double p2);

/// (1 - p1 - p2, p1, p2) as a mixture.
PhotonMixture two_photon_mixture(double p1, double p2);

/// Point (p1, p2) = (sqrt(1 - a^2)/2, (a + 1)/4) on the extremal elliptic arc.
std::pair<double, double> extremal_arc_point(double a);

/// t = 2 - p1/p2 at which the arc state's polynomial has its double root.
double extremal_arc_tangency(double a);

/// W_a(r) = (1/pi) e^{-r^2} (a+1)/2 (r^2 - 1 + sqrt((1-a)/(1+a)))^2.
double extremal_arc_wigner(double a, double r);

/// Left side of (p1/(1/2))^2 + ((p2 - 1/4)/(1/4))^2 = 1.
double ellipse_lhs(double p1, double p2);

}  // namespace positivity
}  // namespace wigent
