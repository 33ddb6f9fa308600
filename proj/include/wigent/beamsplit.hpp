#pragma once

#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "wigent/photonmix.hpp"
#include "wigent/quadrature.hpp"

namespace wigent {

/// Wigner function sampled on a square grid symmetric about the origin.
/// values(i, j) = W(x_i, p_j), x_i = -extent + i * spacing.
class WignerGrid {
public:
    WignerGrid(double extent, Eigen::MatrixXd values);

    static WignerGrid sample(const std::function<double(double, double)>& w, double extent, int resolution);
    /// Grid of the radial Wigner function of a phase-invariant state.
    static WignerGrid from_mixture(const PhotonMixture& p, double extent, int resolution);

    double extent() const { return extent_; }
    int resolution() const { return static_cast<int>(values_.rows()); }
    double spacing() const { return 2.0 * extent_ / (resolution() - 1); }
    double coordinate(int i) const { return -extent_ + i * spacing(); }
    const Eigen::MatrixXd& values() const { return values_; }

    /// Trapezoid weight (1 or 1/2) of index i along one axis.
    double edge_weight(int i) const { return i == 0 || i + 1 == resolution() ? 0.5 : 1.0; }
    /// Trapezoid-rule integral of W.
    double normalization() const;
    double min_value() const { return values_.minCoeff(); }

    /// CSV layout: "extent,resolution" header, one line with both numbers,
    /// then one row per x index with the p values comma separated.
    void write_csv(std::ostream& out) const;
    static WignerGrid read_csv(std::istream& in);

private:
    double extent_;
    Eigen::MatrixXd values_;
};

/// Two-mode pure state in the Fock basis, amplitudes(nA, nB). The beam-splitter
/// mode matrix is real, so amplitudes are real.
struct TwoModeFockState {
    Eigen::MatrixXd amplitudes;

    double norm() const { return amplitudes.squaredNorm(); }
    /// Photon distribution of mode A after tracing out mode B.
    std::vector<double> reduced_mode_a() const;
};

namespace beamsplit {

inline constexpr int kDefaultFockCut = 24;

struct ConvolutionOptions {
    /// Highest spatial frequency kept; capped at the grid's Nyquist frequency.
    double k_max = 30.0;
};

/// Output Wigner function of a beam splitter with transmittance eta fed by
/// the product of the two input states; mode B is traced out.
/// Computed in the Fourier domain as chi_out(k) = chi_A(sqrt(eta) k) chi_B(sqrt(1-eta) k),
/// with the input characteristic functions taken by trapezoid sums over the grids.
/// Throws GridMismatch for grids of different geometry, InvalidArgument for eta outside (0, 1).
WignerGrid convolve_beamsplitter(const WignerGrid& wa, const WignerGrid& wb, double eta,
                                 const ConvolutionOptions& options = {});

/// Q(r) = (1/pi) e^{-r^2} sum_k p_k r^{2k} / k!.
double husimi_phase_invariant(const PhotonMixture& p, double r);

/// Applies (sqrt(eta) a^+ - sqrt(1-eta) b^+)^m (sqrt(1-eta) a^+ + sqrt(eta) b^+)^n / sqrt(m! n!)
/// to the two-mode vacuum.
TwoModeFockState fock_oracle_state(int m, int n, double eta, int n_cut = kDefaultFockCut);

/// Mode-A photon distribution of fock_oracle_state. With eta = 1 the m photons stay in mode A.
/// Throws RangeOverflow if m + n > n_cut.
PhotonMixture fock_oracle_sigma(int m, int n, double eta, int n_cut = kDefaultFockCut);

/// Convex combination of fock_oracle_sigma over the product of two mixtures.
PhotonMixture fock_oracle_output(const PhotonMixture& a, const PhotonMixture& b, double eta,
                                 int n_cut = kDefaultFockCut);

/// (Wigner entropy of the balanced beam-splitter output of p with vacuum,
///  Wehrl entropy of p).
std::pair<double, double> wehrl_bridge_check(const PhotonMixture& p, const QuadratureSpec& quad = {});

}  // namespace beamsplit
}  // namespace wigent
