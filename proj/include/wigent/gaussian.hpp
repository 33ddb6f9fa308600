#pragma once

#include <Eigen/Dense>
#include <random>

namespace wigent::gaussian {

/// Single-mode Gaussian state in quadrature units; vacuum has cov = I/2.
class GaussianState {
public:
    /// Throws InvalidArgument if cov is not symmetric positive definite with det >= 1/4.
    GaussianState(Eigen::Vector2d mean, Eigen::Matrix2d cov);

    static GaussianState vacuum();
    /// Isotropic thermal state with purity mu in (0, 1].
    static GaussianState thermal(double purity);

    const Eigen::Vector2d& mean() const { return mean_; }
    const Eigen::Matrix2d& cov() const { return cov_; }
    double purity() const;

private:
    Eigen::Vector2d mean_;
    Eigen::Matrix2d cov_;
};

/// Affine phase-space map z -> S z + d with S symplectic.
class SymplecticMap {
public:
    /// Throws NonSymplectic if |S Omega S^T - Omega| exceeds tol.
    explicit SymplecticMap(Eigen::Matrix2d s, Eigen::Vector2d d = Eigen::Vector2d::Zero(), double tol = 1e-12);

    static SymplecticMap rotation(double theta);
    static SymplecticMap squeeze(double s);
    static SymplecticMap displacement(double dx, double dp);

    /// Composition: (this * other)(z) = this(other(z)).
    SymplecticMap operator*(const SymplecticMap& other) const;

    const Eigen::Matrix2d& matrix() const { return s_; }
    const Eigen::Vector2d& shift() const { return d_; }

private:
    Eigen::Matrix2d s_;
    Eigen::Vector2d d_;
};

/// c -> S c + d, cov -> S cov S^T.
GaussianState apply_symplectic(const GaussianState& g, const SymplecticMap& m);

/// h(W) = ln(2 pi sqrt(det cov)) + 1 = ln(pi / mu) + 1.
double gaussian_wigner_entropy(const GaussianState& g);

/// Wigner-Renyi entropy of order alpha (alpha != 1): h_alpha(W_0) + ln(2 sqrt(det cov)).
double gaussian_wigner_renyi(const GaussianState& g, double alpha);

/// Wehrl entropy ln(pi sqrt(det(cov + I/2))) + 1.
double gaussian_wehrl_entropy(const GaussianState& g);

/// Bivariate normal density with mean c and covariance cov at (x, p).
double gaussian_wigner(const GaussianState& g, double x, double p);

/// Euler decomposition rotation(a) * squeeze(s) * rotation(b) with
/// s uniform in [-max_squeeze, max_squeeze] and angles uniform in [0, 2pi).
SymplecticMap random_symplectic(std::mt19937_64& rng, double max_squeeze = 2.0);

/// Valid covariance nu * S S^T / 2 with nu in [1, max_thermal] and random symplectic S.
GaussianState random_state(std::mt19937_64& rng, double max_thermal = 4.0, double max_squeeze = 1.5);

}  // namespace wigent::gaussian
