#include "wigent/gaussian.hpp"

#include <cmath>
#include <numbers>

#include "wigent/errors.hpp"

namespace wigent::gaussian {

namespace {

const Eigen::Matrix2d& omega() {
    static const Eigen::Matrix2d w = (Eigen::Matrix2d() << 0.0, 1.0, -1.0, 0.0).finished();
    return w;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

}  // namespace

GaussianState::GaussianState(Eigen::Vector2d mean, Eigen::Matrix2d cov) : mean_(mean), cov_(cov) {
    if (!mean_.allFinite() || !cov_.allFinite()) throw InvalidArgument("Gaussian state has non-finite entries");
    const double scale = std::max(1.0, cov_.cwiseAbs().maxCoeff());
    if (std::abs(cov_(0, 1) - cov_(1, 0)) > 1e-12 * scale) throw InvalidArgument("covariance matrix is not symmetric");
    if (!(cov_(0, 0) > 0.0) || !(cov_.determinant() > 0.0))
        throw InvalidArgument("covariance matrix is not positive definite");
    // det of a 2x2 with large entries carries rounding of order eps * |cov|^2.
    if (cov_.determinant() < 0.25 - 1e-12 * scale * scale)
        throw InvalidArgument("covariance matrix violates the uncertainty bound det >= 1/4");
}

GaussianState GaussianState::vacuum() { return {Eigen::Vector2d::Zero(), 0.5 * Eigen::Matrix2d::Identity()}; }

GaussianState GaussianState::thermal(double purity) {
    if (!(purity > 0.0) || purity > 1.0) throw InvalidArgument("thermal purity must lie in (0, 1]");
    return {Eigen::Vector2d::Zero(), (0.5 / purity) * Eigen::Matrix2d::Identity()};
}

double GaussianState::purity() const { return 0.5 / std::sqrt(cov_.determinant()); }

SymplecticMap::SymplecticMap(Eigen::Matrix2d s, Eigen::Vector2d d, double tol) : s_(s), d_(d) {
    const double residual = (s_ * omega() * s_.transpose() - omega()).cwiseAbs().maxCoeff();
    if (!(residual <= tol)) throw NonSymplectic("map is not symplectic: |S Omega S^T - Omega| = " + std::to_string(residual));
}

SymplecticMap SymplecticMap::rotation(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return SymplecticMap((Eigen::Matrix2d() << c, -s, s, c).finished());
}

SymplecticMap SymplecticMap::squeeze(double s) {
    return SymplecticMap((Eigen::Matrix2d() << std::exp(s), 0.0, 0.0, std::exp(-s)).finished());
}

SymplecticMap SymplecticMap::displacement(double dx, double dp) {
    return SymplecticMap(Eigen::Matrix2d::Identity(), Eigen::Vector2d(dx, dp));
}

SymplecticMap SymplecticMap::operator*(const SymplecticMap& other) const {
    // Products of exactly symplectic factors pick up rounding only.
    return SymplecticMap(s_ * other.s_, s_ * other.d_ + d_, 1e-10 * std::max(1.0, (s_ * other.s_).squaredNorm()));
}

GaussianState apply_symplectic(const GaussianState& g, const SymplecticMap& m) {
    const Eigen::Matrix2d s = m.matrix();
    Eigen::Matrix2d cov = s * g.cov() * s.transpose();
    cov(0, 1) = cov(1, 0) = 0.5 * (cov(0, 1) + cov(1, 0));
    return {s * g.mean() + m.shift(), cov};
}

double gaussian_wigner_entropy(const GaussianState& g) {
    return std::log(2.0 * std::numbers::pi * std::sqrt(g.cov().determinant())) + 1.0;
}

double gaussian_wigner_renyi(const GaussianState& g, double alpha) {
    if (!(alpha > 0.0)) throw Divergence("Renyi order must be positive; order 0 diverges");
    const double scale = std::log(2.0 * std::sqrt(g.cov().determinant()));
    if (std::isinf(alpha)) return std::log(std::numbers::pi) + scale;
    if (alpha == 1.0) return gaussian_wigner_entropy(g);
    return std::log(std::numbers::pi) + std::log(alpha) / (alpha - 1.0) + scale;
}

double gaussian_wehrl_entropy(const GaussianState& g) {
    const Eigen::Matrix2d smoothed = g.cov() + 0.5 * Eigen::Matrix2d::Identity();
    return std::log(std::numbers::pi * std::sqrt(smoothed.determinant())) + 1.0;
}

double gaussian_wigner(const GaussianState& g, double x, double p) {
    const Eigen::Vector2d dz = Eigen::Vector2d(x, p) - g.mean();
    const double det = g.cov().determinant();
    const double quad = dz.dot(g.cov().inverse() * dz);
    return std::exp(-0.5 * quad) / (2.0 * std::numbers::pi * std::sqrt(det));
}

SymplecticMap random_symplectic(std::mt19937_64& rng, double max_squeeze) {
    const double a = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const double s = uniform(rng, -max_squeeze, max_squeeze);
    const double b = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    return SymplecticMap::rotation(a) * SymplecticMap::squeeze(s) * SymplecticMap::rotation(b);
}

GaussianState random_state(std::mt19937_64& rng, double max_thermal, double max_squeeze) {
    const double nu = uniform(rng, 1.0, max_thermal);
    const Eigen::Matrix2d s = random_symplectic(rng, max_squeeze).matrix();
    Eigen::Matrix2d cov = 0.5 * nu * s * s.transpose();
    cov(0, 1) = cov(1, 0) = 0.5 * (cov(0, 1) + cov(1, 0));
    const Eigen::Vector2d mean(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
    return {mean, cov};
}

}  // namespace wigent::gaussian
