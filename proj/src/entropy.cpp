#include "wigent/entropy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wigent/errors.hpp"
#include "wigent/fock.hpp"
#include "wigent/positivity.hpp"

namespace wigent::entropy {

namespace {

void require_positive(const PhotonMixture& p) {
    const auto report = positivity::positivity_report(p);
    if (!report.is_positive) {
        std::ostringstream msg;
        msg << "state is not Wigner positive: min W = " << report.min_value << " at r = " << report.argmin_r;
        throw NotWignerPositive(msg.str(), report.min_value, report.argmin_r);
    }
}

}  // namespace

double vacuum_entropy() { return std::log(std::numbers::pi) + 1.0; }

double radial_cutoff(const PhotonMixture& p, const QuadratureSpec& quad, double alpha) {
    if (quad.radial_cutoff) return *quad.radial_cutoff;
    return (12.0 + std::sqrt(2.0 * static_cast<double>(p.size()))) / std::sqrt(std::min(alpha, 1.0));
}

double wigner_entropy_radial(const PhotonMixture& p, const QuadratureSpec& quad) {
    require_positive(p);
    const RadialWigner w(p);
    const auto integrand = [&w](double r) {
        const double log_w = w.log_value(r);
        if (!std::isfinite(log_w)) return 0.0;
        return -2.0 * std::numbers::pi * r * std::exp(log_w) * log_w;
    };
    return integrate(integrand, 0.0, radial_cutoff(p, quad), quad).value;
}

double wigner_entropy_grid(const WignerGrid& w) {
    constexpr double kClip = 1e-9;
    if (w.min_value() < -kClip) {
        std::ostringstream msg;
        msg << "grid has negative value " << w.min_value() << " below the clipping threshold " << -kClip;
        throw NegativeGrid(msg.str());
    }
    const double norm = w.normalization();
    if (std::abs(norm - 1.0) > 1e-5) {
        std::ostringstream msg;
        msg << "grid integrates to " << norm << ", not 1";
        throw InvalidArgument(msg.str());
    }
    const auto& v = w.values();
    double total = 0.0;
    for (int i = 0; i < w.resolution(); ++i)
        for (int j = 0; j < w.resolution(); ++j) {
            const double x = v(i, j);
            if (x > 0.0) total -= w.edge_weight(i) * w.edge_weight(j) * x * std::log(x);
        }
    return total * w.spacing() * w.spacing();
}

double wigner_renyi(const PhotonMixture& p, RenyiOrder order, const QuadratureSpec& quad) {
    const double alpha = order.alpha;
    if (alpha == 0.0) throw Divergence("Renyi order 0 diverges: every Wigner function has unbounded support");
    if (!(alpha > 0.0)) throw InvalidArgument("Renyi order must be positive");
    if (order.is_shannon()) return wigner_entropy_radial(p, quad);
    if (order.is_infinite()) {
        const auto report = positivity::positivity_report(p);
        if (!report.is_positive)
            throw NotWignerPositive("state is not Wigner positive", report.min_value, report.argmin_r);
        return -std::log(report.max_value);
    }
    require_positive(p);
    const RadialWigner w(p);
    const auto integrand = [&w, alpha](double r) {
        const double log_w = w.log_value(r);
        if (!std::isfinite(log_w)) return 0.0;
        return 2.0 * std::numbers::pi * r * std::exp(alpha * log_w);
    };
    const double integral = integrate(integrand, 0.0, radial_cutoff(p, quad, alpha), quad).value;
    return std::log(integral) / (1.0 - alpha);
}

double wehrl_entropy(const PhotonMixture& p, const QuadratureSpec& quad) {
    const auto integrand = [&p](double r) {
        const double q = beamsplit::husimi_phase_invariant(p, r);
        return q > 0.0 ? -2.0 * std::numbers::pi * r * q * std::log(q) : 0.0;
    };
    return integrate(integrand, 0.0, radial_cutoff(p, quad), quad).value;
}

double entropy_power(double h) { return std::exp(h) / (2.0 * std::numbers::pi * std::numbers::e); }

double marginal_entropy_mixture(const PhotonMixture& p, const QuadratureSpec& quad) {
    const auto density = [&p](double x) {
        double rho = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k] > 0.0) rho += p[k] * fock::marginal_density(static_cast<int>(k), x);
        return rho;
    };
    const auto integrand = [&density](double x) {
        const double rho = density(x);
        return rho > 0.0 ? -rho * std::log(rho) : 0.0;
    };
    const double cutoff = quad.radial_cutoff.value_or(fock::marginal_cutoff(static_cast<int>(p.size()) - 1));
    return 2.0 * integrate(integrand, 0.0, cutoff, quad).value;
}

EpiCheck check_epi(const PhotonMixture& pa, const PhotonMixture& pb, double eta, const QuadratureSpec& quad,
                   EpiRoute route, const GridSettings& grid) {
    if (!(eta > 0.0 && eta < 1.0)) throw InvalidArgument("beam-splitter transmittance must lie in (0, 1)");
    const double power_a = entropy_power(wigner_entropy_radial(pa, quad));
    const double power_b = entropy_power(wigner_entropy_radial(pb, quad));

    double output_entropy = 0.0;
    if (route == EpiRoute::automatic) route = eta == 0.5 ? EpiRoute::exact_fock : EpiRoute::grid;
    if (route == EpiRoute::exact_fock) {
        const PhotonMixture out = eta == 0.5 ? photonmix::balanced_output(pa, pb)
                                             : beamsplit::fock_oracle_output(pa, pb, eta,
                                                                             static_cast<int>(pa.size() + pb.size()));
        output_entropy = wigner_entropy_radial(out, quad);
    } else {
        const auto ga = WignerGrid::from_mixture(pa, grid.extent, grid.resolution);
        const auto gb = WignerGrid::from_mixture(pb, grid.extent, grid.resolution);
        output_entropy = wigner_entropy_grid(beamsplit::convolve_beamsplitter(ga, gb, eta));
    }
    return {entropy_power(output_entropy), eta * power_a + (1.0 - eta) * power_b};
}

std::pair<double, double> passive_bound_check(const PhotonMixture& p, const QuadratureSpec& quad) {
    if (!photonmix::is_passive(p)) throw NotPassive("passive bound needs a non-increasing photon distribution");
    double bound = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] > 0.0) bound += p[k] * fock::marginal_entropy(static_cast<int>(k), quad);
    return {wigner_entropy_radial(p, quad), 2.0 * bound};
}

double verify_identity_eq38(int n, std::span<const std::pair<double, double>> samples) {
    if (n < 0 || n > 30) throw InvalidArgument("identity check supports 0 <= n <= 30");
    double worst = 0.0;
    for (const auto& [x, p] : samples) {
        double wigner_sum = 0.0;
        double product_sum = 0.0;
        for (int k = 0; k <= n; ++k) {
            wigner_sum += fock::wigner_fock(k, x, p);
            product_sum += fock::marginal_density(k, x) * fock::marginal_density(n - k, p);
        }
        worst = std::max(worst, std::abs(wigner_sum - product_sum));
    }
    return worst;
}

std::vector<std::pair<double, double>> square_samples(int points, double half_width) {
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(points) * points);
    const double step = points > 1 ? 2.0 * half_width / (points - 1) : 0.0;
    for (int i = 0; i < points; ++i)
        for (int j = 0; j < points; ++j) out.emplace_back(-half_width + i * step, -half_width + j * step);
    return out;
}

}  // namespace wigent::entropy
