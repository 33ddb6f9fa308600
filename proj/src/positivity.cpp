#include "wigent/positivity.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "wigent/errors.hpp"

namespace wigent {

poly::ScaledValue RadialWigner::polynomial(double t) const {
    return poly::alternating_laguerre_series(source_.probs(), t);
}

double RadialWigner::operator()(double r) const {
    const auto poly = polynomial(2.0 * r * r);
    if (poly.mantissa == 0.0) return 0.0;
    const double magnitude = std::exp(poly.log_abs() - r * r) / std::numbers::pi;
    return poly.mantissa > 0.0 ? magnitude : -magnitude;
}

double RadialWigner::log_value(double r) const {
    const auto poly = polynomial(2.0 * r * r);
    if (!(poly.mantissa > 0.0)) return -std::numeric_limits<double>::infinity();
    return poly.log_abs() - r * r - std::log(std::numbers::pi);
}

namespace positivity {

namespace {

constexpr double kInvGolden = 0.6180339887498949;

// Minimizes f on [lo, hi] by golden-section search.
template <class F>
std::pair<double, double> golden_minimize(F f, double lo, double hi) {
    double a = lo;
    double b = hi;
    double c = b - kInvGolden * (b - a);
    double d = a + kInvGolden * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, std::abs(b)); ++it) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvGolden * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvGolden * (b - a);
            fd = f(d);
        }
    }
    // Endpoints win ties: flat extrema at r = 0 should report r = 0 exactly.
    std::pair<double, double> best = fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
    for (double x : {lo, hi}) {
        const double fx = f(x);
        if (fx <= best.second) best = {x, fx};
    }
    return best;
}

}  // namespace

double radial_wigner(const PhotonMixture& p, double r) { return RadialWigner(p)(r); }

double scan_radius(const PhotonMixture& p) {
    const double n = static_cast<double>(p.size());
    return std::sqrt(n + 6.0 * std::sqrt(n) + 20.0);
}

PositivityReport positivity_report(const PhotonMixture& p, double eps_pos) {
    const RadialWigner w(p);
    const double r_max = scan_radius(p);
    const int samples = kScanSamples;
    const double step = r_max / (samples - 1);
    std::vector<double> values(samples);
    for (int i = 0; i < samples; ++i) values[i] = w(i * step);

    PositivityReport report;
    double best_min = std::numeric_limits<double>::infinity();
    double best_min_r = 0.0;
    double best_max = -std::numeric_limits<double>::infinity();
    double best_max_r = 0.0;
    const auto neg_w = [&w](double r) { return -w(r); };

    for (int i = 0; i < samples; ++i) {
        const double left = i > 0 ? values[i - 1] : values[i + 1];  // W is even in r
        const bool last = i + 1 == samples;
        const double right = last ? values[i] : values[i + 1];
        const double lo = std::max(0.0, (i - 1) * step);
        const double hi = last ? r_max : (i + 1) * step;

        if (values[i] <= left && values[i] <= right) {
            // A decreasing positive tail at the scan edge is the r -> infinity infimum.
            if (!(last && values[i] > 0.0)) {
                const auto [r, v] = golden_minimize(w, lo, hi);
                if (v < best_min) {
                    best_min = v;
                    best_min_r = r;
                }
            }
        }
        if (values[i] >= left && values[i] >= right) {
            const auto [r, v] = golden_minimize(neg_w, lo, hi);
            if (-v > best_max) {
                best_max = -v;
                best_max_r = r;
            }
        }
    }

    report.max_value = best_max;
    report.argmax_r = best_max_r;
    if (best_min <= eps_pos) {
        report.min_value = best_min;
        report.argmin_r = best_min_r;
        report.is_positive = best_min >= -eps_pos;
        report.touches_zero = report.is_positive;
        if (!report.is_positive) report.boundary = BoundaryKind::outside;
        else report.boundary = best_min_r < 1e-6 ? BoundaryKind::flat_facet : BoundaryKind::curved;
    } else {
        report.min_value = 0.0;
        report.argmin_r = std::numeric_limits<double>::infinity();
        report.tail_infimum = true;
        report.is_positive = true;
        report.touches_zero = false;
        report.boundary = BoundaryKind::interior;
    }
    return report;
}

std::pair<double, double> curved_boundary_residual(const PhotonMixture& p, double t) {
    if (!(t >= 0.0)) throw InvalidArgument("curved boundary residual needs t >= 0");
    return {poly::alternating_laguerre_series(p.probs(), t).value(),
            poly::alternating_laguerre_series_derivative(p.probs(), t)};
}

bool two_photon_region_contains(double p1, double p2) {
    constexpr double kSlack = 1e-15;
    if (!(p1 >= -kSlack && p2 >= -kSlack && p1 + p2 <= 1.0 + kSlack))
        throw InvalidArgument("(p1, p2) lies outside the physical triangle");
    if (p1 > 0.5 + kSlack) return false;
    return p2 <= 0.25 + 0.25 * std::sqrt(std::max(0.0, 1.0 - 4.0 * p1 * p1)) + kSlack;
}

PhotonMixture two_photon_mixture(double p1, double p2) { return PhotonMixture({1.0 - p1 - p2, p1, p2}); }

std::pair<double, double> extremal_arc_point(double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw InvalidArgument("arc parameter must lie in [0, 1]");
    return {0.5 * std::sqrt(1.0 - a * a), 0.25 * (a + 1.0)};
}

double extremal_arc_tangency(double a) {
    const auto [p1, p2] = extremal_arc_point(a);
    return 2.0 - p1 / p2;
}

double extremal_arc_wigner(double a, double r) {
    if (!(a >= 0.0 && a <= 1.0)) throw InvalidArgument("arc parameter must lie in [0, 1]");
    if (!(r >= 0.0)) throw InvalidArgument("radius must be non-negative");
    const double shift = r * r - 1.0 + std::sqrt((1.0 - a) / (1.0 + a));
    return std::exp(-r * r) * 0.5 * (a + 1.0) * shift * shift / std::numbers::pi;
}

double ellipse_lhs(double p1, double p2) {
    const double u = p1 / 0.5;
    const double v = (p2 - 0.25) / 0.25;
    return u * u + v * v;
}

}  // namespace positivity
}  // namespace wigent
