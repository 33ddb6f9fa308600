#include "wigent/beamsplit.hpp"

#include <cmath>
#include <complex>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "wigent/entropy.hpp"
#include "wigent/errors.hpp"
#include "wigent/format.hpp"
#include "wigent/polycore.hpp"
#include "wigent/positivity.hpp"

namespace wigent {

WignerGrid::WignerGrid(double extent, Eigen::MatrixXd values) : extent_(extent), values_(std::move(values)) {
    if (!(extent_ > 0.0)) throw InvalidArgument("grid extent must be positive");
    if (values_.rows() != values_.cols() || values_.rows() < 2)
        throw InvalidArgument("grid must be square with at least 2 points per axis");
}

WignerGrid WignerGrid::sample(const std::function<double(double, double)>& w, double extent, int resolution) {
    if (resolution < 2) throw InvalidArgument("grid resolution must be at least 2");
    Eigen::MatrixXd values(resolution, resolution);
    const double h = 2.0 * extent / (resolution - 1);
    for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j) values(i, j) = w(-extent + i * h, -extent + j * h);
    return {extent, std::move(values)};
}

WignerGrid WignerGrid::from_mixture(const PhotonMixture& p, double extent, int resolution) {
    const RadialWigner w(p);
    return sample([&w](double x, double q) { return w(std::hypot(x, q)); }, extent, resolution);
}

double WignerGrid::normalization() const {
    double total = 0.0;
    for (int i = 0; i < resolution(); ++i)
        for (int j = 0; j < resolution(); ++j) total += edge_weight(i) * edge_weight(j) * values_(i, j);
    return total * spacing() * spacing();
}

void WignerGrid::write_csv(std::ostream& out) const {
    out << "extent,resolution\n" << format_number(extent_, 17) << ',' << resolution() << '\n';
    for (int i = 0; i < resolution(); ++i) {
        for (int j = 0; j < resolution(); ++j) {
            if (j) out << ',';
            out << format_number(values_(i, j), 17);
        }
        out << '\n';
    }
}

WignerGrid WignerGrid::read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("extent,resolution", 0) != 0)
        throw InvalidArgument("grid CSV must start with an 'extent,resolution' header");
    if (!std::getline(in, line)) throw InvalidArgument("grid CSV is missing the extent/resolution line");
    double extent = 0.0;
    int resolution = 0;
    {
        std::istringstream ls(line);
        std::string a, b;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b)) throw InvalidArgument("malformed grid CSV header values");
        try {
            extent = std::stod(a);
            resolution = std::stoi(b);
        } catch (const std::exception&) {
            throw InvalidArgument("malformed grid CSV header values");
        }
    }
    if (resolution < 2) throw InvalidArgument("grid CSV resolution must be at least 2");
    Eigen::MatrixXd values(resolution, resolution);
    for (int i = 0; i < resolution; ++i) {
        if (!std::getline(in, line)) throw InvalidArgument("grid CSV has too few rows");
        std::istringstream ls(line);
        std::string cell;
        for (int j = 0; j < resolution; ++j) {
            if (!std::getline(ls, cell, ',')) throw InvalidArgument("grid CSV row " + std::to_string(i) + " is too short");
            try {
                values(i, j) = std::stod(cell);
            } catch (const std::exception&) {
                throw InvalidArgument("grid CSV has a non-numeric cell in row " + std::to_string(i));
            }
        }
    }
    return {extent, std::move(values)};
}

std::vector<double> TwoModeFockState::reduced_mode_a() const {
    std::vector<double> p(static_cast<std::size_t>(amplitudes.rows()), 0.0);
    for (Eigen::Index i = 0; i < amplitudes.rows(); ++i) p[i] = amplitudes.row(i).squaredNorm();
    return p;
}

namespace beamsplit {

namespace {

using ComplexMatrix = Eigen::MatrixXcd;

struct FrequencyGrid {
    double dk;
    std::vector<double> k;
};

FrequencyGrid frequency_grid(const WignerGrid& g, const ConvolutionOptions& options) {
    const double nyquist = std::numbers::pi / g.spacing();
    const double k_max = std::min(options.k_max, nyquist);
    // Period 4 * extent in phase space keeps periodic images clear of the support.
    const double dk = 2.0 * std::numbers::pi / (4.0 * g.extent());
    const int half = static_cast<int>(std::ceil(k_max / dk));
    FrequencyGrid f{dk, {}};
    f.k.reserve(2 * half + 1);
    for (int a = -half; a <= half; ++a) f.k.push_back(a * dk);
    return f;
}

// chi(scale * k_a, scale * k_b) = sum_ij w_i w_j h^2 W_ij exp(-i scale (k_a x_i + k_b p_j))
ComplexMatrix characteristic(const WignerGrid& g, const FrequencyGrid& f, double scale) {
    const int n = g.resolution();
    const int nk = static_cast<int>(f.k.size());
    ComplexMatrix e(nk, n);
    for (int a = 0; a < nk; ++a)
        for (int i = 0; i < n; ++i)
            e(a, i) = std::polar(g.edge_weight(i) * g.spacing(), -scale * f.k[a] * g.coordinate(i));
    const ComplexMatrix w = g.values().cast<std::complex<double>>();
    return e * w * e.transpose();
}

}  // namespace

WignerGrid convolve_beamsplitter(const WignerGrid& wa, const WignerGrid& wb, double eta,
                                 const ConvolutionOptions& options) {
    if (!(eta > 0.0 && eta < 1.0)) throw InvalidArgument("beam-splitter transmittance must lie in (0, 1)");
    if (wa.resolution() != wb.resolution() || std::abs(wa.extent() - wb.extent()) > 1e-12 * wa.extent())
        throw GridMismatch("beam-splitter inputs must share extent and resolution");

    const FrequencyGrid f = frequency_grid(wa, options);
    const ComplexMatrix chi =
        characteristic(wa, f, std::sqrt(eta)).cwiseProduct(characteristic(wb, f, std::sqrt(1.0 - eta)));

    const int n = wa.resolution();
    const int nk = static_cast<int>(f.k.size());
    ComplexMatrix inverse(n, nk);
    const double weight = f.dk / (2.0 * std::numbers::pi);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < nk; ++a) inverse(i, a) = std::polar(weight, f.k[a] * wa.coordinate(i));
    const ComplexMatrix out = inverse * chi * inverse.transpose();
    return {wa.extent(), out.real()};
}

double husimi_phase_invariant(const PhotonMixture& p, double r) {
    if (!(r >= 0.0)) throw InvalidArgument("radius must be non-negative");
    const double r2 = r * r;
    if (r2 == 0.0) return p[0] / std::numbers::pi;
    const double log_r2 = std::log(r2);
    double peak = -std::numeric_limits<double>::infinity();
    std::vector<double> logs(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        logs[k] = p[k] > 0.0 ? std::log(p[k]) + k * log_r2 - poly::log_factorial(static_cast<int>(k))
                             : -std::numeric_limits<double>::infinity();
        peak = std::max(peak, logs[k]);
    }
    double sum = 0.0;
    for (double l : logs) sum += std::exp(l - peak);
    return std::exp(peak + std::log(sum) - r2) / std::numbers::pi;
}

TwoModeFockState fock_oracle_state(int m, int n, double eta, int n_cut) {
    if (m < 0 || n < 0) throw InvalidArgument("photon numbers must be non-negative");
    if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidArgument("transmittance must lie in [0, 1]");
    if (m + n > n_cut)
        throw RangeOverflow("m + n = " + std::to_string(m + n) + " exceeds the Fock cutoff " + std::to_string(n_cut));

    const int dim = m + n + 1;
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(dim, dim);
    c(0, 0) = 1.0;
    const double t = std::sqrt(eta);
    const double u = std::sqrt(1.0 - eta);
    auto create = [&](double alpha, double beta, int count) {
        for (int k = 1; k <= count; ++k) {
            Eigen::MatrixXd next = Eigen::MatrixXd::Zero(dim, dim);
            for (int i = 0; i + 1 < dim; ++i)
                for (int j = 0; i + j + 1 < dim; ++j) {
                    const double a = c(i, j);
                    if (a == 0.0) continue;
                    next(i + 1, j) += alpha * std::sqrt(i + 1.0) * a;
                    next(i, j + 1) += beta * std::sqrt(j + 1.0) * a;
                }
            c = next / std::sqrt(static_cast<double>(k));
        }
    };
    create(u, t, n);
    create(t, -u, m);
    return {std::move(c)};
}

PhotonMixture fock_oracle_sigma(int m, int n, double eta, int n_cut) {
    return PhotonMixture(fock_oracle_state(m, n, eta, n_cut).reduced_mode_a());
}

PhotonMixture fock_oracle_output(const PhotonMixture& a, const PhotonMixture& b, double eta, int n_cut) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t m = 0; m < a.size(); ++m)
        for (std::size_t n = 0; n < b.size(); ++n) {
            const double w = a[m] * b[n];
            if (w == 0.0) continue;
            const auto part = fock_oracle_sigma(static_cast<int>(m), static_cast<int>(n), eta, n_cut);
            for (std::size_t z = 0; z < part.size(); ++z) out[z] += w * part[z];
        }
    return PhotonMixture(std::move(out));
}

std::pair<double, double> wehrl_bridge_check(const PhotonMixture& p, const QuadratureSpec& quad) {
    const PhotonMixture output = photonmix::balanced_output(p, PhotonMixture::vacuum());
    return {entropy::wigner_entropy_radial(output, quad), entropy::wehrl_entropy(p, quad)};
}

}  // namespace beamsplit
}  // namespace wigent
