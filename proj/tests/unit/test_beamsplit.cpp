#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "wigent/beamsplit.hpp"
#include "wigent/entropy.hpp"
#include "wigent/errors.hpp"
#include "wigent/photonmix.hpp"
#include "wigent/positivity.hpp"
#include "wigent/sampling.hpp"

using namespace wigent;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kExtent = 8.0;
constexpr int kRes = 128;

double max_deviation(const WignerGrid& g, const std::function<double(double, double)>& w) {
    double worst = 0.0;
    for (int i = 0; i < g.resolution(); ++i)
        for (int j = 0; j < g.resolution(); ++j)
            worst = std::max(worst, std::abs(g.values()(i, j) - w(g.coordinate(i), g.coordinate(j))));
    return worst;
}

std::function<double(double, double)> radial(const PhotonMixture& p) {
    return [p](double x, double y) { return positivity::radial_wigner(p, std::hypot(x, y)); };
}

}  // namespace

TEST_CASE("grid geometry and normalization") {
    const auto g = WignerGrid::from_mixture(PhotonMixture::vacuum(), kExtent, kRes);
    CHECK(g.resolution() == kRes);
    CHECK(g.spacing() == doctest::Approx(16.0 / 127.0));
    CHECK(g.coordinate(0) == -kExtent);
    CHECK(g.coordinate(kRes - 1) == doctest::Approx(kExtent));
    CHECK(g.edge_weight(0) == 0.5);
    CHECK(g.edge_weight(5) == 1.0);
    CHECK(g.normalization() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.min_value() > 0.0);
    CHECK_THROWS_AS(WignerGrid(1.0, Eigen::MatrixXd::Zero(3, 4)), InvalidArgument);
    CHECK_THROWS_AS(WignerGrid(-1.0, Eigen::MatrixXd::Zero(3, 3)), InvalidArgument);
}

TEST_CASE("grid csv round trip") {
    const auto g = WignerGrid::from_mixture(PhotonMixture({0.3, 0.5, 0.2}), 5.0, 17);
    std::stringstream buffer;
    g.write_csv(buffer);
    const auto back = WignerGrid::read_csv(buffer);
    CHECK(back.extent() == g.extent());
    CHECK(back.resolution() == g.resolution());
    CHECK((back.values() - g.values()).cwiseAbs().maxCoeff() == 0.0);
    std::stringstream broken("extent,resolution\n5,3\n1,2,3\n");
    CHECK_THROWS_AS(WignerGrid::read_csv(broken), InvalidArgument);
}

TEST_CASE("convolution examples") {
    const auto w0 = WignerGrid::from_mixture(PhotonMixture::vacuum(), kExtent, kRes);
    const auto w1 = WignerGrid::from_mixture(PhotonMixture::fock(1), kExtent, kRes);
    for (double eta : {0.1, 0.5, 0.8})
        CHECK(max_deviation(beamsplit::convolve_beamsplitter(w0, w0, eta), radial(PhotonMixture::vacuum())) <= 1e-12);
    // |1> with vacuum at eta = 1/2 gives the Husimi function of |1>.
    const auto q1 = beamsplit::convolve_beamsplitter(w1, w0, 0.5);
    CHECK(max_deviation(q1, [](double x, double p) {
              const double r2 = x * x + p * p;
              return r2 * std::exp(-r2) / kPi;
          }) <= 1e-12);
    CHECK(max_deviation(beamsplit::convolve_beamsplitter(w1, w1, 0.5), radial(PhotonMixture({0.5, 0.0, 0.5}))) <=
          1e-12);
}

TEST_CASE("convolution agrees with direct summation") {
    // Direct oracle: W_out(z) = (1/(1-eta)) int W_A(u) W_B((z - sqrt(eta) u) / sqrt(1-eta)) du,
    // with W_A read from the grid and W_B evaluated exactly.
    const PhotonMixture pa({0.55, 0.35, 0.1});
    const PhotonMixture pb({0.7, 0.2, 0.1});
    const double eta = 0.3;
    const auto wa = WignerGrid::from_mixture(pa, kExtent, kRes);
    const auto wb = WignerGrid::from_mixture(pb, kExtent, kRes);
    const auto out = beamsplit::convolve_beamsplitter(wa, wb, eta);
    const double se = std::sqrt(eta);
    const double sb = std::sqrt(1.0 - eta);
    const double h = wa.spacing();
    for (int i : {20, 50, 64, 90})
        for (int j : {30, 63, 100}) {
            const double zx = out.coordinate(i);
            const double zp = out.coordinate(j);
            double sum = 0.0;
            for (int a = 0; a < kRes; ++a)
                for (int b = 0; b < kRes; ++b) {
                    const double ux = wa.coordinate(a);
                    const double up = wa.coordinate(b);
                    const double r = std::hypot((zx - se * ux) / sb, (zp - se * up) / sb);
                    sum += wa.edge_weight(a) * wa.edge_weight(b) * wa.values()(a, b) * positivity::radial_wigner(pb, r);
                }
            CHECK(std::abs(out.values()(i, j) - sum * h * h / (1.0 - eta)) <= 1e-8);
        }
}

TEST_CASE("convolution matches the Fock construction for any transmittance") {
    const PhotonMixture pa({0.6, 0.4});
    const PhotonMixture pb({0.5, 0.0, 0.5});
    const auto wa = WignerGrid::from_mixture(pa, kExtent, kRes);
    const auto wb = WignerGrid::from_mixture(pb, kExtent, kRes);
    for (double eta : {0.2, 0.5, 0.65}) {
        const auto out = beamsplit::convolve_beamsplitter(wa, wb, eta);
        CHECK(max_deviation(out, radial(beamsplit::fock_oracle_output(pa, pb, eta))) <= 1e-12);
    }
}

TEST_CASE("convolution errors") {
    const auto a = WignerGrid::from_mixture(PhotonMixture::vacuum(), kExtent, 32);
    const auto b = WignerGrid::from_mixture(PhotonMixture::vacuum(), kExtent, 33);
    const auto c = WignerGrid::from_mixture(PhotonMixture::vacuum(), 6.0, 32);
    CHECK_THROWS_AS(beamsplit::convolve_beamsplitter(a, b, 0.5), GridMismatch);
    CHECK_THROWS_AS(beamsplit::convolve_beamsplitter(a, c, 0.5), GridMismatch);
    CHECK_THROWS_AS(beamsplit::convolve_beamsplitter(a, a, 0.0), InvalidArgument);
    CHECK_THROWS_AS(beamsplit::convolve_beamsplitter(a, a, 1.0), InvalidArgument);
}

TEST_CASE("husimi examples") {
    CHECK(beamsplit::husimi_phase_invariant(PhotonMixture::vacuum(), 0.0) == doctest::Approx(1 / kPi));
    CHECK(beamsplit::husimi_phase_invariant(PhotonMixture::fock(1), 1.0) == doctest::Approx(std::exp(-1.0) / kPi));
    CHECK(beamsplit::husimi_phase_invariant(PhotonMixture::fock(1), 0.0) == 0.0);
    // Q of |n>: r^{2n} e^{-r^2} / (pi n!), finite for large n.
    const double q = beamsplit::husimi_phase_invariant(PhotonMixture::fock(150), 12.0);
    CHECK(q == doctest::Approx(std::exp(300 * std::log(12.0) - 144.0 - std::lgamma(151.0)) / kPi).epsilon(1e-10));
}

TEST_CASE("fock oracle examples") {
    const auto s10 = beamsplit::fock_oracle_sigma(1, 0, 0.5);
    CHECK(s10[0] == doctest::Approx(0.5));
    CHECK(s10[1] == doctest::Approx(0.5));
    const auto transparent = beamsplit::fock_oracle_sigma(1, 0, 1.0);
    CHECK(transparent[0] == doctest::Approx(0.0));
    CHECK(transparent[1] == doctest::Approx(1.0));
    const auto s20 = beamsplit::fock_oracle_sigma(2, 0, 0.5);
    CHECK(s20[0] == doctest::Approx(0.25));
    CHECK(s20[1] == doctest::Approx(0.5));
    CHECK(s20[2] == doctest::Approx(0.25));
    // |1> on a beam splitter of transmittance eta keeps its photon with probability eta.
    const auto partial = beamsplit::fock_oracle_sigma(1, 0, 0.3);
    CHECK(partial[1] == doctest::Approx(0.3));
    CHECK_THROWS_AS(beamsplit::fock_oracle_sigma(20, 10, 0.5), RangeOverflow);
    CHECK_THROWS_AS(beamsplit::fock_oracle_sigma(1, 1, 1.5), InvalidArgument);
}

TEST_CASE("fock oracle state is normalized and photon-number conserving") {
    for (double eta : {0.0, 0.25, 0.5, 0.9}) {
        const auto state = beamsplit::fock_oracle_state(3, 4, eta);
        CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-14));
        for (int a = 0; a < state.amplitudes.rows(); ++a)
            for (int b = 0; b < state.amplitudes.cols(); ++b)
                if (a + b != 7) CHECK(state.amplitudes(a, b) == 0.0);
    }
}

TEST_CASE("wehrl bridge") {
    const auto [w0, q0] = beamsplit::wehrl_bridge_check(PhotonMixture::vacuum());
    CHECK(w0 == doctest::Approx(std::log(kPi) + 1).epsilon(1e-12));
    CHECK(q0 == doctest::Approx(std::log(kPi) + 1).epsilon(1e-12));
    const auto [w1, q1] = beamsplit::wehrl_bridge_check(PhotonMixture::fock(1));
    CHECK(w1 == doctest::Approx(std::log(kPi) + 1 + std::numbers::egamma).epsilon(1e-10));
    CHECK(std::abs(w1 - q1) <= 1e-9);
    const auto [w2, q2] = beamsplit::wehrl_bridge_check(PhotonMixture({0.2, 0.3, 0.5}));
    CHECK(std::abs(w2 - q2) <= 1e-9);
}

TEST_CASE("balanced output of any product input is wigner positive") {
    std::mt19937_64 rng(8);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const PhotonMixture pa(sampling::dirichlet(rng, 7));
        const PhotonMixture pb(sampling::dirichlet(rng, 7));
        const auto out = beamsplit::convolve_beamsplitter(WignerGrid::from_mixture(pa, kExtent, kRes),
                                                          WignerGrid::from_mixture(pb, kExtent, kRes), 0.5);
        worst = std::min(worst, out.min_value());
    }
    CHECK(worst >= -1e-9);
}

TEST_CASE("sigma states vanish at the origin unless m = n") {
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            const double w = positivity::radial_wigner(photonmix::sigma_coefficients(m, n).coeffs, 0.0);
            CHECK(std::abs(w - (m == n ? 1 / kPi : 0.0)) <= 1e-10);
        }
}

TEST_CASE("fock oracle conserves photon number") {
    for (double eta : {0.2, 0.5, 0.7})
        for (int m = 0; m <= 5; ++m)
            for (int n = 0; n <= 5; ++n) {
                const auto s = beamsplit::fock_oracle_sigma(m, n, eta);
                CHECK(s.size() <= static_cast<std::size_t>(m + n + 1));
                CHECK(std::abs(s.mean_photons() - (eta * m + (1 - eta) * n)) <= 1e-12);
            }
}
