#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "wigent/beamsplit.hpp"
#include "wigent/errors.hpp"
#include "wigent/photonmix.hpp"
#include "wigent/sampling.hpp"

using namespace wigent;
using namespace wigent::photonmix;

namespace {

void check_probs(const PhotonMixture& p, const std::vector<double>& expected, double tol = 1e-15) {
    REQUIRE(p.size() >= expected.size());
    for (std::size_t k = 0; k < p.size(); ++k) CHECK(std::abs(p[k] - (k < expected.size() ? expected[k] : 0.0)) <= tol);
}

}  // namespace

TEST_CASE("construction and validation") {
    CHECK_THROWS_AS(PhotonMixture({}), InvalidArgument);
    CHECK_THROWS_AS(PhotonMixture({0.5, 0.4}), InvalidArgument);
    CHECK_THROWS_AS(PhotonMixture({1.1, -0.1}), InvalidArgument);
    CHECK_THROWS_AS(PhotonMixture({NAN, 1.0}), InvalidArgument);
    const PhotonMixture tiny({1.0, -1e-16});
    CHECK(tiny[1] == 0.0);
    CHECK(tiny[10] == 0.0);
    CHECK(PhotonMixture::fock(3).mean_photons() == doctest::Approx(3.0));
    CHECK(PhotonMixture({0.5, 0.5}).purity() == doctest::Approx(0.5));
}

TEST_CASE("thermal and mix") {
    const auto th = PhotonMixture::thermal(1.0);
    CHECK(th.mean_photons() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(th.purity() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(th[0] == doctest::Approx(0.5));
    const auto m = PhotonMixture::mix(PhotonMixture::vacuum(), PhotonMixture::fock(2), 0.25);
    check_probs(m, {0.25, 0.0, 0.75});
    CHECK_THROWS_AS(PhotonMixture::mix(m, m, 1.5), InvalidArgument);
}

TEST_CASE("is_passive examples") {
    CHECK(is_passive(PhotonMixture({0.5, 0.5, 0.0})));
    CHECK_FALSE(is_passive(PhotonMixture({0.5, 0.0, 0.5})));
    CHECK(is_passive(PhotonMixture::vacuum()));
    CHECK(is_passive(PhotonMixture::thermal(2.0)));
}

TEST_CASE("extremal passive states") {
    check_probs(extremal_passive(0), {1.0});
    check_probs(extremal_passive(1), {0.5, 0.5});
    check_probs(extremal_passive(2), {1.0 / 3, 1.0 / 3, 1.0 / 3}, 1e-16);
}

TEST_CASE("passive decomposition") {
    const auto e1 = passive_decompose(PhotonMixture({0.5, 0.5}));
    CHECK(e1.weights[0] == doctest::Approx(0.0));
    CHECK(e1.weights[1] == doctest::Approx(1.0));
    const auto e = passive_decompose(PhotonMixture({0.6, 0.3, 0.1}));
    CHECK(e.weights[0] == doctest::Approx(0.3));
    CHECK(e.weights[1] == doctest::Approx(0.4));
    CHECK(e.weights[2] == doctest::Approx(0.3));
    CHECK(passive_decompose(PhotonMixture::vacuum()).weights == std::vector<double>{1.0});
    CHECK_THROWS_AS(passive_decompose(PhotonMixture({0.2, 0.8})), NotPassive);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto p = sampling::random_passive(rng, 20);
        const auto d = passive_decompose(p);
        double total = 0.0;
        for (double w : d.weights) {
            CHECK(w >= 0.0);
            total += w;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
        const auto back = d.reconstruct();
        for (std::size_t k = 0; k < p.size(); ++k) CHECK(std::abs(back[k] - p[k]) <= 1e-14);
    }
}

TEST_CASE("sigma coefficients exact examples") {
    check_probs(sigma_coefficients(1, 0).coeffs, {0.5, 0.5});
    check_probs(sigma_coefficients(1, 1).coeffs, {0.5, 0.0, 0.5});
    check_probs(sigma_coefficients(2, 0).coeffs, {0.25, 0.5, 0.25});
    check_probs(sigma_coefficients(0, 0).coeffs, {1.0});
}

TEST_CASE("sigma coefficients properties") {
    for (int m = 0; m <= 12; ++m)
        for (int n = 0; n <= 12; ++n) {
            const auto s = sigma_coefficients(m, n).coeffs;
            CHECK(s.size() == static_cast<std::size_t>(m + n + 1));
            // Exchanging the inputs flips a sign in the mode matrix only.
            const auto t = sigma_coefficients(n, m).coeffs;
            for (std::size_t z = 0; z < s.size(); ++z) CHECK(s[z] == t[z]);
            // Two-photon interference: odd components of sigma(n, n) vanish.
            if (m == n)
                for (std::size_t z = 1; z < s.size(); z += 2) CHECK(s[z] == 0.0);
            CHECK(s.mean_photons() == doctest::Approx((m + n) / 2.0).epsilon(1e-13));
        }
    // Large totals are still normalized (checked by construction) and non-negative.
    const auto big = sigma_coefficients(64, 64).coeffs;
    for (std::size_t z = 0; z < big.size(); ++z) CHECK(big[z] >= 0.0);
    CHECK_THROWS_AS(sigma_coefficients(100, 29), RangeOverflow);
    CHECK_THROWS_AS(sigma_coefficients(-1, 2), InvalidArgument);
}

TEST_CASE("sigma coefficients agree with the two-mode construction") {
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; m + n <= 10; ++n) {
            const auto exact = sigma_coefficients(m, n).coeffs;
            const auto brute = beamsplit::fock_oracle_sigma(m, n, 0.5);
            for (std::size_t z = 0; z < exact.size(); ++z) CHECK(std::abs(exact[z] - brute[z]) <= 1e-13);
        }
}

TEST_CASE("extremal passive from sigmas") {
    check_probs(extremal_passive_from_sigmas(0), {1.0});
    check_probs(extremal_passive_from_sigmas(1), {0.5, 0.5});
    check_probs(extremal_passive_from_sigmas(2), {1.0 / 3, 1.0 / 3, 1.0 / 3}, 1e-15);
    for (int n = 0; n <= 20; ++n) {
        const auto a = extremal_passive_from_sigmas(n);
        const auto b = extremal_passive(n);
        for (std::size_t k = 0; k < b.size(); ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-12);
    }
}

TEST_CASE("balanced output") {
    check_probs(balanced_output(PhotonMixture::vacuum(), PhotonMixture::vacuum()), {1.0});
    // Thermal inputs of equal temperature pass through unchanged.
    const auto th = PhotonMixture::thermal(0.5, 1e-18);
    const auto out = balanced_output(th, th);
    for (std::size_t k = 0; k < 20; ++k) CHECK(std::abs(out[k] - th[k]) <= 1e-13);
    const auto mixed = balanced_output(PhotonMixture({0.5, 0.5}), PhotonMixture::vacuum());
    CHECK(mixed[0] == doctest::Approx(0.75));
    CHECK(mixed[1] == doctest::Approx(0.25));
}

TEST_CASE("sigma coefficients are normalized up to m + n = 60") {
    for (int m = 0; m <= 60; m += 3)
        for (int n = 0; m + n <= 60; n += 2) {
            const auto s = sigma_coefficients(m, n).coeffs;
            double total = 0.0;
            for (double v : s.probs()) total += v;
            CHECK(std::abs(total - 1.0) <= 1e-12);
        }
}

TEST_CASE("passive reconstruction for longer vectors") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto p = sampling::random_passive(rng, 30);
        const auto back = passive_decompose(p).reconstruct();
        for (std::size_t k = 0; k < p.size(); ++k) CHECK(std::abs(back[k] - p[k]) <= 1e-12);
    }
}
