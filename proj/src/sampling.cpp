#include "wigent/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "wigent/positivity.hpp"

namespace wigent::sampling {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<double> dirichlet(std::mt19937_64& rng, std::size_t length) {
    std::vector<double> w(length);
    double total = 0.0;
    for (double& v : w) {
        v = -std::log1p(-uniform01(rng));
        total += v;
    }
    for (double& v : w) v /= total;
    // Push the rounding residue into the largest entry so the sum is 1 to the last bit or two.
    double sum = 0.0;
    for (double v : w) sum += v;
    *std::max_element(w.begin(), w.end()) += 1.0 - sum;
    return w;
}

PhotonMixture random_passive(std::mt19937_64& rng, std::size_t max_length) {
    const std::size_t length = 1 + static_cast<std::size_t>(uniform01(rng) * max_length);
    auto p = dirichlet(rng, std::min(length, max_length));
    std::sort(p.begin(), p.end(), std::greater<>());
    return PhotonMixture(std::move(p));
}

PhotonMixture random_positive_mixture(std::mt19937_64& rng, int max_photons) {
    for (;;) {
        const std::size_t length = 2 + static_cast<std::size_t>(uniform01(rng) * max_photons);
        PhotonMixture p(dirichlet(rng, std::min<std::size_t>(length, max_photons + 1)));
        if (positivity::positivity_report(p).is_positive) return p;
    }
}

std::pair<double, double> quasi_random_triangle(std::uint64_t i) {
    // Plastic-number based R2 sequence.
    constexpr double g = 1.32471795724474602596;
    constexpr double a1 = 1.0 / g;
    constexpr double a2 = 1.0 / (g * g);
    const double n = static_cast<double>(i + 1);
    double u = std::fmod(0.5 + a1 * n, 1.0);
    double v = std::fmod(0.5 + a2 * n, 1.0);
    if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    return {u, v};
}

}  // namespace wigent::sampling
