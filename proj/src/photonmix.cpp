#include "wigent/photonmix.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "wigent/errors.hpp"

namespace wigent {

PhotonMixture::PhotonMixture(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw InvalidArgument("photon mixture must have at least one entry");
    for (std::size_t k = 0; k < probs_.size(); ++k) {
        double& p = probs_[k];
        if (!std::isfinite(p)) throw InvalidArgument("photon probability p_" + std::to_string(k) + " is not finite");
        if (p < -1e-14) throw InvalidArgument("photon probability p_" + std::to_string(k) + " is negative");
        if (p < 0.0) p = 0.0;
    }
    const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
    if (std::abs(total - 1.0) > kNormTolerance)
        throw InvalidArgument("photon probabilities sum to " + std::to_string(total) + ", not 1");
}

PhotonMixture PhotonMixture::vacuum() { return PhotonMixture({1.0}); }

PhotonMixture PhotonMixture::fock(int n) {
    if (n < 0) throw InvalidArgument("Fock index must be non-negative");
    std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
    p.back() = 1.0;
    return PhotonMixture(std::move(p));
}

PhotonMixture PhotonMixture::thermal(double mean_photons, double tail_tol) {
    if (!(mean_photons >= 0.0)) throw InvalidArgument("thermal mean photon number must be non-negative");
    if (mean_photons == 0.0) return vacuum();
    const double q = mean_photons / (1.0 + mean_photons);
    std::vector<double> p;
    double weight = 1.0 - q;
    double tail = 1.0;
    while (tail > tail_tol) {
        p.push_back(weight);
        tail -= weight;
        weight *= q;
    }
    return PhotonMixture(std::move(p));
}

PhotonMixture PhotonMixture::mix(const PhotonMixture& a, const PhotonMixture& b, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidArgument("mixing weight must lie in [0, 1]");
    std::vector<double> p(std::max(a.size(), b.size()), 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = lambda * a[k] + (1.0 - lambda) * b[k];
    return PhotonMixture(std::move(p));
}

double PhotonMixture::purity() const {
    return std::inner_product(probs_.begin(), probs_.end(), probs_.begin(), 0.0);
}

double PhotonMixture::mean_photons() const {
    double mean = 0.0;
    for (std::size_t k = 0; k < probs_.size(); ++k) mean += static_cast<double>(k) * probs_[k];
    return mean;
}

std::vector<double> PassiveDecomposition::reconstruct() const {
    std::vector<double> p(weights.size(), 0.0);
    // epsilon_k contributes e_k / (k+1) to every p_j with j <= k.
    double running = 0.0;
    for (std::size_t k = weights.size(); k-- > 0;) {
        running += weights[k] / static_cast<double>(k + 1);
        p[k] = running;
    }
    return p;
}

namespace photonmix {

bool is_passive(const PhotonMixture& p) {
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
        if (p[k + 1] - p[k] > kPassiveTolerance) return false;
    return true;
}

PhotonMixture extremal_passive(int n) {
    if (n < 0) throw InvalidArgument("extremal passive index must be non-negative");
    return PhotonMixture(std::vector<double>(static_cast<std::size_t>(n) + 1, 1.0 / (n + 1)));
}

PassiveDecomposition passive_decompose(const PhotonMixture& p) {
    if (!is_passive(p)) throw NotPassive("photon distribution is not non-increasing");
    PassiveDecomposition out;
    out.weights.resize(p.size());
    for (std::size_t k = 0; k < p.size(); ++k)
        out.weights[k] = std::max(0.0, static_cast<double>(k + 1) * (p[k] - p[k + 1]));
    return out;
}

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

std::vector<cpp_int> factorials(int n) {
    std::vector<cpp_int> f(static_cast<std::size_t>(n) + 1);
    f[0] = 1;
    for (int k = 1; k <= n; ++k) f[k] = f[k - 1] * k;
    return f;
}

PhotonMixture compute_sigma(int m, int n) {
    const int total = m + n;
    const auto fact = factorials(total);
    auto binom = [&](int a, int b) -> cpp_int { return fact[a] / (fact[b] * fact[a - b]); };
    const cpp_int denominator = fact[m] * fact[n] * (cpp_int(1) << total);

    std::vector<double> coeffs(static_cast<std::size_t>(total) + 1, 0.0);
    for (int z = 0; z <= total; ++z) {
        cpp_int alternating = 0;
        for (int i = std::max(0, z - n); i <= std::min(z, m); ++i) {
            const cpp_int term = binom(m, i) * binom(n, z - i);
            if (i % 2 == 0) alternating += term;
            else alternating -= term;
        }
        const cpp_rational c(alternating * alternating * fact[z] * fact[total - z], denominator);
        coeffs[z] = c.convert_to<double>();
    }
    return PhotonMixture(std::move(coeffs));
}

}  // namespace

SigmaState sigma_coefficients(int m, int n, int max_total) {
    if (m < 0 || n < 0) throw InvalidArgument("photon numbers must be non-negative");
    if (m + n > max_total)
        throw RangeOverflow("sigma(" + std::to_string(m) + ", " + std::to_string(n) +
                            ") exceeds the validated total photon number " + std::to_string(max_total));
    static std::mutex mutex;
    static std::map<std::pair<int, int>, PhotonMixture> cache;
    const auto key = std::minmax(m, n);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return {m, n, it->second};
    }
    PhotonMixture coeffs = compute_sigma(key.first, key.second);
    {
        std::lock_guard lock(mutex);
        cache.emplace(key, coeffs);
    }
    return {m, n, std::move(coeffs)};
}

PhotonMixture extremal_passive_from_sigmas(int n) {
    if (n < 0) throw InvalidArgument("extremal passive index must be non-negative");
    std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        const auto sigma = sigma_coefficients(k, n - k);
        for (std::size_t z = 0; z < p.size(); ++z) p[z] += sigma.coeffs[z];
    }
    for (double& v : p) v /= (n + 1);
    return PhotonMixture(std::move(p));
}

PhotonMixture balanced_output(const PhotonMixture& a, const PhotonMixture& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t m = 0; m < a.size(); ++m) {
        if (a[m] == 0.0) continue;
        for (std::size_t n = 0; n < b.size(); ++n) {
            const double w = a[m] * b[n];
            if (w == 0.0) continue;
            const auto sigma = sigma_coefficients(static_cast<int>(m), static_cast<int>(n));
            for (std::size_t z = 0; z < sigma.coeffs.size(); ++z) out[z] += w * sigma.coeffs[z];
        }
    }
    return PhotonMixture(std::move(out));
}

}  // namespace photonmix
}  // namespace wigent
