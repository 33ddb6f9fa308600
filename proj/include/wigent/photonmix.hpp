#pragma once

#include <span>
#include <vector>

namespace wigent {

/// Photon-number distribution (p_0, ..., p_N) of a phase-invariant state.
/// Immutable after construction.
class PhotonMixture {
public:
    static constexpr double kNormTolerance = 1e-12;

    /// Throws InvalidArgument for empty input, non-finite or negative entries
    /// (below -1e-14; smaller negatives are rounding and are zeroed), or a
    /// total differing from 1 by more than kNormTolerance. Never renormalizes.
    explicit PhotonMixture(std::vector<double> probs);

    static PhotonMixture vacuum();
    static PhotonMixture fock(int n);
    /// Geometric distribution with the given mean photon number, truncated
    /// where the remaining tail mass drops below tail_tol.
    static PhotonMixture thermal(double mean_photons, double tail_tol = 1e-15);
    /// lambda * a + (1 - lambda) * b.
    static PhotonMixture mix(const PhotonMixture& a, const PhotonMixture& b, double lambda);

    std::span<const double> probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t k) const { return k < probs_.size() ? probs_[k] : 0.0; }

    /// Tr rho^2 = sum p_k^2.
    double purity() const;
    double mean_photons() const;

private:
    std::vector<double> probs_;
};

/// Weights e_k over the extremal passive states.
struct PassiveDecomposition {
    std::vector<double> weights;

    /// sum_k e_k * epsilon_k as a plain vector.
    std::vector<double> reconstruct() const;
};

/// Reduced output of a balanced beam splitter fed with |m> and |n>.
struct SigmaState {
    int m = 0;
    int n = 0;
    PhotonMixture coeffs = PhotonMixture::vacuum();
};

namespace photonmix {

inline constexpr double kPassiveTolerance = 1e-14;
inline constexpr int kSigmaMaxTotal = 128;

/// True iff p_k >= p_{k+1} - kPassiveTolerance for every k.
bool is_passive(const PhotonMixture& p);

/// Uniform mixture of |0>, ..., |n>.
PhotonMixture extremal_passive(int n);

/// e_k = (k+1)(p_k - p_{k+1}); throws NotPassive for increasing entries.
PassiveDecomposition passive_decompose(const PhotonMixture& p);

/// Fock-diagonal coefficients of sigma(m, n):
///   c_z = z!(m+n-z)! / (m! n! 2^{m+n}) * (sum_i (-1)^i C(m,i) C(n,z-i))^2,
/// the double alternating sum collapsing to a square. The alternating sum and
/// the ratio are evaluated in exact integer arithmetic before rounding to
/// double. Throws RangeOverflow when m + n > max_total.
SigmaState sigma_coefficients(int m, int n, int max_total = kSigmaMaxTotal);

/// (1/(n+1)) sum_{k=0}^{n} sigma(k, n-k).
PhotonMixture extremal_passive_from_sigmas(int n);

/// sum_{m,n} a_m b_n sigma(m, n): balanced beam-splitter output for the
/// product of two phase-invariant inputs.
PhotonMixture balanced_output(const PhotonMixture& a, const PhotonMixture& b);

}  // namespace photonmix
}  // namespace wigent
