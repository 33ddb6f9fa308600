#include "wigent/fock.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wigent/errors.hpp"
#include "wigent/polycore.hpp"

namespace wigent::fock {

void check_index(int n) {
    if (n < 0 || n > kDefaultMaxPhoton)
        throw InvalidArgument("Fock index " + std::to_string(n) + " outside [0, " +
                              std::to_string(kDefaultMaxPhoton) + "]");
}

double wavefunction(int n, double x) {
    check_index(n);
    const double psi0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    if (n == 0) return psi0;
    double prev = psi0;
    double cur = std::numbers::sqrt2 * x * psi0;
    for (int k = 1; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double wigner_fock(int n, double x, double p) {
    check_index(n);
    const double r2 = x * x + p * p;
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    return sign * poly::laguerre(n, 2.0 * r2) * std::exp(-r2) / std::numbers::pi;
}

double marginal_density(int n, double x) {
    const double psi = wavefunction(n, x);
    return psi * psi;
}

double marginal_cutoff(int n) { return std::sqrt(2.0 * n + 1.0) + 12.0; }

double marginal_entropy(int n, const QuadratureSpec& quad) {
    check_index(n);
    // rho_n is even; rho ln rho is taken as 0 at the nodes.
    const auto integrand = [n](double x) {
        const double rho = marginal_density(n, x);
        return rho > 0.0 ? -rho * std::log(rho) : 0.0;
    };
    const double cutoff = quad.radial_cutoff.value_or(marginal_cutoff(n));
    return 2.0 * integrate(integrand, 0.0, cutoff, quad).value;
}

}  // namespace wigent::fock
