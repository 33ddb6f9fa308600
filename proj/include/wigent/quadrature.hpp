#pragma once

#include <functional>
#include <optional>

namespace wigent {

/// Controls for the improper entropy integrals.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 2000;
    /// Upper integration limit; chosen per integrand when empty.
    std::optional<double> radial_cutoff;
    /// Width of the initial panels the interval is split into before adaptation.
    double initial_panel_width = 0.5;

    /// Throws InvalidArgument unless both tolerances are positive.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
};

/// Globally adaptive Gauss-Kronrod (10/21) integration of f over [a, b].
/// The interval with the largest error estimate is bisected until the total
/// estimate drops below max(abs_tol, rel_tol * |I|). Throws
/// QuadratureNonConvergence when the subdivision budget runs out.
/// Deterministic: the node set depends only on f, [a, b] and the spec.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec);

}  // namespace wigent
