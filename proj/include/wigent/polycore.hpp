#pragma once

#include <span>

namespace wigent::poly {

/// Laguerre polynomial L_n(t) by upward three-term recurrence.
double laguerre(int n, double t);

/// Physicists' Hermite polynomial H_n(x) by upward recurrence.
double hermite(int n, double x);

/// First derivative dL_n/dt, using L_n' = -(L_0 + ... + L_{n-1}).
double laguerre_derivative(int n, double t);

/// ln(n!), served from a shared table that grows on demand.
double log_factorial(int n);

/// ln C(n, k); -inf outside 0 <= k <= n.
double log_binomial(int n, int k);

/// A value stored as mantissa * exp(log_scale) so that large intermediate
/// recurrence values do not overflow.
struct ScaledValue {
    double mantissa = 0.0;
    double log_scale = 0.0;

    double value() const;
    /// ln|value|, -inf when the mantissa is zero.
    double log_abs() const;
};

/// Sum_k coeffs[k] * (-1)^k * L_k(t). The recurrence rescales itself when
/// values grow past ~1e200, so any degree/argument combination is finite.
ScaledValue alternating_laguerre_series(std::span<const double> coeffs, double t);

/// Sum_k coeffs[k] * (-1)^k * L_k'(t).
double alternating_laguerre_series_derivative(std::span<const double> coeffs, double t);

}  // namespace wigent::poly
