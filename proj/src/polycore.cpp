#include "wigent/polycore.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace wigent::poly {

double laguerre(int n, double t) {
    if (n <= 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 - t;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 - t) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double hermite(int n, double x) {
    if (n <= 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double laguerre_derivative(int n, double t) {
    double sum = 0.0;
    double prev = 0.0;
    double cur = 1.0;
    for (int k = 0; k < n; ++k) {
        sum += cur;
        const double next = k == 0 ? 1.0 - t : ((2.0 * k + 1.0 - t) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return -sum;
}

namespace {

class LogFactorialTable {
public:
    LogFactorialTable() { grow_locked(1024); }

    double get(int n) {
        {
            std::shared_lock lock(mutex_);
            if (static_cast<std::size_t>(n) < table_.size()) return table_[n];
        }
        std::unique_lock lock(mutex_);
        grow_locked(static_cast<std::size_t>(n) + 1);
        return table_[n];
    }

private:
    // Entries are appended only; an entry never changes once written.
    void grow_locked(std::size_t size) {
        if (table_.empty()) table_.push_back(0.0);
        while (table_.size() < size) {
            const auto k = table_.size();
            table_.push_back(table_.back() + std::log(static_cast<double>(k)));
        }
    }

    std::shared_mutex mutex_;
    std::vector<double> table_;
};

}  // namespace

double log_factorial(int n) {
    static LogFactorialTable table;
    return n <= 1 ? 0.0 : table.get(n);
}

double log_binomial(int n, int k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double ScaledValue::value() const { return mantissa * std::exp(log_scale); }

double ScaledValue::log_abs() const {
    if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(mantissa)) + log_scale;
}

ScaledValue alternating_laguerre_series(std::span<const double> coeffs, double t) {
    constexpr double kLimit = 1e200;
    static const double kLogLimit = std::log(kLimit);

    ScaledValue out;
    if (coeffs.empty()) return out;
    double prev = 1.0;  // L_{k-1}
    double cur = 1.0;   // L_k
    double acc = coeffs[0];
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        const double next =
            k == 1 ? 1.0 - t : ((2.0 * (k - 1) + 1.0 - t) * cur - (k - 1.0) * prev) / static_cast<double>(k);
        prev = cur;
        cur = next;
        acc += (k % 2 == 0 ? coeffs[k] : -coeffs[k]) * cur;
        if (std::abs(cur) > kLimit) {
            prev /= kLimit;
            cur /= kLimit;
            acc /= kLimit;
            out.log_scale += kLogLimit;
        }
    }
    out.mantissa = acc;
    return out;
}

double alternating_laguerre_series_derivative(std::span<const double> coeffs, double t) {
    // sum_k c_k (-1)^k L_k' = -sum_j L_j * sum_{k>j} c_k (-1)^k
    const std::size_t n = coeffs.size();
    if (n < 2) return 0.0;
    std::vector<double> tail(n, 0.0);
    for (std::size_t j = n - 1; j-- > 0;) {
        const double c = coeffs[j + 1];
        tail[j] = tail[j + 1] + ((j + 1) % 2 == 0 ? c : -c);
    }
    double prev = 1.0;
    double cur = 1.0;
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        if (j > 0) {
            const double next =
                j == 1 ? 1.0 - t : ((2.0 * (j - 1) + 1.0 - t) * cur - (j - 1.0) * prev) / static_cast<double>(j);
            prev = cur;
            cur = next;
        }
        acc += cur * tail[j];
    }
    return -acc;
}

}  // namespace wigent::poly
