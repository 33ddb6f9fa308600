#include "wigent/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "wigent/errors.hpp"

namespace wigent {

namespace {

// Kronrod abscissae; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077482693949532, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

// QUADPACK qk21 rule with its error scaling.
Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[10];
    double gauss = 0.0;
    double resabs = std::abs(kronrod);
    std::array<double, 10> f1{};
    std::array<double, 10> f2{};
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        const double sum = f1[j] + f2[j];
        kronrod += kWgk[j] * sum;
        resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    const double mean = 0.5 * kronrod;
    double resasc = kWgk[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j) resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    const double value = kronrod * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double error = std::abs((kronrod - gauss) * half);
    if (resasc != 0.0 && error != 0.0) error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) error = std::max(50.0 * kEps * resabs, error);
    return {a, b, value, error};
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw InvalidArgument("quadrature tolerances must be positive");
    if (max_subdivisions < 1) throw InvalidArgument("max_subdivisions must be at least 1");
    if (!(initial_panel_width > 0.0)) throw InvalidArgument("initial_panel_width must be positive");
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (a == b) return {};
    const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / spec.initial_panel_width)));
    std::priority_queue<Panel> queue;
    double value = 0.0;
    double error = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double lo = a + (b - a) * i / panels;
        const double hi = i + 1 == panels ? b : a + (b - a) * (i + 1) / panels;
        Panel p = gauss_kronrod(f, lo, hi);
        value += p.value;
        error += p.error;
        queue.push(p);
    }

    int subdivisions = 0;
    auto target = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(value)); };
    while (error > target()) {
        if (subdivisions >= spec.max_subdivisions) {
            std::ostringstream msg;
            msg << "adaptive quadrature did not converge on [" << a << ", " << b << "]: estimate " << value
                << ", error " << error << " after " << subdivisions << " subdivisions";
            throw QuadratureNonConvergence(msg.str(), value, error);
        }
        const Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gauss_kronrod(f, worst.a, mid);
        const Panel right = gauss_kronrod(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++subdivisions;
    }

    // Re-sum from the panels so the reported value carries no drift from the
    // incremental updates.
    double total = 0.0;
    double total_error = 0.0;
    std::vector<Panel> all;
    all.reserve(queue.size());
    while (!queue.empty()) {
        all.push_back(queue.top());
        queue.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    for (const auto& p : all) {
        total += p.value;
        total_error += p.error;
    }
    return {total, total_error, subdivisions};
}

}  // namespace wigent
