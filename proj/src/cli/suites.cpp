#include "wigent/cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "wigent/beamsplit.hpp"
#include "wigent/cli/commands.hpp"
#include "wigent/entropy.hpp"
#include "wigent/errors.hpp"
#include "wigent/format.hpp"
#include "wigent/positivity.hpp"
#include "wigent/sampling.hpp"

namespace wigent::cli {

namespace {

// ln(pi) + 1 + Euler-Mascheroni gamma: Wehrl entropy of |1>.
constexpr double kWehrlFock1 = 2.7219455507509330;

std::string num(double v, int digits = 6) { return format_number(v, digits); }

std::string describe(const PhotonMixture& p) {
    std::ostringstream s;
    s << '(';
    for (std::size_t k = 0; k < p.size(); ++k) s << (k ? ", " : "") << format_number(p[k], 6);
    s << ')';
    return s.str();
}

SuiteResult identity38(const SuiteOptions&) {
    SuiteResult result{"identity38", true, {}};
    const auto samples = entropy::square_samples(41, 5.0);
    double worst = 0.0;
    for (int n = 0; n <= 12; ++n) worst = std::max(worst, entropy::verify_identity_eq38(n, samples));
    result.check(worst <= 1e-10, "max residual " + num(worst, 3) + " over n <= 12 on 41x41 grid (threshold 1e-10)");
    return result;
}

SuiteResult eq44(const SuiteOptions&) {
    SuiteResult result{"eq44", true, {}};
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n) {
        const auto lhs = photonmix::extremal_passive_from_sigmas(n);
        const auto rhs = photonmix::extremal_passive(n);
        for (std::size_t k = 0; k < rhs.size(); ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
    }
    result.check(worst <= 1e-12, "max componentwise deviation " + num(worst, 3) + " for n <= 20 (threshold 1e-12)");
    return result;
}

SuiteResult sigma_oracle(const SuiteOptions&) {
    SuiteResult result{"sigma-oracle", true, {}};
    double worst = 0.0;
    for (int total = 0; total <= 8; ++total)
        for (int m = 0; m <= total; ++m) {
            const auto closed = photonmix::sigma_coefficients(m, total - m).coeffs;
            const auto brute = beamsplit::fock_oracle_sigma(m, total - m, 0.5);
            for (std::size_t z = 0; z < std::max(closed.size(), brute.size()); ++z)
                worst = std::max(worst, std::abs(closed[z] - brute[z]));
        }
    result.check(worst <= 1e-12, "closed form vs two-mode Fock construction: max deviation " + num(worst, 3) +
                                     " for m+n <= 8 (threshold 1e-12)");

    const auto exact = [](int m, int n, std::vector<double> expected) {
        const auto c = photonmix::sigma_coefficients(m, n).coeffs;
        if (c.size() != expected.size()) return false;
        for (std::size_t z = 0; z < expected.size(); ++z)
            if (c[z] != expected[z]) return false;
        return true;
    };
    result.check(exact(1, 0, {0.5, 0.5}), "sigma(1,0) = (1/2, 1/2) exactly");
    result.check(exact(1, 1, {0.5, 0.0, 0.5}), "sigma(1,1) = (1/2, 0, 1/2) exactly");
    result.check(exact(2, 0, {0.25, 0.5, 0.25}), "sigma(2,0) = (1/4, 1/2, 1/4) exactly");
    return result;
}

SuiteResult wehrl_bridge(const SuiteOptions& options) {
    SuiteResult result{"wehrl-bridge", true, {}};
    const double bound = entropy::vacuum_entropy();
    for (int n = 0; n <= 6; ++n) {
        const auto [wigner, wehrl] = beamsplit::wehrl_bridge_check(PhotonMixture::fock(n), options.quad);
        const double diff = std::abs(wigner - wehrl);
        result.check(diff <= 1e-8 && wigner >= bound - 1e-9 && wehrl >= bound - 1e-9,
                     "|" + std::to_string(n) + ">: Wigner(BS output) " + num(wigner, 12) + ", Wehrl " +
                         num(wehrl, 12) + ", |diff| " + num(diff, 3) + " (threshold 1e-8, both >= ln(pi)+1)");
        if (n == 1)
            result.check(std::abs(wigner - kWehrlFock1) <= 1e-6,
                         "|1> value " + num(wigner, 12) + " vs ln(pi)+1+gamma = " + num(kWehrlFock1, 12));
    }
    return result;
}

SuiteResult passive_bound(const SuiteOptions& options) {
    SuiteResult result{"passive-bound", true, {}};
    const double bound = entropy::vacuum_entropy();
    for (int n = 0; n <= 10; ++n) {
        const auto [lhs, rhs] = entropy::passive_bound_check(photonmix::extremal_passive(n), options.quad);
        result.check(lhs >= rhs - 1e-8 && rhs >= bound - 1e-8,
                     "epsilon_" + std::to_string(n) + ": h(W) " + num(lhs, 10) + " >= 2 sum p_k h(rho_k) " +
                         num(rhs, 10) + " >= ln(pi)+1");
        if (n == 0)
            result.check(std::abs(lhs - rhs) <= 1e-8, "vacuum saturates: |difference| " + num(std::abs(lhs - rhs), 3));
    }
    std::mt19937_64 rng(options.seed);
    std::vector<PhotonMixture> states;
    for (int i = 0; i < 100; ++i) states.push_back(sampling::random_passive(rng, 20));
    std::vector<std::pair<double, double>> values(states.size());
    parallel_for(states.size(), options.jobs,
                 [&](std::size_t i) { values[i] = entropy::passive_bound_check(states[i], options.quad); });
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& [lhs, rhs] : values) worst = std::min(worst, lhs - rhs);
    result.check(worst >= -1e-8, "100 random passive states (length <= 20): min margin " + num(worst, 6));
    return result;
}

SuiteResult epi(const SuiteOptions& options) {
    SuiteResult result{"epi", true, {}};
    std::mt19937_64 rng(options.seed);
    std::vector<std::pair<PhotonMixture, PhotonMixture>> pairs;
    for (int i = 0; i < 20; ++i) {
        auto a = sampling::random_positive_mixture(rng, 4);
        auto b = sampling::random_positive_mixture(rng, 4);
        pairs.emplace_back(std::move(a), std::move(b));
    }
    const double etas[] = {0.25, 0.5, 0.75};
    std::vector<EpiCheck> checks(pairs.size() * 3);
    parallel_for(checks.size(), options.jobs, [&](std::size_t i) {
        const auto& [a, b] = pairs[i / 3];
        checks[i] = entropy::check_epi(a, b, etas[i % 3], options.quad);
    });
    for (int e = 0; e < 3; ++e) {
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = e; i < checks.size(); i += 3) worst = std::min(worst, checks[i].margin());
        result.check(worst >= -1e-6, "eta = " + num(etas[e], 3) + ": 20 random Wigner-positive pairs, min margin " +
                                         num(worst, 6) + " (slack -1e-6)");
    }
    const PhotonMixture thermal = PhotonMixture::thermal(1.0);
    for (double eta : etas) {
        const auto vac = entropy::check_epi(PhotonMixture::vacuum(), PhotonMixture::vacuum(), eta, options.quad);
        const auto th = entropy::check_epi(thermal, thermal, eta, options.quad);
        result.check(std::abs(vac.margin()) <= 1e-4 && std::abs(th.margin()) <= 1e-4,
                     "eta = " + num(eta, 3) + ": Gaussian inputs saturate, |margin| vacuum " +
                         num(std::abs(vac.margin()), 3) + ", thermal " + num(std::abs(th.margin()), 3) +
                         " (threshold 1e-4)");
    }
    return result;
}

SuiteResult region2(const SuiteOptions&) {
    SuiteResult result{"region2", true, {}};
    int disagreements = 0;
    int ambiguous = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const auto [p1, p2] = sampling::quasi_random_triangle(i);
        const auto report = positivity::positivity_report(positivity::two_photon_mixture(p1, p2));
        if (!report.tail_infimum && std::abs(report.min_value) <= 1e-9) {
            ++ambiguous;
            continue;
        }
        if (report.is_positive != positivity::two_photon_region_contains(p1, p2)) ++disagreements;
    }
    result.check(disagreements == 0, "10^4 quasi-random points: " + std::to_string(disagreements) +
                                         " disagreements between closed form and positivity scan (" +
                                         std::to_string(ambiguous) + " in the 1e-9 boundary band)");
    for (int i = 0; i <= 10; ++i) {
        const double a = i / 10.0;
        const auto [p1, p2] = positivity::extremal_arc_point(a);
        const auto report = positivity::positivity_report(positivity::two_photon_mixture(p1, p2));
        const double ellipse = std::abs(positivity::ellipse_lhs(p1, p2) - 1.0);
        result.check(report.is_positive && !report.tail_infimum && std::abs(report.min_value) <= 1e-9 &&
                         ellipse <= 1e-12,
                     "arc a = " + num(a, 2) + ": min W " + num(report.min_value, 3) + " at r = " +
                         num(report.argmin_r, 6) + ", ellipse residual " + num(ellipse, 3));
    }
    return result;
}

SuiteResult conjecture_scan(const SuiteOptions& options) {
    SuiteResult result{"conjecture-scan", true, {}};
    struct Candidate {
        std::string family;
        PhotonMixture state;
    };
    std::vector<Candidate> candidates;
    for (int m = 0; m <= 10; ++m)
        for (int n = 0; n <= 10; ++n)
            candidates.push_back({"sigma(" + std::to_string(m) + "," + std::to_string(n) + ")",
                                  photonmix::sigma_coefficients(m, n).coeffs});
    for (int n = 0; n <= 10; ++n) candidates.push_back({"epsilon_" + std::to_string(n), photonmix::extremal_passive(n)});
    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < 50; ++i) candidates.push_back({"random passive", sampling::random_passive(rng, 20)});
    for (int i = 0; i <= 10; ++i) {
        const auto [p1, p2] = positivity::extremal_arc_point(i / 10.0);
        candidates.push_back({"arc a=" + num(i / 10.0, 2), positivity::two_photon_mixture(p1, p2)});
    }
    for (std::uint64_t i = 0, taken = 0; taken < 200; ++i) {
        const auto [p1, p2] = sampling::quasi_random_triangle(i);
        if (!positivity::two_photon_region_contains(p1, p2)) continue;
        candidates.push_back({"two-photon sample", positivity::two_photon_mixture(p1, p2)});
        ++taken;
    }
    for (int i = 0; i < 100; ++i)
        candidates.push_back({"random positive mixture", sampling::random_positive_mixture(rng, 6)});

    std::vector<double> h(candidates.size());
    parallel_for(candidates.size(), options.jobs,
                 [&](std::size_t i) { h[i] = entropy::wigner_entropy_radial(candidates[i].state, options.quad); });

    const double bound = entropy::vacuum_entropy();
    int violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    std::string argmin;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const double margin = h[i] - bound;
        if (margin < min_margin) {
            min_margin = margin;
            argmin = candidates[i].family;
        }
        if (margin < -1e-7) {
            ++violations;
            result.check(false, "COUNTEREXAMPLE to h(W) >= ln(pi)+1: " + candidates[i].family + " " +
                                    describe(candidates[i].state) + " has h(W) = " + num(h[i], 15));
        }
    }
    result.check(violations == 0, std::to_string(candidates.size()) + " Wigner-positive states scanned, " +
                                      std::to_string(violations) + " violations; smallest margin " +
                                      num(min_margin, 6) + " (" + argmin + ")");
    return result;
}

}  // namespace

void SuiteResult::check(bool ok, const std::string& line) {
    passed = passed && ok;
    lines.push_back(std::string(ok ? "PASS " : "FAIL ") + line);
}

void SuiteResult::warn(const std::string& line) { lines.push_back("WARN " + line); }

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"identity38",   "eq44",          "sigma-oracle", "wehrl-bridge",
                                                   "passive-bound", "epi",          "region2",      "conjecture-scan"};
    return names;
}

bool is_suite_name(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "identity38") return identity38(options);
    if (name == "eq44") return eq44(options);
    if (name == "sigma-oracle") return sigma_oracle(options);
    if (name == "wehrl-bridge") return wehrl_bridge(options);
    if (name == "passive-bound") return passive_bound(options);
    if (name == "epi") return epi(options);
    if (name == "region2") return region2(options);
    if (name == "conjecture-scan") return conjecture_scan(options);
    throw InvalidArgument("unknown verification suite \"" + name + "\"");
}

}  // namespace wigent::cli
