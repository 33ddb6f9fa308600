#include "wigent/cli/commands.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <memory>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "wigent/cli/csv.hpp"
#include "wigent/cli/state_file.hpp"
#include "wigent/cli/suites.hpp"
#include "wigent/entropy.hpp"
#include "wigent/errors.hpp"
#include "wigent/format.hpp"
#include "wigent/positivity.hpp"

namespace wigent::cli {

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(jobs, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

QuadratureSpec quadrature_for(const CommonOptions& common) {
    QuadratureSpec quad;
    quad.abs_tol = common.quad_tol;
    quad.rel_tol = 10.0 * common.quad_tol;
    return quad;
}

// CSV goes to --out when given, otherwise to the command's output stream.
class CsvSink {
public:
    CsvSink(const std::string& path, std::ostream& fallback) {
        if (path.empty() || path == "-") {
            stream_ = &fallback;
        } else {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw InvalidArgument("cannot open output file " + path);
            stream_ = file_.get();
        }
    }
    std::ostream& stream() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

std::string renyi_label(double alpha) {
    return std::isinf(alpha) ? "h_inf(W)" : "h_" + format_number(alpha, 6) + "(W)";
}

}  // namespace

int cmd_entropy(const EntropyOptions& options, std::ostream& out, std::ostream& err) {
    StateSpec state = PhotonMixture::vacuum();
    try {
        state = load_state(options.state_path);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const QuadratureSpec quad = quadrature_for(options.common);
    const double bound = entropy::vacuum_entropy();

    std::vector<std::pair<std::string, double>> rows;
    try {
        if (const auto* p = std::get_if<PhotonMixture>(&state)) {
            const auto report = positivity::positivity_report(*p);
            if (!report.is_positive) {
                err << "error: state is not Wigner positive: min W = " << format_number(report.min_value)
                    << " at r = " << format_number(report.argmin_r) << '\n';
                return kExitNotPositive;
            }
            const double h = entropy::wigner_entropy_radial(*p, quad);
            rows.emplace_back("h(W)", h);
            rows.emplace_back("margin", h - bound);
            for (double alpha : options.renyi) rows.emplace_back(renyi_label(alpha), entropy::wigner_renyi(*p, {alpha}, quad));
            rows.emplace_back("wehrl", entropy::wehrl_entropy(*p, quad));
            rows.emplace_back("purity", p->purity());
        } else {
            const auto& g = std::get<gaussian::GaussianState>(state);
            const double h = gaussian::gaussian_wigner_entropy(g);
            rows.emplace_back("h(W)", h);
            rows.emplace_back("margin", h - bound);
            for (double alpha : options.renyi) rows.emplace_back(renyi_label(alpha), gaussian::gaussian_wigner_renyi(g, alpha));
            rows.emplace_back("wehrl", gaussian::gaussian_wehrl_entropy(g));
            rows.emplace_back("purity", g.purity());
        }
    } catch (const Divergence& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    for (const auto& [name, value] : rows) out << name << " = " << format_number(value) << '\n';
    if (!options.common.out.empty()) {
        CsvSink sink(options.common.out, out);
        sink.stream() << csv_provenance(options.common.seed, options.common.quad_tol) << '\n';
        write_csv_row(sink.stream(), {"quantity", "value"});
        for (const auto& [name, value] : rows) write_csv_row(sink.stream(), {name, format_number(value)});
    }
    return kExitOk;
}

int cmd_sigma_table(const SigmaTableOptions& options, std::ostream& out, std::ostream& err) {
    if (options.max < 0 || (options.max > 30 && !options.force)) {
        err << "error: --max must lie in [0, 30] (pass --force to go beyond)\n";
        return kExitUsage;
    }
    const int size = options.max + 1;
    const QuadratureSpec quad = quadrature_for(options.common);
    std::vector<std::pair<int, int>> cells;
    for (int m = 0; m < size; ++m)
        for (int n = m; n < size; ++n) cells.emplace_back(m, n);
    std::vector<double> table(static_cast<std::size_t>(size) * size, 0.0);
    parallel_for(cells.size(), options.common.jobs, [&](std::size_t i) {
        const auto [m, n] = cells[i];
        const double h = entropy::wigner_entropy_radial(photonmix::sigma_coefficients(m, n).coeffs, quad);
        table[m * size + n] = h;
        table[n * size + m] = h;
    });

    const double bound = entropy::vacuum_entropy();
    int status = kExitOk;
    for (int m = 0; m < size; ++m)
        for (int n = 0; n < size; ++n) {
            const double h = table[m * size + n];
            if (h < bound - 1e-7) {
                err << "COUNTEREXAMPLE: h(S_(" << m << "," << n << ")) = " << format_number(h)
                    << " is below ln(pi) + 1 = " << format_number(bound) << '\n';
                status = kExitCounterexample;
            }
            if (m + 1 < size && table[(m + 1) * size + n] < h)
                err << "warning: entropy decreases from (" << m << "," << n << ") to (" << m + 1 << "," << n << ")\n";
        }
    if (std::abs(table[0] - bound) > 1e-9) {
        err << "error: h(S_(0,0)) = " << format_number(table[0]) << " differs from ln(pi) + 1\n";
        if (status == kExitOk) status = kExitFailed;
    }

    CsvSink sink(options.common.out, out);
    auto& csv = sink.stream();
    csv << csv_provenance(options.common.seed, options.common.quad_tol) << '\n';
    write_csv_row(csv, {"m", "n", "entropy"});
    for (int m = 0; m < size; ++m)
        for (int n = 0; n < size; ++n)
            write_csv_row(csv, {std::to_string(m), std::to_string(n), format_number(table[m * size + n])});
    return status;
}

int cmd_region2(const Region2Options& options, std::ostream& out, std::ostream& err) {
    if (options.samples < 16) {
        err << "error: --samples must be at least 16\n";
        return kExitUsage;
    }
    const int count = options.samples;
    CsvSink sink(options.common.out, out);
    auto& csv = sink.stream();
    csv << csv_provenance(options.common.seed, options.common.quad_tol) << '\n';
    write_csv_row(csv, {"kind", "param", "p1", "p2", "tangency_t", "line_p1", "line_p2", "line_const"});

    // Extremal arc, parameter a in [0, 1].
    for (int i = 0; i < count; ++i) {
        const double a = static_cast<double>(i) / (count - 1);
        const auto [p1, p2] = positivity::extremal_arc_point(a);
        write_csv_row(csv, {"arc", format_number(a), format_number(p1), format_number(p2),
                            format_number(positivity::extremal_arc_tangency(a)), "", "", ""});
    }
    // Flat facet p1 = 1/2 from sigma(1,0) to sigma(2,0); every point vanishes at r = 0.
    for (int i = 0; i < count; ++i) {
        const double p2 = 0.25 * i / (count - 1);
        write_csv_row(csv, {"facet", format_number(p2), format_number(0.5), format_number(p2), format_number(0.0), "",
                            "", ""});
    }
    // W(r) = 0 lines: (2r^2 - 2) p1 + (2r^4 - 4r^2) p2 + 1 = 0, tangent to the
    // ellipse at p2 = 2 / (t^2 - 4t + 8), p1 = (2 - t) p2 with t = 2r^2.
    constexpr double kMaxRadius = 2.0;
    for (int i = 0; i < count; ++i) {
        const double r = kMaxRadius * i / (count - 1);
        const double r2 = r * r;
        const double t = 2.0 * r2;
        const double p2 = 2.0 / (t * t - 4.0 * t + 8.0);
        const double p1 = (2.0 - t) * p2;
        write_csv_row(csv, {"tangent", format_number(r), format_number(p1), format_number(p2), format_number(t),
                            format_number(2.0 * r2 - 2.0), format_number(2.0 * r2 * r2 - 4.0 * r2),
                            format_number(1.0)});
    }
    return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    std::vector<std::string> names;
    if (options.suite == "all") names = suite_names();
    else if (is_suite_name(options.suite)) names = {options.suite};
    else {
        err << "error: unknown suite \"" << options.suite << "\"; expected one of:";
        for (const auto& n : suite_names()) err << ' ' << n;
        err << " all\n";
        return kExitUsage;
    }
    SuiteOptions suite_options;
    suite_options.quad = quadrature_for(options.common);
    suite_options.seed = options.common.seed;
    suite_options.jobs = options.common.jobs;

    out << "# seed=" << options.common.seed << ", tol=" << format_number(options.common.quad_tol, 6) << '\n';
    bool all_passed = true;
    for (const auto& name : names) {
        const SuiteResult result = run_suite(name, suite_options);
        all_passed = all_passed && result.passed;
        out << (result.passed ? "[PASS] " : "[FAIL] ") << result.name << '\n';
        for (const auto& line : result.lines) out << "    " << line << '\n';
    }
    return all_passed ? kExitOk : kExitFailed;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wigner entropy toolkit for single-mode bosonic states"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto add_common = [](CLI::App* sub, CommonOptions& common) {
        sub->add_option("--quad-tol", common.quad_tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--jobs", common.jobs, "Worker threads (0 = all cores)");
        sub->add_option("--seed", common.seed, "Seed for random sampling");
        sub->add_option("--out", common.out, "CSV output path (default stdout)");
    };

    EntropyOptions entropy_opts;
    std::vector<std::string> renyi_text;
    auto* entropy_cmd = app.add_subcommand("entropy", "Entropies of a state file");
    entropy_cmd->add_option("state", entropy_opts.state_path, "JSON state file")->required();
    entropy_cmd->add_option("--renyi", renyi_text, "Renyi order (repeatable; 'inf' allowed)");
    add_common(entropy_cmd, entropy_opts.common);

    SigmaTableOptions sigma_opts;
    auto* sigma_cmd = app.add_subcommand("sigma-table", "Wigner entropy of sigma(m,n) for 0 <= m,n <= max");
    sigma_cmd->add_option("--max", sigma_opts.max, "Largest photon number per input");
    sigma_cmd->add_flag("--force", sigma_opts.force, "Allow --max above 30");
    add_common(sigma_cmd, sigma_opts.common);

    Region2Options region_opts;
    auto* region_cmd = app.add_subcommand("region2", "Boundary data of the two-photon Wigner-positive region");
    region_cmd->add_option("--samples", region_opts.samples, "Points per curve");
    add_common(region_cmd, region_opts.common);

    VerifyOptions verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
    verify_cmd->add_option("--suite", verify_opts.suite, "Suite name or 'all'");
    add_common(verify_cmd, verify_opts.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*entropy_cmd) {
            for (const auto& text : renyi_text) {
                double alpha = 0.0;
                if (text == "inf" || text == "infinity") alpha = std::numeric_limits<double>::infinity();
                else {
                    try {
                        std::size_t used = 0;
                        alpha = std::stod(text, &used);
                        if (used != text.size()) throw std::invalid_argument(text);
                    } catch (const std::exception&) {
                        err << "error: invalid Renyi order '" << text << "'\n";
                        return kExitUsage;
                    }
                }
                entropy_opts.renyi.push_back(alpha);
            }
            return cmd_entropy(entropy_opts, out, err);
        }
        if (*sigma_cmd) return cmd_sigma_table(sigma_opts, out, err);
        if (*region_cmd) return cmd_region2(region_opts, out, err);
        if (*verify_cmd) return cmd_verify(verify_opts, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}

}  // namespace wigent::cli
