#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace wigent::cli {

/// Exit codes shared by the subcommands.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailed = 1,
    kExitUsage = 2,
    kExitNotPositive = 3,
    kExitCounterexample = 4,
};

struct CommonOptions {
    double quad_tol = 1e-10;
    /// 0 selects all hardware threads.
    unsigned jobs = 0;
    std::uint64_t seed = 42;
    /// Output path; empty or "-" writes CSV to the command's output stream.
    std::string out;
};

struct EntropyOptions {
    std::string state_path;
    std::vector<double> renyi;
    CommonOptions common;
};

struct SigmaTableOptions {
    int max = 10;
    /// Allow max above the default guard of 30.
    bool force = false;
    CommonOptions common;
};

struct Region2Options {
    int samples = 101;
    CommonOptions common;
};

struct VerifyOptions {
    std::string suite = "all";
    CommonOptions common;
};

int cmd_entropy(const EntropyOptions& options, std::ostream& out, std::ostream& err);
int cmd_sigma_table(const SigmaTableOptions& options, std::ostream& out, std::ostream& err);
int cmd_region2(const Region2Options& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Runs body(i) for i in [0, count) on up to `jobs` threads (0 = hardware threads).
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace wigent::cli
