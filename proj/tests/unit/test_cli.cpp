#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "wigent/cli/commands.hpp"
#include "wigent/cli/csv.hpp"
#include "wigent/cli/state_file.hpp"
#include "wigent/cli/suites.hpp"
#include "wigent/errors.hpp"

using namespace wigent;
using namespace wigent::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "wigent");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) { return std::string(WIGENT_TEST_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("wigent_test_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("state file parsing") {
    CHECK(std::holds_alternative<PhotonMixture>(parse_state(R"({"fock_probs": [0.5, 0.5]})")));
    const auto g = parse_state(R"({"gaussian": {"mean": [0, 1], "cov": [[1, 0], [0, 0.25]]}})");
    REQUIRE(std::holds_alternative<gaussian::GaussianState>(g));
    CHECK(std::get<gaussian::GaussianState>(g).mean()(1) == 1.0);
    CHECK_THROWS_AS(parse_state("not json"), InvalidArgument);
    CHECK_THROWS_AS(parse_state(R"({"fock_probs": [1.0], "extra": 1})"), InvalidArgument);
    CHECK_THROWS_AS(parse_state(R"({})"), InvalidArgument);
    CHECK_THROWS_AS(parse_state(R"({"fock_probs": [0.5, "x"]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_state(R"({"fock_probs": [0.5, 0.4]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_state(R"({"gaussian": {"mean": [0, 0], "cov": [[0.1, 0], [0, 0.1]]}})"), InvalidArgument);
    CHECK_THROWS_AS(load_state("/nonexistent/state.json"), InvalidArgument);
}

TEST_CASE("csv helpers") {
    CHECK(csv_provenance(7, 1e-10) == "# seed=7, tol=1e-10, version=" + std::string(kVersion));
    std::ostringstream s;
    write_csv_row(s, {"a", "b", "c"});
    CHECK(s.str() == "a,b,c\n");
}

TEST_CASE("entropy command") {
    const auto vac = invoke({"entropy", data_file("vacuum.json"), "--renyi", "2", "--renyi", "inf"});
    CHECK(vac.code == kExitOk);
    CHECK(vac.out.find("h(W) = 2.1447298858494\n") != std::string::npos);
    CHECK(vac.out.find("h_2(W) = 1.83787706640935") != std::string::npos);
    CHECK(vac.out.find("h_inf(W) = 1.1447298858494") != std::string::npos);

    const auto s10 = invoke({"entropy", temp_file("s10.json", R"({"fock_probs": [0.5, 0.5]})")});
    CHECK(s10.code == kExitOk);
    CHECK(s10.out.find("h(W) = 2.72194555") != std::string::npos);

    const auto one = invoke({"entropy", data_file("fock1.json")});
    CHECK(one.code == kExitNotPositive);
    CHECK(one.err.find("min W = -0.318309886183791 at r = 0") != std::string::npos);

    const auto gauss = invoke(
        {"entropy", temp_file("th.json", R"({"gaussian": {"mean": [1, 2], "cov": [[1.5, 0], [0, 1.5]]}})")});
    CHECK(gauss.code == kExitOk);
    CHECK(gauss.out.find("h(W) = 3.2433421745") != std::string::npos);

    CHECK(invoke({"entropy", temp_file("bad.json", R"({"foo": 1})")}).code == kExitUsage);
    CHECK(invoke({"entropy", data_file("vacuum.json"), "--renyi", "0"}).code == kExitUsage);
    CHECK(invoke({"entropy", data_file("vacuum.json"), "--renyi", "two"}).code == kExitUsage);
    CHECK(invoke({"entropy"}).code == kExitUsage);
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("entropy command writes csv with provenance") {
    const auto path = (std::filesystem::temp_directory_path() / "wigent_test_entropy.csv").string();
    const auto r = invoke({"entropy", data_file("vacuum.json"), "--out", path, "--seed", "5"});
    CHECK(r.code == kExitOk);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    const auto lines = lines_of(text.str());
    REQUIRE(lines.size() >= 3);
    CHECK(lines[0].rfind("# seed=5, tol=1e-10, version=", 0) == 0);
    CHECK(lines[1] == "quantity,value");
    CHECK(lines[2].rfind("h(W),2.1447298858494", 0) == 0);
}

TEST_CASE("sigma table command") {
    const auto zero = invoke({"sigma-table", "--max", "0"});
    CHECK(zero.code == kExitOk);
    auto lines = lines_of(zero.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[1] == "m,n,entropy");
    CHECK(lines[2].rfind("0,0,2.1447298858494", 0) == 0);

    const auto two = invoke({"sigma-table", "--max", "2", "--jobs", "1"});
    CHECK(two.code == kExitOk);
    lines = lines_of(two.out);
    REQUIRE(lines.size() == 11);
    CHECK(lines[5].rfind("1,0,2.72194555", 0) == 0);
    CHECK(lines[3].rfind("0,1,2.72194555", 0) == 0);

    // Thread count does not change the numbers.
    const auto threaded = invoke({"sigma-table", "--max", "2", "--jobs", "3"});
    CHECK(threaded.out == two.out);

    CHECK(invoke({"sigma-table", "--max", "31"}).code == kExitUsage);
    CHECK(invoke({"sigma-table", "--max", "-1"}).code == kExitUsage);
}

TEST_CASE("region2 command") {
    const auto r = invoke({"region2", "--samples", "16"});
    CHECK(r.code == kExitOk);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2 + 3 * 16);
    CHECK(lines[1] == "kind,param,p1,p2,tangency_t,line_p1,line_p2,line_const");
    CHECK(lines[17].rfind("arc,1,0,0.5,", 0) == 0);
    CHECK(lines[18].rfind("facet,0,0.5,0,0", 0) == 0);
    CHECK(invoke({"region2", "--samples", "15"}).code == kExitUsage);
}

TEST_CASE("verify command") {
    const auto r = invoke({"verify", "--suite", "sigma-oracle"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("[PASS] sigma-oracle") != std::string::npos);
    CHECK(invoke({"verify", "--suite", "nope"}).code == kExitUsage);
    CHECK(is_suite_name("conjecture-scan"));
    CHECK_FALSE(is_suite_name("all"));
    CHECK_THROWS_AS(run_suite("nope", {}), InvalidArgument);
}

TEST_CASE("parallel_for visits every index once and propagates errors") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                        if (i == 7) throw InvalidArgument("boom");
                    }),
                    InvalidArgument);
    parallel_for(0, 4, [](std::size_t) { FAIL("no work expected"); });
}
