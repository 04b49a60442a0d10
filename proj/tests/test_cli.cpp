// The CLI must be a thin adapter: identical answers to direct library calls.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "rfsemi/configenum.hpp"
#include "rfsemi/rfmatrix.hpp"
#include "rfsemi/semigroup.hpp"

using namespace rfsemi;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(RFSEMI_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("analyze matches the library") {
    auto res = run_cli("analyze 64,67,91,138,150 --json");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    auto s = NumericalSemigroup::from_generators({64, 67, 91, 138, 150});
    CHECK(j["frobenius"].get<Int>() == s.frobenius());
    CHECK(j["pf"].get<std::vector<Int>>() == s.pseudo_frobenius());
    CHECK(j["type"].get<int>() == s.type());
    CHECK(j["almost_symmetric"].get<bool>() == s.is_almost_symmetric());
    CHECK(j["genus"].get<Int>() == s.gap_profile().genus());
}

TEST_CASE("analyze plain text carries the headline facts") {
    auto res = run_cli("analyze 5,12,13");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("frobenius: 21") != std::string::npos);
    CHECK(res.out.find("pf: 19 21") != std::string::npos);
}

TEST_CASE("classify matches the library") {
    auto res = run_cli("classify 64,67,91,138,150 --json");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    auto s = NumericalSemigroup::from_generators({64, 67, 91, 138, 150});
    auto cls = classify_pf(s);
    CHECK(j["bad"].get<std::vector<Int>>() == cls.bad);
    REQUIRE(j["good"].size() == cls.good.size());
    for (std::size_t i = 0; i < cls.good.size(); ++i)
        CHECK(j["good"][i]["f"].get<Int>() == cls.good[i].value);
}

TEST_CASE("rf prints matrices row-per-line") {
    auto res = run_cli("rf 2,3 1");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out == "-1 1\n2 -1\n");
}

TEST_CASE("configs count matches the library") {
    auto res = run_cli("configs --order 5 --count-only");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out == std::to_string(count_configs(5)) + "\n");
}

TEST_CASE("usage and semantic errors exit 2") {
    CHECK(run_cli("analyze 4,6").exit_code == 2);
    CHECK(run_cli("analyze 4,x").exit_code == 2);
    CHECK(run_cli("rf 5,12,13 20").exit_code == 2);
}

TEST_CASE("verify-paper passes end to end") {
    auto res = run_cli("verify-paper");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("FAIL") == std::string::npos);
}
