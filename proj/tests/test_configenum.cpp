#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rfsemi/configenum.hpp"

using namespace rfsemi;

TEST_CASE("counts at small orders") {
    CHECK(count_configs(3) == 1);
    CHECK(count_configs(4) == 9);
    CHECK(count_configs(5) == 216);
}

TEST_CASE("matches the brute-force oracle") {
    for (int n = 3; n <= 5; ++n)
        CHECK(count_configs(n) == oracle::brute_force_config_count(n));
}

TEST_CASE("enumeration is sorted, duplicate-free and admissible") {
    for (int n : {3, 4, 5, 6}) {
        auto configs = enumerate_configs(n);
        std::set<std::uint64_t> seen;
        std::uint64_t prev = 0;
        bool first = true;
        for (const auto& c : configs) {
            CHECK(c.order == n);
            CHECK(config_admissible(c));
            if (!first) CHECK(prev < c.mask);
            prev = c.mask;
            first = false;
            seen.insert(c.mask);
        }
        CHECK(seen.size() == configs.size());
    }
}

TEST_CASE("order guard") {
    CHECK_THROWS_AS(enumerate_configs(2), OrderOutOfRange);
    CHECK_THROWS_AS(enumerate_configs(9), OrderOutOfRange);
}

TEST_CASE("order 3 is the all-positive configuration") {
    auto configs = enumerate_configs(3);
    REQUIRE(configs.size() == 1);
    CHECK(configs.front().mask == 0);
}

TEST_CASE("hex ids and grids") {
    ZeroConfig cfg{5, 0};
    CHECK(config_hex_id(cfg) == "00000");
    ZeroConfig one{5, 1};
    CHECK(config_hex_id(one) == "00001");

    auto grid = config_grid(enumerate_configs(3).front());
    CHECK(grid == "- + +\n+ - +\n+ + -\n");
}
