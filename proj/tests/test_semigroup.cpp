#include <doctest.h>

#include "oracles.hpp"
#include "rfsemi/semigroup.hpp"

using namespace rfsemi;

TEST_CASE("from_generators reduces to the minimal system") {
    auto s = NumericalSemigroup::from_generators({5, 12, 13});
    CHECK(s.generators() == std::vector<Int>{5, 12, 13});
    CHECK(s.multiplicity() == 5);

    auto t = NumericalSemigroup::from_generators({2, 3});
    CHECK(t.generators() == std::vector<Int>{2, 3});
    CHECK(t.frobenius() == 1);

    // 10 = 4 + 6 is redundant.
    auto u = NumericalSemigroup::from_generators({4, 6, 9, 10});
    CHECK(u.generators() == std::vector<Int>{4, 6, 9});

    CHECK_THROWS_AS(NumericalSemigroup::from_generators({4, 6}), NotCofinite);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators(std::span<const Int>{}), EmptyInput);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}), Error);
}

TEST_CASE("from_generators is idempotent on minimal generators") {
    auto s = NumericalSemigroup::from_generators({7, 11, 38, 41, 4, 6, 9, 10});
    auto t = NumericalSemigroup::from_generators(s.generators());
    CHECK(s.generators() == t.generators());
    CHECK(s.apery() == t.apery());
    CHECK(s.frobenius() == t.frobenius());
}

TEST_CASE("membership") {
    auto s = NumericalSemigroup::from_generators({5, 12, 13});
    CHECK(s.contains(0));
    CHECK_FALSE(s.contains(21)); // F(S)
    CHECK_FALSE(s.contains(-7));
    CHECK(s.contains(22));

    auto big = NumericalSemigroup::from_generators({64, 67, 91, 138, 150});
    CHECK_FALSE(big.contains(654));
    CHECK(big.contains(655));
}

TEST_CASE("frobenius and gap profile") {
    auto s = NumericalSemigroup::from_generators({2, 3});
    CHECK(s.frobenius() == 1);
    auto p = s.gap_profile();
    CHECK(p.gaps == std::vector<Int>{1});
    CHECK(p.genus() == 1);

    auto t = NumericalSemigroup::from_generators({5, 12, 13});
    CHECK(t.frobenius() == 21);
    auto q = t.gap_profile();
    // Gaps and small elements partition [0, F], F itself a gap.
    CHECK(q.genus() + q.n_small() == t.frobenius() + 1);
    CHECK(q.gaps.back() == t.frobenius());

    auto big = NumericalSemigroup::from_generators({64, 67, 91, 138, 150});
    CHECK(big.frobenius() == 654);
}

TEST_CASE("pseudo-Frobenius numbers and type") {
    auto s = NumericalSemigroup::from_generators({64, 67, 91, 138, 150});
    CHECK(s.pseudo_frobenius() == std::vector<Int>{209, 327, 445, 654});
    CHECK(s.type() == 4);

    auto t = NumericalSemigroup::from_generators({2, 3});
    CHECK(t.pseudo_frobenius() == std::vector<Int>{1});

    auto u = NumericalSemigroup::from_generators({5, 12, 13});
    CHECK(u.pseudo_frobenius() == std::vector<Int>{19, 21});
    CHECK(u.pseudo_frobenius().back() == u.frobenius());
}

TEST_CASE("partial order") {
    auto s = NumericalSemigroup::from_generators({2, 3});
    CHECK(s.leq(2, 5));
    auto t = NumericalSemigroup::from_generators({5, 12, 13});
    CHECK_FALSE(t.leq(19, 21));
    CHECK(t.leq(19, 19));
}

TEST_CASE("symmetry predicates") {
    auto s = NumericalSemigroup::from_generators({2, 3});
    CHECK(s.is_symmetric());
    CHECK(s.is_almost_symmetric());

    auto t = NumericalSemigroup::from_generators({3, 4, 5});
    CHECK_FALSE(t.is_symmetric());
    CHECK(t.is_almost_symmetric());
    CHECK(t.type() == 2);

    auto u = NumericalSemigroup::from_generators({455, 497, 574, 589, 631, 708});
    CHECK(u.is_almost_symmetric());
}

TEST_CASE("S = N edge case") {
    auto s = NumericalSemigroup::from_generators({1});
    CHECK(s.generators() == std::vector<Int>{1});
    CHECK(s.frobenius() == -1);
    CHECK(s.pseudo_frobenius().empty());
    CHECK(s.type() == 0);
    CHECK(s.is_symmetric());
    CHECK(s.is_almost_symmetric());
    CHECK(s.contains(0));
    CHECK(s.contains(12345));

    auto t = NumericalSemigroup::from_generators({1, 5, 9});
    CHECK(t.generators() == std::vector<Int>{1});
}

TEST_CASE("agrees with the sieve oracle on worked semigroups") {
    for (auto gens : {std::vector<Int>{5, 12, 13}, {2, 3}, {3, 4, 5}, {4, 6, 9},
                      {64, 67, 91, 138, 150}}) {
        auto s = NumericalSemigroup::from_generators(gens);
        Int bound = s.frobenius() + 2 * s.generators().back();
        auto reach = oracle::sieve(s.generators(), bound);
        for (Int x = 0; x <= bound; ++x)
            REQUIRE(s.contains(x) == (reach[static_cast<std::size_t>(x)] != 0));
        REQUIRE(s.pseudo_frobenius() == oracle::pseudo_frobenius(s.generators()));
    }
}

TEST_CASE("generator string parsing") {
    CHECK(parse_generators("5,12,13") == std::vector<Int>{5, 12, 13});
    CHECK(parse_generators(" 5 , 12 ,13") == std::vector<Int>{5, 12, 13});
    CHECK_THROWS_AS(parse_generators("5,,13"), Error);
    CHECK_THROWS_AS(parse_generators("5,a"), Error);
}
