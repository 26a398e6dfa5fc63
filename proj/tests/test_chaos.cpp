#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chirpcrypt/chaos.hpp"
#include "chirpcrypt/rng.hpp"

using namespace chirpcrypt;
using namespace chirpcrypt::chaos;

TEST_CASE("logistic_sequence matches hand iteration") {
    // 3.8 * 0.31 * 0.69
    auto s = logistic_sequence({0.31, 3.8, 0}, 1);
    CHECK(s.size() == 1);
    CHECK(s[0] == doctest::Approx(0.81282).epsilon(1e-12));

    auto s2 = logistic_sequence({0.31, 3.8, 1}, 1);
    CHECK(s2[0] == doctest::Approx(3.8 * 0.81282 * (1.0 - 0.81282)).epsilon(1e-12));
}

TEST_CASE("logistic_sequence fixed point at x = 1 - 1/mu") {
    auto s = logistic_sequence({0.75, 4.0, 0}, 3);
    for (double v : s) CHECK(v == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("logistic_sequence values stay in (0,1)") {
    SplitMix64 rng(99);
    for (int t = 0; t < 20; ++t) {
        LogisticParams p{0.01 + 0.98 * rng.next_double(),
                         3.57 + 0.43 * rng.next_double(), static_cast<long>(rng.next() % 500)};
        for (double v : logistic_sequence(p, 1000)) {
            CHECK(v > 0.0);
            CHECK(v < 1.0);
        }
    }
}

TEST_CASE("logistic_sequence is deterministic") {
    LogisticParams p{0.42, 3.99, 37};
    CHECK(logistic_sequence(p, 256) == logistic_sequence(p, 256));
}

TEST_CASE("logistic parameter validation") {
    CHECK_THROWS_AS(logistic_sequence({0.0, 3.8, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(logistic_sequence({1.0, 3.8, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(logistic_sequence({0.5, 3.5, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(logistic_sequence({0.5, 4.1, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(logistic_sequence({0.5, 3.8, -1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(logistic_sequence({0.5, 3.8, 0}, 0), std::invalid_argument);
}

TEST_CASE("permutation_from_sequence examples") {
    CHECK(permutation_from_sequence(std::vector<double>{0.5, 0.1, 0.9}).index ==
          std::vector<std::size_t>{1, 0, 2});
    CHECK(permutation_from_sequence(std::vector<double>{0.1, 0.2, 0.3}).index ==
          std::vector<std::size_t>{0, 1, 2});
    // ties broken by original position
    CHECK(permutation_from_sequence(std::vector<double>{0.3, 0.3, 0.1}).index ==
          std::vector<std::size_t>{2, 0, 1});
    CHECK_THROWS_AS(permutation_from_sequence(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("permutation_from_sequence is always a bijection") {
    SplitMix64 rng(7);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + rng.next() % 500;
        std::vector<double> seq(n);
        for (auto& v : seq) v = rng.next_double();
        auto p = permutation_from_sequence(seq);
        auto sorted = p.index;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n; ++i) CHECK(sorted[i] == i);
    }
}

TEST_CASE("invert_permutation examples") {
    CHECK(invert_permutation({{1, 0, 2}}).index == std::vector<std::size_t>{1, 0, 2});
    CHECK(invert_permutation({{0, 1, 2}}).index == std::vector<std::size_t>{0, 1, 2});
    CHECK(invert_permutation({{2, 0, 1}}).index == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("apply_permutation examples") {
    std::vector<char> v{'a', 'b', 'c'};
    CHECK(apply_permutation(v, {{1, 0, 2}}) == std::vector<char>{'b', 'a', 'c'});
    CHECK(apply_permutation(v, {{0, 1, 2}}) == v);
    std::vector<int> w{10, 20, 30, 40};
    CHECK(apply_permutation(w, {{3, 2, 1, 0}}) == std::vector<int>{40, 30, 20, 10});
    CHECK_THROWS_AS(apply_permutation(w, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("apply then apply-inverse restores any vector") {
    SplitMix64 rng(11);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng.next() % 300;
        std::vector<double> seq(n), v(n);
        for (auto& s : seq) s = rng.next_double();
        for (auto& x : v) x = rng.next_double();
        auto p = permutation_from_sequence(seq);
        auto back = apply_permutation(apply_permutation(v, p), invert_permutation(p));
        CHECK(back == v);
    }
}
