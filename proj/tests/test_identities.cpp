#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psicalc/identities.hpp"
#include "psicalc/minpoly.hpp"

using namespace psicalc;

TEST_CASE("prod_c") {
    CHECK(check_prod_c(0, 0));
    CHECK(check_prod_c(1, 1));
    CHECK(check_prod_c(5, 13));
}

TEST_CASE("factor_t") {
    CHECK(check_factor_t_odd(0));
    CHECK(check_factor_t_odd(1));
    CHECK(check_factor_t_odd(100));
    CHECK(check_factor_t_even(1));
    CHECK(check_factor_t_even(2));
    CHECK(check_factor_t_even(150));
}

TEST_CASE("pq_reflection") {
    CHECK(check_pq_reflection(0));
    CHECK(check_pq_reflection(2));
    CHECK(check_pq_reflection(101));
}

TEST_CASE("c_splitting") {
    CHECK(check_c_splitting(2));
    CHECK(check_c_splitting(3));
    CHECK(check_c_splitting(200));
}

TEST_CASE("divisibility") {
    CHECK(check_divisibility(1, 4));   // 3 | 9
    CHECK(check_divisibility(2, 6));   // 6/2 = 3 odd
    CHECK(check_divisibility(2, 4));   // 4/2 even: correctly not divisible
    CHECK_THROWS_AS(check_divisibility(0, 1), std::invalid_argument);
}

TEST_CASE("roots_float") {
    CHECK(check_roots_float(Family::PMinus, 1));
    CHECK(check_roots_float(Family::QMinus, 2));
    CHECK(check_roots_float(Family::PPlus, 2));
    CHECK(check_roots_float(Family::C, 10));
    CHECK(check_roots_float(Family::QPlus, 10));
    CHECK_THROWS_AS(check_roots_float(Family::QMinus, 100000),
                    PrecisionExceeded);
}

TEST_CASE("run_suite") {
    CHECK(run_suite(0).empty());

    const auto reports = run_suite(10);
    CHECK(reports.size() == 7);
    for (const auto& r : reports) {
        CHECK(r.passed());
        CHECK(r.to_line().starts_with("PASS "));
    }

    // deterministic: identical inputs give identical reports
    const auto again = run_suite(10);
    REQUIRE(again.size() == reports.size());
    for (size_t i = 0; i < reports.size(); ++i) {
        CHECK(again[i].name == reports[i].name);
        CHECK(again[i].range == reports[i].range);
        CHECK(again[i].to_line() == reports[i].to_line());
    }
}
