#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "psicalc/poly.hpp"

using namespace psicalc;

namespace {

IntPoly P(const char* text) { return IntPoly::parse(text); }

// Test-local reference product, written index-wise so the production
// convolution is checked against an independent formulation.
IntPoly naive_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly::zero();
    std::vector<mpz_class> v(a.degree() + b.degree() + 1, 0);
    for (long k = 0; k <= a.degree() + b.degree(); ++k)
        for (long i = 0; i <= k; ++i) v[k] += a.coeff(i) * b.coeff(k - i);
    return IntPoly(v);
}

IntPoly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> coeff_dist(-20, 20);
    std::vector<mpz_class> v(deg_dist(rng) + 1);
    for (auto& c : v) c = coeff_dist(rng);
    return IntPoly(v);
}

}  // namespace

TEST_CASE("add") {
    CHECK(P("x + 1") + P("x - 1") == P("2*x"));
    CHECK(IntPoly::zero() + P("x^3 - 2") == P("x^3 - 2"));
    CHECK(P("x^2 - 1") + P("x") == P("x^2 + x - 1"));
}

TEST_CASE("mul") {
    CHECK(P("x - 1") * P("x + 1") == P("x^2 - 1"));
    CHECK(P("x + 2") * P("x - 1") * P("x - 1") == P("x^3 - 3*x + 2"));
    CHECK(P("x^5 - 3") * IntPoly::zero() == IntPoly::zero());
    CHECK((P("x^5 - 3") * P("x^2 + 1")).degree() == 7);
}

TEST_CASE("div_exact") {
    CHECK(div_exact(P("x^2 - 1"), P("x - 1")) == P("x + 1"));
    SUBCASE("verified by multiplying back") {
        const IntPoly q = div_exact(P("x^3 - 3*x + 2"), P("x + 2"));
        CHECK(q == P("x^2 - 2*x + 1"));
        CHECK(q * P("x + 2") == P("x^3 - 3*x + 2"));
    }
    CHECK_THROWS_AS(div_exact(P("x^2 + 1"), P("x - 1")), NotDivisible);
    CHECK_THROWS_AS(div_exact(P("x"), IntPoly::zero()), DivideByZero);
    // 2x+2 over 2 is fine, over 4 is not
    CHECK(div_exact(P("2*x + 2"), P("2")) == P("x + 1"));
    CHECK_THROWS_AS(div_exact(P("2*x + 2"), P("4")), NotDivisible);
}

TEST_CASE("eval_float") {
    CHECK(P("x^2 - 3").eval_float(0) == -3.0);
    CHECK(P("x").eval_float(7.5) == 7.5);
    // sqrt(3) = 2cos(2pi/12) is a root of x^2 - 3
    CHECK(std::abs(P("x^2 - 3").eval_float(std::sqrt(3.0))) < 1e-9);
}

TEST_CASE("substitute_neg") {
    CHECK(substitute_neg(P("x + 1")) == P("-x + 1"));
    CHECK(substitute_neg(P("x^2 - x - 1")) == P("x^2 + x - 1"));
    CHECK(substitute_neg(P("x^2")) == P("x^2"));
}

TEST_CASE("laurent_lift") {
    CHECK(laurent_lift(P("x - 2")) == P("x^2 - 2*x + 1"));
    CHECK(laurent_lift(P("1")) == P("1"));
    // psi_3 = x + 1 lifts to the third cyclotomic polynomial
    CHECK(laurent_lift(P("x + 1")) == P("x^2 + x + 1"));
}

TEST_CASE("parse and to_string") {
    CHECK(P("x^8 - 7*x^6 + 14*x^4 - 8*x^2 + 1").to_string() ==
          "x^8 - 7*x^6 + 14*x^4 - 8*x^2 + 1");
    CHECK(P("  x^2-1 ") == P("x^2 - 1"));
    CHECK(P("-x + 1") == P("1 - x"));
    CHECK(IntPoly::zero().to_string() == "0");
    CHECK(P("0").is_zero());
    CHECK_THROWS_AS(IntPoly::parse(""), ParseError);
    CHECK_THROWS_AS(IntPoly::parse("x +"), ParseError);
    CHECK_THROWS_AS(IntPoly::parse("3*"), ParseError);
}

TEST_CASE("degree sentinel and normalization") {
    CHECK(IntPoly::zero().degree() == IntPoly::kNegInfDegree);
    CHECK(IntPoly(std::vector<mpz_class>{1, 0, 0}).degree() == 0);
    CHECK((P("x") - P("x")).is_zero());
}

TEST_CASE("randomized algebra properties") {
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 300; ++iter) {
        const IntPoly a = random_poly(rng, 8);
        const IntPoly b = random_poly(rng, 8);
        const IntPoly c = random_poly(rng, 8);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == naive_mul(a, b));
        if (!b.is_zero()) CHECK(div_exact(a * b, b) == a);
        CHECK(substitute_neg(substitute_neg(a)) == a);
        if (!a.is_zero() && !b.is_zero())
            CHECK(laurent_lift(a * b) == laurent_lift(a) * laurent_lift(b));
        if (!a.is_zero()) {
            CHECK(a.leading() != 0);
            CHECK(IntPoly::parse(a.to_string()) == a);
        }
    }
}
