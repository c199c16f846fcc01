#include "psicalc/identities.hpp"

#include <mpfr.h>

#include <cmath>
#include <sstream>

#include "psicalc/minpoly.hpp"

namespace psicalc {

namespace {

IntPoly x_squared_minus_4() {
    return IntPoly::from_desc({1, 0, -4});
}

constexpr long kRootCheckCeiling = 200;

double root_tolerance(long degree) {
    // 1e-9 up to degree 64, loosened proportionally above.
    return degree <= 64 ? 1e-9 : 1e-9 * static_cast<double>(degree) / 64.0;
}

// Evaluating these polynomials in the monomial basis near x = +-2
// amplifies rounding error exponentially with the degree, so plain
// double Horner drowns the tolerance from degree ~22 on.  Evaluate at
// enough bits that evaluation error is far below the tolerance; the
// residual then genuinely measures whether the angle formula gives a
// root.  num/den describe the angle as a rational multiple of pi.
double root_residual(const IntPoly& p, long num, long den) {
    long coeff_bits = 0;
    for (const mpz_class& cf : p.coeffs())
        coeff_bits = std::max(
            coeff_bits,
            static_cast<long>(mpz_sizeinbase(cf.get_mpz_t(), 2)));
    const mpfr_prec_t prec = 128 + coeff_bits + p.degree();

    mpfr_t x, acc;
    mpfr_init2(x, prec);
    mpfr_init2(acc, prec);
    mpfr_const_pi(x, MPFR_RNDN);
    mpfr_mul_si(x, x, num, MPFR_RNDN);
    mpfr_div_si(x, x, den, MPFR_RNDN);
    mpfr_cos(x, x, MPFR_RNDN);
    mpfr_mul_si(x, x, 2, MPFR_RNDN);

    mpfr_set_si(acc, 0, MPFR_RNDN);
    for (long k = p.degree(); k >= 0; --k) {
        mpfr_mul(acc, acc, x, MPFR_RNDN);
        mpfr_add_z(acc, acc, p.coeff(k).get_mpz_t(), MPFR_RNDN);
    }
    const double residual = std::abs(mpfr_get_d(acc, MPFR_RNDN));
    mpfr_clear(x);
    mpfr_clear(acc);
    return residual;
}

}  // namespace

std::string CheckReport::to_line() const {
    if (passed()) return "PASS " + name + " range=" + range;
    return "FAIL " + name + " at " + failures.front().params;
}

bool check_prod_c(long m, long n) {
    const IntPoly lhs = x_squared_minus_4() * c(m) * c(n);
    const IntPoly rhs = t(m + n + 2) - t(std::abs(m - n));
    return lhs == rhs;
}

bool check_factor_t_odd(long s) {
    const IntPoly tn = t(2 * s + 1);
    const IntPoly two = IntPoly::constant(2);
    const IntPoly x = IntPoly::monomial(1);
    const IntPoly pm = p_minus(s), pp = p_plus(s);
    return tn + two == (x + two) * pm * pm &&
           tn - two == (x - two) * pp * pp;
}

bool check_factor_t_even(long s) {
    const IntPoly tn = t(2 * s);
    const IntPoly two = IntPoly::constant(2);
    const IntPoly ts = t(s);
    const IntPoly cs1 = c(s - 1);
    return tn + two == ts * ts &&
           tn - two == x_squared_minus_4() * cs1 * cs1;
}

bool check_pq_reflection(long s) {
    IntPoly reflected = substitute_neg(p_minus(s));
    if (s % 2 == 1) reflected = -reflected;
    return p_plus(s) == reflected;
}

bool check_c_splitting(long s) {
    const IntPoly lhs = c(s - 1);
    if (s % 2 == 1) {
        const long h = (s - 1) / 2;
        return lhs == p_minus(h) * p_plus(h);
    }
    const long h = s / 2;
    return lhs == t(h) * c(h - 1);
}

bool check_divisibility(long s, long s2) {
    if (s < 1 || s2 < 1) throw std::invalid_argument("indices must be >= 1");
    const bool p_cond = (2 * s2 + 1) % (2 * s + 1) == 0;
    const bool q_cond = s2 % s == 0 && (s2 / s) % 2 == 1;
    return divides(p_plus(s), p_plus(s2)) == p_cond &&
           divides(p_minus(s), p_minus(s2)) == p_cond &&
           divides(t(s), t(s2)) == q_cond;
}

bool check_roots_float(Family family, long s) {
    if (s < 1) throw std::invalid_argument("index must be >= 1");
    if (s > kRootCheckCeiling)
        throw PrecisionExceeded("root check ceiling is " +
                                std::to_string(kRootCheckCeiling));
    // Roots are 2cos(num/den * pi) for the listed angle fractions.
    IntPoly p;
    std::vector<std::pair<long, long>> angles;
    switch (family) {
        case Family::PMinus:
            p = p_minus(s);
            for (long k = 1; k <= s; ++k)
                angles.emplace_back(2 * k - 1, 2 * s + 1);
            break;
        case Family::PPlus:
            p = p_plus(s);
            for (long k = 1; k <= s; ++k)
                angles.emplace_back(2 * k, 2 * s + 1);
            break;
        case Family::QMinus:
            p = t(s);
            for (long k = 1; k <= s; ++k)
                angles.emplace_back(2 * k - 1, 2 * s);
            break;
        case Family::QPlus:
            p = q_plus(s);
            angles.emplace_back(1, 2);  // 2cos(pi/2) = 0
            for (long k = 1; k < s; ++k) angles.emplace_back(k, s);
            break;
        case Family::C:
            p = c(s);
            for (long k = 1; k <= s; ++k) angles.emplace_back(k, s + 1);
            break;
    }
    const double tol = root_tolerance(p.degree());
    for (auto [num, den] : angles)
        if (root_residual(p, num, den) > tol) return false;
    return true;
}

std::vector<CheckReport> run_suite(long max_n) {
    std::vector<CheckReport> reports;
    if (max_n < 1) return reports;

    auto range_str = [](const std::string& s) { return s; };

    {
        const long cap = std::min(max_n, 100L);
        CheckReport r{"prod_c", range_str("0<=m,n<=" + std::to_string(cap)), {}};
        for (long m = 0; m <= cap; ++m)
            for (long n = 0; n <= cap; ++n)
                if (!check_prod_c(m, n))
                    r.failures.push_back({"m=" + std::to_string(m) +
                                              ",n=" + std::to_string(n),
                                          "equality", "mismatch"});
        reports.push_back(std::move(r));
    }
    {
        const long cap = std::min(max_n, 300L);
        CheckReport r{"factor_t_odd", "0<=s<=" + std::to_string(cap), {}};
        for (long s = 0; s <= cap; ++s)
            if (!check_factor_t_odd(s))
                r.failures.push_back({"s=" + std::to_string(s), "equality",
                                      "mismatch"});
        reports.push_back(std::move(r));
    }
    {
        const long cap = std::min(max_n, 300L);
        CheckReport r{"factor_t_even", "1<=s<=" + std::to_string(cap), {}};
        for (long s = 1; s <= cap; ++s)
            if (!check_factor_t_even(s))
                r.failures.push_back({"s=" + std::to_string(s), "equality",
                                      "mismatch"});
        reports.push_back(std::move(r));
    }
    {
        CheckReport r{"pq_reflection", "0<=s<=" + std::to_string(max_n), {}};
        for (long s = 0; s <= max_n; ++s)
            if (!check_pq_reflection(s))
                r.failures.push_back({"s=" + std::to_string(s),
                                      p_plus(s).to_string(),
                                      "sign-adjusted p_minus(-x) differs"});
        reports.push_back(std::move(r));
    }
    {
        CheckReport r{"c_splitting", "1<=s<=" + std::to_string(max_n), {}};
        for (long s = 1; s <= max_n; ++s)
            if (!check_c_splitting(s))
                r.failures.push_back({"s=" + std::to_string(s),
                                      c(s - 1).to_string(), "split product differs"});
        reports.push_back(std::move(r));
    }
    {
        const long cap_s = std::min(max_n, 40L);
        const long cap_s2 = std::min(max_n, 200L);
        CheckReport r{"divisibility",
                      "1<=s<=" + std::to_string(cap_s) +
                          ",1<=s2<=" + std::to_string(cap_s2),
                      {}};
        for (long s = 1; s <= cap_s; ++s)
            for (long s2 = 1; s2 <= cap_s2; ++s2)
                if (!check_divisibility(s, s2))
                    r.failures.push_back({"s=" + std::to_string(s) +
                                              ",s2=" + std::to_string(s2),
                                          "arithmetic condition",
                                          "division behavior differs"});
        reports.push_back(std::move(r));
    }
    {
        const long cap = std::min(max_n, 64L);
        CheckReport r{"roots_float", "1<=s<=" + std::to_string(cap), {}};
        for (Family f : {Family::C, Family::PPlus, Family::PMinus,
                         Family::QPlus, Family::QMinus})
            for (long s = 1; s <= cap; ++s)
                if (!check_roots_float(f, s))
                    r.failures.push_back(
                        {term_name({f, s}), "roots within tolerance",
                         "residual too large"});
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace psicalc
