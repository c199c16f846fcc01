#ifndef PSICALC_POLY_HPP
#define PSICALC_POLY_HPP

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace psicalc {

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct DivideByZero : std::runtime_error {
    DivideByZero() : std::runtime_error("polynomial division by zero") {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/* Dense univariate polynomial with arbitrary-precision integer
 * coefficients, stored in ascending order: coeffs()[k] is the
 * coefficient of x^k.  Always normalized: the last stored coefficient
 * is nonzero, and the zero polynomial has no coefficients at all.
 */
class IntPoly {
public:
    // degree() of the zero polynomial; chosen so that it never collides
    // with a real degree.
    static constexpr long kNegInfDegree = std::numeric_limits<long>::min();

    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> ascending_coeffs);

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(const mpz_class& c);
    // coeff * x^exp
    static IntPoly monomial(long exp, const mpz_class& coeff = 1);
    // Convenience for tests and literals: coefficients in descending order.
    static IntPoly from_desc(std::vector<mpz_class> descending_coeffs);

    // Parses the textual format used everywhere in this project:
    // descending powers, explicit signs, caret exponents, optional
    // whitespace, e.g. "x^8 - 7*x^6 + 14*x^4 - 8*x^2 + 1".
    static IntPoly parse(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const {
        return coeffs_.empty() ? kNegInfDegree
                               : static_cast<long>(coeffs_.size()) - 1;
    }
    const mpz_class& leading() const;
    // Coefficient of x^k; zero when k is out of range.
    const mpz_class& coeff(long k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) {
        return !(a == b);
    }

    // Horner evaluation in double precision.
    double eval_float(double x) const;

    std::string to_string() const;

private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

// Exact quotient a / b.  Throws NotDivisible if long division leaves a
// nonzero remainder or a non-integer quotient coefficient, DivideByZero
// if b is zero.  The formulas this project evaluates are exact by
// theorem, so a remainder always signals a bug.
IntPoly div_exact(const IntPoly& a, const IntPoly& b);

// Like div_exact but reports failure instead of throwing; used by the
// divisibility checks where "not divisible" is an expected answer.
bool divides(const IntPoly& b, const IntPoly& a);

// p(-x): negates the coefficient of every odd power.
IntPoly substitute_neg(const IntPoly& p);

// x^{deg p} * p(x + 1/x), a polynomial of degree 2*deg(p).
// This is the lift that sends the minimal polynomial of 2cos(2pi/n) to
// the n-th cyclotomic polynomial.
IntPoly laurent_lift(const IntPoly& p);

}  // namespace psicalc

#endif  // PSICALC_POLY_HPP
