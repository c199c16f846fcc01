#ifndef PSICALC_MINPOLY_HPP
#define PSICALC_MINPOLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "psicalc/poly.hpp"
#include "psicalc/sequences.hpp"

namespace psicalc {

struct NotIrreducible : std::invalid_argument {
    explicit NotIrreducible(const std::string& what)
        : std::invalid_argument(what) {}
};

struct PrecisionExceeded : std::runtime_error {
    explicit PrecisionExceeded(const std::string& what)
        : std::runtime_error(what) {}
};

// Symbolic quotient of sequence-term products representing psi_n.
// All terms belong to a single family (p+, p- or q-, which t/q- rows
// share); indices are sorted descending within numerator and denominator.
struct PsiExpr {
    std::vector<SeqTerm> num;
    std::vector<SeqTerm> den;
    friend bool operator==(const PsiExpr&, const PsiExpr&) = default;
};

// Expression for the minimal polynomial of 2cos(m pi / n), for an
// irreducible fraction m/n in (0,1) with n > 2.  Throws NotIrreducible
// if gcd(m,n) != 1 and std::out_of_range if not 0 < m < n.
PsiExpr psi_expr_fraction(long long m, long long n);

// Expression for psi_n, n >= 3 (n = 1, 2 are the literal linear rows).
PsiExpr psi_expr(long long n);

// Multiplies out numerator and denominator, then one exact division.
IntPoly eval_expr(const PsiExpr& expr);

// Table notation: "q-_15 q-_1/(q-_5 q-_3)", "p+_4/p+_1", "p-_3".
std::string render_expr(const PsiExpr& expr);
// Same, but with the n = 1, 2 rows rendered as "x - 2" / "x + 2".
std::string psi_notation(long long n);

// Minimal polynomial of 2cos(2pi/n): primary non-recursive method.
IntPoly psi(long long n);

// Alternative method 1: divisor-product recursion (memoized):
// psi_n = (t_{s+1} - t_s or t_{s+1} - t_{s-1}) / prod of psi_d, d|n, d<n.
IntPoly psi_wz(long long n);

// Alternative method 2: Moebius-exponent products, n >= 3.
IntPoly psi_barnes(long long n);

// Floating-point oracle: expands prod (x - 2cos(2k pi/n)) over k < n/2
// coprime to n at the given bit precision and rounds coefficients to
// integers.  Throws PrecisionExceeded if any coefficient is farther
// than 1e-6 (relative to the largest coefficient) from an integer.
IntPoly psi_numeric(long long n, int precision_bits = 192);

// n-th cyclotomic polynomial, computed exactly as
// (x^n - 1) / prod_{d|n, d<n} Phi_d (memoized).
IntPoly cyclotomic(long long n);

}  // namespace psicalc

#endif  // PSICALC_MINPOLY_HPP
