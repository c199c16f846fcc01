#ifndef PSICALC_CHEB_FACTOR_HPP
#define PSICALC_CHEB_FACTOR_HPP

#include <vector>

#include "psicalc/poly.hpp"

namespace psicalc {

enum class ChebKind { T, V, W };

// Factorization of a Chebyshev-family polynomial into minimal-polynomial
// factors: the product of psi over `factors` equals the target exactly
// (t_n for T, p^-_n for V, p^+_n for W).  Factors sorted ascending.
struct PsiFactorList {
    ChebKind kind;
    long long n;
    std::vector<long long> factors;
    friend bool operator==(const PsiFactorList&, const PsiFactorList&) = default;
};

// V_n(x/2) = p^-_n = prod psi_{2d} over d | 2n+1, d > 1.
PsiFactorList factor_v(long long n);
// W_n(x/2) = p^+_n = prod psi_d over d | 2n+1, d > 1.
PsiFactorList factor_w(long long n);
// 2 T_n(x/2) = t_n = prod psi_{4d} over d | n with n/d odd.
PsiFactorList factor_t(long long n);

// Multiplies psi over the factor list; the constructors above already
// assert this equals the target.
IntPoly factor_product(const PsiFactorList& list);

// Single-factor predicates; by the underlying corollary these coincide
// with "n is a power of 2" and "2n+1 is prime" respectively.
bool is_irreducible_t(long long n);
bool is_irreducible_vw(long long n);

}  // namespace psicalc

#endif  // PSICALC_CHEB_FACTOR_HPP
