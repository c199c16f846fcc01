#include "psicalc/cheb_factor.hpp"

#include <stdexcept>

#include "psicalc/minpoly.hpp"
#include "psicalc/numtheory.hpp"
#include "psicalc/sequences.hpp"

namespace psicalc {

namespace {

void require_positive(long long n) {
    if (n < 1) throw std::invalid_argument("argument must be >= 1");
}

void check_product(const PsiFactorList& list, const IntPoly& target) {
    if (factor_product(list) != target)
        throw std::logic_error("psi-factor product mismatch");
}

}  // namespace

IntPoly factor_product(const PsiFactorList& list) {
    IntPoly product = IntPoly::constant(1);
    for (long long idx : list.factors) product = product * psi(idx);
    return product;
}

PsiFactorList factor_v(long long n) {
    require_positive(n);
    PsiFactorList list{ChebKind::V, n, {}};
    for (long long d : divisors(2 * n + 1))
        if (d > 1) list.factors.push_back(2 * d);
    check_product(list, p_minus(static_cast<long>(n)));
    return list;
}

PsiFactorList factor_w(long long n) {
    require_positive(n);
    PsiFactorList list{ChebKind::W, n, {}};
    for (long long d : divisors(2 * n + 1))
        if (d > 1) list.factors.push_back(d);
    check_product(list, p_plus(static_cast<long>(n)));
    return list;
}

PsiFactorList factor_t(long long n) {
    require_positive(n);
    PsiFactorList list{ChebKind::T, n, {}};
    for (long long d : divisors(n))
        if ((n / d) % 2 == 1) list.factors.push_back(4 * d);
    check_product(list, t(static_cast<long>(n)));
    return list;
}

bool is_irreducible_t(long long n) {
    return factor_t(n).factors.size() == 1;
}

bool is_irreducible_vw(long long n) {
    // V and W have the same factor count (same divisor set of 2n+1).
    return factor_w(n).factors.size() == 1;
}

}  // namespace psicalc
