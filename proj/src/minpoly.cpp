#include "psicalc/minpoly.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "psicalc/numtheory.hpp"

namespace psicalc {

namespace {

void require_positive(long long n) {
    if (n < 1) throw std::invalid_argument("argument must be >= 1");
}

// Head family and per-divisor index for one case of the main theorem.
struct CaseRule {
    Family family;
    long long head;
    long long (*index_for)(long long n, long long d);
};

long long half_floor(long long n, long long d) { return (n / d) / 2; }
long long half_exact(long long n, long long d) { return n / (2 * d); }

}  // namespace

PsiExpr psi_expr_fraction(long long m, long long n) {
    if (!(0 < m && m < n))
        throw std::out_of_range("fraction m/n must satisfy 0 < m < n");
    if (std::gcd(m, n) != 1)
        throw NotIrreducible("fraction m/n must be irreducible");
    if (n <= 2)
        throw std::out_of_range("psi_expr_fraction requires n > 2");

    CaseRule rule{};
    if (n % 2 == 1 && m % 2 == 1) {
        rule = {Family::PMinus, n / 2, half_floor};
    } else if (n % 2 == 1) {
        rule = {Family::PPlus, n / 2, half_floor};
    } else {
        // n even forces m odd since gcd(m,n) = 1.
        rule = {Family::QMinus, n / 2, half_exact};
    }

    PsiExpr expr;
    expr.num.push_back({rule.family, static_cast<long>(rule.head)});
    const PiSets sets = pi_sets(n);
    for (size_t i = 1; i <= sets.levels.size(); ++i) {
        auto& side = (i % 2 == 1) ? expr.den : expr.num;
        for (long long d : sets.level(i))
            side.push_back({rule.family, static_cast<long>(rule.index_for(n, d))});
    }
    auto desc = [](const SeqTerm& a, const SeqTerm& b) { return a.index > b.index; };
    std::sort(expr.num.begin(), expr.num.end(), desc);
    std::sort(expr.den.begin(), expr.den.end(), desc);
    return expr;
}

PsiExpr psi_expr(long long n) {
    if (n < 3) throw std::out_of_range("psi_expr requires n >= 3");
    // psi_4 reduces to the fraction 1/2, below the fraction form's range;
    // its row is the single term q^-_1 = x.
    if (n == 4) return PsiExpr{{{Family::QMinus, 1}}, {}};
    // Reduce 2/n to lowest terms; psi_n is the minimal polynomial of
    // 2cos((2/n) pi).
    return n % 2 == 1 ? psi_expr_fraction(2, n) : psi_expr_fraction(1, n / 2);
}

IntPoly eval_expr(const PsiExpr& expr) {
    IntPoly num = IntPoly::constant(1);
    for (const SeqTerm& ref : expr.num) num = num * term(ref);
    if (expr.den.empty()) return num;
    IntPoly den = IntPoly::constant(1);
    for (const SeqTerm& ref : expr.den) den = den * term(ref);
    return div_exact(num, den);
}

std::string render_expr(const PsiExpr& expr) {
    std::ostringstream out;
    for (size_t i = 0; i < expr.num.size(); ++i) {
        if (i > 0) out << " ";
        out << term_name(expr.num[i]);
    }
    if (!expr.den.empty()) {
        out << "/";
        if (expr.den.size() > 1) out << "(";
        for (size_t i = 0; i < expr.den.size(); ++i) {
            if (i > 0) out << " ";
            out << term_name(expr.den[i]);
        }
        if (expr.den.size() > 1) out << ")";
    }
    return out.str();
}

std::string psi_notation(long long n) {
    require_positive(n);
    if (n == 1) return "x - 2";
    if (n == 2) return "x + 2";
    return render_expr(psi_expr(n));
}

IntPoly psi(long long n) {
    require_positive(n);
    if (n == 1) return IntPoly::from_desc({1, -2});
    if (n == 2) return IntPoly::from_desc({1, 2});
    return eval_expr(psi_expr(n));
}

namespace {

std::mutex wz_mutex;
std::map<long long, IntPoly> wz_cache;

IntPoly wz_divisor_product(long long n) {
    const long s = static_cast<long>(n / 2);
    return n % 2 == 1 ? t(s + 1) - t(s) : t(s + 1) - t(s - 1);
}

// Caller must hold wz_mutex.
const IntPoly& psi_wz_locked(long long n) {
    auto it = wz_cache.find(n);
    if (it != wz_cache.end()) return it->second;
    IntPoly value = wz_divisor_product(n);
    for (long long d : divisors(n)) {
        if (d == n) continue;
        value = div_exact(value, psi_wz_locked(d));
    }
    return wz_cache.emplace(n, std::move(value)).first->second;
}

}  // namespace

IntPoly psi_wz(long long n) {
    require_positive(n);
    std::lock_guard lock(wz_mutex);
    return psi_wz_locked(n);
}

IntPoly psi_barnes(long long n) {
    if (n < 3) throw std::invalid_argument("psi_barnes requires n >= 3");
    // Each case is a product f(d)^{mu(base/d)} over divisors d > 1 of a
    // base integer; positive exponents go to the numerator, negative to
    // the denominator.
    long long base;
    IntPoly (*factor)(long) = nullptr;
    if (n % 2 == 1) {
        base = n;
        factor = [](long d) { return p_plus(d / 2); };
    } else if (n % 4 == 2) {
        base = n / 2;  // odd
        factor = [](long d) { return p_minus(d / 2); };
    } else {
        base = n / 2;  // even
        factor = [](long d) { return c(d - 1); };
    }
    IntPoly num = IntPoly::constant(1);
    IntPoly den = IntPoly::constant(1);
    for (long long d : divisors(base)) {
        if (d == 1) continue;
        const int mu = moebius(base / d);
        if (mu == 1) num = num * factor(static_cast<long>(d));
        else if (mu == -1) den = den * factor(static_cast<long>(d));
    }
    return div_exact(num, den);
}

IntPoly psi_numeric(long long n, int precision_bits) {
    require_positive(n);
    if (precision_bits < 16)
        throw std::invalid_argument("precision budget too small");
    if (n == 1) return IntPoly::from_desc({1, -2});
    if (n == 2) return IntPoly::from_desc({1, 2});

    std::vector<long long> ks;
    for (long long k = 1; 2 * k < n; ++k)
        if (std::gcd(k, n) == 1) ks.push_back(k);

    const mpfr_prec_t prec = precision_bits;
    const size_t deg = ks.size();
    std::vector<mpfr_t> coeff(deg + 1);
    for (auto& cf : coeff) mpfr_init2(cf, prec);
    mpfr_set_si(coeff[0], 1, MPFR_RNDN);  // running product, degree 0

    mpfr_t pi, root, tmp;
    mpfr_init2(pi, prec);
    mpfr_init2(root, prec);
    mpfr_init2(tmp, prec);
    mpfr_const_pi(pi, MPFR_RNDN);

    size_t cur_deg = 0;
    for (long long k : ks) {
        // root = 2 cos(2 pi k / n)
        mpfr_mul_si(root, pi, 2 * k, MPFR_RNDN);
        mpfr_div_si(root, root, n, MPFR_RNDN);
        mpfr_cos(root, root, MPFR_RNDN);
        mpfr_mul_si(root, root, 2, MPFR_RNDN);
        // multiply the running product by (x - root):
        // new[j] = old[j-1] - root*old[j], descending keeps old values live
        ++cur_deg;
        mpfr_set_si(coeff[cur_deg], 0, MPFR_RNDN);
        for (size_t j = cur_deg; j >= 1; --j) {
            mpfr_mul(tmp, coeff[j], root, MPFR_RNDN);
            mpfr_sub(coeff[j], coeff[j - 1], tmp, MPFR_RNDN);
        }
        mpfr_mul(coeff[0], coeff[0], root, MPFR_RNDN);
        mpfr_neg(coeff[0], coeff[0], MPFR_RNDN);
    }

    std::vector<mpz_class> rounded(deg + 1);
    double max_dev = 0.0, max_mag = 1.0;
    mpz_t z;
    mpz_init(z);
    for (size_t i = 0; i <= deg; ++i) {
        mpfr_get_z(z, coeff[i], MPFR_RNDN);
        rounded[i] = mpz_class(z);
        mpfr_sub_z(tmp, coeff[i], z, MPFR_RNDN);
        mpfr_abs(tmp, tmp, MPFR_RNDN);
        max_dev = std::max(max_dev, mpfr_get_d(tmp, MPFR_RNDN));
        max_mag = std::max(max_mag, std::abs(mpz_get_d(z)));
    }
    mpz_clear(z);
    mpfr_clear(pi);
    mpfr_clear(root);
    mpfr_clear(tmp);
    for (auto& cf : coeff) mpfr_clear(cf);

    if (max_dev > 1e-6 * max_mag)
        throw PrecisionExceeded(
            "coefficient deviation " + std::to_string(max_dev) +
            " exceeds tolerance at n = " + std::to_string(n) +
            "; raise the precision budget");
    return IntPoly{std::move(rounded)};
}

namespace {

std::mutex cyc_mutex;
std::map<long long, IntPoly> cyc_cache;

// Caller must hold cyc_mutex.
const IntPoly& cyclotomic_locked(long long n) {
    auto it = cyc_cache.find(n);
    if (it != cyc_cache.end()) return it->second;
    // x^n - 1
    IntPoly value = IntPoly::monomial(static_cast<long>(n)) - IntPoly::constant(1);
    for (long long d : divisors(n)) {
        if (d == n) continue;
        value = div_exact(value, cyclotomic_locked(d));
    }
    return cyc_cache.emplace(n, std::move(value)).first->second;
}

}  // namespace

IntPoly cyclotomic(long long n) {
    require_positive(n);
    std::lock_guard lock(cyc_mutex);
    return cyclotomic_locked(n);
}

}  // namespace psicalc
