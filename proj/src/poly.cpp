#include "psicalc/poly.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace psicalc {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    normalize();
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& c) {
    return IntPoly{{c}};
}

IntPoly IntPoly::monomial(long exp, const mpz_class& coeff) {
    if (exp < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<mpz_class> v(static_cast<size_t>(exp) + 1, kZero);
    v.back() = coeff;
    return IntPoly{std::move(v)};
}

IntPoly IntPoly::from_desc(std::vector<mpz_class> descending_coeffs) {
    std::vector<mpz_class> v(descending_coeffs.rbegin(), descending_coeffs.rend());
    return IntPoly{std::move(v)};
}

const mpz_class& IntPoly::leading() const {
    if (coeffs_.empty())
        throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const mpz_class& IntPoly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> v(coeffs_);
    for (auto& c : v) c = -c;
    return IntPoly{std::move(v)};
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    const auto& small = a.coeffs_.size() <= b.coeffs_.size() ? a : b;
    const auto& big = a.coeffs_.size() <= b.coeffs_.size() ? b : a;
    std::vector<mpz_class> v(big.coeffs_);
    for (size_t i = 0; i < small.coeffs_.size(); ++i) v[i] += small.coeffs_[i];
    return IntPoly{std::move(v)};
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> v(a.coeffs_);
    if (b.coeffs_.size() > v.size()) v.resize(b.coeffs_.size(), 0);
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return IntPoly{std::move(v)};
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    // Schoolbook convolution; degrees stay in the low thousands here.
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                       b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPoly{std::move(v)};
}

double IntPoly::eval_float(double x) const {
    double acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i].get_d();
    return acc;
}

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivideByZero{};
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree())
        throw NotDivisible("quotient degree would be negative");

    std::vector<mpz_class> rem(a.coeffs());
    const auto& bc = b.coeffs();
    const size_t db = bc.size() - 1;
    const mpz_class& lead = bc.back();
    std::vector<mpz_class> q(rem.size() - db, 0);

    for (size_t i = q.size(); i-- > 0;) {
        mpz_class& top = rem[i + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw NotDivisible("non-integer quotient coefficient");
        mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (size_t j = 0; j <= db; ++j)
            mpz_submul(rem[i + j].get_mpz_t(), q[i].get_mpz_t(),
                       bc[j].get_mpz_t());
    }
    for (size_t j = 0; j < db; ++j)
        if (rem[j] != 0) throw NotDivisible("nonzero remainder");
    return IntPoly{std::move(q)};
}

bool divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    try {
        (void)div_exact(a, b);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

IntPoly substitute_neg(const IntPoly& p) {
    std::vector<mpz_class> v(p.coeffs());
    for (size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return IntPoly{std::move(v)};
}

IntPoly laurent_lift(const IntPoly& p) {
    if (p.is_zero()) return IntPoly{};
    const long d = p.degree();
    std::vector<mpz_class> out(static_cast<size_t>(2 * d) + 1, 0);
    mpz_class binom;
    // x^d * sum_k a_k (x + 1/x)^k, expanded term by term.
    for (long k = 0; k <= d; ++k) {
        const mpz_class& ak = p.coeff(k);
        if (ak == 0) continue;
        for (long j = 0; j <= k; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                         static_cast<unsigned long>(j));
            mpz_addmul(out[static_cast<size_t>(d + k - 2 * j)].get_mpz_t(),
                       ak.get_mpz_t(), binom.get_mpz_t());
        }
    }
    return IntPoly{std::move(out)};
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const mpz_class& c = coeff(k);
        if (c == 0) continue;
        mpz_class abs_c = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = abs_c == 1;
        if (k == 0) {
            out << abs_c.get_str();
        } else {
            if (!unit) out << abs_c.get_str() << "*";
            out << "x";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }
};

}  // namespace

IntPoly IntPoly::parse(std::string_view text) {
    Cursor cur{text};
    std::vector<std::pair<long, mpz_class>> terms;
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.eat('-')) {
            sign = -1;
        } else if (cur.eat('+')) {
            // explicit plus
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms");
        }
        first = false;

        mpz_class coeff = 1;
        bool have_number = false;
        std::string num = cur.digits();
        if (!num.empty()) {
            coeff = mpz_class(num);
            have_number = true;
        }
        long exp = 0;
        bool star = cur.eat('*');
        if (cur.eat('x')) {
            exp = 1;
            if (cur.eat('^')) {
                std::string e = cur.digits();
                if (e.empty()) throw ParseError("missing exponent after '^'");
                exp = std::stol(e);
            }
        } else {
            if (star) throw ParseError("'*' not followed by x");
            if (!have_number) throw ParseError("empty term");
        }
        coeff *= sign;
        terms.emplace_back(exp, coeff);
    }
    if (terms.empty()) throw ParseError("empty polynomial text");
    long top = 0;
    for (const auto& [e, c] : terms) top = std::max(top, e);
    std::vector<mpz_class> v(static_cast<size_t>(top) + 1, 0);
    for (const auto& [e, c] : terms) v[static_cast<size_t>(e)] += c;
    return IntPoly{std::move(v)};
}

}  // namespace psicalc
