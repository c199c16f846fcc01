#include "psicalc/sequences.hpp"

#include <mutex>
#include <utility>
#include <vector>

namespace psicalc {

namespace {

std::mutex cache_mutex;
// cache[n + 2] holds c_n; seeded with c_{-2} .. c_1.
std::vector<IntPoly> c_cache;

// Caller must hold cache_mutex.
void ensure_c(long n) {
    if (c_cache.empty()) {
        c_cache.push_back(IntPoly::constant(-1));     // c_{-2}
        c_cache.push_back(IntPoly::zero());           // c_{-1}
        c_cache.push_back(IntPoly::constant(1));      // c_0
        c_cache.push_back(IntPoly::monomial(1));      // c_1
    }
    const IntPoly x = IntPoly::monomial(1);
    while (static_cast<long>(c_cache.size()) <= n + 2) {
        const size_t k = c_cache.size();
        c_cache.push_back(x * c_cache[k - 1] - c_cache[k - 2]);
    }
}

IntPoly c_locked(long n) {
    std::lock_guard lock(cache_mutex);
    ensure_c(n);
    return c_cache[static_cast<size_t>(n + 2)];
}

void require_index(long n, long min, const char* name) {
    if (n < min)
        throw IndexOutOfRange(std::string(name) + ": index " +
                              std::to_string(n) + " below minimum " +
                              std::to_string(min));
}

}  // namespace

IntPoly c(long n) {
    require_index(n, -2, "c");
    return c_locked(n);
}

IntPoly c_expanded(long n) {
    require_index(n, 0, "c_expanded");
    std::vector<mpz_class> v(static_cast<size_t>(n) + 1, 0);
    mpz_class binom;
    for (long k = 0; 2 * k <= n; ++k) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - k),
                     static_cast<unsigned long>(k));
        if (k % 2 != 0) binom = -binom;
        v[static_cast<size_t>(n - 2 * k)] = binom;
    }
    return IntPoly{std::move(v)};
}

IntPoly t(long n) {
    require_index(n, 0, "t");
    return q_minus(n);
}

IntPoly t_expanded(long n) {
    require_index(n, 1, "t_expanded");
    std::vector<mpz_class> v(static_cast<size_t>(n) + 1, 0);
    mpz_class num, den, coeff;
    for (long k = 0; 2 * k <= n; ++k) {
        // n * (n-k-1)! / (k! * (n-2k)!)
        mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n - k - 1));
        num *= n;
        mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
        mpz_fac_ui(coeff.get_mpz_t(), static_cast<unsigned long>(n - 2 * k));
        den *= coeff;
        mpz_divexact(coeff.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (k % 2 != 0) coeff = -coeff;
        v[static_cast<size_t>(n - 2 * k)] = coeff;
    }
    return IntPoly{std::move(v)};
}

IntPoly p_plus(long n) {
    require_index(n, 0, "p_plus");
    std::lock_guard lock(cache_mutex);
    ensure_c(n);
    return c_cache[static_cast<size_t>(n + 2)] +
           c_cache[static_cast<size_t>(n + 1)];
}

IntPoly p_minus(long n) {
    require_index(n, 0, "p_minus");
    std::lock_guard lock(cache_mutex);
    ensure_c(n);
    return c_cache[static_cast<size_t>(n + 2)] -
           c_cache[static_cast<size_t>(n + 1)];
}

IntPoly q_plus(long n) {
    require_index(n, 0, "q_plus");
    std::lock_guard lock(cache_mutex);
    ensure_c(n);
    return c_cache[static_cast<size_t>(n + 2)] +
           c_cache[static_cast<size_t>(n)];
}

IntPoly q_minus(long n) {
    require_index(n, 0, "q_minus");
    std::lock_guard lock(cache_mutex);
    ensure_c(n);
    return c_cache[static_cast<size_t>(n + 2)] -
           c_cache[static_cast<size_t>(n)];
}

IntPoly term(const SeqTerm& ref) {
    switch (ref.family) {
        case Family::C: return c(ref.index);
        case Family::PPlus: return p_plus(ref.index);
        case Family::PMinus: return p_minus(ref.index);
        case Family::QPlus: return q_plus(ref.index);
        case Family::QMinus: return q_minus(ref.index);
    }
    throw std::logic_error("unreachable family");
}

std::string term_name(const SeqTerm& ref) {
    const char* tag = nullptr;
    switch (ref.family) {
        case Family::C: tag = "c"; break;
        case Family::PPlus: tag = "p+"; break;
        case Family::PMinus: tag = "p-"; break;
        case Family::QPlus: tag = "q+"; break;
        case Family::QMinus: tag = "q-"; break;
    }
    return std::string(tag) + "_" + std::to_string(ref.index);
}

SeqTerm parse_term(std::string_view name) {
    const size_t sep = name.find('_');
    if (sep == std::string_view::npos)
        throw ParseError("term name missing '_': " + std::string(name));
    const std::string_view tag = name.substr(0, sep);
    Family family;
    if (tag == "c") family = Family::C;
    else if (tag == "p+") family = Family::PPlus;
    else if (tag == "p-") family = Family::PMinus;
    else if (tag == "q+") family = Family::QPlus;
    else if (tag == "q-") family = Family::QMinus;
    else throw ParseError("unknown family tag: " + std::string(tag));
    long index = 0;
    try {
        index = std::stol(std::string(name.substr(sep + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad term index: " + std::string(name));
    }
    const long min = family == Family::C ? -2 : 0;
    if (index < min)
        throw IndexOutOfRange("term index out of range: " + std::string(name));
    return SeqTerm{family, index};
}

}  // namespace psicalc
