#include "psicalc/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace psicalc {

namespace {
void require_positive(long long n) {
    if (n < 1) throw std::invalid_argument("argument must be >= 1");
}

std::vector<long long> empty_level;
}  // namespace

long long Factorization::value() const {
    long long v = 1;
    for (const auto& [p, e] : entries)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

const std::vector<long long>& PiSets::level(size_t i) const {
    if (i == 0) throw std::invalid_argument("Pi levels are 1-based");
    if (i > levels.size()) return empty_level;
    return levels[i - 1];
}

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Factorization factorize(long long n) {
    require_positive(n);
    Factorization f;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.entries.push_back({p, e});
    }
    if (n > 1) f.entries.push_back({n, 1});
    return f;
}

std::vector<long long> divisors(long long n) {
    require_positive(n);
    std::vector<long long> divs{1};
    for (const auto& [p, e] : factorize(n).entries) {
        const size_t base = divs.size();
        long long pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

long long euler_phi(long long n) {
    require_positive(n);
    long long phi = n;
    for (const auto& [p, e] : factorize(n).entries) phi -= phi / p;
    return phi;
}

int moebius(long long n) {
    require_positive(n);
    const auto f = factorize(n);
    for (const auto& [p, e] : f.entries)
        if (e > 1) return 0;
    return f.entries.size() % 2 == 0 ? 1 : -1;
}

PiSets pi_sets(long long n) {
    require_positive(n);
    std::vector<long long> odd_primes;
    for (const auto& [p, e] : factorize(n).entries)
        if (p != 2) odd_primes.push_back(p);

    PiSets sets;
    sets.levels.resize(odd_primes.size());
    // Subsets of the odd prime divisors; at desk scale there are at
    // most a handful of them.
    const size_t count = odd_primes.size();
    for (unsigned mask = 1; mask < (1u << count); ++mask) {
        long long prod = 1;
        size_t bits = 0;
        for (size_t i = 0; i < count; ++i) {
            if (mask & (1u << i)) {
                prod *= odd_primes[i];
                ++bits;
            }
        }
        if (prod < n) sets.levels[bits - 1].push_back(prod);
    }
    for (auto& level : sets.levels) std::sort(level.begin(), level.end());
    return sets;
}

}  // namespace psicalc
