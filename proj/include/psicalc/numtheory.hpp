#ifndef PSICALC_NUMTHEORY_HPP
#define PSICALC_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace psicalc {

struct PrimePower {
    long long prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical prime factorization, primes strictly increasing.
// factorize(1) has no entries.
struct Factorization {
    std::vector<PrimePower> entries;

    long long value() const;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// The sets Pi_i(n): products of i distinct odd prime divisors of n that
// are strictly less than n.  levels[i-1] holds Pi_i(n), sorted.
struct PiSets {
    std::vector<std::vector<long long>> levels;

    const std::vector<long long>& level(size_t i) const;
};

bool is_prime(long long n);

// Trial division up to sqrt(n); fine for the desk-scale inputs here
// (n up to ~10^6).
Factorization factorize(long long n);

std::vector<long long> divisors(long long n);

long long euler_phi(long long n);

// 0 if n has a squared prime factor, else (-1)^(number of prime factors).
int moebius(long long n);

PiSets pi_sets(long long n);

}  // namespace psicalc

#endif  // PSICALC_NUMTHEORY_HPP
