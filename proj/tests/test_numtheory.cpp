#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "psicalc/numtheory.hpp"

using namespace psicalc;

namespace {

// Independent oracle: count residues coprime to n directly.
long long brute_phi(long long n) {
    long long count = 0;
    for (long long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

long long binomial(long long n, long long k) {
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("factorize") {
    CHECK(factorize(60).entries ==
          std::vector<PrimePower>{{2, 2}, {3, 1}, {5, 1}});
    CHECK(factorize(1).entries.empty());
    CHECK(factorize(105).entries ==
          std::vector<PrimePower>{{3, 1}, {5, 1}, {7, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);

    for (long long n = 1; n <= 2000; ++n) {
        const auto f = factorize(n);
        CHECK(f.value() == n);
        for (const auto& [p, e] : f.entries) CHECK(is_prime(p));
        for (size_t i = 1; i < f.entries.size(); ++i)
            CHECK(f.entries[i - 1].prime < f.entries[i].prime);
    }
}

TEST_CASE("divisors") {
    CHECK(divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<long long>{1});
    CHECK(divisors(30) == std::vector<long long>{1, 2, 3, 5, 6, 10, 15, 30});
    CHECK_THROWS_AS(divisors(-3), std::invalid_argument);
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    for (long long n = 1; n <= 300; ++n) CHECK(euler_phi(n) == brute_phi(n));
    // phi(2d) = phi(d) for odd d
    for (long long d = 1; d <= 1000; d += 2)
        CHECK(euler_phi(2 * d) == euler_phi(d));
    // sum of phi over divisors is n
    for (long long n = 1; n <= 2000; ++n) {
        long long sum = 0;
        for (long long d : divisors(n)) sum += euler_phi(d);
        CHECK(sum == n);
    }
}

TEST_CASE("moebius") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    for (long long n = 2; n <= 2000; ++n) {
        long long sum = 0;
        for (long long d : divisors(n)) sum += moebius(d);
        CHECK(sum == 0);
    }
}

TEST_CASE("pi_sets") {
    SUBCASE("30") {
        const PiSets s = pi_sets(30);
        CHECK(s.level(1) == std::vector<long long>{3, 5});
        CHECK(s.level(2) == std::vector<long long>{15});
        CHECK(s.level(3).empty());
    }
    SUBCASE("strict inequality excludes the full product") {
        const PiSets s = pi_sets(15);
        CHECK(s.level(1) == std::vector<long long>{3, 5});
        CHECK(s.level(2).empty());
    }
    SUBCASE("no odd primes") {
        const PiSets s = pi_sets(8);
        CHECK(s.levels.empty());
        CHECK(s.level(1).empty());
    }
    SUBCASE("level sizes are binomial for squarefree odd n") {
        // e.g. 3*5*7*11
        const PiSets s = pi_sets(3 * 5 * 7 * 11);
        const long long i = 4;
        for (long long j = 1; j < i; ++j)
            CHECK(static_cast<long long>(s.level(j).size()) == binomial(i, j));
        CHECK(s.level(i).empty());
    }
}
