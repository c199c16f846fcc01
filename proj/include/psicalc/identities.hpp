#ifndef PSICALC_IDENTITIES_HPP
#define PSICALC_IDENTITIES_HPP

#include <string>
#include <vector>

#include "psicalc/poly.hpp"
#include "psicalc/sequences.hpp"

namespace psicalc {

// Result of sweeping one identity over a parameter range.  An empty
// failure list means the sweep passed.  Failures carry the full
// polynomials so counterexamples are reproducible.
struct CheckReport {
    std::string name;
    std::string range;
    struct Failure {
        std::string params;
        std::string expected;
        std::string actual;
    };
    std::vector<Failure> failures;

    bool passed() const { return failures.empty(); }
    // "PASS <name> range=<...>" or "FAIL <name> at <params>"
    std::string to_line() const;
};

// (x^2 - 4) c_m c_n = t_{m+n+2} - t_{|m-n|}
bool check_prod_c(long m, long n);
// t_{2s+1} +- 2 = (x +- 2) p^-+_s^2, both sign variants
bool check_factor_t_odd(long s);
// t_{2s} + 2 = t_s^2 and t_{2s} - 2 = (x^2 - 4) c_{s-1}^2
bool check_factor_t_even(long s);
// p^+_s = (-1)^s p^-_s(-x)
bool check_pq_reflection(long s);
// c_{s-1} = p^-_{s'} p^+_{s'} (s = 2s'+1) or t_{s'} c_{s'-1} (s = 2s')
bool check_c_splitting(long s);
// p^+/p^-/q^- divisibility matches the arithmetic conditions
// (2s+1) | (2s2+1) and s | s2 with odd quotient respectively.
bool check_divisibility(long s, long s2);
// Every listed root of the family's s-th term evaluates to ~0.
bool check_roots_float(Family family, long s);

// Sweeps every check above over ranges derived from max_n (pair sweeps
// are capped so the runtime stays proportionate); deterministic report
// order.  max_n = 0 yields no reports.
std::vector<CheckReport> run_suite(long max_n);

}  // namespace psicalc

#endif  // PSICALC_IDENTITIES_HPP
