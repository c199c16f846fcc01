#ifndef PSICALC_SEQUENCES_HPP
#define PSICALC_SEQUENCES_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "psicalc/poly.hpp"

namespace psicalc {

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

enum class Family { C, PPlus, PMinus, QPlus, QMinus };

// A tagged reference into one of the sequences {c, p+, p-, q+, q-}.
// Valid indices: >= -2 for C, >= 0 otherwise.
struct SeqTerm {
    Family family;
    long index;
    friend bool operator==(const SeqTerm&, const SeqTerm&) = default;
};

// All five families satisfy the same recurrence f_n = x*f_{n-1} - f_{n-2};
// they differ only in their seeds.  c is the master sequence: the others
// are differences of consecutive c terms.

// c_{-2} = -1, c_{-1} = 0, c_0 = 1, c_1 = x.
IntPoly c(long n);
// Direct binomial-sum construction of c_n, no recursion.
IntPoly c_expanded(long n);

// t_0 = 2, t_1 = x; monic rescaling of the first-kind Chebyshev family.
// Identical to q_minus.
IntPoly t(long n);
// Direct factorial-sum construction of t_n = q^-_n, n >= 1.
IntPoly t_expanded(long n);

// p^±_n = c_n ± c_{n-1}
IntPoly p_plus(long n);
IntPoly p_minus(long n);
// q^±_n = c_n ± c_{n-2}
IntPoly q_plus(long n);
IntPoly q_minus(long n);

// Uniform dispatch by tag.
IntPoly term(const SeqTerm& ref);

// "c_5", "p+_12", "p-_7", "q+_3", "q-_15"
std::string term_name(const SeqTerm& ref);
SeqTerm parse_term(std::string_view name);

}  // namespace psicalc

#endif  // PSICALC_SEQUENCES_HPP
