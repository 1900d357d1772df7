#pragma once

// Linear recurrences with constant rational coefficients:
//
//   a_n = c_1 a_{n-1} + ... + c_l a_{n-l}   for n >= l,
//
// pinned by initial terms a_0..a_{l-1}. Terms at negative indices exist
// exactly when c_l != 0 (solve the recurrence backwards for a_{m}:
// a_m = (a_{m+l} - c_1 a_{m+l-1} - ... - c_{l-1} a_{m+1}) / c_l).
//
// SequenceHandle memoizes in both directions; term() is amortized O(l) per
// new index. Handles are not safe for concurrent mutation; each worker
// thread uses its own.

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "tribell/rational.hpp"

namespace tribell {

struct RecurrenceSpec {
    std::vector<Rational> coeffs;   // c_1..c_l
    std::vector<Rational> initials; // a_0..a_{l-1}

    std::size_t order() const { return coeffs.size(); }

    // Validates: equal nonzero lengths, coeffs not all zero, initials not
    // all zero.
    static RecurrenceSpec create(std::vector<Rational> coeffs, std::vector<Rational> initials);

    bool operator==(const RecurrenceSpec&) const = default;

    // Stable text form, usable as a memo-pool key.
    std::string key() const;
};

// Order-3 recurrence with coefficients (u, v, w) and initials (a, b, c).
RecurrenceSpec make_tribonacci(const Rational& u, const Rational& v, const Rational& w,
                               const Rational& a, const Rational& b, const Rational& c);

// Order-l, all coefficients 1, initials 0, 1, 1, 2, 4, ..., 2^{l-3}
// (each initial past the second doubles the previous one). Requires l >= 2.
RecurrenceSpec make_lstep(std::size_t l);

// Companion sequence of the same recurrence with initials a_0 = l and
// a_j = 2^j - 1 for 1 <= j < l. Requires l >= 2.
RecurrenceSpec make_lstep_companion(std::size_t l);

class SequenceHandle {
public:
    explicit SequenceHandle(RecurrenceSpec spec);

    const RecurrenceSpec& spec() const { return spec_; }

    // Memoized; extends backwards only when the trailing coefficient is
    // nonzero, otherwise negative n throws domain_error. The reference
    // stays valid for the handle's lifetime (deque storage).
    const Rational& term(long n);

    // Terms lo..hi inclusive; requires lo <= hi.
    std::vector<Rational> terms(long lo, long hi);

private:
    RecurrenceSpec spec_;
    std::deque<Rational> forward_;  // a_0, a_1, ...
    std::deque<Rational> backward_; // a_{-1}, a_{-2}, ...
    bool trailing_nonzero_;
};

} // namespace tribell
