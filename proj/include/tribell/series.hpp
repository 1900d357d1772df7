#pragma once

// Truncated formal power series over exact rationals. A SeriesTrunc of
// order N carries coefficients of t^0..t^{N-1}; every operation truncates
// to the shorter operand's order. Nothing here is numeric-approximate:
// recip/exp/log use the standard coefficient recurrences.
//
//   recip: g_0 = 1/f_0,        n g_n via  sum_{k=0..n} f_k g_{n-k} = [n=0]
//   exp:   g_0 = 1 (f_0 = 0),  n g_n  =   sum_{k=1..n} k f_k g_{n-k}
//   log:   h_0 = 0 (f_0 = 1),  n h_n  =   n f_n - sum_{k=1..n-1} k h_k f_{n-k}

#include <cstddef>
#include <vector>

#include "tribell/rational.hpp"
#include "tribell/sequences.hpp"

namespace tribell {

class SeriesTrunc {
public:
    explicit SeriesTrunc(std::vector<Rational> coeffs);
    SeriesTrunc(std::size_t order, const Rational& constant);

    std::size_t order() const { return coeffs_.size(); }

    const Rational& operator[](std::size_t i) const;
    Rational& operator[](std::size_t i);

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const SeriesTrunc&) const = default;

private:
    std::vector<Rational> coeffs_;
};

SeriesTrunc series_add(const SeriesTrunc& f, const SeriesTrunc& g);
SeriesTrunc series_sub(const SeriesTrunc& f, const SeriesTrunc& g);
SeriesTrunc series_mul(const SeriesTrunc& f, const SeriesTrunc& g);

// Requires a nonzero constant term.
SeriesTrunc series_recip(const SeriesTrunc& f);

// Requires f[0] == 0.
SeriesTrunc series_exp(const SeriesTrunc& f);

// Requires f[0] == 1.
SeriesTrunc series_log(const SeriesTrunc& f);

// num(t) / den(t) to the given order; requires den[0] != 0. Computed by the
// denominator-driven recurrence, not by series_recip + mul, so it is usable
// as an independent cross-check of those.
SeriesTrunc expand_rational(const std::vector<Rational>& num, const std::vector<Rational>& den,
                            std::size_t order);

// Ordinary generating function of an order-3 recurrence with coefficients
// (u, v, w) and initials (a, b, c):
//   (a + (b - u a) t + (c - u b - v a) t^2) / (1 - u t - v t^2 - w t^3).
SeriesTrunc gf_generalized(const RecurrenceSpec& spec, std::size_t order);

// Generating function of the odd-indexed subsequence T_1, T_3, T_5, ... of
// the (u, v, w)-sequence with initials (0, 1, 1):
//   (1 - (u^2 - u + v) t - w (u - 1) t^2)
//   / (1 - (u^2 + 2v) t + (v^2 - 2uw) t^2 - w^2 t^3).
SeriesTrunc gf_odd(const Rational& u, const Rational& v, const Rational& w, std::size_t order);

// Generating function of an all-ones-coefficients recurrence of any order
// (numerator a_0 + sum_{j>=1} (a_j - a_{j-1} - ... - a_0) t^j over
// 1 - t - ... - t^l). Requires every coefficient of spec to be 1.
SeriesTrunc gf_lstep(const RecurrenceSpec& spec, std::size_t order);

// z defined by 1 + sum_{n>=1} z_n t^n = 1 / (1 - sum_{n>=1} x_n t^n).
// Input and output series both start at the t^1 coefficient: index i holds
// the t^{i+1} coefficient. Orders match.
SeriesTrunc cameron_forward(const SeriesTrunc& x);
SeriesTrunc cameron_inverse(const SeriesTrunc& z);

} // namespace tribell
