#pragma once

// Binomial machinery and complete Bell polynomials.
//
// The Pascal matrices here are the (k+1)x(k+1) row-reversed kind with a
// scale parameter: entry (r, j) = C(k - r, j) * alpha^j for 0 <= r, j <= k.
// Row r of the inverse is C(i, k - j) * (-1)^{i+j-k} * alpha^{-i} at
// (i, j); both are upper-left triangular in the reversed sense and the
// product is exactly the identity for any nonzero alpha.
//
// Complete Bell polynomials Y_n(x_1..x_n) are computed by the binomial
// convolution
//
//   Y_0 = 1,  Y_{m+1} = sum_{k=0..m} C(m, k) Y_{m-k} x_{k+1},
//
// and, independently, from Hessenberg determinants:
//   bell_via_det:     b_m = det(H) / m!  with H(i,j) = a_{i-j+1} on and
//                     below the diagonal and H(j, j+1) = -j, where
//                     x_m = (m-1)! a_m;
//   bell_inverse_det: recovers a_n from b_1..b_n via
//                     a_n = (-1)^{n-1} det(G), G(p,1) = p b_p,
//                     G(p,q) = b_{p-q+1} for q >= 2, superdiagonal 1.

#include <cstddef>
#include <vector>

#include "tribell/matrix.hpp"
#include "tribell/rational.hpp"

namespace tribell {

// C(n, k). Requires n >= 0; returns 0 for k < 0 or k > n.
Int binom(long n, long k);

struct PascalParam {
    std::size_t k = 0;   // matrix is (k+1) x (k+1)
    Rational alpha = 1;  // invertibility needs alpha != 0
};

DenseMatrix pascal_rowrev(const PascalParam& p);

// Requires p.alpha != 0 (domain_error otherwise).
DenseMatrix pascal_rowrev_inv(const PascalParam& p);

// det at alpha = 1: (-1)^{k(k+1)/2}.
Int det_pascal_rowrev(std::size_t k);

// Given b_j = sum_{u=0..j} C(j, u) a_u for 0 <= j < size, recover the a_j:
// a_j = sum_{u=0..j} (-1)^{j-u} C(j, u) b_u.
std::vector<Rational> binomial_inversion(const std::vector<Rational>& b);

// Y_n(xs[0..n-1]); requires n <= xs.size() (arity), Y_0 = 1.
Rational bell_complete(const std::vector<Rational>& xs, std::size_t n);

// Y_0..Y_n in one sweep (the convolution produces them incrementally).
std::vector<Rational> bell_complete_all(const std::vector<Rational>& xs, std::size_t n);

// Determinant route; a = (a_1..a_m..), requires m <= a.size().
// Returns b_m = Y_m(0!*a_1, 1!*a_2, ..., (m-1)!*a_m) / m!.
Rational bell_via_det(const std::vector<Rational>& a, std::size_t m);

// Inverse determinant route; b = (b_1..b_n..), requires n >= 1 and
// n <= b.size(). Recovers a_n.
Rational bell_inverse_det(const std::vector<Rational>& b, std::size_t n);

} // namespace tribell
