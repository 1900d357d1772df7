#pragma once

// Lower Hessenberg matrices given implicitly: a superdiagonal vector plus a
// callback for the entries on and below the diagonal. The determinant uses
// the column-expansion recursion
//
//   d_0 = 1
//   d_k = sum_{r=1..k} (-1)^{k-r} h(k,r) * (prod_{j=r..k-1} s_j) * d_{r-1}
//
// where s_j is the superdiagonal entry in row j. O(n^2) entry evaluations,
// no elimination, no divisions. Indices are 1-based throughout this header
// to keep the recursion readable.

#include <cstddef>
#include <functional>
#include <vector>

#include "tribell/matrix.hpp"
#include "tribell/rational.hpp"

namespace tribell {

class HessenbergColumns {
public:
    using LowerFn = std::function<Rational(std::size_t row, std::size_t col)>; // col <= row

    // superdiag has n-1 entries: superdiag[j-1] = entry (j, j+1).
    HessenbergColumns(std::size_t n, std::vector<Rational> superdiag, LowerFn lower);

    std::size_t dim() const { return n_; }

    const Rational& super(std::size_t row) const; // 1 <= row <= n-1
    Rational lower(std::size_t row, std::size_t col) const; // 1 <= col <= row <= n

private:
    std::size_t n_;
    std::vector<Rational> superdiag_;
    LowerFn lower_;
};

// d_n via the recursion above; the 0x0 case gives 1.
Rational det_hessenberg(const HessenbergColumns& h);

// Dense copy (entries above the superdiagonal are zero); lets the dense
// eliminator cross-check the recursion.
DenseMatrix materialize(const HessenbergColumns& h);

} // namespace tribell
