#pragma once

// Dense matrices over exact rationals, plus exact determinants. Two
// elimination strategies sit behind det_dense: fraction-free Bareiss when
// every entry is an integer (keeps intermediates integral, no gcd churn)
// and rational Gaussian elimination otherwise.

#include <cstddef>
#include <vector>

#include "tribell/rational.hpp"

namespace tribell {

class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c);
    const Rational& at(std::size_t r, std::size_t c) const;

    bool operator==(const DenseMatrix& other) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);

// Determinant of a square matrix; det of the empty 0x0 matrix is 1.
Rational det_dense(const DenseMatrix& m);

namespace detail {
// Exposed for the equivalence tests; det_dense dispatches between them.
Rational det_bareiss_integer(const DenseMatrix& m);   // requires integer entries
Rational det_gauss_rational(const DenseMatrix& m);
bool all_integer(const DenseMatrix& m);
} // namespace detail

} // namespace tribell
