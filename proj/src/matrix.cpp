#include "tribell/matrix.hpp"

#include <utility>

namespace tribell {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rational& DenseMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw dimension_error("matrix index out of range");
    return entries_[r * cols_ + c];
}

const Rational& DenseMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw dimension_error("matrix index out of range");
    return entries_[r * cols_ + c];
}

bool DenseMatrix::operator==(const DenseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw dimension_error("mat_mul shape mismatch");
    DenseMatrix out(a.rows(), b.cols());
    Rational acc, term;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                term = a.at(i, k) * b.at(k, j);
                acc += term;
            }
            out.at(i, j) = acc;
        }
    }
    return out;
}

namespace detail {

bool all_integer(const DenseMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_integer(m.at(i, j))) return false;
    return true;
}

Rational det_bareiss_integer(const DenseMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<Int> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = m.at(i, j).get_num(); // den == 1 by precondition

    int sign = 1;
    Int prev(1);
    Int t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot * n + k] == 0) ++pivot;
            if (pivot == n) return Rational(0);
            for (std::size_t j = k; j < n; ++j)
                std::swap(a[k * n + j], a[pivot * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                // Exact by the Bareiss identity: prev divides t.
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    Int result = a[n * n - 1];
    if (sign < 0) result = -result;
    return Rational(result);
}

Rational det_gauss_rational(const DenseMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<Rational> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = m.at(i, j);

    Rational det(1);
    Rational factor, t;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot * n + k] == 0) ++pivot;
            if (pivot == n) return Rational(0);
            for (std::size_t j = k; j < n; ++j)
                std::swap(a[k * n + j], a[pivot * n + j]);
            det = -det;
        }
        det *= a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i * n + k] == 0) continue;
            factor = a[i * n + k] / a[k * n + k];
            for (std::size_t j = k + 1; j < n; ++j) {
                t = factor * a[k * n + j];
                a[i * n + j] -= t;
            }
            a[i * n + k] = 0;
        }
    }
    return det;
}

} // namespace detail

Rational det_dense(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("determinant of non-square matrix");
    if (detail::all_integer(m)) return detail::det_bareiss_integer(m);
    return detail::det_gauss_rational(m);
}

} // namespace tribell
