#include "tribell/hessenberg.hpp"

#include <utility>

namespace tribell {

HessenbergColumns::HessenbergColumns(std::size_t n, std::vector<Rational> superdiag, LowerFn lower)
    : n_(n), superdiag_(std::move(superdiag)), lower_(std::move(lower)) {
    if (superdiag_.size() + 1 != n_ && !(n_ == 0 && superdiag_.empty()))
        throw dimension_error("superdiagonal length must be dim - 1");
}

const Rational& HessenbergColumns::super(std::size_t row) const {
    if (row < 1 || row >= n_) throw dimension_error("superdiagonal index out of range");
    return superdiag_[row - 1];
}

Rational HessenbergColumns::lower(std::size_t row, std::size_t col) const {
    if (col < 1 || row < col || row > n_) throw dimension_error("lower entry index out of range");
    return lower_(row, col);
}

Rational det_hessenberg(const HessenbergColumns& h) {
    const std::size_t n = h.dim();
    std::vector<Rational> d(n + 1);
    d[0] = 1;
    Rational term, prod;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc(0);
        prod = 1; // prod_{j=r..k-1} super(j), maintained as r walks down
        bool negate = false; // (-1)^{k-r}
        for (std::size_t r = k; r >= 1; --r) {
            term = h.lower(k, r) * prod;
            term *= d[r - 1];
            if (negate) acc -= term; else acc += term;
            negate = !negate;
            if (r > 1) prod *= h.super(r - 1);
        }
        d[k] = acc;
    }
    return d[n];
}

DenseMatrix materialize(const HessenbergColumns& h) {
    const std::size_t n = h.dim();
    DenseMatrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= i; ++j) m.at(i - 1, j - 1) = h.lower(i, j);
        if (i < n) m.at(i - 1, i) = h.super(i);
    }
    return m;
}

} // namespace tribell
