#include "tribell/combinat.hpp"

#include "tribell/hessenberg.hpp"

namespace tribell {

Int binom(long n, long k) {
    if (n < 0) throw domain_error("binomial with negative upper index");
    if (k < 0 || k > n) return Int(0);
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

DenseMatrix pascal_rowrev(const PascalParam& p) {
    const std::size_t n = p.k + 1;
    DenseMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        Rational power(1);
        for (std::size_t j = 0; j < n; ++j) {
            m.at(r, j) = Rational(binom(static_cast<long>(p.k - r), static_cast<long>(j))) * power;
            power *= p.alpha;
        }
    }
    return m;
}

DenseMatrix pascal_rowrev_inv(const PascalParam& p) {
    if (p.alpha == 0) throw domain_error("scale parameter must be nonzero to invert");
    const std::size_t n = p.k + 1;
    const Rational inv_alpha = Rational(1) / p.alpha;
    DenseMatrix m(n, n);
    Rational power(1); // alpha^{-i}
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Int c = binom(static_cast<long>(i), static_cast<long>(p.k - j));
            if (c == 0) continue;
            Rational e = Rational(c) * power;
            if ((i + j + p.k) % 2 != 0) e = -e;
            m.at(i, j) = e;
        }
        power *= inv_alpha;
    }
    return m;
}

Int det_pascal_rowrev(std::size_t k) {
    // Sign of the row-reversal permutation on k+1 rows.
    return (k * (k + 1) / 2) % 2 == 0 ? Int(1) : Int(-1);
}

std::vector<Rational> binomial_inversion(const std::vector<Rational>& b) {
    std::vector<Rational> a(b.size());
    Rational term;
    for (std::size_t j = 0; j < b.size(); ++j) {
        Rational acc(0);
        for (std::size_t u = 0; u <= j; ++u) {
            term = Rational(binom(static_cast<long>(j), static_cast<long>(u))) * b[u];
            if ((j - u) % 2 != 0) acc -= term; else acc += term;
        }
        a[j] = acc;
    }
    return a;
}

std::vector<Rational> bell_complete_all(const std::vector<Rational>& xs, std::size_t n) {
    if (n > xs.size()) throw domain_error("need n arguments for the degree-n Bell polynomial");
    std::vector<Rational> y(n + 1);
    y[0] = 1;
    Rational term;
    for (std::size_t m = 0; m + 1 <= n; ++m) {
        Rational acc(0);
        for (std::size_t k = 0; k <= m; ++k) {
            term = Rational(binom(static_cast<long>(m), static_cast<long>(k))) * y[m - k];
            term *= xs[k];
            acc += term;
        }
        y[m + 1] = acc;
    }
    return y;
}

Rational bell_complete(const std::vector<Rational>& xs, std::size_t n) {
    return bell_complete_all(xs, n).back();
}

Rational bell_via_det(const std::vector<Rational>& a, std::size_t m) {
    if (m > a.size()) throw domain_error("need m leading coefficients for the order-m determinant");
    if (m == 0) return Rational(1);
    std::vector<Rational> superdiag;
    superdiag.reserve(m - 1);
    for (std::size_t j = 1; j < m; ++j) superdiag.emplace_back(-static_cast<long>(j));
    HessenbergColumns h(m, std::move(superdiag),
                        [&a](std::size_t row, std::size_t col) { return a[row - col]; });
    Rational det = det_hessenberg(h);
    return det / Rational(factorial(static_cast<unsigned long>(m)));
}

Rational bell_inverse_det(const std::vector<Rational>& b, std::size_t n) {
    if (n == 0) throw domain_error("inverse determinant route needs n >= 1");
    if (n > b.size()) throw domain_error("need n leading values for the order-n determinant");
    std::vector<Rational> superdiag(n > 0 ? n - 1 : 0, Rational(1));
    HessenbergColumns h(n, std::move(superdiag), [&b](std::size_t row, std::size_t col) -> Rational {
        if (col == 1) return Rational(static_cast<long>(row)) * b[row - 1];
        return b[row - col]; // b_{row-col+1}, zero-indexed
    });
    Rational det = det_hessenberg(h);
    if (n % 2 == 0) det = -det;
    return det;
}

} // namespace tribell
