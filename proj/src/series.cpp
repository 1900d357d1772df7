#include "tribell/series.hpp"

#include <algorithm>

namespace tribell {

SeriesTrunc::SeriesTrunc(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw domain_error("series order must be at least 1");
}

SeriesTrunc::SeriesTrunc(std::size_t order, const Rational& constant)
    : coeffs_(order, Rational(0)) {
    if (order == 0) throw domain_error("series order must be at least 1");
    coeffs_[0] = constant;
}

const Rational& SeriesTrunc::operator[](std::size_t i) const {
    if (i >= coeffs_.size()) throw dimension_error("series coefficient index out of range");
    return coeffs_[i];
}

Rational& SeriesTrunc::operator[](std::size_t i) {
    if (i >= coeffs_.size()) throw dimension_error("series coefficient index out of range");
    return coeffs_[i];
}

namespace {

std::size_t common_order(const SeriesTrunc& f, const SeriesTrunc& g) {
    return std::min(f.order(), g.order());
}

} // namespace

SeriesTrunc series_add(const SeriesTrunc& f, const SeriesTrunc& g) {
    const std::size_t n = common_order(f, g);
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f[i] + g[i];
    return SeriesTrunc(std::move(out));
}

SeriesTrunc series_sub(const SeriesTrunc& f, const SeriesTrunc& g) {
    const std::size_t n = common_order(f, g);
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f[i] - g[i];
    return SeriesTrunc(std::move(out));
}

SeriesTrunc series_mul(const SeriesTrunc& f, const SeriesTrunc& g) {
    const std::size_t n = common_order(f, g);
    std::vector<Rational> out(n, Rational(0));
    Rational t;
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (g[j] == 0) continue;
            t = f[i] * g[j];
            out[i + j] += t;
        }
    }
    return SeriesTrunc(std::move(out));
}

SeriesTrunc series_recip(const SeriesTrunc& f) {
    if (f[0] == 0) throw domain_error("reciprocal of a series with zero constant term");
    const std::size_t n = f.order();
    std::vector<Rational> g(n);
    g[0] = Rational(1) / f[0];
    Rational acc, t;
    for (std::size_t m = 1; m < n; ++m) {
        acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (f[k] == 0) continue;
            t = f[k] * g[m - k];
            acc += t;
        }
        g[m] = -acc / f[0];
    }
    return SeriesTrunc(std::move(g));
}

SeriesTrunc series_exp(const SeriesTrunc& f) {
    if (f[0] != 0) throw domain_error("series exponential needs zero constant term");
    const std::size_t n = f.order();
    std::vector<Rational> g(n);
    g[0] = 1;
    Rational acc, t;
    for (std::size_t m = 1; m < n; ++m) {
        acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (f[k] == 0) continue;
            t = Rational(static_cast<long>(k)) * f[k];
            t *= g[m - k];
            acc += t;
        }
        g[m] = acc / Rational(static_cast<long>(m));
    }
    return SeriesTrunc(std::move(g));
}

SeriesTrunc series_log(const SeriesTrunc& f) {
    if (f[0] != 1) throw domain_error("series logarithm needs constant term 1");
    const std::size_t n = f.order();
    std::vector<Rational> h(n);
    h[0] = 0;
    Rational acc, t;
    for (std::size_t m = 1; m < n; ++m) {
        acc = Rational(static_cast<long>(m)) * f[m];
        for (std::size_t k = 1; k < m; ++k) {
            if (h[k] == 0 || f[m - k] == 0) continue;
            t = Rational(static_cast<long>(k)) * h[k];
            t *= f[m - k];
            acc -= t;
        }
        h[m] = acc / Rational(static_cast<long>(m));
    }
    return SeriesTrunc(std::move(h));
}

SeriesTrunc expand_rational(const std::vector<Rational>& num, const std::vector<Rational>& den,
                            std::size_t order) {
    if (order == 0) throw domain_error("series order must be at least 1");
    if (den.empty() || den[0] == 0)
        throw domain_error("rational expansion needs a unit denominator constant term");
    std::vector<Rational> s(order);
    Rational acc, t;
    for (std::size_t n = 0; n < order; ++n) {
        acc = n < num.size() ? num[n] : Rational(0);
        const std::size_t kmax = std::min(n, den.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) {
            if (den[k] == 0) continue;
            t = den[k] * s[n - k];
            acc -= t;
        }
        s[n] = acc / den[0];
    }
    return SeriesTrunc(std::move(s));
}

SeriesTrunc gf_generalized(const RecurrenceSpec& spec, std::size_t order) {
    if (spec.order() != 3) throw domain_error("generating function form is for order-3 recurrences");
    const Rational& u = spec.coeffs[0];
    const Rational& v = spec.coeffs[1];
    const Rational& w = spec.coeffs[2];
    const Rational& a = spec.initials[0];
    const Rational& b = spec.initials[1];
    const Rational& c = spec.initials[2];
    std::vector<Rational> num{a, b - u * a, c - u * b - v * a};
    std::vector<Rational> den{Rational(1), -u, -v, -w};
    return expand_rational(num, den, order);
}

SeriesTrunc gf_odd(const Rational& u, const Rational& v, const Rational& w, std::size_t order) {
    Rational u2 = u * u;
    std::vector<Rational> num{Rational(1), -(u2 - u + v), -(w * (u - 1))};
    std::vector<Rational> den{Rational(1), -(u2 + 2 * v), v * v - 2 * u * w, -(w * w)};
    return expand_rational(num, den, order);
}

SeriesTrunc gf_lstep(const RecurrenceSpec& spec, std::size_t order) {
    const std::size_t l = spec.order();
    for (const Rational& c : spec.coeffs)
        if (c != 1) throw domain_error("this generating function form needs all coefficients 1");
    std::vector<Rational> num(l);
    Rational partial(0);
    for (std::size_t j = 0; j < l; ++j) {
        num[j] = spec.initials[j] - partial;
        partial += spec.initials[j];
    }
    std::vector<Rational> den(l + 1, Rational(-1));
    den[0] = 1;
    return expand_rational(num, den, order);
}

SeriesTrunc cameron_forward(const SeriesTrunc& x) {
    const std::size_t n = x.order();
    std::vector<Rational> f(n + 1, Rational(0));
    f[0] = 1;
    for (std::size_t i = 0; i < n; ++i) f[i + 1] = -x[i];
    SeriesTrunc g = series_recip(SeriesTrunc(std::move(f)));
    std::vector<Rational> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = g[i + 1];
    return SeriesTrunc(std::move(z));
}

SeriesTrunc cameron_inverse(const SeriesTrunc& z) {
    const std::size_t n = z.order();
    std::vector<Rational> f(n + 1, Rational(0));
    f[0] = 1;
    for (std::size_t i = 0; i < n; ++i) f[i + 1] = z[i];
    SeriesTrunc g = series_recip(SeriesTrunc(std::move(f)));
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = -g[i + 1];
    return SeriesTrunc(std::move(x));
}

} // namespace tribell
