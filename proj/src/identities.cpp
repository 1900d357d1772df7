#include "tribell/identities.hpp"

#include <array>

#include "tribell/combinat.hpp"
#include "tribell/hessenberg.hpp"
#include "tribell/matrix.hpp"

namespace tribell {

namespace {

struct IdName {
    IdentityId id;
    const char* name;
};

// Kept in lexicographic name order; catalog order == this order.
constexpr std::array<IdName, 17> kIdNames{{
    {IdentityId::addition_formula, "addition_formula"},
    {IdentityId::cor3_binom_inv, "cor3_binom_inv"},
    {IdentityId::cor4_cramer, "cor4_cramer"},
    {IdentityId::cor_bell_lstep_inv, "cor_bell_lstep_inv"},
    {IdentityId::cor_bell_tribo_inv, "cor_bell_tribo_inv"},
    {IdentityId::cor_det_t2n1, "cor_det_t2n1"},
    {IdentityId::lemma_cameron, "lemma_cameron"},
    {IdentityId::lemma_gf_odd, "lemma_gf_odd"},
    {IdentityId::lemma_gf_recip, "lemma_gf_recip"},
    {IdentityId::lemma_rel_2step, "lemma_rel_2step"},
    {IdentityId::q_det_3x3, "q_det_3x3"},
    {IdentityId::r_recurrence, "r_recurrence"},
    {IdentityId::theorem1, "theorem1"},
    {IdentityId::theorem2, "theorem2"},
    {IdentityId::thm_bell_lstep, "thm_bell_lstep"},
    {IdentityId::thm_bell_tribo, "thm_bell_tribo"},
    {IdentityId::thm_det_t2n1, "thm_det_t2n1"},
}};

using Params = std::vector<std::pair<std::string, Rational>>;

VerifyReport base_report(IdentityId id, Variant variant, Params params) {
    VerifyReport rep;
    rep.id = id;
    rep.variant = variant;
    rep.params = std::move(params);
    return rep;
}

VerifyReport skipped(VerifyReport rep, std::string note) {
    rep.status = CheckStatus::skipped_precondition;
    rep.note = std::move(note);
    return rep;
}

VerifyReport settle(VerifyReport rep, const Rational& lhs, const Rational& rhs,
                    std::string note_on_failure = "") {
    if (lhs == rhs) {
        rep.status = CheckStatus::verified;
    } else {
        rep.status = CheckStatus::counterexample;
        rep.lhs = lhs;
        rep.rhs = rhs;
        rep.note = std::move(note_on_failure);
    }
    return rep;
}

RecurrenceSpec classical_spec() {
    return make_tribonacci(1, 1, 1, 0, 1, 1);
}

RecurrenceSpec base_spec(const Rational& u, const Rational& v, const Rational& w) {
    return make_tribonacci(u, v, w, 0, 1, 1);
}

// u^0..u^m.
std::vector<Rational> powers(const Rational& base, std::size_t m) {
    std::vector<Rational> p(m + 1);
    p[0] = 1;
    for (std::size_t e = 1; e <= m; ++e) p[e] = p[e - 1] * base;
    return p;
}

} // namespace

const char* to_string(IdentityId id) {
    for (const auto& e : kIdNames)
        if (e.id == id) return e.name;
    return "?";
}

std::optional<IdentityId> identity_from_string(std::string_view name) {
    for (const auto& e : kIdNames)
        if (name == e.name) return e.id;
    return std::nullopt;
}

const std::vector<IdentityId>& identity_catalog() {
    static const std::vector<IdentityId> catalog = [] {
        std::vector<IdentityId> c;
        c.reserve(kIdNames.size());
        for (const auto& e : kIdNames) c.push_back(e.id);
        return c;
    }();
    return catalog;
}

const char* to_string(Variant v) {
    return v == Variant::as_stated ? "as_stated" : "derivation_consistent";
}

bool identity_has_variants(IdentityId id) {
    return id == IdentityId::theorem1 || id == IdentityId::theorem2;
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::verified: return "verified";
        case CheckStatus::counterexample: return "counterexample";
        case CheckStatus::skipped_precondition: return "skipped_precondition";
    }
    return "?";
}

RSequenceState::RSequenceState(const Rational& u, const Rational& v, const Rational& w) {
    d1_ = u * u - u + v;
    d2_ = w * (u - 1);
    Rational u2 = u * u;
    r_.push_back(-(u + v));
    r_.push_back(u2 - u2 * u - u2 * v - u * w - w);
    Rational r3 = d1_ * r_[1] + d2_ * r_[0] - w * w;
    r_.push_back(std::move(r3));
}

const Rational& RSequenceState::term(std::size_t n) {
    if (n < 1) throw domain_error("r-sequence starts at index 1");
    while (r_.size() < n) {
        std::size_t s = r_.size();
        Rational next = d1_ * r_[s - 1] + d2_ * r_[s - 2];
        r_.push_back(std::move(next));
    }
    return r_[n - 1];
}

SequenceHandle& EngineContext::seq(const RecurrenceSpec& spec) {
    std::string key = spec.key();
    auto it = seqs_.find(key);
    if (it == seqs_.end())
        it = seqs_.emplace(std::move(key), std::make_unique<SequenceHandle>(spec)).first;
    return *it->second;
}

RSequenceState& EngineContext::rseq(const Rational& u, const Rational& v, const Rational& w) {
    std::string key = to_string(u) + "|" + to_string(v) + "|" + to_string(w);
    auto it = rseqs_.find(key);
    if (it == rseqs_.end())
        it = rseqs_.emplace(std::move(key), std::make_unique<RSequenceState>(u, v, w)).first;
    return *it->second;
}

const std::vector<Rational>& EngineContext::bell_table(const RecurrenceSpec& spec, std::size_t n) {
    BellPool& pool = bells_[spec.key()];
    SequenceHandle& a = seq(spec);
    while (pool.xs.size() < n) {
        auto m = static_cast<unsigned long>(pool.xs.size() + 1); // next x_m
        Rational x = Rational(factorial(m - 1)) * a.term(static_cast<long>(m));
        pool.xs.push_back(std::move(x));
    }
    if (pool.table.empty()) pool.table.emplace_back(1);
    Rational term;
    while (pool.table.size() <= n) {
        std::size_t m = pool.table.size() - 1; // computing Y_{m+1}
        Rational acc(0);
        for (std::size_t k = 0; k <= m; ++k) {
            term = Rational(binom(static_cast<long>(m), static_cast<long>(k))) * pool.table[m - k];
            term *= pool.xs[k];
            acc += term;
        }
        pool.table.push_back(std::move(acc));
    }
    return pool.table;
}

const SeriesTrunc& EngineContext::bell_exp_series(const RecurrenceSpec& spec, std::size_t order) {
    BellPool& pool = bells_[spec.key()];
    if (!pool.exp_series || pool.exp_series->order() < order) {
        // Grow in chunks so a sweep over n costs O(N^2) total, not O(N^3).
        std::size_t target = order;
        if (pool.exp_series) target = std::max(target, pool.exp_series->order() * 2);
        SequenceHandle& a = seq(spec);
        std::vector<Rational> f(target, Rational(0));
        for (std::size_t m = 1; m < target; ++m)
            f[m] = a.term(static_cast<long>(m)) / Rational(static_cast<long>(m));
        pool.exp_series = std::make_unique<SeriesTrunc>(series_exp(SeriesTrunc(std::move(f))));
    }
    return *pool.exp_series;
}

Rational r_sequence(EngineContext& ctx, const Rational& u, const Rational& v, const Rational& w,
                    std::size_t n) {
    return ctx.rseq(u, v, w).term(n);
}

VerifyReport check_q_det(EngineContext& ctx, long n) {
    VerifyReport rep = base_report(IdentityId::q_det_3x3, Variant::as_stated, {{"n", Rational(n)}});
    SequenceHandle& t = ctx.seq(classical_spec());
    DenseMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            m.at(r, c) = t.term(n + 2 - static_cast<long>(r) - static_cast<long>(c));
    return settle(std::move(rep), det_dense(m), Rational(-1));
}

VerifyReport check_addition(EngineContext& ctx, long m, long n) {
    VerifyReport rep = base_report(IdentityId::addition_formula, Variant::as_stated,
                                   {{"m", Rational(m)}, {"n", Rational(n)}});
    SequenceHandle& t = ctx.seq(classical_spec());
    Rational lhs = t.term(m + n);
    Rational rhs = t.term(m + 1) * t.term(n);
    rhs += t.term(m) * t.term(n - 1);
    rhs += t.term(m) * t.term(n - 2);
    rhs += t.term(m - 1) * t.term(n - 1);
    return settle(std::move(rep), lhs, rhs);
}

VerifyReport check_theorem1(EngineContext& ctx, const Rational& u, const Rational& v,
                            const Rational& w, long n, long k, Variant variant) {
    VerifyReport rep = base_report(IdentityId::theorem1, variant,
                                   {{"u", u}, {"v", v}, {"w", w}, {"n", Rational(n)}, {"k", Rational(k)}});
    if (k < 0) return skipped(std::move(rep), "exponent k must be nonnegative");
    if (variant == Variant::as_stated && v == 0)
        return skipped(std::move(rep), "as-stated scale w/v undefined at v = 0");
    if (n < 2 * k && w == 0)
        return skipped(std::move(rep), "index below zero with no backward extension (w = 0)");
    SequenceHandle& t = ctx.seq(base_spec(u, v, w));
    const auto ku = static_cast<std::size_t>(k);
    Rational lhs = t.term(n + k);
    Rational rhs(0), term;
    if (variant == Variant::derivation_consistent) {
        std::vector<Rational> up = powers(u, ku), vp = powers(v, ku), wp = powers(w, ku);
        for (std::size_t i = 0; i <= ku; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                term = Rational(binom(k, static_cast<long>(i)) *
                                binom(static_cast<long>(i), static_cast<long>(j)));
                term *= up[ku - i];
                term *= vp[i - j];
                term *= wp[j];
                term *= t.term(n - static_cast<long>(i) - static_cast<long>(j));
                rhs += term;
            }
        }
    } else {
        std::vector<Rational> ap = powers(u * v, ku), bp = powers(w / v, ku);
        for (std::size_t i = 0; i <= ku; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                term = Rational(binom(k, static_cast<long>(i)) *
                                binom(static_cast<long>(i), static_cast<long>(j)));
                term *= ap[i];
                term *= bp[j];
                term *= t.term(n - static_cast<long>(i) - static_cast<long>(j));
                rhs += term;
            }
        }
    }
    return settle(std::move(rep), lhs, rhs);
}

VerifyReport check_theorem2(EngineContext& ctx, const Rational& u, const Rational& v,
                            const Rational& w, long n, long i, Variant variant) {
    VerifyReport rep = base_report(IdentityId::theorem2, variant,
                                   {{"u", u}, {"v", v}, {"w", w}, {"n", Rational(n)}, {"i", Rational(i)}});
    if (i < 0) return skipped(std::move(rep), "transform order i must be nonnegative");
    if (variant == Variant::as_stated && i >= 1 && (u == 0 || v == 0))
        return skipped(std::move(rep), "as-stated scale (u v)^{-i} undefined at u v = 0");
    if (n < 2 * i && w == 0)
        return skipped(std::move(rep), "index below zero with no backward extension (w = 0)");
    SequenceHandle& t = ctx.seq(base_spec(u, v, w));
    const auto iu = static_cast<std::size_t>(i);
    Rational lhs(0), rhs(0), term;
    if (variant == Variant::derivation_consistent) {
        std::vector<Rational> up = powers(u, iu), vp = powers(v, iu), wp = powers(w, iu);
        for (std::size_t s = 0; s <= iu; ++s) {
            term = Rational(binom(i, static_cast<long>(s)));
            term *= up[iu - s];
            term *= t.term(n + static_cast<long>(s));
            if ((iu - s) % 2 != 0) lhs -= term; else lhs += term;

            term = Rational(binom(i, static_cast<long>(s)));
            term *= vp[iu - s];
            term *= wp[s];
            term *= t.term(n - static_cast<long>(i) - static_cast<long>(s));
            rhs += term;
        }
    } else {
        // The printed box: the alternating sum has the constant summand
        // T_{n+i}; it telescopes to zero for i >= 1.
        Rational alt(0);
        for (std::size_t s = 0; s <= iu; ++s) {
            term = Rational(binom(i, static_cast<long>(s)));
            if ((iu - s) % 2 != 0) alt -= term; else alt += term;
        }
        lhs = alt * t.term(n + i);
        if (i >= 1) lhs /= pow_rational(u * v, i);
        std::vector<Rational> bp = i >= 1 ? powers(w / v, iu) : powers(Rational(1), iu);
        for (std::size_t s = 0; s <= iu; ++s) {
            term = Rational(binom(i, static_cast<long>(s)));
            term *= bp[s];
            term *= t.term(n - static_cast<long>(i) - static_cast<long>(s));
            rhs += term;
        }
    }
    return settle(std::move(rep), lhs, rhs);
}

VerifyReport check_cor3(EngineContext& ctx, long j, Variant variant) {
    if (variant != Variant::as_stated)
        throw domain_error("this identity has no adjudicated second variant");
    VerifyReport rep = base_report(IdentityId::cor3_binom_inv, Variant::as_stated,
                                   {{"j", Rational(j)}});
    if (j < 0) return skipped(std::move(rep), "index j must be nonnegative");
    SequenceHandle& t = ctx.seq(classical_spec());
    Rational lhs = t.term(j);
    Rational rhs(0), inner, term;
    for (long p = 0; p <= j; ++p) {
        inner = 0;
        for (long m = p; m <= j; ++m) {
            term = Rational(binom(j - p, m - p)) * t.term(2 * m + p);
            inner += term;
        }
        inner *= Rational(binom(j, p));
        if ((j - p) % 2 != 0) rhs -= inner; else rhs += inner;
    }
    return settle(std::move(rep), lhs, rhs);
}

VerifyReport check_cor4_cramer(EngineContext& ctx, long n, long k, long i) {
    VerifyReport rep = base_report(IdentityId::cor4_cramer, Variant::as_stated,
                                   {{"n", Rational(n)}, {"k", Rational(k)}, {"i", Rational(i)}});
    if (k < 0 || i < 0 || i > k) return skipped(std::move(rep), "requires 0 <= i <= k");
    SequenceHandle& t = ctx.seq(classical_spec());
    const auto ku = static_cast<std::size_t>(k);
    const auto iu = static_cast<std::size_t>(i);

    Rational x(0), term;
    for (long jj = 0; jj <= i; ++jj) {
        term = Rational(binom(i, jj)) * t.term(n - i - jj);
        x += term;
    }

    const Rational sign = Rational(det_pascal_rowrev(ku)); // +-1
    DenseMatrix p = pascal_rowrev({ku, Rational(1)});

    DenseMatrix replaced = p;
    for (std::size_t r = 0; r <= ku; ++r)
        replaced.at(r, iu) = t.term(n + k - static_cast<long>(r));
    Rational via_replace = sign * det_dense(replaced);
    if (x != via_replace)
        return settle(std::move(rep), x, via_replace, "column-replaced determinant form");

    DenseMatrix swapped(ku + 1, ku + 1);
    for (std::size_t r = 0; r <= ku; ++r) {
        swapped.at(r, 0) = t.term(n + k - static_cast<long>(r));
        std::size_t out = 1;
        for (std::size_t c = 0; c <= ku; ++c) {
            if (c == iu) continue;
            swapped.at(r, out++) = p.at(r, c);
        }
    }
    Rational via_swap = sign * det_dense(swapped);
    if (iu % 2 != 0) via_swap = -via_swap;
    return settle(std::move(rep), x, via_swap, "column-to-front determinant form");
}

static Rational det_t2n1_value(EngineContext& ctx, const Rational& u, const Rational& v,
                               const Rational& w, std::size_t n) {
    RSequenceState& r = ctx.rseq(u, v, w);
    r.term(n); // prefetch
    HessenbergColumns h(n, std::vector<Rational>(n - 1, Rational(1)),
                        [&r](std::size_t row, std::size_t col) {
                            // (-1)^{row-col+1} r_{row-col+1}: diagonal -r_1.
                            Rational val = r.term(row - col + 1);
                            return (row - col) % 2 == 0 ? -val : val;
                        });
    return det_hessenberg(h);
}

static Rational det_cor_t2n1_value(EngineContext& ctx, const Rational& u, const Rational& v,
                                   const Rational& w, std::size_t n) {
    SequenceHandle& t = ctx.seq(base_spec(u, v, w));
    t.term(2 * static_cast<long>(n) + 1); // prefetch
    HessenbergColumns h(n, std::vector<Rational>(n - 1, Rational(1)),
                        [&t](std::size_t row, std::size_t col) {
                            return t.term(2 * static_cast<long>(row - col) + 3);
                        });
    return det_hessenberg(h);
}

VerifyReport check_thm_det_t2n1(EngineContext& ctx, const Rational& u, const Rational& v,
                                const Rational& w, long n) {
    VerifyReport rep = base_report(IdentityId::thm_det_t2n1, Variant::as_stated,
                                   {{"u", u}, {"v", v}, {"w", w}, {"n", Rational(n)}});
    if (n < 1) return skipped(std::move(rep), "matrix size n must be at least 1");
    SequenceHandle& t = ctx.seq(base_spec(u, v, w));
    Rational det = det_t2n1_value(ctx, u, v, w, static_cast<std::size_t>(n));
    return settle(std::move(rep), t.term(2 * n + 1), det);
}

VerifyReport check_cor_det_t2n1(EngineContext& ctx, const Rational& u, const Rational& v,
                                const Rational& w, long n) {
    VerifyReport rep = base_report(IdentityId::cor_det_t2n1, Variant::as_stated,
                                   {{"u", u}, {"v", v}, {"w", w}, {"n", Rational(n)}});
    if (n < 1) return skipped(std::move(rep), "matrix size n must be at least 1");
    const auto nu = static_cast<std::size_t>(n);
    Rational lhs = ctx.rseq(u, v, w).term(nu);
    if (n % 2 != 0) lhs = -lhs;
    return settle(std::move(rep), lhs, det_cor_t2n1_value(ctx, u, v, w, nu));
}

VerifyReport check_lemma_rel2step(EngineContext& ctx, const Rational& u, const Rational& v,
                                  const Rational& w, long n) {
    VerifyReport rep = base_report(IdentityId::lemma_rel_2step, Variant::as_stated,
                                   {{"u", u}, {"v", v}, {"w", w}, {"n", Rational(n)}});
    if (n < 6) return skipped(std::move(rep), "bisection relation needs n >= 6");
    SequenceHandle& t = ctx.seq(base_spec(u, v, w));
    Rational rhs = (u * u + 2 * v) * t.term(n - 2);
    rhs -= (v * v - 2 * u * w) * t.term(n - 4);
    rhs += w * w * t.term(n - 6);
    return settle(std::move(rep), t.term(n), rhs);
}

VerifyReport check_lemma_gf_odd(EngineContext& ctx, const Rational& u, const Rational& v,
                                const Rational& w, std::size_t ncoeff) {
    VerifyReport rep = base_report(IdentityId::lemma_gf_odd, Variant::as_stated,
                                   {{"u", u}, {"v", v}, {"w", w}, {"n", Rational(static_cast<long>(ncoeff))}});
    if (ncoeff == 0) return skipped(std::move(rep), "needs at least one coefficient");
    SequenceHandle& t = ctx.seq(base_spec(u, v, w));
    SeriesTrunc s = gf_odd(u, v, w, ncoeff);
    for (std::size_t m = 0; m < ncoeff; ++m) {
        Rational expect = t.term(2 * static_cast<long>(m) + 1);
        if (s[m] != expect)
            return settle(std::move(rep), expect, s[m],
                          "first mismatch at coefficient " + std::to_string(m));
    }
    rep.status = CheckStatus::verified;
    return rep;
}

VerifyReport check_lemma_gf_recip(EngineContext& ctx, const Rational& u, const Rational& v,
                                  const Rational& w, std::size_t ncoeff) {
    VerifyReport rep = base_report(IdentityId::lemma_gf_recip, Variant::as_stated,
                                   {{"u", u}, {"v", v}, {"w", w}, {"n", Rational(static_cast<long>(ncoeff))}});
    if (ncoeff < 2) return skipped(std::move(rep), "needs at least two coefficients");
    SequenceHandle& t = ctx.seq(base_spec(u, v, w));
    std::vector<Rational> odd(ncoeff);
    for (std::size_t m = 0; m < ncoeff; ++m) odd[m] = t.term(2 * static_cast<long>(m) + 1);
    SeriesTrunc rec = series_recip(SeriesTrunc(std::move(odd)));
    if (rec[0] != 1) return settle(std::move(rep), Rational(1), rec[0], "constant term");
    RSequenceState& r = ctx.rseq(u, v, w);
    for (std::size_t m = 1; m < ncoeff; ++m) {
        const Rational& expect = r.term(m);
        if (rec[m] != expect)
            return settle(std::move(rep), expect, rec[m],
                          "first mismatch at coefficient " + std::to_string(m));
    }
    rep.status = CheckStatus::verified;
    return rep;
}

VerifyReport check_r_recurrence(EngineContext& ctx, const Rational& u, const Rational& v,
                                const Rational& w, std::size_t nmax) {
    VerifyReport rep = base_report(IdentityId::r_recurrence, Variant::as_stated,
                                   {{"u", u}, {"v", v}, {"w", w}, {"n", Rational(static_cast<long>(nmax))}});
    if (nmax < 3) return skipped(std::move(rep), "closure check needs nmax >= 3");
    RSequenceState& r = ctx.rseq(u, v, w);
    const Rational d1 = u * u - u + v;
    const Rational d2 = w * (u - 1);
    Rational expect = d1 * r.term(2) + d2 * r.term(1) - w * w;
    if (r.term(3) != expect)
        return settle(std::move(rep), r.term(3), expect, "seed value at index 3");
    for (std::size_t m = 4; m <= nmax; ++m) {
        expect = d1 * r.term(m - 1) + d2 * r.term(m - 2);
        if (r.term(m) != expect)
            return settle(std::move(rep), r.term(m), expect,
                          "recurrence closure at index " + std::to_string(m));
    }
    rep.status = CheckStatus::verified;
    return rep;
}

VerifyReport check_lemma_cameron(EngineContext&, const std::vector<Rational>& x, std::size_t n) {
    VerifyReport rep = base_report(IdentityId::lemma_cameron, Variant::as_stated,
                                   {{"n", Rational(static_cast<long>(n))}});
    if (n < 1) return skipped(std::move(rep), "coefficient index n must be at least 1");
    if (n > x.size()) throw domain_error("need at least n input coefficients");
    std::vector<Rational> head(x.begin(), x.begin() + static_cast<long>(n));
    SeriesTrunc z = cameron_forward(SeriesTrunc(std::move(head)));
    Rational lhs = z[n - 1];
    HessenbergColumns h(n, std::vector<Rational>(n - 1, Rational(1)),
                        [&x](std::size_t row, std::size_t col) {
                            // (-1)^{row-col} x_{row-col+1}.
                            const Rational& val = x[row - col];
                            return (row - col) % 2 != 0 ? -val : val;
                        });
    return settle(std::move(rep), lhs, det_hessenberg(h));
}

namespace {

// Shared by the order-3 and l-step Bell checks. A is the source sequence
// whose scaled terms feed Y_n; target is the claimed value of Y_n / n!.
// Determinant route for Y_n / n! over the scaled terms of a_spec.
Rational bell_det_route(EngineContext& ctx, const RecurrenceSpec& a_spec, std::size_t n) {
    SequenceHandle& a = ctx.seq(a_spec);
    a.term(static_cast<long>(n)); // prefetch
    std::vector<Rational> superdiag;
    superdiag.reserve(n - 1);
    for (std::size_t j = 1; j < n; ++j) superdiag.emplace_back(-static_cast<long>(j));
    HessenbergColumns h(n, std::move(superdiag),
                        [&a](std::size_t row, std::size_t col) {
                            return a.term(static_cast<long>(row - col) + 1);
                        });
    return det_hessenberg(h) / Rational(factorial(n));
}

VerifyReport settle_bell_routes(EngineContext& ctx, VerifyReport rep, const RecurrenceSpec& a_spec,
                                long n, const Rational& target) {
    const auto nu = static_cast<std::size_t>(n);
    const Rational nfact{factorial(nu)};

    const std::vector<Rational>& y = ctx.bell_table(a_spec, nu);
    Rational via_recurrence = y[nu] / nfact;
    if (via_recurrence != target)
        return settle(std::move(rep), target, via_recurrence, "argument-recurrence route");

    Rational via_det = bell_det_route(ctx, a_spec, nu);
    if (via_det != target) return settle(std::move(rep), target, via_det, "determinant route");

    const SeriesTrunc& e = ctx.bell_exp_series(a_spec, nu + 1);
    if (e[nu] != target) return settle(std::move(rep), target, e[nu], "exponential-series route");

    rep.status = CheckStatus::verified;
    return rep;
}

VerifyReport settle_bell_inverse(EngineContext& ctx, VerifyReport rep,
                                 const RecurrenceSpec& b_spec, long n, const Rational& target) {
    const auto nu = static_cast<std::size_t>(n);
    SequenceHandle& b = ctx.seq(b_spec);
    b.term(n + 1); // prefetch
    HessenbergColumns h(nu, std::vector<Rational>(nu - 1, Rational(1)),
                        [&b](std::size_t row, std::size_t col) -> Rational {
                            if (col == 1)
                                return Rational(static_cast<long>(row)) *
                                       b.term(static_cast<long>(row) + 1);
                            return b.term(static_cast<long>(row - col) + 2);
                        });
    Rational det = det_hessenberg(h);
    if (n % 2 == 0) det = -det;
    return settle(std::move(rep), target, det);
}

} // namespace

VerifyReport check_thm_bell_tribo(EngineContext& ctx, const Rational& u, const Rational& v,
                                  const Rational& w, long n) {
    VerifyReport rep = base_report(IdentityId::thm_bell_tribo, Variant::as_stated,
                                   {{"u", u}, {"v", v}, {"w", w}, {"n", Rational(n)}});
    if (n < 1) return skipped(std::move(rep), "degree n must be at least 1");
    RecurrenceSpec a_spec = make_tribonacci(u, v, w, 3, u, u * u + 2 * v);
    RecurrenceSpec b_spec = make_tribonacci(u, v, w, 0, 1, u);
    Rational target = ctx.seq(b_spec).term(n + 1);
    return settle_bell_routes(ctx, std::move(rep), a_spec, n, target);
}

VerifyReport check_cor_bell_tribo_inv(EngineContext& ctx, const Rational& u, const Rational& v,
                                      const Rational& w, long n) {
    VerifyReport rep = base_report(IdentityId::cor_bell_tribo_inv, Variant::as_stated,
                                   {{"u", u}, {"v", v}, {"w", w}, {"n", Rational(n)}});
    if (n < 1) return skipped(std::move(rep), "index n must be at least 1");
    RecurrenceSpec a_spec = make_tribonacci(u, v, w, 3, u, u * u + 2 * v);
    RecurrenceSpec b_spec = make_tribonacci(u, v, w, 0, 1, u);
    Rational target = ctx.seq(a_spec).term(n);
    return settle_bell_inverse(ctx, std::move(rep), b_spec, n, target);
}

VerifyReport check_thm_bell_lstep(EngineContext& ctx, std::size_t l, long n) {
    VerifyReport rep = base_report(IdentityId::thm_bell_lstep, Variant::as_stated,
                                   {{"l", Rational(static_cast<long>(l))}, {"n", Rational(n)}});
    if (l < 2) return skipped(std::move(rep), "step count must be at least 2");
    if (n < 1) return skipped(std::move(rep), "degree n must be at least 1");
    RecurrenceSpec f_spec = make_lstep(l);
    RecurrenceSpec g_spec = make_lstep_companion(l);
    Rational target = ctx.seq(f_spec).term(n + 1);
    return settle_bell_routes(ctx, std::move(rep), g_spec, n, target);
}

VerifyReport check_cor_bell_lstep_inv(EngineContext& ctx, std::size_t l, long n) {
    VerifyReport rep = base_report(IdentityId::cor_bell_lstep_inv, Variant::as_stated,
                                   {{"l", Rational(static_cast<long>(l))}, {"n", Rational(n)}});
    if (l < 2) return skipped(std::move(rep), "step count must be at least 2");
    if (n < 1) return skipped(std::move(rep), "index n must be at least 1");
    RecurrenceSpec f_spec = make_lstep(l);
    RecurrenceSpec g_spec = make_lstep_companion(l);
    Rational target = ctx.seq(g_spec).term(n);
    return settle_bell_inverse(ctx, std::move(rep), f_spec, n, target);
}

DetRep det_rep_t2n1(EngineContext& ctx, const Rational& u, const Rational& v, const Rational& w,
                    long n) {
    if (n < 1) throw domain_error("matrix size n must be at least 1");
    SequenceHandle& t = ctx.seq(base_spec(u, v, w));
    Rational det = det_t2n1_value(ctx, u, v, w, static_cast<std::size_t>(n));
    return {std::move(det), t.term(2 * n + 1)};
}

DetRep det_rep_cor_t2n1(EngineContext& ctx, const Rational& u, const Rational& v,
                        const Rational& w, long n) {
    if (n < 1) throw domain_error("matrix size n must be at least 1");
    const auto nu = static_cast<std::size_t>(n);
    Rational expected = ctx.rseq(u, v, w).term(nu);
    if (n % 2 != 0) expected = -expected;
    return {det_cor_t2n1_value(ctx, u, v, w, nu), std::move(expected)};
}

DetRep det_rep_bell_tribo(EngineContext& ctx, const Rational& u, const Rational& v,
                          const Rational& w, long n) {
    if (n < 1) throw domain_error("degree n must be at least 1");
    RecurrenceSpec a_spec = make_tribonacci(u, v, w, 3, u, u * u + 2 * v);
    RecurrenceSpec b_spec = make_tribonacci(u, v, w, 0, 1, u);
    Rational det = bell_det_route(ctx, a_spec, static_cast<std::size_t>(n));
    return {std::move(det), ctx.seq(b_spec).term(n + 1)};
}

DetRep det_rep_bell_lstep(EngineContext& ctx, std::size_t l, long n) {
    if (l < 2) throw domain_error("step count must be at least 2");
    if (n < 1) throw domain_error("degree n must be at least 1");
    Rational det = bell_det_route(ctx, make_lstep_companion(l), static_cast<std::size_t>(n));
    return {std::move(det), ctx.seq(make_lstep(l)).term(n + 1)};
}

} // namespace tribell
