#pragma once

// Identity checkers over the generalized order-3 sequences T^{(u,v,w)}
// with initials (0, 1, 1) (written T below), their companion values, and
// the l-step family. Each checker evaluates both sides of one identity
// instance with exact arithmetic and reports verified / counterexample /
// skipped_precondition. Checkers never fabricate agreement: when a stated
// form is undefined at a point (division by zero scale factors, negative
// indices with no backward extension) they skip, and when a stated form is
// simply false they report the counterexample.
//
// Two identities carry textual-variant ambiguity; for those a Variant
// selects between the literal statement (as_stated) and the form the
// derivation actually proves (derivation_consistent). Everywhere else the
// variant parameter is absent.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tribell/rational.hpp"
#include "tribell/sequences.hpp"
#include "tribell/series.hpp"

namespace tribell {

enum class IdentityId {
    addition_formula,
    cor3_binom_inv,
    cor4_cramer,
    cor_bell_lstep_inv,
    cor_bell_tribo_inv,
    cor_det_t2n1,
    lemma_cameron,
    lemma_gf_odd,
    lemma_gf_recip,
    lemma_rel_2step,
    q_det_3x3,
    r_recurrence,
    theorem1,
    theorem2,
    thm_bell_lstep,
    thm_bell_tribo,
    thm_det_t2n1,
};

const char* to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

// All identities, sorted by name; the grid runner iterates in this order.
const std::vector<IdentityId>& identity_catalog();

enum class Variant { as_stated, derivation_consistent };
const char* to_string(Variant v);

// theorem1 and theorem2 are the two with adjudicated textual variants.
bool identity_has_variants(IdentityId id);

enum class CheckStatus { verified, counterexample, skipped_precondition };
const char* to_string(CheckStatus s);

struct VerifyReport {
    IdentityId id{};
    Variant variant = Variant::derivation_consistent;
    // Ordered (name, value) pairs; order is part of the stable output.
    std::vector<std::pair<std::string, Rational>> params;
    CheckStatus status = CheckStatus::verified;
    std::optional<Rational> lhs; // populated on counterexample
    std::optional<Rational> rhs;
    std::string note;
};

// Memoized r-sequence attached to a coefficient point (u, v, w): the
// reciprocal of the odd-index generating function, computed from closed
// seeds plus its own order-2 recurrence
//   r_1 = -(u + v)
//   r_2 = u^2 - u^3 - u^2 v - u w - w
//   r_3 = D1 r_2 + D2 r_1 - w^2
//   r_n = D1 r_{n-1} + D2 r_{n-2}       (n >= 4)
// with D1 = u^2 - u + v, D2 = w (u - 1). Deliberately not evaluated via
// the cubic's roots; exact rational arithmetic only.
class RSequenceState {
public:
    RSequenceState(const Rational& u, const Rational& v, const Rational& w);

    const Rational& term(std::size_t n); // n >= 1

private:
    Rational d1_, d2_;
    std::deque<Rational> r_; // r_1, r_2, ...
};

// Per-worker memo pools: sequence handles keyed by recurrence spec,
// r-sequences keyed by coefficient point, Bell argument tables and
// exponential series keyed by the source sequence. Not thread-safe;
// run_grid gives each worker its own context.
class EngineContext {
public:
    SequenceHandle& seq(const RecurrenceSpec& spec);
    RSequenceState& rseq(const Rational& u, const Rational& v, const Rational& w);

    // Y_0..Y_n of the arguments x_m = (m-1)! * A_m for the sequence A
    // described by spec (table grows monotonically, reused across n).
    const std::vector<Rational>& bell_table(const RecurrenceSpec& spec, std::size_t n);

    // exp(sum_{m>=1} A_m t^m / m) to at least the given order.
    const SeriesTrunc& bell_exp_series(const RecurrenceSpec& spec, std::size_t order);

private:
    struct BellPool {
        std::vector<Rational> xs;  // x_m = (m-1)! A_m
        std::vector<Rational> table;
        std::unique_ptr<SeriesTrunc> exp_series;
    };
    std::map<std::string, std::unique_ptr<SequenceHandle>> seqs_;
    std::map<std::string, std::unique_ptr<RSequenceState>> rseqs_;
    std::map<std::string, BellPool> bells_;
};

// Convenience entry point mirroring RSequenceState::term.
Rational r_sequence(EngineContext& ctx, const Rational& u, const Rational& v, const Rational& w,
                    std::size_t n);

// --- individual checkers -------------------------------------------------
// Classical means (u, v, w) = (1, 1, 1), initials (0, 1, 1).

// det [[T_{n+2}, T_{n+1}, T_n], [T_{n+1}, T_n, T_{n-1}], [T_n, T_{n-1}, T_{n-2}]] = -1
// for the classical sequence, any n (negative indices extend backwards).
VerifyReport check_q_det(EngineContext& ctx, long n);

// T_{m+n} = T_{m+1} T_n + T_m (T_{n-1} + T_{n-2}) + T_{m-1} T_{n-1}, classical.
VerifyReport check_addition(EngineContext& ctx, long m, long n);

// T_{n+k} as a double binomial sum over T_{n-i-j}.
//   derivation_consistent: sum C(k,i) C(i,j) u^{k-i} v^{i-j} w^j T_{n-i-j}
//   as_stated:             sum C(k,i) C(i,j) (u v)^i (w/v)^j T_{n-i-j}
// as_stated needs v != 0; n < 2k needs w != 0 (backward extension).
VerifyReport check_theorem1(EngineContext& ctx, const Rational& u, const Rational& v,
                            const Rational& w, long n, long k, Variant variant);

// Inverse-transform companion of theorem1.
//   derivation_consistent (polynomial in u, v, w; no divisions):
//     sum_t (-1)^{i-t} C(i,t) u^{i-t} T_{n+t} = sum_t C(i,t) v^{i-t} w^t T_{n-i-t}
//   as_stated (the printed box, alpha = u v, beta = w / v, constant
//   summand T_{n+i}):
//     alpha^{-i} sum_t (-1)^{i-t} C(i,t) T_{n+i} = sum_t C(i,t) beta^t T_{n-i-t}
// as_stated needs u v != 0 when i >= 1; n < 2i needs w != 0 either way.
VerifyReport check_theorem2(EngineContext& ctx, const Rational& u, const Rational& v,
                            const Rational& w, long n, long i, Variant variant);

// Classical binomial inversion pair: checks both displayed forms of T_j
// recovered from the double sums over T_{2u+t}. Accepts only as_stated
// (no adjudicated second form).
VerifyReport check_cor3(EngineContext& ctx, long j, Variant variant = Variant::as_stated);

// Classical Cramer solution: x_i = sum_j C(i,j) T_{n-i-j} equals the signed
// determinant of the Pascal matrix with column i replaced (and the
// column-swapped form with its extra (-1)^i).
VerifyReport check_cor4_cramer(EngineContext& ctx, long n, long k, long i);

// det of the n x n Hessenberg matrix H(p,q) = (-1)^{p-q+1} r_{p-q+1}
// (diagonal -r_1), superdiagonal 1, equals T_{2n+1}.
VerifyReport check_thm_det_t2n1(EngineContext& ctx, const Rational& u, const Rational& v,
                                const Rational& w, long n);

// det of H(p,q) = T_{2(p-q)+3}, superdiagonal 1, equals (-1)^n r_n.
VerifyReport check_cor_det_t2n1(EngineContext& ctx, const Rational& u, const Rational& v,
                                const Rational& w, long n);

// T_n = (u^2 + 2v) T_{n-2} - (v^2 - 2uw) T_{n-4} + w^2 T_{n-6}, n >= 6.
VerifyReport check_lemma_rel2step(EngineContext& ctx, const Rational& u, const Rational& v,
                                  const Rational& w, long n);

// First ncoeff coefficients of the closed-form odd-index generating
// function against sequence terms T_{2m+1}. One report per point.
VerifyReport check_lemma_gf_odd(EngineContext& ctx, const Rational& u, const Rational& v,
                                const Rational& w, std::size_t ncoeff);

// recip(sum T_{2m+1} t^m) has coefficients 1, r_1, r_2, ...; one report.
VerifyReport check_lemma_gf_recip(EngineContext& ctx, const Rational& u, const Rational& v,
                                  const Rational& w, std::size_t ncoeff);

// Seed r_3 and the order-2 recurrence closure up to nmax; one report.
VerifyReport check_r_recurrence(EngineContext& ctx, const Rational& u, const Rational& v,
                                const Rational& w, std::size_t nmax);

// z_n from the series definition equals the n x n determinant with
// H(p,q) = (-1)^{p-q} x_{p-q+1}, superdiagonal 1. Requires n <= x.size().
VerifyReport check_lemma_cameron(EngineContext& ctx, const std::vector<Rational>& x, std::size_t n);

// Three-route Bell evaluation (convolution, determinant/n!, exp-series
// coefficient) of Y_n over x_m = (m-1)! A_m with A = (u,v,w; 3, u, u^2+2v),
// all equal to B_{n+1} where B = (u,v,w; 0, 1, u).
VerifyReport check_thm_bell_tribo(EngineContext& ctx, const Rational& u, const Rational& v,
                                  const Rational& w, long n);

// Inverse direction: A_n = (-1)^{n-1} det(G), G(p,1) = p B_{p+1},
// G(p,q) = B_{p-q+2}, superdiagonal 1.
VerifyReport check_cor_bell_tribo_inv(EngineContext& ctx, const Rational& u, const Rational& v,
                                      const Rational& w, long n);

// l-step analogue of the three-route check: F_{n+1} from the companion
// values (F the l-step sequence, companion a_0 = l, a_j = 2^j - 1).
VerifyReport check_thm_bell_lstep(EngineContext& ctx, std::size_t l, long n);

// Inverse direction for the l-step family.
VerifyReport check_cor_bell_lstep_inv(EngineContext& ctx, std::size_t l, long n);

// Determinant representations fronted by the det command: the
// determinant-route value alongside the sequence value it represents.
struct DetRep {
    Rational det;
    Rational expected;
};

DetRep det_rep_t2n1(EngineContext& ctx, const Rational& u, const Rational& v, const Rational& w,
                    long n);
DetRep det_rep_cor_t2n1(EngineContext& ctx, const Rational& u, const Rational& v, const Rational& w,
                        long n);
DetRep det_rep_bell_tribo(EngineContext& ctx, const Rational& u, const Rational& v,
                          const Rational& w, long n);
DetRep det_rep_bell_lstep(EngineContext& ctx, std::size_t l, long n);

} // namespace tribell
