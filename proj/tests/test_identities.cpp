#include <doctest.h>

#include "tribell/error.hpp"
#include "tribell/identities.hpp"
#include "tribell/sequences.hpp"
#include "tribell/series.hpp"

using namespace tribell;

namespace {

Rational param(const VerifyReport& rep, const std::string& name) {
    for (const auto& [key, value] : rep.params)
        if (key == name) return value;
    FAIL("missing param ", name);
    return Rational(0);
}

} // namespace

TEST_CASE("identity catalog is the sorted name list") {
    const auto& cat = identity_catalog();
    CHECK(cat.size() == 17);
    for (std::size_t i = 0; i + 1 < cat.size(); ++i)
        CHECK(std::string(to_string(cat[i])) < to_string(cat[i + 1]));
    for (IdentityId id : cat) {
        auto round = identity_from_string(to_string(id));
        REQUIRE(round.has_value());
        CHECK(*round == id);
    }
    CHECK(!identity_from_string("nope").has_value());
    CHECK(identity_has_variants(IdentityId::theorem1));
    CHECK(identity_has_variants(IdentityId::theorem2));
    CHECK(!identity_has_variants(IdentityId::q_det_3x3));
}

TEST_CASE("three-term quadratic determinant") {
    EngineContext ctx;
    for (long n : {1L, 2L, 3L, 5L, 10L, 17L}) {
        VerifyReport rep = check_q_det(ctx, n);
        CHECK(rep.status == CheckStatus::verified);
        CHECK(param(rep, "n") == n);
    }
    // Backward-extended terms keep the determinant at -1.
    CHECK(check_q_det(ctx, 0).status == CheckStatus::verified);
    CHECK(check_q_det(ctx, -3).status == CheckStatus::verified);
}

TEST_CASE("addition formula") {
    EngineContext ctx;
    for (long m : {1L, 2L, 3L, 7L})
        for (long n : {2L, 3L, 4L, 9L})
            CHECK(check_addition(ctx, m, n).status == CheckStatus::verified);
}

TEST_CASE("power-sum expansion variants") {
    EngineContext ctx;

    // Derivation-consistent form holds everywhere on the grid.
    for (long k : {0L, 1L, 2L, 3L})
        for (long n = 2 * k; n <= 2 * k + 4; ++n) {
            CHECK(check_theorem1(ctx, 1, 1, 1, n, k, Variant::derivation_consistent).status ==
                  CheckStatus::verified);
            CHECK(check_theorem1(ctx, 2, 1, 1, n, k, Variant::derivation_consistent).status ==
                  CheckStatus::verified);
            CHECK(check_theorem1(ctx, 2, 0, 1, n, k, Variant::derivation_consistent).status ==
                  CheckStatus::verified);
        }

    // At u = 1 the as-stated exponents collapse to the derivation.
    for (long k : {0L, 1L, 2L, 3L})
        for (long n = 2 * k; n <= 2 * k + 4; ++n)
            CHECK(check_theorem1(ctx, 1, 1, 1, n, k, Variant::as_stated).status ==
                  CheckStatus::verified);

    // Frozen counterexample: (2,1,1), n=3, k=1 gives RHS 7 against T_4 = 8.
    VerifyReport bad = check_theorem1(ctx, 2, 1, 1, 3, 1, Variant::as_stated);
    CHECK(bad.status == CheckStatus::counterexample);
    CHECK(*bad.lhs == 8);
    CHECK(*bad.rhs == 7);

    // v = 0 leaves the as-stated scale w/v undefined.
    CHECK(check_theorem1(ctx, 2, 0, 1, 5, 1, Variant::as_stated).status ==
          CheckStatus::skipped_precondition);
    // k < 0 is out of range for both variants.
    CHECK(check_theorem1(ctx, 2, 1, 1, 3, -1, Variant::derivation_consistent).status ==
          CheckStatus::skipped_precondition);
}

TEST_CASE("power-sum expansion below the classical index floor") {
    EngineContext ctx;
    // With w != 0 the identity extends backward through negative indices.
    for (long k : {2L, 3L, 4L})
        for (long n = 0; n < 2 * k; ++n) {
            CHECK(check_theorem1(ctx, 1, 1, 1, n, k, Variant::derivation_consistent).status ==
                  CheckStatus::verified);
            CHECK(check_theorem1(ctx, 2, 1, 1, n, k, Variant::derivation_consistent).status ==
                  CheckStatus::verified);
        }
    // w = 0 blocks backward extension; those points are skipped.
    CHECK(check_theorem1(ctx, 1, 1, 0, 1, 2, Variant::derivation_consistent).status ==
          CheckStatus::skipped_precondition);
    CHECK(check_theorem1(ctx, 1, 1, 0, 4, 2, Variant::derivation_consistent).status ==
          CheckStatus::verified);
}

TEST_CASE("shift expansion variants") {
    EngineContext ctx;

    for (long i : {0L, 1L, 2L, 3L})
        for (long n = 2 * i; n <= 2 * i + 4; ++n)
            for (long u : {1L, 2L})
                CHECK(check_theorem2(ctx, u, 1, 1, n, i, Variant::derivation_consistent).status ==
                      CheckStatus::verified);

    // The boxed as-stated form telescopes to zero on the left for i >= 1;
    // the right side is generically nonzero.
    VerifyReport bad = check_theorem2(ctx, 1, 1, 1, 3, 1, Variant::as_stated);
    CHECK(bad.status == CheckStatus::counterexample);
    CHECK(*bad.lhs == 0);
    CHECK(*bad.rhs == 2); // T_2 + (w/v) T_1 = 1 + 1

    // i = 0 degenerates to T_n = T_n in both variants.
    CHECK(check_theorem2(ctx, 2, 1, 1, 5, 0, Variant::as_stated).status ==
          CheckStatus::verified);
    CHECK(check_theorem2(ctx, 0, 1, 1, 5, 0, Variant::as_stated).status ==
          CheckStatus::verified);

    // uv = 0 with i >= 1 leaves the as-stated scale undefined.
    CHECK(check_theorem2(ctx, 0, 1, 1, 4, 1, Variant::as_stated).status ==
          CheckStatus::skipped_precondition);
    CHECK(check_theorem2(ctx, 1, 0, 1, 4, 1, Variant::as_stated).status ==
          CheckStatus::skipped_precondition);
}

TEST_CASE("binomial double-sum collapse") {
    EngineContext ctx;
    for (long j = 0; j <= 9; ++j) CHECK(check_cor3(ctx, j).status == CheckStatus::verified);
    CHECK(check_cor3(ctx, -1).status == CheckStatus::skipped_precondition);
    // Only the as-stated reading exists for this corollary.
    CHECK_THROWS_AS(check_cor3(ctx, 2, Variant::derivation_consistent), domain_error);
}

TEST_CASE("linear-system solution via determinants") {
    EngineContext ctx;
    for (long k : {0L, 1L, 2L, 3L, 4L})
        for (long i = 0; i <= k; ++i)
            for (long n = 2 * k; n <= 2 * k + 3; ++n)
                CHECK(check_cor4_cramer(ctx, n, k, i).status == CheckStatus::verified);
    CHECK(check_cor4_cramer(ctx, 6, 2, 3).status == CheckStatus::skipped_precondition);
    CHECK(check_cor4_cramer(ctx, 6, 2, -1).status == CheckStatus::skipped_precondition);
}

TEST_CASE("odd-index determinant representation") {
    EngineContext ctx;
    for (long n = 1; n <= 12; ++n) {
        CHECK(check_thm_det_t2n1(ctx, 1, 1, 1, n).status == CheckStatus::verified);
        CHECK(check_thm_det_t2n1(ctx, 2, 1, 1, n).status == CheckStatus::verified);
        CHECK(check_thm_det_t2n1(ctx, 1, 0, 1, n).status == CheckStatus::verified);
        CHECK(check_thm_det_t2n1(ctx, rat(1, 2), rat(-2, 3), 1, n).status ==
              CheckStatus::verified);
    }
    CHECK(check_thm_det_t2n1(ctx, 1, 1, 1, 0).status == CheckStatus::skipped_precondition);

    // Frozen 2x2 instance at (2,1,1): det [[3,1],[-11,3]] = 20 = T_5.
    DetRep rep = det_rep_t2n1(ctx, 2, 1, 1, 2);
    CHECK(rep.det == 20);
    CHECK(rep.expected == 20);
}

TEST_CASE("reciprocal-coefficient determinant representation") {
    EngineContext ctx;
    for (long n = 1; n <= 12; ++n)
        for (long u : {1L, 2L})
            CHECK(check_cor_det_t2n1(ctx, u, 1, 1, n).status == CheckStatus::verified);

    // Classical values: 2, -3, then 4 * (-1)^{n-1}.
    CHECK(det_rep_cor_t2n1(ctx, 1, 1, 1, 1).det == 2);
    CHECK(det_rep_cor_t2n1(ctx, 1, 1, 1, 2).det == -3);
    for (long n = 3; n <= 9; ++n) {
        const Rational got = det_rep_cor_t2n1(ctx, 1, 1, 1, n).det;
        CHECK(got == (n % 2 == 0 ? -4 : 4));
    }
    // (2,1,1), n=3: -r_3 = 37.
    CHECK(det_rep_cor_t2n1(ctx, 2, 1, 1, 3).det == 37);
}

TEST_CASE("bisection relation") {
    EngineContext ctx;
    for (long n = 6; n <= 20; ++n) {
        CHECK(check_lemma_rel2step(ctx, 1, 1, 1, n).status == CheckStatus::verified);
        CHECK(check_lemma_rel2step(ctx, 3, rat(1, 2), -2, n).status == CheckStatus::verified);
    }
    CHECK(check_lemma_rel2step(ctx, 1, 1, 1, 5).status == CheckStatus::skipped_precondition);
}

TEST_CASE("odd-index generating function identity") {
    EngineContext ctx;
    CHECK(check_lemma_gf_odd(ctx, 1, 1, 1, 24).status == CheckStatus::verified);
    CHECK(check_lemma_gf_odd(ctx, 2, 1, 1, 24).status == CheckStatus::verified);
    CHECK(check_lemma_gf_odd(ctx, -2, 3, rat(1, 2), 16).status == CheckStatus::verified);
    CHECK(check_lemma_gf_odd(ctx, 1, 1, 1, 0).status == CheckStatus::skipped_precondition);
}

TEST_CASE("reciprocal series matches the r closed forms") {
    EngineContext ctx;
    CHECK(check_lemma_gf_recip(ctx, 1, 1, 1, 32).status == CheckStatus::verified);
    CHECK(check_lemma_gf_recip(ctx, 2, 1, 1, 32).status == CheckStatus::verified);
    CHECK(check_lemma_gf_recip(ctx, 0, -1, 3, 32).status == CheckStatus::verified);
    CHECK(check_lemma_gf_recip(ctx, 1, 1, 1, 1).status == CheckStatus::skipped_precondition);
}

TEST_CASE("r-sequence seeds and recurrence closure") {
    EngineContext ctx;
    // Classical: -2, -3, -4, -4, ...
    CHECK(r_sequence(ctx, 1, 1, 1, 1) == -2);
    CHECK(r_sequence(ctx, 1, 1, 1, 2) == -3);
    CHECK(r_sequence(ctx, 1, 1, 1, 3) == -4);
    CHECK(r_sequence(ctx, 1, 1, 1, 4) == -4);
    CHECK(r_sequence(ctx, 1, 1, 1, 9) == -4);
    // (2,1,1): -3, -11, -37 with D1 = 3, D2 = 1.
    CHECK(r_sequence(ctx, 2, 1, 1, 1) == -3);
    CHECK(r_sequence(ctx, 2, 1, 1, 2) == -11);
    CHECK(r_sequence(ctx, 2, 1, 1, 3) == -37);
    CHECK(r_sequence(ctx, 2, 1, 1, 4) == -122); // D1 r_3 + D2 r_2 = 3(-37) + (-11)

    for (auto [u, v, w] : {std::array<long, 3>{1, 1, 1}, {2, 1, 1}, {0, 1, 1}, {-1, 2, -3}})
        CHECK(check_r_recurrence(ctx, u, v, w, 24).status == CheckStatus::verified);
    CHECK(check_r_recurrence(ctx, 1, 1, 1, 2).status == CheckStatus::skipped_precondition);

    // Independent route: the reciprocal of the odd-index series.
    SequenceHandle t(make_tribonacci(1, 1, 1, 0, 1, 1));
    std::vector<Rational> odd;
    for (long m = 0; m < 32; ++m) odd.push_back(t.term(2 * m + 1));
    SeriesTrunc rec = series_recip(SeriesTrunc(std::move(odd)));
    for (std::size_t m = 1; m < 32; ++m) CHECK(rec[m] == r_sequence(ctx, 1, 1, 1, m));
}

TEST_CASE("inverted-series determinant identity") {
    EngineContext ctx;
    std::vector<Rational> xs{Rational(1), Rational(1), Rational(1), Rational(0), Rational(2)};
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(check_lemma_cameron(ctx, xs, n).status == CheckStatus::verified);
    CHECK(check_lemma_cameron(ctx, xs, 0).status == CheckStatus::skipped_precondition);
    CHECK_THROWS_AS(check_lemma_cameron(ctx, xs, 6), domain_error);

    // The inverse transform of the odd-index terms reproduces -r_m.
    SequenceHandle t(make_tribonacci(1, 1, 1, 0, 1, 1));
    std::vector<Rational> odd;
    for (long m = 1; m <= 10; ++m) odd.push_back(t.term(2 * m + 1));
    SeriesTrunc x = cameron_inverse(SeriesTrunc(std::move(odd)));
    for (std::size_t m = 0; m < 10; ++m)
        CHECK(x[m] == -r_sequence(ctx, 1, 1, 1, m + 1));
}

TEST_CASE("bell expansion of the companion pair") {
    EngineContext ctx;
    for (long n = 1; n <= 25; ++n)
        CHECK(check_thm_bell_tribo(ctx, 1, 1, 1, n).status == CheckStatus::verified);
    for (long u = -1; u <= 2; ++u)
        for (long v = -1; v <= 2; ++v)
            for (long w = -1; w <= 2; ++w) {
                if (u == 0 && v == 0 && w == 0) continue;
                CHECK(check_thm_bell_tribo(ctx, u, v, w, 8).status == CheckStatus::verified);
                CHECK(check_cor_bell_tribo_inv(ctx, u, v, w, 8).status == CheckStatus::verified);
            }

    // (2,1,1), n=2: A = (3, 2, 6), Y_2(3, 2)/2 = (9+2)/2... the scaled
    // arguments give B_3 = 5.
    DetRep rep = det_rep_bell_tribo(ctx, 2, 1, 1, 2);
    CHECK(rep.det == 5);
    CHECK(rep.expected == 5);
    // B_2 = u for every parameter point.
    CHECK(det_rep_bell_tribo(ctx, 7, -3, 2, 1).expected ==
          det_rep_bell_tribo(ctx, 7, -3, 2, 1).det);
}

TEST_CASE("bell expansion of the step-family pair") {
    EngineContext ctx;
    for (std::size_t l = 2; l <= 7; ++l)
        for (long n = 1; n <= 12; ++n) {
            CHECK(check_thm_bell_lstep(ctx, l, n).status == CheckStatus::verified);
            CHECK(check_cor_bell_lstep_inv(ctx, l, n).status == CheckStatus::verified);
        }
    // l=2, n=3: Y_3(1, 3, 8)/3! = 18/6 = 3 = F_4.
    DetRep rep = det_rep_bell_lstep(ctx, 2, 3);
    CHECK(rep.det == 3);
    CHECK(rep.expected == 3);
}

TEST_CASE("report parameter order is stable") {
    EngineContext ctx;
    VerifyReport rep = check_theorem1(ctx, 2, 1, 1, 3, 1, Variant::as_stated);
    REQUIRE(rep.params.size() == 5);
    CHECK(rep.params[0].first == "u");
    CHECK(rep.params[1].first == "v");
    CHECK(rep.params[2].first == "w");
    CHECK(rep.params[3].first == "n");
    CHECK(rep.params[4].first == "k");
    CHECK(to_string(rep.variant) == std::string("as_stated"));
    CHECK(to_string(rep.status) == std::string("counterexample"));
}
