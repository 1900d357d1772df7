#include "tribell/grid.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "tribell/version.hpp"

namespace tribell {

namespace {

// Coefficient counts for the generating-function sweeps (one report per
// grid point covering this many series coefficients).
constexpr std::size_t kGfSweepCoeffs = 32;
// Size cap for the per-point Cameron determinants.
constexpr long kCameronMaxN = 20;
// Bell degrees beyond this are exact but slow; the default grid stops here.
constexpr long kBellMaxN = 40;

IntRange clamp_lo(IntRange r, long lo) {
    r.lo = std::max(r.lo, lo);
    return r;
}

IntRange clamp_hi(IntRange r, long hi) {
    r.hi = std::min(r.hi, hi);
    return r;
}

struct Sink {
    std::vector<VerifyReport>& main;
    std::vector<VerifyReport>& info;
};

void run_variants(const GridConfig& cfg, Sink sink, IdentityId id, EngineContext& ctx,
                  const Rational& u, const Rational& v, const Rational& w, long n, long ki) {
    auto call = [&](Variant variant) {
        return id == IdentityId::theorem1 ? check_theorem1(ctx, u, v, w, n, ki, variant)
                                          : check_theorem2(ctx, u, v, w, n, ki, variant);
    };
    if (cfg.policy == VariantPolicy::as_stated_only) {
        sink.main.push_back(call(Variant::as_stated));
        return;
    }
    sink.main.push_back(call(Variant::derivation_consistent));
    sink.info.push_back(call(Variant::as_stated));
}

void generate_for(IdentityId id, const GridConfig& cfg,
                  const std::vector<std::array<Rational, 3>>& pts, EngineContext& ctx, Sink sink) {
    switch (id) {
        case IdentityId::q_det_3x3: {
            for (long n = cfg.n.lo; n <= cfg.n.hi; ++n) sink.main.push_back(check_q_det(ctx, n));
            break;
        }
        case IdentityId::addition_formula: {
            for (long m = cfg.n.lo; m <= cfg.n.hi; ++m)
                for (long n = cfg.n.lo; n <= cfg.n.hi; ++n)
                    sink.main.push_back(check_addition(ctx, m, n));
            break;
        }
        case IdentityId::theorem1:
        case IdentityId::theorem2: {
            const IntRange outer = clamp_lo(id == IdentityId::theorem1 ? cfg.k : cfg.i, 0);
            for (const auto& p : pts)
                for (long ki = outer.lo; ki <= outer.hi; ++ki) {
                    const IntRange nr = clamp_lo(cfg.n, 2 * ki);
                    for (long n = nr.lo; n <= nr.hi; ++n)
                        run_variants(cfg, sink, id, ctx, p[0], p[1], p[2], n, ki);
                }
            break;
        }
        case IdentityId::cor3_binom_inv: {
            const IntRange jr = clamp_lo(cfg.k, 0);
            for (long j = jr.lo; j <= jr.hi; ++j) sink.main.push_back(check_cor3(ctx, j));
            break;
        }
        case IdentityId::cor4_cramer: {
            const IntRange kr = clamp_lo(cfg.k, 0);
            for (long k = kr.lo; k <= kr.hi; ++k) {
                const IntRange ir = clamp_hi(clamp_lo(cfg.i, 0), k);
                const IntRange nr = clamp_hi(clamp_lo(cfg.n, 2 * k), 2 * k + 6);
                for (long i = ir.lo; i <= ir.hi; ++i)
                    for (long n = nr.lo; n <= nr.hi; ++n)
                        sink.main.push_back(check_cor4_cramer(ctx, n, k, i));
            }
            break;
        }
        case IdentityId::thm_det_t2n1: {
            const IntRange nr = clamp_lo(cfg.n, 1);
            for (const auto& p : pts)
                for (long n = nr.lo; n <= nr.hi; ++n)
                    sink.main.push_back(check_thm_det_t2n1(ctx, p[0], p[1], p[2], n));
            break;
        }
        case IdentityId::cor_det_t2n1: {
            const IntRange nr = clamp_lo(cfg.n, 1);
            for (const auto& p : pts)
                for (long n = nr.lo; n <= nr.hi; ++n)
                    sink.main.push_back(check_cor_det_t2n1(ctx, p[0], p[1], p[2], n));
            break;
        }
        case IdentityId::lemma_rel_2step: {
            const IntRange nr = clamp_lo(cfg.n, 6);
            for (const auto& p : pts)
                for (long n = nr.lo; n <= nr.hi; ++n)
                    sink.main.push_back(check_lemma_rel2step(ctx, p[0], p[1], p[2], n));
            break;
        }
        case IdentityId::lemma_gf_odd: {
            for (const auto& p : pts)
                sink.main.push_back(check_lemma_gf_odd(ctx, p[0], p[1], p[2], kGfSweepCoeffs));
            break;
        }
        case IdentityId::lemma_gf_recip: {
            for (const auto& p : pts)
                sink.main.push_back(check_lemma_gf_recip(ctx, p[0], p[1], p[2], kGfSweepCoeffs));
            break;
        }
        case IdentityId::r_recurrence: {
            const auto nmax = static_cast<std::size_t>(std::max<long>(3, cfg.n.hi));
            for (const auto& p : pts)
                sink.main.push_back(check_r_recurrence(ctx, p[0], p[1], p[2], nmax));
            break;
        }
        case IdentityId::lemma_cameron: {
            const IntRange nr = clamp_hi(clamp_lo(cfg.n, 1), kCameronMaxN);
            for (const auto& p : pts) {
                if (nr.lo > nr.hi) break;
                std::vector<Rational> x{p[0], p[1], p[2]};
                x.resize(std::max<std::size_t>(3, static_cast<std::size_t>(nr.hi)), Rational(0));
                for (long n = nr.lo; n <= nr.hi; ++n) {
                    VerifyReport rep = check_lemma_cameron(ctx, x, static_cast<std::size_t>(n));
                    // The grid instantiates x from the coefficient point.
                    rep.params.insert(rep.params.begin(),
                                      {{"u", p[0]}, {"v", p[1]}, {"w", p[2]}});
                    sink.main.push_back(std::move(rep));
                }
            }
            break;
        }
        case IdentityId::thm_bell_tribo: {
            const IntRange nr = clamp_hi(clamp_lo(cfg.n, 1), kBellMaxN);
            for (const auto& p : pts)
                for (long n = nr.lo; n <= nr.hi; ++n)
                    sink.main.push_back(check_thm_bell_tribo(ctx, p[0], p[1], p[2], n));
            break;
        }
        case IdentityId::cor_bell_tribo_inv: {
            const IntRange nr = clamp_hi(clamp_lo(cfg.n, 1), kBellMaxN);
            for (const auto& p : pts)
                for (long n = nr.lo; n <= nr.hi; ++n)
                    sink.main.push_back(check_cor_bell_tribo_inv(ctx, p[0], p[1], p[2], n));
            break;
        }
        case IdentityId::thm_bell_lstep: {
            const IntRange lr = clamp_lo(cfg.l, 2);
            const IntRange nr = clamp_hi(clamp_lo(cfg.n, 1), kBellMaxN);
            for (long l = lr.lo; l <= lr.hi; ++l)
                for (long n = nr.lo; n <= nr.hi; ++n)
                    sink.main.push_back(
                        check_thm_bell_lstep(ctx, static_cast<std::size_t>(l), n));
            break;
        }
        case IdentityId::cor_bell_lstep_inv: {
            const IntRange lr = clamp_lo(cfg.l, 2);
            const IntRange nr = clamp_hi(clamp_lo(cfg.n, 1), kBellMaxN);
            for (long l = lr.lo; l <= lr.hi; ++l)
                for (long n = nr.lo; n <= nr.hi; ++n)
                    sink.main.push_back(
                        check_cor_bell_lstep_inv(ctx, static_cast<std::size_t>(l), n));
            break;
        }
    }
}

std::vector<IdentityId> selected_suites(const GridConfig& cfg) {
    std::set<IdentityId> wanted(cfg.suites.begin(), cfg.suites.end());
    std::vector<IdentityId> out;
    for (IdentityId id : identity_catalog())
        if (wanted.count(id)) out.push_back(id);
    return out;
}

} // namespace

const char* to_string(VariantPolicy p) {
    switch (p) {
        case VariantPolicy::default_policy: return "default";
        case VariantPolicy::as_stated_only: return "as_stated_only";
        case VariantPolicy::both: return "both";
    }
    return "?";
}

std::optional<VariantPolicy> variant_policy_from_string(std::string_view name) {
    if (name == "default") return VariantPolicy::default_policy;
    if (name == "as_stated_only" || name == "as-stated-only") return VariantPolicy::as_stated_only;
    if (name == "both") return VariantPolicy::both;
    return std::nullopt;
}

const char* to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::human: return "human";
    }
    return "?";
}

std::optional<OutputFormat> output_format_from_string(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "human") return OutputFormat::human;
    return std::nullopt;
}

const std::vector<Rational>& default_coefficient_axis() {
    static const std::vector<Rational> axis = [] {
        std::vector<Rational> a;
        for (long x = -2; x <= 3; ++x) a.emplace_back(x);
        return a;
    }();
    return axis;
}

std::vector<std::array<Rational, 3>> coefficient_points(const GridConfig& config) {
    std::vector<std::array<Rational, 3>> pts;
    if (config.points) {
        for (const auto& p : *config.points) {
            if (p[0] == 0 && p[1] == 0 && p[2] == 0)
                throw domain_error("coefficient point (0,0,0) is not a valid recurrence");
            pts.push_back(p);
        }
        return pts;
    }
    pts.reserve(config.grid_u.size() * config.grid_v.size() * config.grid_w.size());
    for (const Rational& u : config.grid_u)
        for (const Rational& v : config.grid_v)
            for (const Rational& w : config.grid_w) {
                if (u == 0 && v == 0 && w == 0) continue;
                pts.push_back({u, v, w});
            }
    return pts;
}

ReportDocument run_grid(const GridConfig& config) {
    ReportDocument doc;
    doc.tool_version = kVersion;
    doc.config = config;
    const std::vector<std::array<Rational, 3>> pts = coefficient_points(config);
    const std::vector<IdentityId> suites = selected_suites(config);

    if (config.threads > 1 && suites.size() > 1) {
        using Chunk = std::pair<std::vector<VerifyReport>, std::vector<VerifyReport>>;
        std::vector<std::future<Chunk>> futures;
        futures.reserve(suites.size());
        for (IdentityId id : suites) {
            futures.push_back(std::async(std::launch::async, [id, &config, &pts] {
                Chunk chunk;
                EngineContext ctx;
                generate_for(id, config, pts, ctx, Sink{chunk.first, chunk.second});
                return chunk;
            }));
        }
        for (auto& f : futures) {
            Chunk chunk = f.get();
            std::move(chunk.first.begin(), chunk.first.end(), std::back_inserter(doc.reports));
            std::move(chunk.second.begin(), chunk.second.end(),
                      std::back_inserter(doc.informational));
        }
    } else {
        EngineContext ctx;
        for (IdentityId id : suites)
            generate_for(id, config, pts, ctx, Sink{doc.reports, doc.informational});
    }
    return doc;
}

SummaryCounts summarize(const std::vector<VerifyReport>& reports) {
    SummaryCounts counts;
    for (const VerifyReport& rep : reports) ++counts[to_string(rep.id)][to_string(rep.status)];
    return counts;
}

bool has_counterexample(const std::vector<VerifyReport>& reports) {
    return std::any_of(reports.begin(), reports.end(), [](const VerifyReport& r) {
        return r.status == CheckStatus::counterexample;
    });
}

int exit_code_for(const ReportDocument& doc) {
    if (has_counterexample(doc.reports)) return 1;
    if (doc.config.strict_as_stated && has_counterexample(doc.informational)) return 1;
    return 0;
}

} // namespace tribell
