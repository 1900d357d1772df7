// Command-line front end: sequence/series computation, determinant
// representations, and the grid verification harness.
//
// Exit codes: 0 success (all checks verified / values match), 1 when a
// gating check or a det representation fails, 2 on usage/config errors.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tribell/error.hpp"
#include "tribell/grid.hpp"
#include "tribell/identities.hpp"
#include "tribell/rational.hpp"
#include "tribell/report_io.hpp"
#include "tribell/sequences.hpp"
#include "tribell/series.hpp"
#include "tribell/version.hpp"

namespace {

using namespace tribell;

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(s.substr(start));
            return parts;
        }
        parts.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<Rational> parse_rational_list(const std::string& text, const char* what) {
    std::vector<Rational> vals;
    for (const std::string& tok : split(text, ',')) {
        const std::string t = trim(tok);
        if (t.empty()) throw parse_error(std::string(what) + ": empty entry in \"" + text + "\"");
        vals.push_back(parse_rational(t));
    }
    return vals;
}

long parse_long(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const long value = std::stol(text, &used);
        if (used != text.size()) throw parse_error("");
        return value;
    } catch (const std::exception&) {
        throw parse_error(std::string(what) + ": expected an integer, got \"" + text + "\"");
    }
}

IntRange parse_range_flag(const std::string& text, const char* what) {
    IntRange r;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_long(text, what);
    } else {
        r.lo = parse_long(text.substr(0, dots), what);
        r.hi = parse_long(text.substr(dots + 2), what);
    }
    if (r.lo > r.hi) throw parse_error(std::string(what) + ": range \"" + text + "\" is empty");
    return r;
}

std::array<Rational, 3> parse_uvw(const std::string& text, const char* what) {
    std::vector<Rational> vals = parse_rational_list(text, what);
    if (vals.size() != 3)
        throw parse_error(std::string(what) + ": expected three values u,v,w, got \"" + text +
                          "\"");
    return {vals[0], vals[1], vals[2]};
}

RecurrenceSpec preset_spec(const std::string& name) {
    if (name == "tribonacci") return make_tribonacci(1, 1, 1, 0, 1, 1);
    if (name == "tribonacci-lucas") return make_tribonacci(1, 1, 1, 3, 1, 3);
    if (name == "padovan") return make_tribonacci(1, 0, 1, 0, 1, 1);
    constexpr std::string_view kLstep = "lstep:";
    constexpr std::string_view kCompanion = "lstep-companion:";
    auto step_count = [](const std::string& text, std::string_view prefix) {
        const long l = parse_long(text.substr(prefix.size()), "--preset");
        if (l < 2) throw parse_error("--preset: step count must be at least 2");
        return static_cast<std::size_t>(l);
    };
    if (name.rfind(kCompanion, 0) == 0) return make_lstep_companion(step_count(name, kCompanion));
    if (name.rfind(kLstep, 0) == 0) return make_lstep(step_count(name, kLstep));
    throw parse_error("--preset: unknown preset \"" + name +
                      "\" (tribonacci, tribonacci-lucas, padovan, lstep:<l>, lstep-companion:<l>)");
}

RecurrenceSpec spec_from_flags(const std::string& preset, const std::string& coeffs,
                               const std::string& init) {
    if (!preset.empty()) {
        if (!coeffs.empty() || !init.empty())
            throw parse_error("--preset conflicts with --coeffs/--init");
        return preset_spec(preset);
    }
    if (coeffs.empty() || init.empty())
        throw parse_error("give either --preset or both --coeffs and --init");
    return RecurrenceSpec::create(parse_rational_list(coeffs, "--coeffs"),
                                  parse_rational_list(init, "--init"));
}

struct GlobalFlags {
    std::string format = "json";
    std::string output;
    int threads = 1;
    bool strict_as_stated = false;
    CLI::Option* format_opt = nullptr;
    CLI::Option* output_opt = nullptr;
    CLI::Option* threads_opt = nullptr;
    CLI::Option* strict_opt = nullptr;

    OutputFormat parsed_format() const {
        const auto f = output_format_from_string(format);
        if (!f) throw parse_error("--format: expected json, csv, or human");
        return *f;
    }
};

template <typename Fn>
void with_output_stream(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw error("cannot open output file \"" + path + "\"");
    fn(out);
    out.flush();
    if (!out) throw error("failed writing output file \"" + path + "\"");
}

// ---- seq ----

struct SeqArgs {
    std::string preset, coeffs, init;
    long from = 0;
    long to = 14;
};

void emit_terms(std::ostream& os, OutputFormat format, long from,
                const std::vector<Rational>& vals) {
    switch (format) {
        case OutputFormat::json: {
            os << '[';
            for (std::size_t i = 0; i < vals.size(); ++i) {
                if (i) os << ',';
                os << "{\"n\":" << from + static_cast<long>(i) << ",\"value\":\""
                   << to_string(vals[i]) << "\"}";
            }
            os << "]\n";
            break;
        }
        case OutputFormat::csv: {
            os << "n,value\n";
            for (std::size_t i = 0; i < vals.size(); ++i)
                os << from + static_cast<long>(i) << ',' << to_string(vals[i]) << '\n';
            break;
        }
        case OutputFormat::human: {
            for (std::size_t i = 0; i < vals.size(); ++i)
                os << "a(" << from + static_cast<long>(i) << ") = " << to_string(vals[i]) << '\n';
            break;
        }
    }
}

int run_seq(const SeqArgs& args, const GlobalFlags& g) {
    if (args.from > args.to) throw parse_error("--from must not exceed --to");
    SequenceHandle handle(spec_from_flags(args.preset, args.coeffs, args.init));
    const std::vector<Rational> vals = handle.terms(args.from, args.to);
    const OutputFormat format = g.parsed_format();
    with_output_stream(g.output,
                       [&](std::ostream& os) { emit_terms(os, format, args.from, vals); });
    return 0;
}

// ---- det ----

struct DetArgs {
    std::string rep;
    std::string uvw;
    long n = 0;
    long l = 0;
};

int run_det(const DetArgs& args, const GlobalFlags& g) {
    EngineContext ctx;
    DetRep rep;
    if (args.rep == "bell-lstep") {
        if (args.l == 0) throw parse_error("--rep bell-lstep requires --l");
        if (args.l < 2) throw parse_error("--l: step count must be at least 2");
        rep = det_rep_bell_lstep(ctx, static_cast<std::size_t>(args.l), args.n);
    } else {
        if (args.uvw.empty()) throw parse_error("--rep " + args.rep + " requires --uvw u,v,w");
        const auto p = parse_uvw(args.uvw, "--uvw");
        if (args.rep == "t2n1")
            rep = det_rep_t2n1(ctx, p[0], p[1], p[2], args.n);
        else if (args.rep == "cor-t2n1")
            rep = det_rep_cor_t2n1(ctx, p[0], p[1], p[2], args.n);
        else
            rep = det_rep_bell_tribo(ctx, p[0], p[1], p[2], args.n);
    }
    const bool match = rep.det == rep.expected;
    const OutputFormat format = g.parsed_format();
    with_output_stream(g.output, [&](std::ostream& os) {
        const char* match_text = match ? "true" : "false";
        switch (format) {
            case OutputFormat::json:
                os << "{\"n\":" << args.n << ",\"det\":\"" << to_string(rep.det)
                   << "\",\"expected\":\"" << to_string(rep.expected) << "\",\"match\":"
                   << match_text << "}\n";
                break;
            case OutputFormat::csv:
                os << "n,det,expected,match\n"
                   << args.n << ',' << to_string(rep.det) << ',' << to_string(rep.expected) << ','
                   << match_text << '\n';
                break;
            case OutputFormat::human:
                os << "n=" << args.n << " det=" << to_string(rep.det)
                   << " expected=" << to_string(rep.expected) << " match=" << match_text << '\n';
                break;
        }
    });
    return match ? 0 : 1;
}

// ---- series ----

struct SeriesArgs {
    std::string op;
    std::string preset, coeffs, init, uvw;
    long order = 0; // 0: default per op
};

SeriesTrunc input_series(const SeriesArgs& args, std::size_t order) {
    if (args.coeffs.empty()) throw parse_error("--op " + args.op + " requires --coeffs");
    std::vector<Rational> vals = parse_rational_list(args.coeffs, "--coeffs");
    vals.resize(order, Rational(0));
    return SeriesTrunc(std::move(vals));
}

int run_series(const SeriesArgs& args, const GlobalFlags& g) {
    if (args.order < 0) throw parse_error("--order must be at least 1");
    const bool closed_form = args.op == "gf" || args.op == "gf-odd";
    const auto coeff_count = [&]() -> std::size_t {
        if (args.order > 0) return static_cast<std::size_t>(args.order);
        if (!closed_form && !args.coeffs.empty())
            return parse_rational_list(args.coeffs, "--coeffs").size();
        return 16;
    }();

    SeriesTrunc out = [&] {
        if (args.op == "gf") {
            RecurrenceSpec spec = spec_from_flags(args.preset, args.coeffs, args.init);
            if (spec.order() == 3) return gf_generalized(spec, coeff_count);
            const bool all_ones = std::all_of(spec.coeffs.begin(), spec.coeffs.end(),
                                              [](const Rational& c) { return c == 1; });
            if (all_ones) return gf_lstep(spec, coeff_count);
            throw domain_error(
                "closed generating function available for order-3 and all-ones recurrences only");
        }
        if (args.op == "gf-odd") {
            if (args.uvw.empty()) throw parse_error("--op gf-odd requires --uvw u,v,w");
            const auto p = parse_uvw(args.uvw, "--uvw");
            return gf_odd(p[0], p[1], p[2], coeff_count);
        }
        if (args.op == "recip") return series_recip(input_series(args, coeff_count));
        if (args.op == "exp") return series_exp(input_series(args, coeff_count));
        if (args.op == "log") return series_log(input_series(args, coeff_count));
        if (args.op == "cameron") return cameron_forward(input_series(args, coeff_count));
        return cameron_inverse(input_series(args, coeff_count));
    }();

    const OutputFormat format = g.parsed_format();
    with_output_stream(g.output, [&](std::ostream& os) {
        switch (format) {
            case OutputFormat::json: {
                os << '[';
                for (std::size_t i = 0; i < out.order(); ++i) {
                    if (i) os << ',';
                    os << '"' << to_string(out[i]) << '"';
                }
                os << "]\n";
                break;
            }
            case OutputFormat::csv: {
                os << "i,coeff\n";
                for (std::size_t i = 0; i < out.order(); ++i)
                    os << i << ',' << to_string(out[i]) << '\n';
                break;
            }
            case OutputFormat::human: {
                for (std::size_t i = 0; i < out.order(); ++i)
                    os << "t^" << i << ": " << to_string(out[i]) << '\n';
                break;
            }
        }
    });
    return 0;
}

// ---- verify ----

struct VerifyArgs {
    std::string config_path;
    std::string suites;
    std::string variant;
    std::string grid_u, grid_v, grid_w, grid_uvw;
    std::string n, k, i, l;
    CLI::Option* suites_opt = nullptr;
    CLI::Option* variant_opt = nullptr;
    CLI::Option* grid_u_opt = nullptr;
    CLI::Option* grid_v_opt = nullptr;
    CLI::Option* grid_w_opt = nullptr;
    CLI::Option* grid_uvw_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* i_opt = nullptr;
    CLI::Option* l_opt = nullptr;
};

std::vector<IdentityId> parse_suites_flag(const std::string& text) {
    if (trim(text) == "all") return identity_catalog();
    std::vector<IdentityId> suites;
    for (const std::string& tok : split(text, ',')) {
        const std::string name = trim(tok);
        const auto id = identity_from_string(name);
        if (!id) throw parse_error("--suites: unknown identity \"" + name + "\"");
        suites.push_back(*id);
    }
    if (suites.empty()) throw parse_error("--suites: list is empty");
    return suites;
}

int run_verify(const VerifyArgs& args, const GlobalFlags& g) {
    GridConfig cfg;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) throw parse_error("cannot read config file \"" + args.config_path + "\"");
        std::ostringstream buf;
        buf << in.rdbuf();
        cfg = parse_grid_config(buf.str());
    }

    if (*args.suites_opt) cfg.suites = parse_suites_flag(args.suites);
    if (*args.variant_opt) {
        const auto p = variant_policy_from_string(args.variant);
        if (!p) throw parse_error("--variant: expected default, as_stated_only, or both");
        cfg.policy = *p;
    }
    if (*args.grid_uvw_opt) {
        std::vector<std::array<Rational, 3>> pts;
        for (const std::string& tok : split(args.grid_uvw, ';')) {
            const std::string t = trim(tok);
            if (t.empty()) throw parse_error("--grid-uvw: empty point entry");
            pts.push_back(parse_uvw(t, "--grid-uvw"));
        }
        cfg.points = std::move(pts);
    }
    if (*args.grid_u_opt || *args.grid_v_opt || *args.grid_w_opt) {
        if (*args.grid_uvw_opt)
            throw parse_error("give either --grid-uvw or per-axis --grid-u/v/w, not both");
        cfg.points.reset();
        if (*args.grid_u_opt) cfg.grid_u = parse_rational_list(args.grid_u, "--grid-u");
        if (*args.grid_v_opt) cfg.grid_v = parse_rational_list(args.grid_v, "--grid-v");
        if (*args.grid_w_opt) cfg.grid_w = parse_rational_list(args.grid_w, "--grid-w");
    }
    if (*args.n_opt) cfg.n = parse_range_flag(args.n, "--n");
    if (*args.k_opt) cfg.k = parse_range_flag(args.k, "--k");
    if (*args.i_opt) cfg.i = parse_range_flag(args.i, "--i");
    if (*args.l_opt) cfg.l = parse_range_flag(args.l, "--l");

    if (*g.format_opt) cfg.format = g.parsed_format();
    if (*g.output_opt) cfg.output_path = g.output;
    if (*g.threads_opt) {
        if (g.threads < 1) throw parse_error("--threads must be at least 1");
        cfg.threads = g.threads;
    }
    if (*g.strict_opt) cfg.strict_as_stated = true;

    const ReportDocument doc = run_grid(cfg);
    with_output_stream(cfg.output_path, [&](std::ostream& os) { write_report(os, doc); });
    return exit_code_for(doc);
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"generalized third-order recurrence toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    GlobalFlags g;
    g.format_opt = app.add_option("--format", g.format, "output format: json, csv, or human")
                       ->check(CLI::IsMember({"json", "csv", "human"}));
    g.output_opt = app.add_option("--output", g.output, "write output to this file");
    g.threads_opt = app.add_option("--threads", g.threads, "worker threads for verify");
    g.strict_opt = app.add_flag("--strict-as-stated", g.strict_as_stated,
                                "informational counterexamples also fail the run");

    SeqArgs seq_args;
    CLI::App* seq = app.add_subcommand("seq", "emit terms of a linear recurrence");
    seq->fallthrough();
    seq->add_option("--preset", seq_args.preset,
                    "tribonacci, tribonacci-lucas, padovan, lstep:<l>, lstep-companion:<l>");
    seq->add_option("--coeffs", seq_args.coeffs, "recurrence coefficients c1,c2,...");
    seq->add_option("--init", seq_args.init, "initial terms a0,a1,...");
    seq->add_option("--from", seq_args.from, "first index (default 0)");
    seq->add_option("--to", seq_args.to, "last index (default 14)");

    DetArgs det_args;
    CLI::App* det = app.add_subcommand("det", "evaluate a determinant representation");
    det->fallthrough();
    det->add_option("--rep", det_args.rep, "t2n1, cor-t2n1, bell-tribo, or bell-lstep")
        ->required()
        ->check(CLI::IsMember({"t2n1", "cor-t2n1", "bell-tribo", "bell-lstep"}));
    det->add_option("--uvw", det_args.uvw, "recurrence coefficients u,v,w");
    det->add_option("--n", det_args.n, "matrix size / degree")->required();
    det->add_option("--l", det_args.l, "step count for bell-lstep");

    SeriesArgs series_args;
    CLI::App* series = app.add_subcommand("series", "compute truncated power series");
    series->fallthrough();
    series->add_option("--op", series_args.op, "gf, gf-odd, recip, exp, log, cameron, cameron-inv")
        ->required()
        ->check(CLI::IsMember({"gf", "gf-odd", "recip", "exp", "log", "cameron", "cameron-inv"}));
    series->add_option("--preset", series_args.preset, "sequence preset for --op gf");
    series->add_option("--coeffs", series_args.coeffs, "input coefficients c0,c1,...");
    series->add_option("--init", series_args.init, "initial terms for --op gf");
    series->add_option("--uvw", series_args.uvw, "coefficients for --op gf-odd");
    series->add_option("--order", series_args.order, "number of coefficients to emit");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run identity checks over a parameter grid");
    verify->fallthrough();
    verify->add_option("--config", verify_args.config_path, "JSON config file");
    verify_args.suites_opt =
        verify->add_option("--suites", verify_args.suites, "comma-separated identity names or all");
    verify_args.variant_opt = verify->add_option("--variant", verify_args.variant,
                                                 "default, as_stated_only, or both");
    verify_args.grid_u_opt = verify->add_option("--grid-u", verify_args.grid_u, "u values u1,u2,...");
    verify_args.grid_v_opt = verify->add_option("--grid-v", verify_args.grid_v, "v values v1,v2,...");
    verify_args.grid_w_opt = verify->add_option("--grid-w", verify_args.grid_w, "w values w1,w2,...");
    verify_args.grid_uvw_opt = verify->add_option(
        "--grid-uvw", verify_args.grid_uvw, "explicit points \"u,v,w[;u,v,w...]\"");
    verify_args.n_opt = verify->add_option("--n", verify_args.n, "n range lo..hi or a single value");
    verify_args.k_opt = verify->add_option("--k", verify_args.k, "k range lo..hi or a single value");
    verify_args.i_opt = verify->add_option("--i", verify_args.i, "i range lo..hi or a single value");
    verify_args.l_opt = verify->add_option("--l", verify_args.l, "l range lo..hi or a single value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (seq->parsed()) return run_seq(seq_args, g);
        if (det->parsed()) return run_det(det_args, g);
        if (series->parsed()) return run_series(series_args, g);
        return run_verify(verify_args, g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
