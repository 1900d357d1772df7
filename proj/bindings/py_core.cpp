// Python bindings. The API is string-based: rationals cross the boundary
// as "p/q" strings so arbitrary precision survives the trip.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tribell/combinat.hpp"
#include "tribell/error.hpp"
#include "tribell/grid.hpp"
#include "tribell/identities.hpp"
#include "tribell/rational.hpp"
#include "tribell/report_io.hpp"
#include "tribell/sequences.hpp"
#include "tribell/series.hpp"
#include "tribell/version.hpp"

namespace py = pybind11;
using namespace tribell;

namespace {

std::vector<Rational> to_rationals(const std::vector<std::string>& xs) {
    std::vector<Rational> out;
    out.reserve(xs.size());
    for (const std::string& x : xs) out.push_back(parse_rational(x));
    return out;
}

std::vector<std::string> from_rationals(const std::vector<Rational>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const Rational& x : xs) out.push_back(to_string(x));
    return out;
}

RecurrenceSpec spec_from_python(const std::vector<std::string>& coeffs,
                                const std::vector<std::string>& initials) {
    return RecurrenceSpec::create(to_rationals(coeffs), to_rationals(initials));
}

RecurrenceSpec named_preset(const std::string& name) {
    if (name == "tribonacci") return make_tribonacci(1, 1, 1, 0, 1, 1);
    if (name == "tribonacci-lucas") return make_tribonacci(1, 1, 1, 3, 1, 3);
    if (name == "padovan") return make_tribonacci(1, 0, 1, 0, 1, 1);
    constexpr std::string_view kLstep = "lstep:";
    constexpr std::string_view kCompanion = "lstep-companion:";
    auto step_count = [&](std::string_view prefix) {
        const std::string tail = name.substr(prefix.size());
        long l = 0;
        try {
            std::size_t used = 0;
            l = std::stol(tail, &used);
            if (used != tail.size()) throw parse_error("");
        } catch (const std::exception&) {
            throw parse_error("preset: bad step count \"" + tail + "\"");
        }
        if (l < 2) throw parse_error("preset: step count must be at least 2");
        return static_cast<std::size_t>(l);
    };
    if (name.rfind(kCompanion, 0) == 0) return make_lstep_companion(step_count(kCompanion));
    if (name.rfind(kLstep, 0) == 0) return make_lstep(step_count(kLstep));
    throw parse_error("unknown preset \"" + name + "\"");
}

std::vector<std::string> series_op(const std::vector<std::string>& coeffs,
                                   SeriesTrunc (*op)(const SeriesTrunc&)) {
    return from_rationals(op(SeriesTrunc(to_rationals(coeffs))).coeffs());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact third-order recurrence toolkit";
    m.attr("__version__") = kVersion;

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "preset_terms",
        [](const std::string& preset, long lo, long hi) {
            return from_rationals(SequenceHandle(named_preset(preset)).terms(lo, hi));
        },
        py::arg("preset"), py::arg("lo"), py::arg("hi"),
        "Terms lo..hi of a named preset sequence");

    m.def(
        "seq_terms",
        [](const std::vector<std::string>& coeffs, const std::vector<std::string>& initials,
           long lo, long hi) {
            return from_rationals(SequenceHandle(spec_from_python(coeffs, initials)).terms(lo, hi));
        },
        py::arg("coeffs"), py::arg("initials"), py::arg("lo"), py::arg("hi"),
        "Terms lo..hi of the linear recurrence with the given coefficients and initial terms");

    m.def(
        "binom", [](long n, long k) { return to_string(Rational(binom(n, k))); }, py::arg("n"),
        py::arg("k"));

    m.def(
        "r_sequence",
        [](const std::string& u, const std::string& v, const std::string& w, std::size_t n) {
            EngineContext ctx;
            return to_string(
                r_sequence(ctx, parse_rational(u), parse_rational(v), parse_rational(w), n));
        },
        py::arg("u"), py::arg("v"), py::arg("w"), py::arg("n"),
        "n-th reciprocal-series coefficient for coefficients (u, v, w)");

    m.def(
        "bell_complete",
        [](const std::vector<std::string>& xs, std::size_t n) {
            return to_string(bell_complete(to_rationals(xs), n));
        },
        py::arg("xs"), py::arg("n"), "Complete Bell polynomial Y_n at the given arguments");

    m.def(
        "bell_via_det",
        [](const std::vector<std::string>& a, std::size_t m) {
            return to_string(bell_via_det(to_rationals(a), m));
        },
        py::arg("a"), py::arg("m"));

    m.def(
        "bell_inverse_det",
        [](const std::vector<std::string>& b, std::size_t n) {
            return to_string(bell_inverse_det(to_rationals(b), n));
        },
        py::arg("b"), py::arg("n"));

    m.def("series_recip",
          [](const std::vector<std::string>& f) { return series_op(f, series_recip); });
    m.def("series_exp", [](const std::vector<std::string>& f) { return series_op(f, series_exp); });
    m.def("series_log", [](const std::vector<std::string>& f) { return series_op(f, series_log); });
    m.def("cameron_forward",
          [](const std::vector<std::string>& x) { return series_op(x, cameron_forward); });
    m.def("cameron_inverse",
          [](const std::vector<std::string>& z) { return series_op(z, cameron_inverse); });

    m.def(
        "gf_terms",
        [](const std::vector<std::string>& coeffs, const std::vector<std::string>& initials,
           std::size_t order) {
            RecurrenceSpec spec = spec_from_python(coeffs, initials);
            if (spec.order() == 3) return from_rationals(gf_generalized(spec, order).coeffs());
            return from_rationals(gf_lstep(spec, order).coeffs());
        },
        py::arg("coeffs"), py::arg("initials"), py::arg("order"),
        "Series expansion of the closed-form generating function");

    m.def(
        "gf_odd_terms",
        [](const std::string& u, const std::string& v, const std::string& w, std::size_t order) {
            return from_rationals(
                gf_odd(parse_rational(u), parse_rational(v), parse_rational(w), order).coeffs());
        },
        py::arg("u"), py::arg("v"), py::arg("w"), py::arg("order"));

    m.def(
        "det_rep",
        [](const std::string& rep, const std::string& u, const std::string& v,
           const std::string& w, long n, std::size_t l) {
            EngineContext ctx;
            DetRep r;
            if (rep == "t2n1")
                r = det_rep_t2n1(ctx, parse_rational(u), parse_rational(v), parse_rational(w), n);
            else if (rep == "cor-t2n1")
                r = det_rep_cor_t2n1(ctx, parse_rational(u), parse_rational(v), parse_rational(w),
                                     n);
            else if (rep == "bell-tribo")
                r = det_rep_bell_tribo(ctx, parse_rational(u), parse_rational(v),
                                       parse_rational(w), n);
            else if (rep == "bell-lstep")
                r = det_rep_bell_lstep(ctx, l, n);
            else
                throw parse_error("unknown representation \"" + rep + "\"");
            py::dict out;
            out["n"] = n;
            out["det"] = to_string(r.det);
            out["expected"] = to_string(r.expected);
            out["match"] = r.det == r.expected;
            return out;
        },
        py::arg("rep"), py::arg("u") = "1", py::arg("v") = "1", py::arg("w") = "1", py::arg("n"),
        py::arg("l") = 2,
        "Evaluate a determinant representation; returns det, expected value, and match");

    m.def(
        "verify_json",
        [](const std::string& config_json) {
            const GridConfig cfg = parse_grid_config(config_json);
            const ReportDocument doc = run_grid(cfg);
            std::ostringstream os;
            write_report_json(os, doc);
            return os.str();
        },
        py::arg("config_json"),
        "Run the verification grid for a JSON config; returns the JSON report document");

    m.def("identity_catalog", [] {
        std::vector<std::string> names;
        for (IdentityId id : identity_catalog()) names.emplace_back(to_string(id));
        return names;
    });
}
