#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "tribell/error.hpp"
#include "tribell/grid.hpp"
#include "tribell/report_io.hpp"

using namespace tribell;

namespace {

GridConfig small_qdet_config() {
    GridConfig cfg;
    cfg.suites = {IdentityId::q_det_3x3};
    cfg.n = {2, 10};
    return cfg;
}

} // namespace

TEST_CASE("enum names round trip") {
    for (const char* name : {"default", "as_stated_only", "both"}) {
        auto p = variant_policy_from_string(name);
        REQUIRE(p.has_value());
        CHECK(std::string(to_string(*p)) == name);
    }
    CHECK(variant_policy_from_string("as-stated-only") == VariantPolicy::as_stated_only);
    CHECK(!variant_policy_from_string("???").has_value());
    for (const char* name : {"json", "csv", "human"}) {
        auto f = output_format_from_string(name);
        REQUIRE(f.has_value());
        CHECK(std::string(to_string(*f)) == name);
    }
}

TEST_CASE("coefficient grid omits the all-zero triple") {
    GridConfig cfg;
    auto pts = coefficient_points(cfg);
    CHECK(pts.size() == 215); // 6^3 - 1
    for (const auto& p : pts) CHECK(!(p[0] == 0 && p[1] == 0 && p[2] == 0));

    cfg.points = std::vector<std::array<Rational, 3>>{{Rational(2), Rational(1), Rational(1)}};
    pts = coefficient_points(cfg);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0][0] == 2);

    cfg.points = std::vector<std::array<Rational, 3>>{{Rational(0), Rational(0), Rational(0)}};
    CHECK_THROWS_AS(coefficient_points(cfg), domain_error);
}

TEST_CASE("single-suite run") {
    ReportDocument doc = run_grid(small_qdet_config());
    CHECK(doc.tool_name == "tribell");
    CHECK(doc.reports.size() == 9);
    CHECK(doc.informational.empty());
    for (const auto& rep : doc.reports) CHECK(rep.status == CheckStatus::verified);
    CHECK(!has_counterexample(doc.reports));
    CHECK(exit_code_for(doc) == 0);

    SummaryCounts counts = summarize(doc.reports);
    REQUIRE(counts.size() == 1);
    CHECK(counts["q_det_3x3"]["verified"] == 9);
    CHECK(counts["q_det_3x3"].size() == 1); // zero rows never appear
}

TEST_CASE("default policy records as-stated outcomes informationally") {
    GridConfig cfg;
    cfg.suites = {IdentityId::theorem1};
    cfg.points = std::vector<std::array<Rational, 3>>{{Rational(2), Rational(1), Rational(1)}};
    cfg.n = {2, 6};
    cfg.k = {0, 2};
    ReportDocument doc = run_grid(cfg);

    CHECK(!doc.reports.empty());
    CHECK(doc.reports.size() == doc.informational.size());
    for (const auto& rep : doc.reports) {
        CHECK(rep.variant == Variant::derivation_consistent);
        CHECK(rep.status == CheckStatus::verified);
    }
    CHECK(has_counterexample(doc.informational));
    // Gate ignores informational counterexamples unless strict.
    CHECK(exit_code_for(doc) == 0);
    doc.config.strict_as_stated = true;
    CHECK(exit_code_for(doc) == 1);
}

TEST_CASE("as-stated-only policy promotes the stated variant to the gate") {
    GridConfig cfg;
    cfg.suites = {IdentityId::theorem1};
    cfg.policy = VariantPolicy::as_stated_only;
    cfg.points = std::vector<std::array<Rational, 3>>{{Rational(2), Rational(1), Rational(1)}};
    cfg.n = {3, 3};
    cfg.k = {1, 1};
    ReportDocument doc = run_grid(cfg);
    REQUIRE(doc.reports.size() == 1);
    CHECK(doc.informational.empty());
    CHECK(doc.reports[0].variant == Variant::as_stated);
    CHECK(doc.reports[0].status == CheckStatus::counterexample);
    CHECK(exit_code_for(doc) == 1);
}

TEST_CASE("suites are deduplicated in catalog order") {
    GridConfig cfg = small_qdet_config();
    cfg.suites = {IdentityId::r_recurrence, IdentityId::q_det_3x3, IdentityId::r_recurrence};
    cfg.points = std::vector<std::array<Rational, 3>>{{Rational(1), Rational(1), Rational(1)}};
    ReportDocument doc = run_grid(cfg);
    // q_det sorts before r_recurrence in the catalog.
    CHECK(doc.reports.front().id == IdentityId::q_det_3x3);
    CHECK(doc.reports.back().id == IdentityId::r_recurrence);
    std::size_t rrec = 0;
    for (const auto& rep : doc.reports)
        if (rep.id == IdentityId::r_recurrence) ++rrec;
    CHECK(rrec == 1); // duplicate suite entry runs once
}

TEST_CASE("empty effective ranges produce no reports") {
    GridConfig cfg;
    cfg.suites = {IdentityId::lemma_rel_2step};
    cfg.points = std::vector<std::array<Rational, 3>>{{Rational(1), Rational(1), Rational(1)}};
    cfg.n = {1, 5}; // below the n >= 6 floor
    ReportDocument doc = run_grid(cfg);
    CHECK(doc.reports.empty());
    CHECK(exit_code_for(doc) == 0);
}

TEST_CASE("emitted JSON parses and the summary matches a recount") {
    GridConfig cfg;
    cfg.suites = {IdentityId::theorem1, IdentityId::q_det_3x3};
    cfg.points = std::vector<std::array<Rational, 3>>{{Rational(2), Rational(1), Rational(1)}};
    cfg.n = {2, 6};
    cfg.k = {1, 1};
    ReportDocument doc = run_grid(cfg);

    std::ostringstream os;
    write_report_json(os, doc);
    const nlohmann::json j = nlohmann::json::parse(os.str());

    CHECK(j["tool"]["name"] == "tribell");
    CHECK(j["config"]["variant_policy"] == "default");
    REQUIRE(j["reports"].is_array());
    CHECK(j["reports"].size() == doc.reports.size());

    // Recompute the summary from the emitted reports.
    std::map<std::string, std::map<std::string, std::size_t>> recount;
    for (const auto& rep : j["informational"])
        ++recount[rep["id"].get<std::string>()][rep["status"].get<std::string>()];
    const auto& emitted = j["summary"]["informational"];
    CHECK(emitted.size() == recount.size());
    for (const auto& [id, by_status] : recount)
        for (const auto& [status, count] : by_status)
            CHECK(emitted[id][status].get<std::size_t>() == count);

    // Counterexample entries carry lhs/rhs; verified entries do not.
    bool saw_counterexample = false;
    for (const auto& rep : j["informational"]) {
        if (rep["status"] == "counterexample") {
            saw_counterexample = true;
            CHECK(rep.contains("lhs"));
            CHECK(rep.contains("rhs"));
        } else {
            CHECK(!rep.contains("lhs"));
        }
    }
    CHECK(saw_counterexample);

    // Params preserve declaration order in the emitted text.
    const std::string text = os.str();
    CHECK(text.find("\"u\":\"2\",\"v\":\"1\",\"w\":\"1\",\"n\":\"2\",\"k\":\"1\"") !=
          std::string::npos);
}

TEST_CASE("emission is byte-identical across runs") {
    GridConfig cfg = small_qdet_config();
    std::ostringstream a, b;
    write_report_json(a, run_grid(cfg));
    write_report_json(b, run_grid(cfg));
    CHECK(a.str() == b.str());

    std::ostringstream c1, c2;
    cfg.format = OutputFormat::csv;
    ReportDocument doc = run_grid(cfg);
    write_report(c1, doc);
    write_report(c2, doc);
    CHECK(c1.str() == c2.str());
    CHECK(c1.str().rfind("section,id,variant,params,status,lhs,rhs,note\n", 0) == 0);
}

TEST_CASE("threaded run matches the sequential one") {
    GridConfig cfg;
    cfg.suites = {IdentityId::q_det_3x3, IdentityId::r_recurrence, IdentityId::cor3_binom_inv};
    cfg.points = std::vector<std::array<Rational, 3>>{{Rational(1), Rational(1), Rational(1)},
                                                      {Rational(2), Rational(1), Rational(1)}};
    cfg.n = {1, 12};
    cfg.k = {0, 6};
    std::ostringstream seq_out;
    write_report_json(seq_out, run_grid(cfg));
    cfg.threads = 3;
    std::ostringstream par_out;
    write_report_json(par_out, run_grid(cfg));
    // The config echo differs (threads), but every report must agree.
    auto a = nlohmann::json::parse(seq_out.str());
    auto b = nlohmann::json::parse(par_out.str());
    CHECK(a["reports"] == b["reports"]);
    CHECK(a["summary"] == b["summary"]);
}

TEST_CASE("config parsing") {
    GridConfig cfg = parse_grid_config(R"({
        "suites": ["theorem1", "q_det_3x3"],
        "variant_policy": "both",
        "grid": {"u": ["2"], "v": [1, "1/2"], "w": ["-1"], "n": "2..6", "k": 3, "i": [0, 2]},
        "format": "csv",
        "output": "out.csv",
        "threads": 2,
        "strict_as_stated": true
    })");
    CHECK(cfg.suites == std::vector<IdentityId>{IdentityId::theorem1, IdentityId::q_det_3x3});
    CHECK(cfg.policy == VariantPolicy::both);
    CHECK(cfg.grid_u == std::vector<Rational>{Rational(2)});
    CHECK(cfg.grid_v == std::vector<Rational>{Rational(1), rat(1, 2)});
    CHECK(cfg.n.lo == 2);
    CHECK(cfg.n.hi == 6);
    CHECK(cfg.k.lo == 3);
    CHECK(cfg.k.hi == 3);
    CHECK(cfg.i.lo == 0);
    CHECK(cfg.i.hi == 2);
    CHECK(cfg.l.lo == 2); // untouched default
    CHECK(cfg.format == OutputFormat::csv);
    CHECK(cfg.output_path == "out.csv");
    CHECK(cfg.threads == 2);
    CHECK(cfg.strict_as_stated);

    CHECK(parse_grid_config(R"({"suites": "all"})").suites == identity_catalog());

    GridConfig with_points = parse_grid_config(R"({"grid": {"points": [["2", "1", "1"]]}})");
    REQUIRE(with_points.points.has_value());
    CHECK(with_points.points->size() == 1);
}

TEST_CASE("config parse errors") {
    CHECK_THROWS_AS(parse_grid_config("not json"), parse_error);
    CHECK_THROWS_AS(parse_grid_config("[]"), parse_error);
    CHECK_THROWS_AS(parse_grid_config(R"({"bogus": 1})"), parse_error);
    CHECK_THROWS_AS(parse_grid_config(R"({"suites": ["nope"]})"), parse_error);
    CHECK_THROWS_AS(parse_grid_config(R"({"suites": []})"), parse_error);
    CHECK_THROWS_AS(parse_grid_config(R"({"variant_policy": "maybe"})"), parse_error);
    CHECK_THROWS_AS(parse_grid_config(R"({"grid": {"n": "9..2"}})"), parse_error);
    CHECK_THROWS_AS(parse_grid_config(R"({"grid": {"n": "abc"}})"), parse_error);
    CHECK_THROWS_AS(parse_grid_config(R"({"grid": {"u": []}})"), parse_error);
    CHECK_THROWS_AS(parse_grid_config(R"({"grid": {"u": [true]}})"), parse_error);
    CHECK_THROWS_AS(parse_grid_config(R"({"grid": {"oops": 1}})"), parse_error);
    CHECK_THROWS_AS(parse_grid_config(R"({"grid": {"points": [["1", "1"]]}})"), parse_error);
    CHECK_THROWS_AS(parse_grid_config(R"({"grid": {"u": ["1"], "points": [["1","1","1"]]}})"),
                    parse_error);
    CHECK_THROWS_AS(parse_grid_config(R"({"threads": 0})"), parse_error);
    CHECK_THROWS_AS(parse_grid_config(R"({"format": "xml"})"), parse_error);
}

TEST_CASE("config echo round trips through the parser") {
    GridConfig cfg;
    cfg.suites = {IdentityId::theorem2};
    cfg.policy = VariantPolicy::both;
    cfg.grid_v = {rat(1, 2), Rational(3)};
    cfg.n = {2, 8};
    cfg.format = OutputFormat::human;
    cfg.threads = 4;
    GridConfig back = parse_grid_config(grid_config_to_json(cfg));
    CHECK(back.suites == cfg.suites);
    CHECK(back.policy == cfg.policy);
    CHECK(back.grid_v == cfg.grid_v);
    CHECK(back.n.lo == cfg.n.lo);
    CHECK(back.n.hi == cfg.n.hi);
    CHECK(back.format == cfg.format);
    CHECK(back.threads == cfg.threads);

    cfg.points = std::vector<std::array<Rational, 3>>{{Rational(2), Rational(1), Rational(1)}};
    back = parse_grid_config(grid_config_to_json(cfg));
    REQUIRE(back.points.has_value());
    CHECK((*back.points)[0][0] == 2);
}
