#include "tribell/report_io.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

#include "tribell/error.hpp"

namespace tribell {

namespace {

void json_escape(std::ostream& os, std::string_view s) {
    for (char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            case '\r': os << "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    os << buf;
                } else {
                    os << c;
                }
        }
    }
}

void write_json_string(std::ostream& os, std::string_view s) {
    os << '"';
    json_escape(os, s);
    os << '"';
}

void write_params_json(std::ostream& os, const VerifyReport& rep) {
    os << '{';
    bool first = true;
    for (const auto& [name, value] : rep.params) {
        if (!first) os << ',';
        first = false;
        write_json_string(os, name);
        os << ':';
        write_json_string(os, to_string(value));
    }
    os << '}';
}

void write_report_entry_json(std::ostream& os, const VerifyReport& rep) {
    os << "{\"id\":\"" << to_string(rep.id) << "\",\"variant\":\"" << to_string(rep.variant)
       << "\",\"params\":";
    write_params_json(os, rep);
    os << ",\"status\":\"" << to_string(rep.status) << '"';
    if (rep.status == CheckStatus::counterexample) {
        os << ",\"lhs\":";
        write_json_string(os, to_string(*rep.lhs));
        os << ",\"rhs\":";
        write_json_string(os, to_string(*rep.rhs));
    }
    if (!rep.note.empty()) {
        os << ",\"note\":";
        write_json_string(os, rep.note);
    }
    os << '}';
}

void write_section_json(std::ostream& os, const std::vector<VerifyReport>& reports) {
    os << '[';
    bool first = true;
    for (const VerifyReport& rep : reports) {
        if (!first) os << ',';
        first = false;
        write_report_entry_json(os, rep);
    }
    os << ']';
}

void write_summary_json(std::ostream& os, const SummaryCounts& counts) {
    os << '{';
    bool first_id = true;
    for (const auto& [id, by_status] : counts) {
        if (!first_id) os << ',';
        first_id = false;
        write_json_string(os, id);
        os << ":{";
        bool first_st = true;
        for (const auto& [status, count] : by_status) {
            if (!first_st) os << ',';
            first_st = false;
            write_json_string(os, status);
            os << ':' << count;
        }
        os << '}';
    }
    os << '}';
}

void write_rational_list_json(std::ostream& os, const std::vector<Rational>& xs) {
    os << '[';
    bool first = true;
    for (const Rational& x : xs) {
        if (!first) os << ',';
        first = false;
        write_json_string(os, to_string(x));
    }
    os << ']';
}

std::string range_to_string(IntRange r) {
    return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

// ---- CSV ----

bool csv_needs_quoting(std::string_view s) {
    return s.find_first_of(",\"\n\r") != std::string_view::npos;
}

void write_csv_field(std::ostream& os, std::string_view s) {
    if (!csv_needs_quoting(s)) {
        os << s;
        return;
    }
    os << '"';
    for (char c : s) {
        if (c == '"') os << '"';
        os << c;
    }
    os << '"';
}

std::string params_joined(const VerifyReport& rep) {
    std::string out;
    for (const auto& [name, value] : rep.params) {
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += to_string(value);
    }
    return out;
}

void write_csv_row(std::ostream& os, std::string_view section, const VerifyReport& rep) {
    os << section << ',' << to_string(rep.id) << ',' << to_string(rep.variant) << ',';
    write_csv_field(os, params_joined(rep));
    os << ',' << to_string(rep.status) << ',';
    if (rep.status == CheckStatus::counterexample) {
        write_csv_field(os, to_string(*rep.lhs));
        os << ',';
        write_csv_field(os, to_string(*rep.rhs));
    } else {
        os << ',';
    }
    os << ',';
    write_csv_field(os, rep.note);
    os << '\n';
}

// ---- Human ----

struct SectionTotals {
    std::size_t verified = 0;
    std::size_t counterexample = 0;
    std::size_t skipped = 0;

    void add(const VerifyReport& rep) {
        switch (rep.status) {
            case CheckStatus::verified: ++verified; break;
            case CheckStatus::counterexample: ++counterexample; break;
            case CheckStatus::skipped_precondition: ++skipped; break;
        }
    }
    std::size_t total() const { return verified + counterexample + skipped; }
};

void write_human_section(std::ostream& os, std::string_view section,
                         const std::vector<VerifyReport>& reports, SectionTotals& totals) {
    for (const VerifyReport& rep : reports) {
        totals.add(rep);
        os << section << "  " << to_string(rep.id) << "  " << to_string(rep.variant) << "  "
           << params_joined(rep) << "  " << to_string(rep.status);
        if (rep.status == CheckStatus::counterexample)
            os << "  lhs=" << to_string(*rep.lhs) << " rhs=" << to_string(*rep.rhs);
        if (!rep.note.empty()) os << "  (" << rep.note << ')';
        os << '\n';
    }
}

// ---- config parsing helpers ----

Rational parse_rational_value(const nlohmann::json& j, const char* where) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw parse_error(std::string(where) + ": expected a rational literal string or integer");
}

IntRange parse_range_value(const nlohmann::json& j, const char* where) {
    IntRange r;
    if (j.is_number_integer()) {
        r.lo = r.hi = j.get<long>();
    } else if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto dots = s.find("..");
        try {
            std::size_t used = 0;
            if (dots == std::string::npos) {
                r.lo = r.hi = std::stol(s, &used);
                if (used != s.size()) throw parse_error("");
            } else {
                r.lo = std::stol(s.substr(0, dots), &used);
                if (used != dots) throw parse_error("");
                const std::string hi = s.substr(dots + 2);
                r.hi = std::stol(hi, &used);
                if (used != hi.size()) throw parse_error("");
            }
        } catch (const std::exception&) {
            throw parse_error(std::string(where) + ": expected \"lo..hi\", got \"" + s + "\"");
        }
    } else if (j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
               j[1].is_number_integer()) {
        r.lo = j[0].get<long>();
        r.hi = j[1].get<long>();
    } else {
        throw parse_error(std::string(where) + ": expected \"lo..hi\", [lo, hi], or an integer");
    }
    if (r.lo > r.hi) throw parse_error(std::string(where) + ": range is empty");
    return r;
}

std::vector<Rational> parse_axis(const nlohmann::json& j, const char* where) {
    if (!j.is_array() || j.empty())
        throw parse_error(std::string(where) + ": expected a nonempty array");
    std::vector<Rational> axis;
    axis.reserve(j.size());
    for (const auto& e : j) axis.push_back(parse_rational_value(e, where));
    return axis;
}

} // namespace

void write_report_json(std::ostream& os, const ReportDocument& doc) {
    os << "{\"tool\":{\"name\":\"" << doc.tool_name << "\",\"version\":\"" << doc.tool_version
       << "\"},\"config\":" << grid_config_to_json(doc.config) << ",\"reports\":";
    write_section_json(os, doc.reports);
    os << ",\"informational\":";
    write_section_json(os, doc.informational);
    os << ",\"summary\":{\"main\":";
    write_summary_json(os, summarize(doc.reports));
    os << ",\"informational\":";
    write_summary_json(os, summarize(doc.informational));
    os << "}}\n";
}

void write_report_csv(std::ostream& os, const ReportDocument& doc) {
    os << "section,id,variant,params,status,lhs,rhs,note\n";
    for (const VerifyReport& rep : doc.reports) write_csv_row(os, "main", rep);
    for (const VerifyReport& rep : doc.informational) write_csv_row(os, "informational", rep);
}

void write_report_human(std::ostream& os, const ReportDocument& doc) {
    os << doc.tool_name << ' ' << doc.tool_version << " verification run\n";
    os << "section  id  variant  params  status\n";
    SectionTotals main_totals, info_totals;
    write_human_section(os, "main", doc.reports, main_totals);
    write_human_section(os, "informational", doc.informational, info_totals);
    os << "summary: main " << main_totals.total() << " checks (" << main_totals.verified
       << " verified, " << main_totals.counterexample << " counterexamples, "
       << main_totals.skipped << " skipped); informational " << info_totals.total() << " checks ("
       << info_totals.verified << " verified, " << info_totals.counterexample
       << " counterexamples, " << info_totals.skipped << " skipped)\n";
}

void write_report(std::ostream& os, const ReportDocument& doc) {
    switch (doc.config.format) {
        case OutputFormat::json: write_report_json(os, doc); break;
        case OutputFormat::csv: write_report_csv(os, doc); break;
        case OutputFormat::human: write_report_human(os, doc); break;
    }
}

std::string grid_config_to_json(const GridConfig& config) {
    std::ostringstream os;
    os << "{\"suites\":[";
    bool first = true;
    for (IdentityId id : config.suites) {
        if (!first) os << ',';
        first = false;
        os << '"' << to_string(id) << '"';
    }
    os << "],\"variant_policy\":\"" << to_string(config.policy) << "\",\"grid\":{";
    if (config.points) {
        os << "\"points\":[";
        first = true;
        for (const auto& p : *config.points) {
            if (!first) os << ',';
            first = false;
            os << '[';
            write_json_string(os, to_string(p[0]));
            os << ',';
            write_json_string(os, to_string(p[1]));
            os << ',';
            write_json_string(os, to_string(p[2]));
            os << ']';
        }
        os << ']';
    } else {
        os << "\"u\":";
        write_rational_list_json(os, config.grid_u);
        os << ",\"v\":";
        write_rational_list_json(os, config.grid_v);
        os << ",\"w\":";
        write_rational_list_json(os, config.grid_w);
    }
    os << ",\"n\":\"" << range_to_string(config.n) << "\",\"k\":\"" << range_to_string(config.k)
       << "\",\"i\":\"" << range_to_string(config.i) << "\",\"l\":\"" << range_to_string(config.l)
       << "\"},\"format\":\"" << to_string(config.format) << "\",\"output\":";
    write_json_string(os, config.output_path);
    os << ",\"threads\":" << config.threads
       << ",\"strict_as_stated\":" << (config.strict_as_stated ? "true" : "false") << '}';
    return os.str();
}

GridConfig parse_grid_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("config must be a JSON object");

    GridConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "suites") {
            if (value.is_string() && value.get<std::string>() == "all") {
                cfg.suites = identity_catalog();
            } else if (value.is_array()) {
                cfg.suites.clear();
                for (const auto& e : value) {
                    if (!e.is_string()) throw parse_error("suites: expected identity names");
                    const std::string name = e.get<std::string>();
                    const auto id = identity_from_string(name);
                    if (!id) throw parse_error("suites: unknown identity \"" + name + "\"");
                    cfg.suites.push_back(*id);
                }
                if (cfg.suites.empty()) throw parse_error("suites: list is empty");
            } else {
                throw parse_error("suites: expected \"all\" or an array of identity names");
            }
        } else if (key == "variant_policy") {
            if (!value.is_string()) throw parse_error("variant_policy: expected a string");
            const auto p = variant_policy_from_string(value.get<std::string>());
            if (!p)
                throw parse_error("variant_policy: expected default, as_stated_only, or both");
            cfg.policy = *p;
        } else if (key == "grid") {
            if (!value.is_object()) throw parse_error("grid: expected an object");
            bool have_axis = false;
            for (const auto& [gkey, gvalue] : value.items()) {
                if (gkey == "u") {
                    cfg.grid_u = parse_axis(gvalue, "grid.u");
                    have_axis = true;
                } else if (gkey == "v") {
                    cfg.grid_v = parse_axis(gvalue, "grid.v");
                    have_axis = true;
                } else if (gkey == "w") {
                    cfg.grid_w = parse_axis(gvalue, "grid.w");
                    have_axis = true;
                } else if (gkey == "points") {
                    if (!gvalue.is_array() || gvalue.empty())
                        throw parse_error("grid.points: expected a nonempty array");
                    std::vector<std::array<Rational, 3>> pts;
                    for (const auto& e : gvalue) {
                        if (!e.is_array() || e.size() != 3)
                            throw parse_error("grid.points: each point is a [u, v, w] triple");
                        pts.push_back({parse_rational_value(e[0], "grid.points"),
                                       parse_rational_value(e[1], "grid.points"),
                                       parse_rational_value(e[2], "grid.points")});
                    }
                    cfg.points = std::move(pts);
                } else if (gkey == "n") {
                    cfg.n = parse_range_value(gvalue, "grid.n");
                } else if (gkey == "k") {
                    cfg.k = parse_range_value(gvalue, "grid.k");
                } else if (gkey == "i") {
                    cfg.i = parse_range_value(gvalue, "grid.i");
                } else if (gkey == "l") {
                    cfg.l = parse_range_value(gvalue, "grid.l");
                } else {
                    throw parse_error("grid: unknown key \"" + gkey + "\"");
                }
            }
            if (cfg.points && have_axis)
                throw parse_error("grid: give either per-axis lists or points, not both");
        } else if (key == "format") {
            if (!value.is_string()) throw parse_error("format: expected a string");
            const auto f = output_format_from_string(value.get<std::string>());
            if (!f) throw parse_error("format: expected json, csv, or human");
            cfg.format = *f;
        } else if (key == "output") {
            if (!value.is_string()) throw parse_error("output: expected a path string");
            cfg.output_path = value.get<std::string>();
        } else if (key == "threads") {
            if (!value.is_number_integer() || value.get<long>() < 1)
                throw parse_error("threads: expected a positive integer");
            cfg.threads = static_cast<int>(value.get<long>());
        } else if (key == "strict_as_stated") {
            if (!value.is_boolean()) throw parse_error("strict_as_stated: expected a boolean");
            cfg.strict_as_stated = value.get<bool>();
        } else {
            throw parse_error("config: unknown key \"" + key + "\"");
        }
    }
    return cfg;
}

} // namespace tribell
