#pragma once

// Grid runner: drives the identity checkers over configured parameter
// grids and collects a ReportDocument with a gating ("main") report list
// and a non-gating informational list (as-stated outcomes of the two
// adjudicated identities under the default policy).

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tribell/identities.hpp"
#include "tribell/rational.hpp"

namespace tribell {

struct IntRange {
    long lo = 0;
    long hi = 0;
    bool contains(long x) const { return lo <= x && x <= hi; }
};

enum class VariantPolicy { default_policy, as_stated_only, both };
const char* to_string(VariantPolicy p);
std::optional<VariantPolicy> variant_policy_from_string(std::string_view name);

enum class OutputFormat { json, csv, human };
const char* to_string(OutputFormat f);
std::optional<OutputFormat> output_format_from_string(std::string_view name);

// {-2, -1, 0, 1, 2, 3}: the default per-axis coefficient values.
const std::vector<Rational>& default_coefficient_axis();

struct GridConfig {
    std::vector<IdentityId> suites = identity_catalog();
    VariantPolicy policy = VariantPolicy::default_policy;
    std::vector<Rational> grid_u = default_coefficient_axis();
    std::vector<Rational> grid_v = default_coefficient_axis();
    std::vector<Rational> grid_w = default_coefficient_axis();
    // When set, overrides the per-axis product.
    std::optional<std::vector<std::array<Rational, 3>>> points;
    IntRange n{1, 40};
    IntRange k{0, 12};
    IntRange i{0, 12};
    IntRange l{2, 7};
    OutputFormat format = OutputFormat::json;
    std::string output_path; // empty: standard output
    int threads = 1;
    bool strict_as_stated = false;
};

// The coefficient triples the grid will visit, in iteration order. The
// product grid silently omits the invalid all-zero triple; an explicitly
// listed all-zero point is a config error.
std::vector<std::array<Rational, 3>> coefficient_points(const GridConfig& config);

struct ReportDocument {
    std::string tool_name = "tribell";
    std::string tool_version;
    GridConfig config;
    std::vector<VerifyReport> reports;       // gating section
    std::vector<VerifyReport> informational; // non-gating section
};

ReportDocument run_grid(const GridConfig& config);

// identity name -> status name -> count; only nonzero entries.
using SummaryCounts = std::map<std::string, std::map<std::string, std::size_t>>;
SummaryCounts summarize(const std::vector<VerifyReport>& reports);

bool has_counterexample(const std::vector<VerifyReport>& reports);

// 0 all good, 1 when the gating section has a counterexample (or, with
// strict, the informational section too).
int exit_code_for(const ReportDocument& doc);

} // namespace tribell
