#pragma once

// Serialization of verification runs and parsing of run configs.
//
// Emission is hand-streamed (no DOM build) so that large grid runs write
// in bounded extra memory and produce byte-identical output across runs.
// Config parsing goes through a JSON DOM since configs are small.

#include <iosfwd>
#include <string>

#include "tribell/grid.hpp"

namespace tribell {

void write_report_json(std::ostream& os, const ReportDocument& doc);
void write_report_csv(std::ostream& os, const ReportDocument& doc);
void write_report_human(std::ostream& os, const ReportDocument& doc);

// Dispatches on doc.config.format.
void write_report(std::ostream& os, const ReportDocument& doc);

// Canonical JSON form of a config, as embedded in the report document.
std::string grid_config_to_json(const GridConfig& config);

// Parses the documented config schema. Unknown keys, malformed values,
// and empty ranges raise parse_error.
GridConfig parse_grid_config(const std::string& json_text);

} // namespace tribell
