#pragma once

#include <string>

#include "sodcheck/checker.hpp"

namespace sodcheck {

/// {"0": {"2": 1, "3": "inf"}, ...}: degrees and characters as strings, INFINITE as "inf".
std::string table_to_json(const ExtTable& table);
/// {config, checks, summary}; stable key order and no timestamps.
std::string report_to_json(const Report& report);
/// Failures only unless `verbose`, then a verdict line.
std::string report_to_text(const Report& report, bool verbose);
/// One line per check: config,id,kind,later,earlier,invariants,pass.
std::string report_to_csv(const Report& report, bool header);

}  // namespace sodcheck
