#include "sodcheck/report_io.hpp"

#include <sstream>

#include "json.hpp"

namespace sodcheck {

namespace {

using ojson = nlohmann::ordered_json;

ojson mult_json(Mult m) {
  if (m.is_infinite()) return "inf";
  return m.finite();
}

ojson table_json(const ExtTable& table) {
  ojson out = ojson::object();
  for (const auto& [deg, row] : table.rows()) {
    ojson r = ojson::object();
    for (const auto& [c, mult] : row.entries()) r[std::to_string(c)] = mult_json(mult);
    out[std::to_string(deg)] = r;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string verdict(const Report& r) {
  std::ostringstream os;
  os << r.label << (r.cyclic ? " cyclic" : "") << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks.size()
     << " checks, " << r.failure_count() << " failed)";
  return os.str();
}

}  // namespace

std::string table_to_json(const ExtTable& table) { return table_json(table).dump(); }

std::string report_to_json(const Report& report) {
  ojson j;
  j["config"] = {{"label", report.label}, {"m", report.m}, {"n", report.n}, {"d", report.d}, {"cyclic", report.cyclic}};
  ojson checks = ojson::array();
  for (const auto& c : report.checks) {
    ojson rec;
    rec["id"] = c.id;
    rec["kind"] = c.kind;
    rec["later"] = c.later;
    rec["earlier"] = c.earlier;
    rec["table"] = table_json(c.table);
    rec["pass"] = c.pass;
    if (!c.asserted) rec["asserted"] = false;
    if (!c.note.empty()) rec["note"] = c.note;
    checks.push_back(rec);
  }
  j["checks"] = checks;
  j["summary"] = {{"checks", report.checks.size()}, {"failures", report.failure_count()}, {"passed", report.passed()}};
  return j.dump(2) + "\n";
}

std::string report_to_text(const Report& report, bool verbose) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    const bool failing = c.asserted && !c.pass;
    if (!verbose && !failing) continue;
    os << (c.pass ? "ok   " : (c.asserted ? "FAIL " : "note ")) << c.id << " [" << c.kind << "]";
    if (!c.later.empty()) os << " Ext(" << c.later << ", " << c.earlier << ") = " << c.table.str();
    if (!c.note.empty()) os << "  # " << c.note;
    os << '\n';
  }
  os << verdict(report) << '\n';
  return os.str();
}

std::string report_to_csv(const Report& report, bool header) {
  std::ostringstream os;
  if (header) os << "config,id,kind,later,earlier,invariants,pass\n";
  for (const auto& c : report.checks) {
    os << csv_field(report.label) << ',' << csv_field(c.id) << ',' << c.kind << ',' << csv_field(c.later) << ','
       << csv_field(c.earlier) << ',' << csv_field(c.table.invariant_str()) << ','
       << (c.pass ? "true" : (c.asserted ? "false" : "info")) << '\n';
  }
  return os.str();
}

}  // namespace sodcheck
