// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sodcheck/sodcheck.h"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Options {
  int m = 0;
  int n = 0;
  int d = 0;
  long long k = 0;
  long long c = 0;
  int max_d = 0;
  int cutoff = -1;
  int jobs = 0;
  bool cyclic = false;
  bool reversed = false;
  bool verbose = false;
  std::string format = "text";
  std::string output;
  std::string config_file;
  std::string later;
  std::string earlier;
  std::string incidence = "coincident";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigDeleter {
  void operator()(sod_config* p) const { sod_config_destroy(p); }
};
struct ReportDeleter {
  void operator()(sod_report* p) const { sod_report_destroy(p); }
};
struct TableDeleter {
  void operator()(sod_table* p) const { sod_table_destroy(p); }
};
using ConfigPtr = std::unique_ptr<sod_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<sod_report, ReportDeleter>;
using TablePtr = std::unique_ptr<sod_table, TableDeleter>;

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  sod_string_free(s);
  return out;
}

// Maps library status codes onto exit codes: bad input is a usage error, anything else is internal.
void check(sod_status status) {
  if (status == SOD_OK) return;
  if (status == SOD_INVALID_ARGUMENT) throw UsageError(sod_last_error());
  throw std::runtime_error(sod_last_error());
}

int jobs_or_default(int jobs) {
  if (jobs > 0) return jobs;
  if (const char* env = std::getenv("SODCHECK_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

ConfigPtr make_config(const Options& o) {
  if (o.m == 0 || o.n == 0 || o.d == 0) throw UsageError("-m, -n and -d are required");
  sod_config* raw = nullptr;
  check(sod_config_create(o.m, o.n, o.d, o.cyclic ? 1 : 0, &raw));
  return ConfigPtr(raw);
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw UsageError("cannot open output file " + o.output);
  out << text;
  if (!out) throw UsageError("cannot write output file " + o.output);
}

std::string render(const Options& o, const sod_report* r, bool csv_header = true) {
  char* buf = nullptr;
  if (o.format == "json") check(sod_report_to_json(r, &buf));
  else if (o.format == "csv") check(sod_report_to_csv(r, csv_header ? 1 : 0, &buf));
  else check(sod_report_to_text(r, o.verbose ? 1 : 0, &buf));
  return take(buf);
}

int run_verify(const Options& o) {
  ConfigPtr cfg = make_config(o);
  sod_verify_options opts{o.reversed ? 1 : 0, o.cutoff, jobs_or_default(o.jobs)};
  sod_report* raw = nullptr;
  check(sod_verify(cfg.get(), &opts, &raw));
  ReportPtr report(raw);
  emit(o, render(o, report.get()));
  return sod_report_passed(report.get()) ? kPass : kFail;
}

struct SweepRow {
  int m, n, d;
  bool cyclic;
  size_t checks = 0, pairs = 0, failures = 0;
  bool passed = false;
  std::string error;
};

int run_sweep(const Options& o) {
  if (o.max_d < 2) throw UsageError("empty sweep: --max-d must be at least 2");
  std::vector<SweepRow> rows;
  for (int d = 2; d <= o.max_d; ++d) {
    if (o.cyclic)
      for (int n = 1; n <= d; ++n) rows.push_back({1, n, d, true});
    for (int m = 2; m <= d; ++m)
      for (int n = m; n <= d; ++n) rows.push_back({m, n, d, false});
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.d, a.m, a.n) < std::tie(b.d, b.m, b.n);
  });

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < rows.size(); i = next++) {
      SweepRow& row = rows[i];
      sod_config* cfg = nullptr;
      sod_report* report = nullptr;
      sod_verify_options opts{0, o.cutoff, 1};
      if (sod_config_create(row.m, row.n, row.d, row.cyclic ? 1 : 0, &cfg) != SOD_OK ||
          sod_verify(cfg, &opts, &report) != SOD_OK) {
        row.error = sod_last_error();
      } else {
        row.checks = sod_report_check_count(report);
        row.pairs = sod_report_count_kind(report, "semiorthogonal");
        row.failures = sod_report_failure_count(report);
        row.passed = sod_report_passed(report) != 0;
      }
      sod_report_destroy(report);
      sod_config_destroy(cfg);
    }
  };
  const int workers = std::min<int>(jobs_or_default(o.jobs), static_cast<int>(rows.size()));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool all = true;
  for (const auto& r : rows) all = all && r.passed;
  std::ostringstream os;
  auto label = [](const SweepRow& r) {
    return "(" + std::to_string(r.m) + "," + std::to_string(r.n) + "," + std::to_string(r.d) + ")";
  };
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["configs"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json e{{"m", r.m}, {"n", r.n}, {"d", r.d}, {"cyclic", r.cyclic}, {"checks", r.checks},
                               {"pairs", r.pairs}, {"failures", r.failures}, {"passed", r.passed}};
      if (!r.error.empty()) e["error"] = r.error;
      j["configs"].push_back(e);
    }
    j["summary"] = {{"configs", rows.size()}, {"passed", all}};
    os << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    os << "m,n,d,cyclic,checks,pairs,failures,pass\n";
    for (const auto& r : rows)
      os << r.m << ',' << r.n << ',' << r.d << ',' << (r.cyclic ? 1 : 0) << ',' << r.checks << ',' << r.pairs << ','
         << r.failures << ',' << (r.passed ? "true" : "false") << '\n';
  } else {
    for (const auto& r : rows) {
      os << label(r) << (r.cyclic ? " cyclic" : "") << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.checks
         << " checks, " << r.pairs << " pairs, " << r.failures << " failed)";
      if (!r.error.empty()) os << " error: " << r.error;
      os << '\n';
    }
    os << rows.size() << " configs: " << (all ? "PASS" : "FAIL") << '\n';
  }
  emit(o, os.str());
  return all ? kPass : kFail;
}

std::string render_table(const Options& o, const sod_table* t) {
  char* buf = nullptr;
  if (o.format == "json") {
    check(sod_table_to_json(t, &buf));
    return take(buf) + "\n";
  }
  check(sod_table_to_string(t, &buf));
  std::string out = take(buf);
  std::string inv;
  for (int deg = -64; deg <= 64; ++deg) {
    unsigned long long count = 0;
    int infinite = 0;
    check(sod_table_entry(t, deg, 0, &count, &infinite));
    if (infinite || count) inv += (inv.empty() ? "" : " ") + std::to_string(deg) + ":" + (infinite ? "inf" : std::to_string(count));
  }
  return out + "\ninvariant {" + inv + "}\n";
}

int run_cohom(const Options& o) {
  ConfigPtr cfg = make_config(o);
  sod_table* raw = nullptr;
  check(sod_cohomology_hypersurface(cfg.get(), o.k, o.c, &raw));
  TablePtr t(raw);
  emit(o, render_table(o, t.get()));
  return kPass;
}

int run_ext(const Options& o) {
  ConfigPtr cfg = make_config(o);
  static const std::map<std::string, sod_incidence> incidences{
      {"coincident", SOD_COINCIDENT}, {"shared-p", SOD_SHARED_P}, {"shared-q", SOD_SHARED_Q}, {"disjoint", SOD_DISJOINT}};
  sod_table* raw = nullptr;
  const sod_status s = sod_ext(cfg.get(), o.later.c_str(), o.earlier.c_str(), incidences.at(o.incidence), &raw);
  if (s == SOD_UNDECIDED) {
    std::cerr << "undecided: " << sod_last_error() << '\n';
    return kFail;
  }
  check(s);
  TablePtr t(raw);
  emit(o, render_table(o, t.get()));
  return kPass;
}

int run_hilbert(const Options& o) {
  ConfigPtr cfg = make_config(o);
  if (o.cutoff >= 0 && o.cutoff < 2 * o.d) throw UsageError("hilbert checks need --cutoff >= 2d");
  sod_report* raw = nullptr;
  check(sod_hilbert(cfg.get(), o.cutoff, &raw));
  ReportPtr report(raw);
  emit(o, render(o, report.get()));
  return sod_report_passed(report.get()) ? kPass : kFail;
}

int run_p1(const Options& o) {
  int lo = o.d, hi = o.d;
  if (o.max_d != 0) {
    lo = 2;
    hi = o.max_d;
  }
  if (lo < 2 || hi < lo) throw UsageError("p1 needs -d >= 2 or --max-d >= 2");
  std::string out;
  bool all = true;
  for (int d = lo; d <= hi; ++d) {
    sod_report* raw = nullptr;
    check(sod_check_p1(d, &raw));
    ReportPtr report(raw);
    all = all && sod_report_passed(report.get());
    out += render(o, report.get(), d == lo);
  }
  emit(o, out);
  return all ? kPass : kFail;
}

// key=value lines; values override command-line flags.
void apply_config_file(Options& o) {
  std::ifstream in(o.config_file);
  if (!in) throw UsageError("cannot read config file " + o.config_file);
  auto as_int = [](const std::string& key, const std::string& v) {
    try {
      size_t used = 0;
      const long long x = std::stoll(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return x;
    } catch (const std::exception&) {
      throw UsageError("config key " + key + " needs an integer, got '" + v + "'");
    }
  };
  auto as_bool = [](const std::string& key, const std::string& v) {
    if (v == "1" || v == "true" || v == "yes") return true;
    if (v == "0" || v == "false" || v == "no") return false;
    throw UsageError("config key " + key + " needs a boolean, got '" + v + "'");
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + " is not key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "m") o.m = static_cast<int>(as_int(key, value));
    else if (key == "n") o.n = static_cast<int>(as_int(key, value));
    else if (key == "d") o.d = static_cast<int>(as_int(key, value));
    else if (key == "k") o.k = as_int(key, value);
    else if (key == "c") o.c = as_int(key, value);
    else if (key == "max-d" || key == "max_d") o.max_d = static_cast<int>(as_int(key, value));
    else if (key == "cutoff") o.cutoff = static_cast<int>(as_int(key, value));
    else if (key == "jobs") o.jobs = static_cast<int>(as_int(key, value));
    else if (key == "cyclic") o.cyclic = as_bool(key, value);
    else if (key == "reversed-order" || key == "reversed_order") o.reversed = as_bool(key, value);
    else if (key == "verbose") o.verbose = as_bool(key, value);
    else if (key == "format") o.format = value;
    else if (key == "output") o.output = value;
    else if (key == "later") o.later = value;
    else if (key == "earlier") o.earlier = value;
    else if (key == "incidence") o.incidence = value;
    else throw UsageError("unknown config key '" + key + "'");
  }
  if (o.format != "text" && o.format != "json" && o.format != "csv") throw UsageError("format must be text, json or csv");
  if (o.incidence != "coincident" && o.incidence != "shared-p" && o.incidence != "shared-q" && o.incidence != "disjoint")
    throw UsageError("unknown incidence " + o.incidence);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact verification of a semi-orthogonal decomposition of D[X/mu_d], X = V(f + g)"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool with_mnd) {
    if (with_mnd) {
      sub->add_option("-m", o.m, "number of x variables");
      sub->add_option("-n", o.n, "number of y variables");
      sub->add_option("-d", o.d, "degree and order of the group");
    }
    sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output,-o", o.output, "write the report to a file");
    sub->add_option("--config", o.config_file, "key=value file overriding flags");
    sub->add_flag("--verbose,-v", o.verbose, "print passing checks too");
  };

  auto* verify = app.add_subcommand("verify", "check every claim for one configuration");
  common(verify, true);
  verify->add_flag("--reversed-order", o.reversed, "reverse the component order (must fail)");
  verify->add_flag("--cyclic", o.cyclic, "m = 1 mode");
  verify->add_option("--cutoff", o.cutoff, "Hilbert series cutoff (default 2d+4)");
  verify->add_option("--jobs,-j", o.jobs, "worker threads");

  auto* sweep = app.add_subcommand("sweep", "verify all 2 <= m <= n <= d <= max-d");
  common(sweep, false);
  sweep->add_option("--max-d", o.max_d, "largest d")->required();
  sweep->add_flag("--cyclic", o.cyclic, "also sweep m = 1 configurations");
  sweep->add_option("--cutoff", o.cutoff, "Hilbert series cutoff (default 2d+4)");
  sweep->add_option("--jobs,-j", o.jobs, "worker threads");

  auto* cohom = app.add_subcommand("cohom", "H^*(O_X(k) chi^c)");
  common(cohom, true);
  cohom->add_option("-k", o.k, "degree");
  cohom->add_option("-c", o.c, "character");
  cohom->add_flag("--cyclic", o.cyclic, "m = 1 mode");

  auto* ext = app.add_subcommand("ext", "Ext^*(later, earlier) between spanning objects");
  common(ext, true);
  ext->add_option("--later", o.later, "O(k,c), Pf(c), Pg(c) or L(k,c)")->required();
  ext->add_option("--earlier", o.earlier, "O(k,c), Pf(c), Pg(c) or L(k,c)")->required();
  ext->add_option("--incidence", o.incidence, "coincident, shared-p, shared-q or disjoint")
      ->check(CLI::IsMember({"coincident", "shared-p", "shared-q", "disjoint"}));
  ext->add_flag("--cyclic", o.cyclic, "m = 1 mode");

  auto* hilbert = app.add_subcommand("hilbert", "Koszul and join identities at the Hilbert series level");
  common(hilbert, true);
  hilbert->add_option("--cutoff", o.cutoff, "Hilbert series cutoff (default 2d+4)");

  auto* p1 = app.add_subcommand("p1", "the decomposition of [P^1/mu_d]");
  common(p1, false);
  p1->add_option("-d", o.d, "group order");
  p1->add_option("--max-d", o.max_d, "check every d from 2 to max-d");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (!o.config_file.empty()) apply_config_file(o);
    if (verify->parsed()) return run_verify(o);
    if (sweep->parsed()) return run_sweep(o);
    if (cohom->parsed()) return run_cohom(o);
    if (ext->parsed()) return run_ext(o);
    if (hilbert->parsed()) return run_hilbert(o);
    if (p1->parsed()) return run_p1(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
