#include "sodcheck/sodcheck.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sodcheck/checker.hpp"
#include "sodcheck/cohomology.hpp"
#include "sodcheck/geometry.hpp"
#include "sodcheck/report_io.hpp"

struct sod_config {
  sodcheck::Config cfg;
};

struct sod_report {
  sodcheck::Report report;
};

struct sod_table {
  sodcheck::ExtTable table;
};

namespace {

thread_local std::string last_error;

sod_status fail(sod_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
sod_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const sodcheck::InvalidArgument& e) {
    return fail(SOD_INVALID_ARGUMENT, e.what());
  } catch (const sodcheck::UndecidedError& e) {
    return fail(SOD_UNDECIDED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SOD_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SOD_INTERNAL, e.what());
  } catch (...) {
    return fail(SOD_INTERNAL, "unknown error");
  }
}

sod_status copy_out(const std::string& s, char** out) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf == nullptr) return fail(SOD_INTERNAL, "out of memory");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
  return SOD_OK;
}

#define SOD_REQUIRE(cond, what) \
  if (!(cond)) return fail(SOD_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* sod_last_error(void) { return last_error.c_str(); }

void sod_string_free(char* s) { std::free(s); }

sod_status sod_config_create(int m, int n, int d, int cyclic, sod_config** out) {
  SOD_REQUIRE(out != nullptr, "null output pointer");
  return guarded([&] {
    *out = new sod_config{sodcheck::Config::make(m, n, d, cyclic != 0)};
    return SOD_OK;
  });
}

void sod_config_destroy(sod_config* cfg) { delete cfg; }

sod_status sod_verify(const sod_config* cfg, const sod_verify_options* options, sod_report** out) {
  SOD_REQUIRE(cfg != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    sodcheck::VerifyOptions opts;
    if (options != nullptr) {
      if (options->jobs < 1) throw sodcheck::InvalidArgument("jobs must be at least 1");
      opts.reversed_order = options->reversed_order != 0;
      opts.cutoff = options->cutoff;
      opts.jobs = options->jobs;
    }
    *out = new sod_report{sodcheck::verify(cfg->cfg, opts)};
    return SOD_OK;
  });
}

sod_status sod_check_p1(int d, sod_report** out) {
  SOD_REQUIRE(out != nullptr, "null output pointer");
  return guarded([&] {
    *out = new sod_report{sodcheck::check_p1(d)};
    return SOD_OK;
  });
}

sod_status sod_hilbert(const sod_config* cfg, int cutoff, sod_report** out) {
  SOD_REQUIRE(cfg != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    if (cutoff >= 0 && cutoff < 2 * cfg->cfg.d()) throw sodcheck::InvalidArgument("cutoff must be at least 2d");
    *out = new sod_report{sodcheck::hilbert_suite(cfg->cfg, cutoff < 0 ? 2 * cfg->cfg.d() + 4 : cutoff)};
    return SOD_OK;
  });
}

int sod_report_passed(const sod_report* report) { return report != nullptr && report->report.passed() ? 1 : 0; }

size_t sod_report_check_count(const sod_report* report) { return report == nullptr ? 0 : report->report.checks.size(); }

size_t sod_report_failure_count(const sod_report* report) {
  return report == nullptr ? 0 : report->report.failure_count();
}

size_t sod_report_count_kind(const sod_report* report, const char* kind) {
  if (report == nullptr || kind == nullptr) return 0;
  size_t count = 0;
  for (const auto& c : report->report.checks)
    if (c.kind == kind) ++count;
  return count;
}

sod_status sod_report_to_json(const sod_report* report, char** out) {
  SOD_REQUIRE(report != nullptr && out != nullptr, "null argument");
  return guarded([&] { return copy_out(sodcheck::report_to_json(report->report), out); });
}

sod_status sod_report_to_text(const sod_report* report, int verbose, char** out) {
  SOD_REQUIRE(report != nullptr && out != nullptr, "null argument");
  return guarded([&] { return copy_out(sodcheck::report_to_text(report->report, verbose != 0), out); });
}

sod_status sod_report_to_csv(const sod_report* report, int header, char** out) {
  SOD_REQUIRE(report != nullptr && out != nullptr, "null argument");
  return guarded([&] { return copy_out(sodcheck::report_to_csv(report->report, header != 0), out); });
}

void sod_report_destroy(sod_report* report) { delete report; }

sod_status sod_cohomology_hypersurface(const sod_config* cfg, long long k, long long c, sod_table** out) {
  SOD_REQUIRE(cfg != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new sod_table{sodcheck::cohomology_hypersurface(cfg->cfg, k, cfg->cfg.chi(c))};
    return SOD_OK;
  });
}

sod_status sod_ext(const sod_config* cfg, const char* later, const char* earlier, sod_incidence incidence,
                   sod_table** out) {
  SOD_REQUIRE(cfg != nullptr && later != nullptr && earlier != nullptr && out != nullptr, "null argument");
  SOD_REQUIRE(incidence >= SOD_COINCIDENT && incidence <= SOD_DISJOINT, "unknown incidence");
  return guarded([&] {
    const auto a = sodcheck::SpanObject::parse(later, cfg->cfg);
    const auto b = sodcheck::SpanObject::parse(earlier, cfg->cfg);
    *out = new sod_table{sodcheck::hom_table(cfg->cfg, a, b, static_cast<sodcheck::Incidence>(incidence))};
    return SOD_OK;
  });
}

int sod_table_is_zero(const sod_table* table) { return table != nullptr && table->table.is_zero() ? 1 : 0; }

int sod_table_invariant_zero(const sod_table* table) {
  return table != nullptr && table->table.invariant_zero() ? 1 : 0;
}

sod_status sod_table_entry(const sod_table* table, int degree, long long c, unsigned long long* count, int* infinite) {
  SOD_REQUIRE(table != nullptr && count != nullptr && infinite != nullptr, "null argument");
  return guarded([&] {
    const sodcheck::Mult m = table->table.row(degree).at(c);
    *infinite = m.is_infinite() ? 1 : 0;
    *count = m.is_infinite() ? 0 : m.finite();
    return SOD_OK;
  });
}

sod_status sod_table_to_json(const sod_table* table, char** out) {
  SOD_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] { return copy_out(sodcheck::table_to_json(table->table), out); });
}

sod_status sod_table_to_string(const sod_table* table, char** out) {
  SOD_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] { return copy_out(table->table.str(), out); });
}

void sod_table_destroy(sod_table* table) { delete table; }

}  // extern "C"
