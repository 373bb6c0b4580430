// Acceptance runner: one PASS/FAIL line per criterion. argv[1] is the sodcheck-cli executable.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracle/fermat_oracle.hpp"
#include "oracle/koszul_oracle.hpp"
#include "sodcheck/checker.hpp"
#include "sodcheck/cohomology.hpp"
#include "sodcheck/hilbert.hpp"
#include "sodcheck/localext.hpp"

using namespace sodcheck;

namespace {

constexpr double kSweepSecondsLimit = 60.0;
constexpr int kSweepMaxD = 8;
constexpr size_t kSweepConfigs = 84;
constexpr int kOracleMaxAbsK = 6;
constexpr int kSerreSamples = 200;
constexpr long long kSerreMaxAbsK = 10;
constexpr int kKoszulModels = 50;
constexpr int kKoszulMaxVars = 5;
constexpr int kKoszulTruncation = 8;
constexpr int kP1MaxD = 12;
// Every comparison below is between exact integers: the tolerance is zero.

std::vector<Config> sweep() {
  std::vector<Config> out;
  for (int d = 2; d <= kSweepMaxD; ++d)
    for (int m = 2; m <= d; ++m)
      for (int n = m; n <= d; ++n) out.push_back(Config::make(m, n, d));
  return out;
}

struct Run {
  int exit_code = -1;
  std::string output;
};

Run run(const std::string& command) {
  Run r;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int failures = 0;

void criterion(int id, const std::string& title, const std::function<bool(std::ostream&)>& body) {
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title;
  if (!detail.str().empty()) std::cout << " [" << detail.str() << "]";
  std::cout << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to sodcheck-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  criterion(1, "main theorem sweep via the CLI", [&](std::ostream& os) {
    const auto start = std::chrono::steady_clock::now();
    const Run r = run("'" + cli + "' sweep --max-d " + std::to_string(kSweepMaxD) + " --format csv");
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::istringstream in(r.output);
    std::string line;
    std::getline(in, line);
    size_t rows = 0, passing = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      ++rows;
      if (line.size() >= 4 && line.compare(line.size() - 4, 4, "true") == 0) ++passing;
    }
    os << rows << " configs, " << passing << " passing, exit " << r.exit_code << ", " << seconds << " s";
    return r.exit_code == 0 && rows == kSweepConfigs && passing == rows && seconds < kSweepSecondsLimit;
  });

  criterion(2, "closed-form hypersurface cohomology equals the Fermat rank oracle", [&](std::ostream& os) {
    size_t compared = 0;
    for (const auto& cfg : {Config::make(2, 2, 4), Config::make(2, 3, 5), Config::make(3, 3, 6)}) {
      const int top = cfg.dim();
      for (int k = -kOracleMaxAbsK; k <= kOracleMaxAbsK; ++k)
        for (int c = 0; c < cfg.d(); ++c) {
          const auto brute = oracle::fermat_cohomology(cfg.m(), cfg.n(), cfg.d(), k, c);
          const ExtTable closed = cohomology_hypersurface(cfg, k, cfg.chi(c));
          for (const auto& [deg, row] : closed.rows())
            if (deg != 0 && deg != top) return false;
          for (int deg : {0, top})
            for (int e = 0; e < cfg.d(); ++e) {
              auto it = brute.rows.find(deg);
              const unsigned long long want = it == brute.rows.end() ? 0ULL : it->second[static_cast<size_t>(e)];
              if (!(closed.row(deg).at(e) == Mult(want))) {
                os << cfg.label() << " k=" << k << " c=" << c << " deg=" << deg << " e=" << e;
                return false;
              }
              ++compared;
            }
        }
    }
    os << compared << " entries";
    return true;
  });

  criterion(3, "Serre duality on random twists", [&](std::ostream& os) {
    size_t configs = 0;
    for (const auto& cfg : sweep()) {
      std::mt19937_64 rng(static_cast<unsigned long long>(cfg.m() * 10000 + cfg.n() * 100 + cfg.d()));
      std::uniform_int_distribution<long long> kd(-kSerreMaxAbsK, kSerreMaxAbsK), cd(0, cfg.d() - 1);
      std::vector<std::pair<long long, long long>> samples;
      for (int s = 0; s < kSerreSamples; ++s) samples.emplace_back(kd(rng), cd(rng));
      if (!serre_check(cfg, samples)) {
        os << "fails on " << cfg.label();
        return false;
      }
      ++configs;
    }
    os << configs << " configs x " << kSerreSamples << " samples";
    return true;
  });

  criterion(4, "local Koszul Ext equals truncated brute force", [&](std::ostream& os) {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < kKoszulModels; ++trial) {
      const int d = std::uniform_int_distribution<int>(2, 7)(rng);
      const int r = std::uniform_int_distribution<int>(1, kKoszulMaxVars)(rng);
      oracle::KoszulInput in;
      in.d = d;
      in.twist = std::uniform_int_distribution<int>(0, d - 1)(rng);
      LocalModel model{{}, {}, {}, Character(in.twist, d)};
      for (int v = 0; v < r; ++v) {
        const int w = std::uniform_int_distribution<int>(0, d - 1)(rng);
        in.weights.push_back(w);
        model.vars.push_back({"z" + std::to_string(v), Character(w, d)});
        const int role = std::uniform_int_distribution<int>(0, 3)(rng);
        if (role & 1) {
          in.source_mask |= 1U << v;
          model.source_killed.push_back(v);
        }
        if (role & 2) {
          in.target_mask |= 1U << v;
          model.target_killed.push_back(v);
        }
      }
      const ExtTable ext = koszul_ext(model);
      const auto brute = oracle::koszul_truncated(in, kKoszulTruncation);
      for (const auto& [key, count] : brute) {
        const Mult mult = ext.row(key.first).at(key.second);
        if (mult.is_zero() || (!mult.is_infinite() && !(mult == Mult(count)))) {
          os << "model " << trial << " differs at degree " << key.first << " character " << key.second;
          return false;
        }
      }
      for (const auto& [deg, row] : ext.rows())
        for (const auto& [c, mult] : row.entries())
          if (brute.count({deg, c}) == 0) {
            os << "model " << trial << " has an extra entry";
            return false;
          }
    }
    os << kKoszulModels << " models";
    return true;
  });

  criterion(5, "P^1 orbifold decomposition", [&](std::ostream& os) {
    for (int d = 2; d <= kP1MaxD; ++d)
      if (!check_p1(d).passed()) {
        os << "d=" << d;
        return false;
      }
    return true;
  });

  criterion(6, "Koszul and join Hilbert identities", [&](std::ostream& os) {
    std::map<std::pair<int, int>, std::set<int>> twists;
    for (const auto& cfg : sweep()) {
      const int cutoff = 2 * cfg.d() + 4;
      const auto kl = check_koszul_lines(cfg, cutoff);
      if (!kl.pass || !check_join_sequences(cfg, cutoff)) {
        os << "fails on " << cfg.label();
        return false;
      }
      twists[{cfg.m(), cfg.n()}].insert(kl.inferred_twist.value());
    }
    std::set<int> all;
    for (const auto& [mn, ts] : twists) {
      if (ts.size() != 1) {
        os << "twist varies for (m,n)=(" << mn.first << "," << mn.second << ")";
        return false;
      }
      all.insert(*ts.begin());
    }
    os << "inferred twist t in {";
    for (int t : all) os << t;
    os << "}";
    return true;
  });

  criterion(7, "graded line-module Ext in the Calabi-Yau cases", [&](std::ostream& os) {
    size_t vanishings = 0, equalities = 0;
    for (int n : {3, 4}) {
      const Config cfg = Config::make(n, n, n);
      for (int e = -n + 1; e <= 0; ++e)
        for (int i = -2 * n; i <= n; ++i) {
          const SpqResult s = ext_spq_cy(cfg, e, i);
          if (!s.agree_on_vanishing_range) {
            os << cfg.label() << " e=" << e << " i=" << i;
            return false;
          }
          if (s.in_vanishing_range) ++vanishings;
          if (s.in_equality_range) ++equalities;
        }
    }
    os << vanishings << " vanishings, " << equalities << " equalities";
    return vanishings > 0 && equalities > 0;
  });

  criterion(8, "non-vacuity", [&](std::ostream& os) {
    for (const auto& cfg : sweep())
      if (!negative_controls(cfg).passed()) {
        os << "control fails on " << cfg.label();
        return false;
      }
    const Run r = run("'" + cli + "' verify -m 2 -n 3 -d 5 --reversed-order");
    os << "reversed (2,3,5) exit " << r.exit_code;
    return r.exit_code == 1;
  });

  criterion(9, "cyclic covers", [&](std::ostream& os) {
    size_t configs = 0;
    for (int d = 1; d <= kSweepMaxD; ++d)
      for (int n = 1; n <= d; ++n) {
        const Report r = check_cyclic(Config::make(1, n, d, true));
        if (!r.passed()) {
          os << "(1," << n << "," << d << ")";
          return false;
        }
        if (n == 1 && (r.checks.size() != 1 || r.checks.front().kind != "trivial")) {
          os << "(1,1," << d << ") is not the trivial verdict";
          return false;
        }
        ++configs;
      }
    os << configs << " configs";
    return true;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
