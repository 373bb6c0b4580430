#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "sodcheck/checker.hpp"
#include "sodcheck/localext.hpp"
#include "sodcheck/report_io.hpp"

using namespace sodcheck;

namespace {

std::vector<Config> sweep(int max_d) {
  std::vector<Config> out;
  for (int d = 2; d <= max_d; ++d)
    for (int m = 2; m <= d; ++m)
      for (int n = m; n <= d; ++n) out.push_back(Config::make(m, n, d));
  return out;
}

std::vector<SpanObject> parse_all(const Config& cfg, const std::vector<std::string>& items) {
  std::vector<SpanObject> out;
  for (const auto& s : items) out.push_back(SpanObject::parse(s, cfg));
  return out;
}

void check_fixture(const Config& cfg, const std::vector<std::vector<std::string>>& expected) {
  const Decomposition dec = enumerate_components(cfg);
  const std::vector<std::string> names = {"D_g1", "D_fg", "D_g2", "D_f", "A"};
  REQUIRE(dec.components.size() == names.size());
  for (size_t i = 0; i < names.size(); ++i) {
    CHECK(dec.components[i].name == names[i]);
    CHECK_MESSAGE(dec.components[i].generators == parse_all(cfg, expected[i]), cfg.label() << ' ' << names[i]);
  }
}

}  // namespace

TEST_CASE("decomposition fixtures") {
  check_fixture(Config::make(2, 2, 4), {{"Pg(-2)", "Pg(-1)"},
                                        {"L(-2,-2)"},
                                        {},
                                        {"Pf(2)", "Pf(1)"},
                                        {"O(-2,-1)", "O(-1,-1)", "O(-1,0)", "O(0,0)"}});
  check_fixture(Config::make(2, 3, 5), {{"Pg(-3)", "Pg(-2)"},
                                        {"L(-2,-3)"},
                                        {"Pg(-1)"},
                                        {"Pf(2)", "Pf(1)"},
                                        {"O(-3,-2)", "O(-2,-2)", "O(-2,-1)", "O(-1,-1)", "O(-1,0)", "O(0,0)"}});
  check_fixture(Config::make(3, 3, 6), {{"Pg(-3)", "Pg(-2)", "Pg(-1)"},
                                        {"L(-3,-3)"},
                                        {},
                                        {"Pf(3)", "Pf(2)", "Pf(1)"},
                                        {"O(-4,-2)", "O(-3,-2)", "O(-3,-1)", "O(-2,-2)", "O(-2,-1)", "O(-2,0)",
                                         "O(-1,-1)", "O(-1,0)", "O(0,0)"}});
}

TEST_CASE("decomposition shape") {
  for (const auto& cfg : sweep(10)) {
    const Decomposition dec = enumerate_components(cfg);
    const auto& a = dec.component("A").generators;
    CHECK(a.size() == static_cast<size_t>(cfg.m() * cfg.n()));
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end(), [](const SpanObject& x, const SpanObject& y) {
      return std::make_pair(x.degree, x.ch) < std::make_pair(y.degree, y.ch);
    });
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(dec.component("D_f").generators.empty() == (cfg.d() == cfg.n()));
    CHECK(dec.component("D_g1").generators.size() + dec.component("D_g2").generators.size() ==
          static_cast<size_t>(cfg.d() - cfg.m()));
    CHECK((dec.component("D_g1").generators.empty() && dec.component("D_g2").generators.empty()) == (cfg.d() == cfg.m()));
    CHECK(dec.component("D_g2").generators.empty() == (cfg.m() == cfg.n()));
    CHECK(dec.component("D_fg").generators.size() == 1);
  }
  CHECK_THROWS_AS(enumerate_components(Config::make(1, 2, 3, true)), InvalidArgument);
  CHECK_THROWS(enumerate_components(Config::make(2, 2, 2)).component("D_x"));
}

TEST_CASE("semi-orthogonality holds across the sweep") {
  for (const auto& cfg : sweep(8)) {
    const Report r = check_semiorthogonality(cfg);
    CHECK_MESSAGE(r.passed(), cfg.label());
    CHECK(r.checks.size() > 0);
  }
}

TEST_CASE("reversed order is detected") {
  for (const auto& cfg : {Config::make(2, 3, 5), Config::make(2, 2, 4), Config::make(3, 3, 6)}) {
    const Report r = check_semiorthogonality(cfg, {true, 1});
    CHECK_FALSE(r.passed());
    CHECK(r.failure_count() > 0);
  }
}

TEST_CASE("adjacent component swaps") {
  // Index i swaps components i and i+1 of <D_g1, D_fg, D_g2, D_f, A>.
  std::vector<bool> detected(4, false);
  for (const auto& cfg : sweep(7)) {
    const Decomposition base = enumerate_components(cfg);
    for (size_t i = 0; i + 1 < base.components.size(); ++i) {
      if (detected[i]) continue;
      Decomposition swapped = base;
      std::swap(swapped.components[i], swapped.components[i + 1]);
      if (!check_decomposition(cfg, swapped).passed()) detected[i] = true;
    }
  }
  CHECK(detected[0]);
  CHECK(detected[1]);
  CHECK(detected[3]);
  // Points of X_g away from X_f and points of X_f away from X_g have disjoint support.
  CHECK_FALSE(detected[2]);
}

TEST_CASE("reports do not depend on the thread count") {
  for (const auto& cfg : {Config::make(2, 3, 5), Config::make(3, 4, 7)}) {
    VerifyOptions one, many;
    many.jobs = 6;
    CHECK(report_to_json(verify(cfg, one)) == report_to_json(verify(cfg, many)));
  }
}

TEST_CASE("P^1 orbifold") {
  CHECK(p1_hom(3, SpanObject{SpanObject::Kind::LineBundle, 0, Character(0, 3)},
               SpanObject{SpanObject::Kind::PointF, 0, Character(1, 3)})
            .invariant_zero());
  CHECK(p1_hom(3, SpanObject{SpanObject::Kind::LineBundle, 0, Character(0, 3)},
               SpanObject{SpanObject::Kind::LineBundle, -3, Character(0, 3)})
            .row(0)
            .is_zero());
  CHECK(p1_hom(3, SpanObject{SpanObject::Kind::LineBundle, 0, Character(0, 3)},
               SpanObject{SpanObject::Kind::LineBundle, -3, Character(0, 3)})
            .invariant_zero());
  for (int d = 2; d <= 12; ++d) CHECK_MESSAGE(check_p1(d).passed(), d);
  CHECK_THROWS_AS(check_p1(1), InvalidArgument);
}

TEST_CASE("cyclic covers") {
  for (int d = 1; d <= 6; ++d) {
    const Report t = check_cyclic(Config::make(1, 1, d, true));
    CHECK(t.passed());
    CHECK(t.checks.size() == 1);
  }
  const Report r = check_cyclic(Config::make(1, 3, 5, true));
  CHECK(r.passed());
  const auto self = std::find_if(r.checks.begin(), r.checks.end(), [](const CheckRecord& c) { return c.id == "cyclic:point_self"; });
  REQUIRE(self != r.checks.end());
  CHECK(self->table.invariants() == std::map<int, Mult>{{0, Mult(1)}, {1, Mult(1)}});
  CHECK(self->table.row(1).at(4) == Mult(1));
  CHECK(self->table.row(2).at(4) == Mult(1));
  CHECK(self->table.total() == Mult(4));
  for (int d = 2; d <= 8; ++d)
    for (int n = 2; n <= d; ++n) CHECK_MESSAGE(check_cyclic(Config::make(1, n, d, true)).passed(), n << "," << d);
}

TEST_CASE("the (1,2,d) point tables are the P^1 ones") {
  for (int d = 2; d <= 9; ++d) {
    const Config cfg = Config::make(1, 2, d, true);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const auto x = SpanObject::point_g(cfg, a), y = SpanObject::point_g(cfg, b);
        CHECK(hom_table(cfg, x, y) == p1_hom(d, x, y));
      }
  }
}

TEST_CASE("negative controls") {
  const Config c224 = Config::make(2, 2, 4);
  const Report r = negative_controls(c224);
  CHECK(r.passed());
  auto find = [&](const std::string& id) {
    return *std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckRecord& c) { return c.id == id; });
  };
  CHECK(find("control:hom_O_Pf").table.invariants() == std::map<int, Mult>{{0, Mult(1)}});
  CHECK(find("control:f_gap").table.invariant(2) == Mult(1));
  CHECK(negative_controls(Config::make(2, 3, 5)).passed());
  CHECK(find("control:line_hom").table.invariant(0) == Mult(1));
  for (const auto& cfg : sweep(8)) CHECK(negative_controls(cfg).passed());
}

TEST_CASE("aggregate verify") {
  const Report r = verify(Config::make(3, 3, 3));
  CHECK(r.passed());
  for (const std::string kind : {"semiorthogonal", "exceptional", "hilbert", "spq", "serre", "control"})
    CHECK_MESSAGE(std::any_of(r.checks.begin(), r.checks.end(), [&](const CheckRecord& c) { return c.kind == kind; }),
                  kind);
  CHECK(report_to_json(serre_suite(Config::make(2, 3, 5), 40)) == report_to_json(serre_suite(Config::make(2, 3, 5), 40)));
  CHECK(serre_suite(Config::make(2, 3, 5), 40).passed());
}
