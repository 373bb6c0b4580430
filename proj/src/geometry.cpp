#include "sodcheck/geometry.hpp"

#include <algorithm>
#include <regex>

#include "sodcheck/cohomology.hpp"
#include "sodcheck/localext.hpp"

namespace sodcheck {

namespace {

using Kind = SpanObject::Kind;

// Fiber character of O_X(k)chi^c at a point of X_f / X_g.
Character fiber_f(const SpanObject& lb) { return lb.ch; }
Character fiber_g(const SpanObject& lb) { return lb.ch - static_cast<long long>(lb.degree); }

ExtTable skyscraper(int d, Character c) {
  ExtTable out(d);
  out.add(0, c, 1);
  return out;
}

std::vector<int> all_but(size_t count, std::vector<int> skip) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(count); ++i)
    if (std::find(skip.begin(), skip.end(), i) == skip.end()) out.push_back(i);
  return out;
}

ExtTable point_to_line(const Config& cfg, const SpanObject& point, const SpanObject& line) {
  LocalModel model{{}, {}, {}, cfg.chi(0)};
  if (point.kind == Kind::PointF) {
    model.vars = local_coords_at_f(cfg);
    model.twist = fiber_f(line) - point.ch;
  } else {
    model.vars = local_coords_at_g(cfg);
    model.twist = fiber_g(line) - point.ch;
  }
  model.source_killed = all_but(model.vars.size(), {});
  model.target_killed = all_but(model.vars.size(), {0});
  return koszul_ext(model);
}

ExtTable line_to_line_shared(const Config& cfg, const SpanObject& later, const SpanObject& earlier, bool at_f) {
  LocalModel model{at_f ? local_coords_at_f(cfg) : local_coords_at_g(cfg), {}, {}, cfg.chi(0)};
  if (model.vars.size() < 2) throw UndecidedError("two distinct join lines need two line directions");
  model.source_killed = all_but(model.vars.size(), {0});
  model.target_killed = all_but(model.vars.size(), {1});
  model.twist = at_f ? fiber_f(earlier) - fiber_f(later) : fiber_g(earlier) - fiber_g(later);
  return koszul_ext(model);
}

// Ext from a locally free or point object that can be computed without duality.
ExtTable direct(const Config& cfg, const SpanObject& later, const SpanObject& earlier, Incidence inc) {
  const int d = cfg.d();
  const bool shared_only = inc == Incidence::SharedP || inc == Incidence::SharedQ;
  if (later.kind == Kind::LineBundle) {
    switch (earlier.kind) {
      case Kind::LineBundle:
        return cohomology_hypersurface(cfg, earlier.degree - later.degree, earlier.ch - later.ch);
      case Kind::PointF:
        return skyscraper(d, earlier.ch - fiber_f(later));
      case Kind::PointG:
        return skyscraper(d, earlier.ch - fiber_g(later));
      case Kind::LineOnJoin:
        return cohomology_projective(join_line_weights(d), earlier.degree - later.degree, earlier.ch - later.ch);
    }
  }
  if (later.is_point()) {
    if (shared_only) throw UndecidedError("shared-point incidence only applies to two join lines");
    if (inc == Incidence::Disjoint) return ExtTable(d);
    if (earlier.is_point()) {
      if (earlier.kind != later.kind) return ExtTable(d);
      const TangentModel tm = later.kind == Kind::PointF ? tangent_at_f(cfg) : tangent_at_g(cfg);
      return point_ext(tm, earlier.ch - later.ch);
    }
    if (earlier.kind == Kind::LineOnJoin) return point_to_line(cfg, later, earlier);
  }
  if (later.kind == Kind::LineOnJoin && earlier.kind == Kind::LineOnJoin) {
    switch (inc) {
      case Incidence::Coincident:
        return line_ext_bound(cfg, earlier.degree - later.degree, earlier.ch - later.ch);
      case Incidence::SharedP:
        return line_to_line_shared(cfg, later, earlier, true);
      case Incidence::SharedQ:
        return line_to_line_shared(cfg, later, earlier, false);
      case Incidence::Disjoint:
        return ExtTable(d);
    }
  }
  throw UndecidedError("no dispatch rule for Ext(" + later.str() + ", " + earlier.str() + ")");
}

bool needs_duality(const SpanObject& later, const SpanObject& earlier) {
  if (later.kind == Kind::LineBundle) return false;
  if (earlier.kind == Kind::LineBundle) return true;
  return later.kind == Kind::LineOnJoin && earlier.is_point();
}

}  // namespace

std::string SpanObject::str() const {
  const std::string c = std::to_string(ch.value());
  switch (kind) {
    case Kind::LineBundle:
      return "O(" + std::to_string(degree) + "," + c + ")";
    case Kind::PointF:
      return "Pf(" + c + ")";
    case Kind::PointG:
      return "Pg(" + c + ")";
    case Kind::LineOnJoin:
      return "L(" + std::to_string(degree) + "," + c + ")";
  }
  return "?";
}

SpanObject SpanObject::parse(const std::string& text, const Config& cfg) {
  static const std::regex two(R"(\s*(O|L)\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
  static const std::regex one(R"(\s*(Pf|Pg)\(\s*(-?\d+)\s*\)\s*)");
  std::smatch match;
  SpanObject obj{Kind::LineBundle, 0, cfg.chi(0)};
  try {
    if (std::regex_match(text, match, two)) {
      obj = SpanObject{match[1] == "O" ? Kind::LineBundle : Kind::LineOnJoin, std::stoi(match[2]),
                       cfg.chi(std::stoll(match[3]))};
    } else if (std::regex_match(text, match, one)) {
      obj = SpanObject{match[1] == "Pf" ? Kind::PointF : Kind::PointG, 0, cfg.chi(std::stoll(match[2]))};
    } else {
      throw InvalidArgument("cannot parse object '" + text + "' (expected O(k,c), Pf(c), Pg(c) or L(k,c))");
    }
  } catch (const std::out_of_range&) {
    throw InvalidArgument("number out of range in '" + text + "'");
  }
  validate_object(cfg, obj);
  return obj;
}

void validate_object(const Config& cfg, const SpanObject& obj) {
  if (obj.ch.modulus() != cfg.d()) throw InvalidArgument("object character is not a character of mu_d");
  switch (obj.kind) {
    case Kind::LineBundle:
      if (cfg.m() + cfg.n() < 3) throw InvalidArgument("line bundle Ext needs m + n >= 3");
      break;
    case Kind::PointF:
      if (cfg.m() < 2) throw InvalidArgument("X_f is empty when m < 2");
      break;
    case Kind::PointG:
      if (cfg.n() < 2) throw InvalidArgument("X_g is empty when n < 2");
      break;
    case Kind::LineOnJoin:
      if (cfg.m() < 2 || cfg.n() < 2) throw InvalidArgument("join lines need m >= 2 and n >= 2");
      break;
  }
}

int NormalSplitting::degree_sum() const {
  int sum = 0;
  for (const auto& [deg, ch] : summands) sum += deg;
  return sum;
}

NormalSplitting normal_bundle_line(const Config& cfg) {
  if (cfg.m() < 2 || cfg.n() < 2) throw InvalidArgument("join lines need m >= 2 and n >= 2");
  NormalSplitting out;
  for (int i = 0; i < cfg.m() - 2; ++i) out.summands.emplace_back(1, cfg.chi(0));
  for (int j = 0; j < cfg.n() - 2; ++j) out.summands.emplace_back(1, cfg.chi(1));
  out.summands.emplace_back(2 - cfg.d(), cfg.chi(1));
  return out;
}

ExtTable line_ext_bound(const Config& cfg, int dk, Character dc) {
  const int d = cfg.d();
  const WeightedSpace line = join_line_weights(d);
  // Lambda^s N as a list of (degree, character) summands.
  std::vector<std::vector<std::pair<int, Character>>> powers{{{0, cfg.chi(0)}}};
  for (const auto& [deg, ch] : normal_bundle_line(cfg).summands) {
    std::vector<std::vector<std::pair<int, Character>>> next(powers.size() + 1);
    for (size_t s = 0; s < powers.size(); ++s) {
      for (const auto& term : powers[s]) {
        next[s].push_back(term);
        next[s + 1].emplace_back(term.first + deg, term.second + ch);
      }
    }
    powers = std::move(next);
  }
  ExtTable out(d);
  for (size_t s = 0; s < powers.size(); ++s) {
    for (const auto& [deg, ch] : powers[s]) {
      const ExtTable h = cohomology_projective(line, deg + dk, ch + dc);
      for (const auto& [r, row] : h.rows()) out.add_row(r + static_cast<int>(s), row);
    }
  }
  return out;
}

ExtTable self_ext_line(const Config& cfg) { return line_ext_bound(cfg, 0, cfg.chi(0)); }

SpanObject serre_image(const Config& cfg, const SpanObject& obj) {
  const auto [tw_deg, tw_char] = cfg.serre_twist();
  SpanObject out = obj;
  switch (obj.kind) {
    case Kind::LineBundle:
    case Kind::LineOnJoin:
      out.degree += tw_deg;
      out.ch = obj.ch + tw_char;
      break;
    case Kind::PointF:
      out.ch = obj.ch + tw_char;
      break;
    case Kind::PointG:
      out.ch = obj.ch + tw_char - static_cast<long long>(tw_deg);
      break;
  }
  return out;
}

ExtTable hom_table(const Config& cfg, const SpanObject& later, const SpanObject& earlier, Incidence incidence) {
  validate_object(cfg, later);
  validate_object(cfg, earlier);
  if (!needs_duality(later, earlier)) return direct(cfg, later, earlier, incidence);
  // Ext^i(A, B) = Ext^{dim-i}(B, S(A))^vee.
  return direct(cfg, earlier, serre_image(cfg, later), incidence).dual_reversed(cfg.serre_shift());
}

}  // namespace sodcheck
