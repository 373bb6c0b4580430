#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sodcheck/equicore.hpp"

namespace sodcheck {

/// Spanning objects: a twisted line bundle, a twisted skyscraper at a generic point
/// of X_f or X_g, or a twisted structure sheaf of a join line l(p, q).
struct SpanObject {
  enum class Kind { LineBundle, PointF, PointG, LineOnJoin };
  Kind kind;
  int degree;  // unused for points
  Character ch;

  static SpanObject line_bundle(const Config& cfg, int k, long long c) { return {Kind::LineBundle, k, cfg.chi(c)}; }
  static SpanObject point_f(const Config& cfg, long long c) { return {Kind::PointF, 0, cfg.chi(c)}; }
  static SpanObject point_g(const Config& cfg, long long c) { return {Kind::PointG, 0, cfg.chi(c)}; }
  static SpanObject join_line(const Config& cfg, int k, long long c) { return {Kind::LineOnJoin, k, cfg.chi(c)}; }

  bool is_point() const { return kind == Kind::PointF || kind == Kind::PointG; }

  /// "O(k,c)", "Pf(c)", "Pg(c)" or "L(k,c)".
  std::string str() const;
  static SpanObject parse(const std::string& text, const Config& cfg);

  bool operator==(const SpanObject&) const = default;
};

/// How the supports of two objects meet. Points and lines are generic, so only the
/// incidence pattern matters: equal points, a point on the line, equal lines, two lines
/// through the same X_f point, two lines through the same X_g point, or nothing shared.
enum class Incidence { Coincident, SharedP, SharedQ, Disjoint };

/// Raised when a pair of objects falls outside every dispatch rule.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NormalSplitting {
  std::vector<std::pair<int, Character>> summands;
  int degree_sum() const;
};

/// Splitting type of the normal bundle of a join line in X.
NormalSplitting normal_bundle_line(const Config& cfg);

/// E2 page bounding Ext^*(O_l(k1)chi^c1, O_l(k2)chi^c2): row t collects H^r(Lambda^s N (x) O(dk)chi^dc), r+s = t.
ExtTable line_ext_bound(const Config& cfg, int dk, Character dc);
ExtTable self_ext_line(const Config& cfg);

/// Ext^*(later, earlier).
ExtTable hom_table(const Config& cfg, const SpanObject& later, const SpanObject& earlier,
                   Incidence incidence = Incidence::Coincident);

/// A (x) O_X(d-m-n) (x) chi^{-n}, without the shift.
SpanObject serre_image(const Config& cfg, const SpanObject& obj);

/// Whether the object exists for this configuration.
void validate_object(const Config& cfg, const SpanObject& obj);

}  // namespace sodcheck
