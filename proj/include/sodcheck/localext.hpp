#pragma once

#include <string>
#include <vector>

#include "sodcheck/equicore.hpp"

namespace sodcheck {

struct LocalVar {
  std::string name;
  Character weight;
};

/// Ext between R/(S) and R/(T) (x) chi^twist over the formal power series ring R on `vars`.
/// `source_killed` and `target_killed` are index sets into `vars`.
struct LocalModel {
  std::vector<LocalVar> vars;
  std::vector<int> source_killed;
  std::vector<int> target_killed;
  Character twist;
};

/// Weights of the tangent space at a fixed point.
struct TangentModel {
  std::vector<Character> weights;
};

/// Ext^*_R(R/(S), R/(T) (x) chi^twist) with its full character decomposition.
/// Characters reached by the free variables outside S and T come back INFINITE.
ExtTable koszul_ext(const LocalModel& model);

/// Degree-s row: characters of Lambda^s(tangent weights), shifted by delta.
ExtTable point_ext(const TangentModel& tm, Character delta);

/// Character vector of the full exterior algebra, graded by exterior degree.
std::vector<CharVector> exterior_powers(const std::vector<Character>& weights, int modulus);

/// Tangent weights at a point of X_f: {0 x (m-2), +1 x n}.
TangentModel tangent_at_f(const Config& cfg);
/// Tangent weights at a point of X_g: {0 x (n-2), -1 x m}.
TangentModel tangent_at_g(const Config& cfg);

/// Local coordinates at a point of X_f: n coordinates of weight -1, then m-2 of weight 0.
/// Index 0 is the direction of a join line through the point.
std::vector<LocalVar> local_coords_at_f(const Config& cfg);
/// Local coordinates at a point of X_g: m coordinates of weight +1, then n-2 of weight 0.
std::vector<LocalVar> local_coords_at_g(const Config& cfg);

}  // namespace sodcheck
