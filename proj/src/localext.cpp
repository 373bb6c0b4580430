#include "sodcheck/localext.hpp"

#include <algorithm>
#include <numeric>

namespace sodcheck {

namespace {

void validate(const LocalModel& model) {
  const int count = static_cast<int>(model.vars.size());
  auto check = [&](const std::vector<int>& subset) {
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidArgument("local model subset lists a variable twice");
    for (int i : sorted)
      if (i < 0 || i >= count) throw InvalidArgument("local model subset index out of range");
  };
  check(model.source_killed);
  check(model.target_killed);
  for (const auto& v : model.vars)
    if (v.weight.modulus() != model.twist.modulus()) throw InvalidArgument("local model mixes character groups");
}

}  // namespace

ExtTable koszul_ext(const LocalModel& model) {
  validate(model);
  const int d = model.twist.modulus();
  const size_t count = model.vars.size();
  std::vector<bool> in_s(count, false), in_t(count, false);
  for (int i : model.source_killed) in_s[static_cast<size_t>(i)] = true;
  for (int i : model.target_killed) in_t[static_cast<size_t>(i)] = true;

  // Running product, indexed by cohomological degree.
  std::vector<CharVector> acc{CharVector(d)};
  acc[0].add(0, 1);
  int shift = 0;
  Character shift_char(0, d);
  std::vector<int> free_weights;
  for (size_t i = 0; i < count; ++i) {
    const Character w = model.vars[i].weight;
    if (in_s[i] && in_t[i]) {
      std::vector<CharVector> next(acc.size() + 1, CharVector(d));
      for (size_t s = 0; s < acc.size(); ++s) {
        next[s] = next[s] + acc[s];
        next[s + 1] = next[s + 1] + acc[s].shifted(-w);
      }
      acc = std::move(next);
    } else if (in_s[i]) {
      ++shift;
      shift_char = shift_char - w;
    } else if (!in_t[i]) {
      free_weights.push_back(w.value());
    }
  }

  CharVector free_part(d);
  if (free_weights.empty()) {
    free_part.add(0, 1);
  } else {
    int g = d;
    for (int w : free_weights) g = std::gcd(g, w);
    for (int e = 0; e < d; e += g) free_part.add(e, Mult::infinite());
  }

  ExtTable out(d);
  for (size_t s = 0; s < acc.size(); ++s)
    out.add_row(static_cast<int>(s) + shift, acc[s].tensor(free_part).shifted(shift_char + model.twist));
  return out;
}

std::vector<CharVector> exterior_powers(const std::vector<Character>& weights, int modulus) {
  std::vector<CharVector> acc{CharVector(modulus)};
  acc[0].add(0, 1);
  for (const auto& w : weights) {
    std::vector<CharVector> next(acc.size() + 1, CharVector(modulus));
    for (size_t s = 0; s < acc.size(); ++s) {
      next[s] = next[s] + acc[s];
      next[s + 1] = next[s + 1] + acc[s].shifted(w);
    }
    acc = std::move(next);
  }
  return acc;
}

ExtTable point_ext(const TangentModel& tm, Character delta) {
  const int d = delta.modulus();
  ExtTable out(d);
  const auto powers = exterior_powers(tm.weights, d);
  for (size_t s = 0; s < powers.size(); ++s) out.add_row(static_cast<int>(s), powers[s].shifted(delta));
  return out;
}

TangentModel tangent_at_f(const Config& cfg) {
  TangentModel tm;
  for (int i = 0; i < cfg.m() - 2; ++i) tm.weights.push_back(cfg.chi(0));
  for (int j = 0; j < cfg.n(); ++j) tm.weights.push_back(cfg.chi(1));
  return tm;
}

TangentModel tangent_at_g(const Config& cfg) {
  TangentModel tm;
  for (int i = 0; i < cfg.n() - 2; ++i) tm.weights.push_back(cfg.chi(0));
  for (int j = 0; j < cfg.m(); ++j) tm.weights.push_back(cfg.chi(-1));
  return tm;
}

std::vector<LocalVar> local_coords_at_f(const Config& cfg) {
  std::vector<LocalVar> vars;
  for (int j = 0; j < cfg.n(); ++j) vars.push_back({"y" + std::to_string(j + 1), cfg.chi(-1)});
  for (int i = 0; i < cfg.m() - 2; ++i) vars.push_back({"x" + std::to_string(i + 1), cfg.chi(0)});
  return vars;
}

std::vector<LocalVar> local_coords_at_g(const Config& cfg) {
  std::vector<LocalVar> vars;
  for (int i = 0; i < cfg.m(); ++i) vars.push_back({"u" + std::to_string(i + 1), cfg.chi(1)});
  for (int j = 0; j < cfg.n() - 2; ++j) vars.push_back({"y" + std::to_string(j + 1), cfg.chi(0)});
  return vars;
}

}  // namespace sodcheck
