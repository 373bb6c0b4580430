#include "sodcheck/cohomology.hpp"

#include <map>

namespace sodcheck {

namespace {

// Per-residue monomial counts for one degree, indexed by weight residue.
using ResidueCounts = std::vector<std::uint64_t>;

ResidueCounts compute_counts(const std::vector<int>& class_sizes, int modulus, long long a) {
  const auto deg = static_cast<size_t>(a);
  std::vector<ResidueCounts> dp(deg + 1, ResidueCounts(static_cast<size_t>(modulus), 0));
  dp[0][0] = 1;
  for (int r = 0; r < modulus; ++r) {
    const int size = class_sizes[static_cast<size_t>(r)];
    if (size == 0) continue;
    std::vector<ResidueCounts> next(deg + 1, ResidueCounts(static_cast<size_t>(modulus), 0));
    for (size_t t = 0; t <= deg; ++t) {
      for (size_t s = 0; s <= t; ++s) {
        const std::uint64_t ways = binomial(static_cast<long long>(s) + size - 1, size - 1);
        const auto step = static_cast<size_t>((static_cast<long long>(r) * static_cast<long long>(s)) % modulus);
        const ResidueCounts& prev = dp[t - s];
        for (size_t e = 0; e < static_cast<size_t>(modulus); ++e) {
          if (prev[e] == 0) continue;
          auto& slot = next[t][(e + step) % static_cast<size_t>(modulus)];
          slot = checked_add(slot, checked_mul(prev[e], ways));
        }
      }
    }
    dp = std::move(next);
  }
  return dp[deg];
}

const ResidueCounts& counts_for(const WeightedSpace& space, long long a) {
  thread_local std::map<std::pair<std::vector<int>, long long>, ResidueCounts> cache;
  const int d = space.modulus();
  std::vector<int> sizes(static_cast<size_t>(d), 0);
  for (const auto& w : space.weights()) ++sizes[static_cast<size_t>(w.value())];
  auto key = std::make_pair(sizes, a);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(std::move(key), compute_counts(sizes, d, a)).first;
  return it->second;
}

}  // namespace

std::uint64_t count_monomials(const WeightedSpace& space, long long a, Character c) {
  if (a < 0) return 0;
  if (c.modulus() != space.modulus()) throw InvalidArgument("character and space use different groups");
  return counts_for(space, a)[static_cast<size_t>(c.value())];
}

ExtTable cohomology_projective(const WeightedSpace& space, long long k, Character c) {
  const int d = space.modulus();
  const int top = space.dim();
  ExtTable out(d);
  // H^0: a monomial section mu of O(k)chi^c carries character wt(mu) + c.
  if (k >= 0) {
    for (int e = 0; e < d; ++e) out.add(0, Character(e, d), count_monomials(space, k, Character(e, d) - c));
  }
  // H^top is dual to H^0(O(-k-top-1) chi^{det - c}).
  const long long dual_degree = -k - top - 1;
  if (dual_degree >= 0) {
    const Character det = space.weight_determinant();
    for (int e = 0; e < d; ++e)
      out.add(top, Character(e, d), count_monomials(space, dual_degree, c - det - Character(e, d)));
  }
  return out;
}

ExtTable cohomology_hypersurface(const Config& cfg, long long k, Character c) {
  if (cfg.m() + cfg.n() < 3) throw InvalidArgument("hypersurface cohomology requires m + n >= 3");
  const int d = cfg.d();
  const WeightedSpace space = ambient_weights(cfg);
  const int top_p = space.dim();
  const ExtTable here = cohomology_projective(space, k, c);
  const ExtTable shifted = cohomology_projective(space, k - d, c);
  ExtTable out(d);
  for (int e = 0; e < d; ++e) {
    const Character ch(e, d);
    const std::uint64_t h0 = here.row(0).at(ch).finite();
    const std::uint64_t h0_sub = shifted.row(0).at(ch).finite();
    if (h0 < h0_sub) throw std::logic_error("multiplication by the equation is not injective on sections");
    out.add(0, ch, h0 - h0_sub);
    const std::uint64_t top_sub = shifted.row(top_p).at(ch).finite();
    const std::uint64_t top_here = here.row(top_p).at(ch).finite();
    if (top_sub < top_here) throw std::logic_error("multiplication by the equation is not surjective on top cohomology");
    out.add(cfg.dim(), ch, top_sub - top_here);
  }
  return out;
}

bool serre_check(const Config& cfg, const std::vector<std::pair<long long, long long>>& samples) {
  const auto [tw_deg, tw_char] = cfg.serre_twist();
  const int top = cfg.serre_shift();
  for (const auto& [k, c] : samples) {
    const ExtTable lhs = cohomology_hypersurface(cfg, k, cfg.chi(c));
    const ExtTable rhs = cohomology_hypersurface(cfg, -k + tw_deg, -cfg.chi(c) + tw_char);
    for (int i = 0; i <= top; ++i)
      if (!(lhs.invariant(i) == rhs.invariant(top - i))) return false;
  }
  return true;
}

}  // namespace sodcheck
