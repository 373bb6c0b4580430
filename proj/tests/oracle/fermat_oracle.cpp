#include "fermat_oracle.hpp"

#include <map>

#include "exact_rank.hpp"

namespace oracle {

namespace {

using Exps = std::vector<int>;

void compositions(int vars, int total, int min_part, Exps& cur, std::vector<Exps>& out) {
  if (static_cast<int>(cur.size()) == vars - 1) {
    if (total >= min_part) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int e = min_part; e <= total; ++e) {
    cur.push_back(e);
    compositions(vars, total - e, min_part, cur, out);
    cur.pop_back();
  }
}

std::vector<Exps> exponent_vectors(int vars, int total, int min_part) {
  std::vector<Exps> out;
  if (total < vars * min_part) return out;
  Exps cur;
  compositions(vars, total, min_part, cur, out);
  return out;
}

int residue(long long v, int d) { return static_cast<int>(((v % d) + d) % d); }

// Character of x^e (e may be negative for Cech classes) inside O(k) chi^c.
int character(const Exps& e, int m, int c, int d) {
  long long w = c;
  for (size_t i = static_cast<size_t>(m); i < e.size(); ++i) w -= e[i];
  return residue(w, d);
}

// rank of multiplication by the Fermat equation from `src` to `dst`, within one character.
size_t multiplication_rank(const std::vector<Exps>& src, const std::vector<Exps>& dst, int d, bool cech) {
  if (src.empty() || dst.empty()) return 0;
  std::map<Exps, size_t> index;
  for (size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
  IntMatrix mat(dst.size(), std::vector<mpz_class>(src.size(), 0));
  for (size_t j = 0; j < src.size(); ++j) {
    for (size_t v = 0; v < src[j].size(); ++v) {
      Exps e = src[j];
      if (cech) {
        // 1/z^a times z_v^d is nonzero in top Cech cohomology only while every exponent stays negative.
        e[v] -= d;
        if (e[v] < 1) continue;
      } else {
        e[v] += d;
      }
      auto it = index.find(e);
      if (it != index.end()) mat[it->second][j] += 1;
    }
  }
  return exact_rank(mat);
}

}  // namespace

FermatCohomology fermat_cohomology(int m, int n, int d, int k, int c) {
  const int vars = m + n;
  FermatCohomology out;
  std::vector<unsigned long long> h0(static_cast<size_t>(d), 0), top(static_cast<size_t>(d), 0);

  // Sections: monomials of degree k and k-d.
  const auto sk = exponent_vectors(vars, k, 0);
  const auto skd = exponent_vectors(vars, k - d, 0);
  // Cech classes 1/z^a with every a_i >= 1 and |a| = -(degree); stored by a.
  const auto ck = exponent_vectors(vars, -k, 1);
  const auto ckd = exponent_vectors(vars, -(k - d), 1);

  for (int e = 0; e < d; ++e) {
    auto filter = [&](const std::vector<Exps>& all, bool cech) {
      std::vector<Exps> out_vec;
      for (const auto& x : all) {
        Exps signed_exp = x;
        if (cech)
          for (auto& v : signed_exp) v = -v;
        if (character(signed_exp, m, c, d) == e) out_vec.push_back(x);
      }
      return out_vec;
    };
    const auto a = filter(sk, false), b = filter(skd, false);
    h0[static_cast<size_t>(e)] = a.size() - multiplication_rank(b, a, d, false);
    const auto p = filter(ckd, true), q = filter(ck, true);
    top[static_cast<size_t>(e)] = p.size() - multiplication_rank(p, q, d, true);
  }
  out.rows[0] = h0;
  out.rows[m + n - 2] = top;
  return out;
}

}  // namespace oracle
