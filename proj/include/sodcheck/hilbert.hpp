#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sodcheck/equicore.hpp"

namespace sodcheck {

/// Truncated equivariant Hilbert series: pieces in degrees [0, cutoff], one signed
/// multiplicity per character, so alternating sums stay representable.
class EqHilbert {
 public:
  EqHilbert(int cutoff, int modulus);

  int cutoff() const { return cutoff_; }
  int modulus() const { return modulus_; }
  std::int64_t at(int degree, Character c) const;
  void add(int degree, Character c, std::int64_t mult);

  EqHilbert operator+(const EqHilbert& other) const;
  EqHilbert operator-(const EqHilbert& other) const;
  EqHilbert scaled(std::int64_t factor) const;

  /// First degree where the two series differ, or -1.
  int first_difference(const EqHilbert& other) const;

  bool operator==(const EqHilbert&) const = default;

 private:
  int cutoff_;
  int modulus_;
  std::vector<std::vector<std::int64_t>> table_;
};

/// Degree-a piece: H^0(O_X(k+a) (x) chi^c).
EqHilbert hs_line_bundle_X(const Config& cfg, int k, long long c, int cutoff);
/// Degree-a piece: H^0(O_l(k+a) (x) chi^c) on a join line, coordinates of weight 0 and -1.
EqHilbert hs_module_line(const Config& cfg, int k, long long c, int cutoff);

/// Alternating sum of the Koszul complex of E = O(1)^{m-1} + (O(1)chi)^{n-1} on X.
EqHilbert koszul_lines_alternating(const Config& cfg, int cutoff);

struct KoszulLinesResult {
  bool pass = false;
  Character inferred_twist;
  /// Number of characters t satisfying the identity; 1 when the twist is determined.
  int matching_twists = 0;
  bool literal_statement_holds = false;
};

/// Finds the characters t with  sum_i (-1)^i HS(Lambda^i E^vee) = HS(O_l) - HS(O_l(-d) chi^t).
/// Requires cutoff >= 2d so that t is determined.
KoszulLinesResult check_koszul_lines(const Config& cfg, int cutoff);

struct JoinSequencesResult {
  bool join_fq = false;
  bool free_orbit = false;
  bool free_orbit_regular = false;
  bool cone_xg = false;
  bool pass() const { return join_fq && free_orbit && free_orbit_regular && cone_xg; }
};

/// Euler-characteristic checks of the complete intersections J(X_f, q), a free orbit
/// and the projective cone X_g.
JoinSequencesResult check_join_sequences_detail(const Config& cfg, int cutoff);
bool check_join_sequences(const Config& cfg, int cutoff);

/// Number of degree-r monomials in m variables, binomial(m+r-1, r).
std::uint64_t ideal_power_counts(int m, int r);
/// Total length of the filtration of O/I^r: sum_{s=1}^{r} N(s-1) = binomial(m+r-1, r-1).
std::uint64_t ideal_filtration_length(int m, int r);

struct SpqResult {
  ExtTable lhs;
  ExtTable rhs;
  bool in_vanishing_range = false;
  bool in_literal_vanishing_range = false;
  bool in_equality_range = false;
  bool agree_on_vanishing_range = true;
};

/// Graded-algebra Ext^*(S_{p,q}, A(e) chi^i) against Ext_X^*(O_l, O_X(e) chi^i). Requires m = n = d.
SpqResult ext_spq_cy(const Config& cfg, int e, int i);

}  // namespace sodcheck
