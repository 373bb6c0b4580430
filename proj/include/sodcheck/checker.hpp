#pragma once

#include <string>
#include <vector>

#include "sodcheck/equicore.hpp"
#include "sodcheck/geometry.hpp"

namespace sodcheck {

struct Component {
  std::string name;
  std::vector<SpanObject> generators;
};

/// Ordered components; Hom from a later generator to an earlier one must vanish.
struct Decomposition {
  std::vector<Component> components;

  const Component& component(const std::string& name) const;
  size_t size() const;
};

/// <D_g1, D_fg, D_g2, D_f, A> with A = A1 || A2 || A3.
Decomposition enumerate_components(const Config& cfg);

struct CheckRecord {
  std::string id;
  std::string kind;
  std::string later;
  std::string earlier;
  ExtTable table{1};
  bool pass = true;
  /// Informational records are reported but never fail the run.
  bool asserted = true;
  std::string note;
};

struct Report {
  std::string label;
  int m = 0;
  int n = 0;
  int d = 0;
  bool cyclic = false;
  std::vector<CheckRecord> checks;

  bool passed() const;
  size_t failure_count() const;
  void append(const Report& other);
};

struct CheckOptions {
  bool reversed_order = false;
  int jobs = 1;
};

/// Every later -> earlier vanishing plus the self-Ext checks of each generator.
Report check_decomposition(const Config& cfg, const Decomposition& decomposition, int jobs = 1);
Report check_semiorthogonality(const Config& cfg, const CheckOptions& options = {});

/// <O_p chi^{d-1}, ..., O_p chi, O_q chi^{-(d-1)}, ..., O_q chi^{-1}, O(-d), O> on [P^1 / mu_d].
Report check_p1(int d);
/// Ext^*(later, earlier) on [P^1 / mu_d]; points use PointF for p = [1:0] and PointG for q = [0:1].
ExtTable p1_hom(int d, const SpanObject& later, const SpanObject& earlier);

/// <D_g^1, ..., D_g^{d-1}, pi^* D(P^{n-1})> for m = 1, with pi^* O(j) = O_X(j) chi^j.
Report check_cyclic(const Config& cfg, int jobs = 1);

/// Non-vanishing facts that guard against a vacuous pass.
Report negative_controls(const Config& cfg);

/// Koszul and join identities, ideal-power counts and, when m = n = d, the graded Ext cross-check.
Report hilbert_suite(const Config& cfg, int cutoff);

/// Serre duality on deterministic pseudo-random samples with |k| <= 10.
Report serre_suite(const Config& cfg, int samples);

struct VerifyOptions {
  bool reversed_order = false;
  int cutoff = -1;  // negative: 2d + 4
  int jobs = 1;
};

/// Everything that applies to the configuration.
Report verify(const Config& cfg, const VerifyOptions& options = {});

}  // namespace sodcheck
