#pragma once

// The family K_{-2n w_x} for a node x and the lowered elements
// ad(F_x)(K_{-2n w_x}), with their cyclic modules under the complementary Levi.

#include <optional>
#include <string>
#include <vector>

#include "uqa/module_engine.hpp"

namespace uqa {

/// K_{-2n w_x} for the node x recorded in `levi`.
AlgebraElement family_torus(const UqAlgebra& alg, const LeviSpec& levi, int n);

/// ad(F_x)(K_{-2n w_x}) = (q^{-2n d_x} - 1) K_{-2n w_x} F_x K_{alpha_x}; zero for n = 0.
/// Throws std::invalid_argument when the Levi is not the complement of a node.
AlgebraElement krahmer_element(const UqAlgebra& alg, const LeviSpec& levi, int n);

/// Cyclic module outcome for one generator.
struct ModuleOutcome {
  bool closed = false;
  std::size_t dim = 0;  // final or partial dimension
  std::optional<ModuleSpace> module;
  std::optional<IsotypeResult> isotype;
};

struct FamilyEntry {
  int n = 0;
  AlgebraElement torus;     // K_{-2n w_x}
  AlgebraElement element;   // ad(F_x)(K_{-2n w_x})
  bool degenerate = false;  // element is zero
  bool is_hwv = false;      // killed by ad(E_j), j in S, and of weight -alpha_x
  std::optional<Weight> hw_weight;
  ModuleOutcome literal;    // M(K_{-2n w_x})
  ModuleOutcome lowered;    // M(ad(F_x)(K_{-2n w_x}))
};

struct FamilyReport {
  std::string algebra;
  int x = 0;  // 0-based node
  LeviSpec levi;
  bool cominuscule = false;
  Weight expected_lambda;  // -alpha_x
  std::vector<FamilyEntry> entries;
  /// same[i][j]: the lowered modules of entries i and j coincide (both closed).
  std::vector<std::vector<bool>> same;
  std::vector<std::string> flags;

  std::size_t certified_count() const;
  /// True when all nondegenerate lowered modules are certified V(expected_lambda)
  /// and pairwise distinct.
  bool fiber_ok() const;
};

/// Builds both readings for each n in `ns` (ascending order is kept as given).
FamilyReport verify_fiber_family(const UqAlgebra& alg, int x, const std::vector<int>& ns,
                                 std::size_t cap = kDefaultCap);

/// Plain-text table: n, literal dim, lowered dim, certified lambda, distinct from previous.
std::string family_summary_table(const FamilyReport& r);

}  // namespace uqa
