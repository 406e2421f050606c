#pragma once

// Inclusion order on cyclic adjoint modules: intervals below a module,
// minimal elements, highest-weight decomposition and lattice probing.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uqa/module_engine.hpp"

namespace uqa {

/// M(w) is contained in M(v), decided by membership of w in M(v).
/// Throws CapExceededError when M(v) does not close within the cap.
bool leq(const UqAlgebra& alg, const AlgebraElement& w, const AlgebraElement& v, const LeviSpec& levi,
         std::size_t cap = kDefaultCap);

enum class Exactness { Exact, ProbeLowerBound };

/// Cyclic submodules found below a module, ordered by dimension. Node 0 is
/// the zero module and the last node is the top.
struct PosetInterval {
  std::vector<ModuleSpace> nodes;
  std::vector<IsotypeResult> isotypes;               // aligned with nodes
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (lower, upper) covering pairs
  Exactness exactness = Exactness::Exact;
  std::size_t probes = 0;
  std::uint64_t seed = 0;

  const ModuleSpace& top() const { return nodes.back(); }
  bool covers(std::size_t upper, std::size_t lower) const;
};

/// [0, M(v)]. Multiplicity-free tops are enumerated exactly as all sums of
/// irreducible constituents; otherwise the nodes are closures of a probe set
/// (basis vectors, highest weight vectors and `probes` seeded combinations
/// with coefficients in [-3, 3], alternately of the basis and of the highest
/// weight vectors) and the result is a lower bound.
PosetInterval interval(const UqAlgebra& alg, const AlgebraElement& v, const LeviSpec& levi,
                       std::size_t probes = 16, std::uint64_t seed = 1, std::size_t cap = kDefaultCap);

/// Indices of the nonzero nodes whose only strict subnode is zero.
std::vector<std::size_t> minimal_elements(const PosetInterval& p);

struct DecompositionStep {
  Weight weight;
  AlgebraElement hw_vector;        // highest weight vector of M(v), not in the previous sum
  std::size_t quotient_hw_dim = 0; // dim of the quotient highest weight space at `weight`
  std::size_t residual_before = 0; // dim M(v) - dim(previous sum)
  std::size_t residual_after = 0;
};

struct Decomposition {
  ModuleSpace module;                 // M(v)
  std::vector<DecompositionStep> steps;
  ModuleSpace accumulated;            // sum of the M(w_i); equals module on return
};

/// Repeatedly finds a highest weight vector of the current quotient, lifts it
/// to a highest weight vector of M(v) and adds its cyclic module to the sum.
Decomposition decompose_by_hwv(const UqAlgebra& alg, const AlgebraElement& v, const LeviSpec& levi,
                               std::size_t cap = kDefaultCap);

struct LatticeVerdict {
  enum class Kind { Lattice, Counterexample };
  enum class Failure { None, NoCyclicUpperBound, NoGreatestLowerBound };
  Kind kind = Kind::Lattice;
  Failure failure = Failure::None;
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  /// True when the verdict follows from the multiplicity criterion for
  /// cyclicity; false when it rests on probing alone.
  bool certified = false;
  std::size_t pairs_checked = 0;
  std::size_t join_witnesses = 0;  // joins for which a generator was found by probing
  std::string reason;
};

/// Checks every pair of nodes for a join and a meet inside the set of cyclic
/// submodules. A+B is the join iff it is cyclic, otherwise no cyclic upper
/// bound exists; likewise A∩B for meets. Cyclic joins are additionally
/// witnessed by searching for a generator among seeded combinations.
LatticeVerdict lattice_probe(const UqAlgebra& alg, const std::vector<ModuleSpace>& nodes,
                             std::size_t probes = 16, std::uint64_t seed = 1, std::size_t cap = kDefaultCap);

}  // namespace uqa
