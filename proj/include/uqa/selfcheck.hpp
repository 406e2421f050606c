#pragma once

// Axiom suites runnable from the command line: defining relations, Hopf
// identities, the adjoint module law and graded dimensions.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uqa/uq_algebra.hpp"

namespace uqa {

struct SuiteResult {
  std::string algebra;
  std::string suite;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool passed() const { return failed == 0; }
};

/// Number of ways to write nu as a sum of positive roots (coin-change count).
std::int64_t partition_count(const CartanDatum& datum, const RootCoords& nu);

/// Random element: a sum of up to `terms` products of at most `degree` E/F
/// generators with one torus factor and small integer coefficients.
AlgebraElement sample_element(const UqAlgebra& alg, std::mt19937_64& rng, int degree, int terms);

SuiteResult check_relations(const UqAlgebra& alg);
SuiteResult check_hopf(const UqAlgebra& alg, std::size_t samples, std::uint64_t seed, int degree = 3);
SuiteResult check_module_law(const UqAlgebra& alg, std::size_t samples, std::uint64_t seed, int degree = 2);
SuiteResult check_graded_dims(const UqAlgebra& alg, int max_height);

/// All four suites with the given sample sizes.
std::vector<SuiteResult> run_selfcheck(const UqAlgebra& alg, std::size_t hopf_samples, std::size_t law_samples,
                                       int max_height, std::uint64_t seed);

}  // namespace uqa
