#pragma once

// Seeded random elements for property tests.

#include <random>

#include "uqa/uq_algebra.hpp"

namespace testing_support {

inline uqa::Weight random_weight(std::mt19937_64& rng, int rank, int spread = 2) {
  uqa::Weight w = uqa::Weight::zero(rank);
  for (auto& c : w.coords) c = static_cast<int>(rng() % (2 * spread + 1)) - spread;
  return w;
}

/// Product of at most `degree` E/F generators with one torus factor, in a
/// random written order.
inline std::vector<uqa::Generator> random_word(std::mt19937_64& rng, int rank, int degree) {
  using uqa::Generator;
  std::vector<Generator> gens;
  const int len = static_cast<int>(rng() % (degree + 1));
  for (int k = 0; k < len; ++k) {
    const int node = static_cast<int>(rng() % rank);
    gens.push_back({rng() % 2 ? Generator::Kind::E : Generator::Kind::F, node, {}});
  }
  const auto pos = static_cast<long>(rng() % (gens.size() + 1));
  gens.insert(gens.begin() + pos, Generator{Generator::Kind::K, 0, random_weight(rng, rank, 1)});
  return gens;
}

/// Sum of up to `terms` random monomials with small integer coefficients.
inline uqa::AlgebraElement random_element(const uqa::UqAlgebra& alg, std::mt19937_64& rng, int degree,
                                          int terms = 2) {
  uqa::RawExpression raw;
  const int n = 1 + static_cast<int>(rng() % terms);
  for (int k = 0; k < n; ++k) {
    long c = static_cast<long>(rng() % 7) - 3;
    if (c == 0) c = 1;
    raw.emplace_back(uqa::Scalar(c), random_word(rng, alg.rank(), degree));
  }
  return alg.normal_form(raw);
}

}  // namespace testing_support
