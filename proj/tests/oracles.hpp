#pragma once

// Independent test oracles. Nothing here calls into the algebra engine; the
// root systems are rebuilt from the Cartan matrix by reflection closure.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "uqa/root_data.hpp"
#include "uqa/scalar.hpp"

namespace oracle {

using Root = std::vector<int>;

/// All roots from the simple roots by closure under simple reflections
/// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, keeping the positive ones.
inline std::vector<Root> positive_roots_by_reflection(const uqa::CartanDatum& datum) {
  const int n = datum.rank();
  std::set<Root> seen;
  std::vector<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    seen.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        int bracket = 0;
        for (int j = 0; j < n; ++j) bracket += beta[j] * datum.a(i, j);
        Root img = beta;
        img[i] -= bracket;
        if (seen.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Root> pos;
  for (const auto& r : seen) {
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) pos.push_back(r);
  }
  return pos;
}

inline Root highest_root_by_reflection(const uqa::CartanDatum& datum) {
  auto roots = positive_roots_by_reflection(datum);
  return *std::max_element(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    int ha = 0, hb = 0;
    for (int c : a) ha += c;
    for (int c : b) hb += c;
    return ha < hb;
  });
}

/// Number of multisets of positive roots summing to nu, by brute-force
/// recursion over roots in a fixed order.
inline std::int64_t kostant_count(const std::vector<Root>& roots, const Root& nu) {
  std::map<std::pair<std::size_t, Root>, std::int64_t> memo;
  std::function<std::int64_t(std::size_t, const Root&)> go = [&](std::size_t k, const Root& rest) -> std::int64_t {
    if (std::all_of(rest.begin(), rest.end(), [](int c) { return c == 0; })) return 1;
    if (k == roots.size()) return 0;
    auto key = std::make_pair(k, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::int64_t total = 0;
    Root r = rest;
    while (true) {
      total += go(k + 1, r);
      bool ok = true;
      for (std::size_t j = 0; j < r.size(); ++j) {
        r[j] -= roots[k][j];
        if (r[j] < 0) ok = false;
      }
      if (!ok) break;
    }
    memo[key] = total;
    return total;
  };
  return go(0, nu);
}

/// All contents nu in Q_+ with 1 <= height <= max_height.
inline std::vector<Root> contents_up_to(int rank, int max_height) {
  std::vector<Root> out;
  Root cur(rank, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == rank) {
      int h = 0;
      for (int c : cur) h += c;
      if (h >= 1) out.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[pos] = c;
      rec(pos + 1, left - c);
    }
    cur[pos] = 0;
  };
  rec(0, max_height);
  return out;
}

/// Random Laurent-polynomial ratio with small integer coefficients.
inline uqa::Scalar random_scalar(std::mt19937_64& rng, bool allow_zero = true) {
  auto coeff = [&] { return static_cast<long>(rng() % 7) - 3; };
  auto laurent = [&](bool nonzero) {
    while (true) {
      const int low = static_cast<int>(rng() % 5) - 2;
      const int len = 1 + static_cast<int>(rng() % 3);
      std::vector<mpz_class> c;
      for (int i = 0; i < len; ++i) c.emplace_back(coeff());
      uqa::Scalar s = uqa::Scalar::laurent(low, c);
      if (!nonzero || !s.is_zero()) return s;
    }
  };
  uqa::Scalar num = laurent(!allow_zero);
  if (rng() % 2) return num;
  return num / laurent(true);
}

}  // namespace oracle
