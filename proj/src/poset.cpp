#include "uqa/poset.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace uqa {

bool leq(const UqAlgebra& alg, const AlgebraElement& w, const AlgebraElement& v, const LeviSpec& levi,
         std::size_t cap) {
  return closed_module(alg, v, levi, cap).contains(w);
}

bool PosetInterval::covers(std::size_t upper, std::size_t lower) const {
  return std::find(edges.begin(), edges.end(), std::make_pair(lower, upper)) != edges.end();
}

namespace {

constexpr std::size_t kMaxExactConstituents = 10;

AlgebraElement random_combination(const std::vector<AlgebraElement>& basis, std::mt19937_64& rng) {
  AlgebraElement v;
  for (const auto& b : basis) {
    const long c = static_cast<long>(rng() % 7) - 3;
    if (c != 0) v += Scalar(c) * b;
  }
  return v;
}

void add_unique(std::vector<ModuleSpace>& nodes, ModuleSpace m) {
  for (const auto& n : nodes) {
    if (n == m) return;
  }
  nodes.push_back(std::move(m));
}

void finish(const UqAlgebra& alg, PosetInterval& p, std::size_t cap) {
  std::stable_sort(p.nodes.begin(), p.nodes.end(),
                   [](const ModuleSpace& a, const ModuleSpace& b) { return a.dim() < b.dim(); });
  const std::size_t n = p.nodes.size();
  p.isotypes.clear();
  for (const auto& node : p.nodes) p.isotypes.push_back(certify_isotype(alg, node, cap));

  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      below[i][j] = p.nodes[i].dim() < p.nodes[j].dim() && p.nodes[j].contains(p.nodes[i]);
    }
  }
  p.edges.clear();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!below[i][j]) continue;
      bool covering = true;
      for (std::size_t k = i + 1; k < j && covering; ++k) covering = !(below[i][k] && below[k][j]);
      if (covering) p.edges.emplace_back(i, j);
    }
  }
}

}  // namespace

PosetInterval interval(const UqAlgebra& alg, const AlgebraElement& v, const LeviSpec& levi,
                       std::size_t probes, std::uint64_t seed, std::size_t cap) {
  const ModuleSpace top = closed_module(alg, v, levi, cap);
  PosetInterval p;
  p.probes = probes;
  p.seed = seed;

  const auto hw = highest_weight_spaces(alg, top);
  const bool multiplicity_free =
      std::all_of(hw.begin(), hw.end(), [](const HighestWeightSpace& s) { return s.vectors.size() == 1; });

  if (multiplicity_free && hw.size() <= kMaxExactConstituents) {
    // Every cyclic submodule is a sum of constituents, and every such sum is cyclic.
    std::vector<ModuleSpace> parts;
    for (const auto& s : hw) parts.push_back(closed_module(alg, s.vectors.front(), levi, cap));
    for (std::size_t mask = 0; mask < (std::size_t{1} << parts.size()); ++mask) {
      ModuleSpace sum = ModuleSpace::zero(alg, levi);
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (mask & (std::size_t{1} << k)) sum = span_sum(alg, sum, parts[k]);
      }
      p.nodes.push_back(std::move(sum));
    }
    p.exactness = Exactness::Exact;
  } else {
    p.exactness = Exactness::ProbeLowerBound;
    p.nodes.push_back(ModuleSpace::zero(alg, levi));
    p.nodes.push_back(top);
    const auto basis = top.basis();
    std::vector<AlgebraElement> gens = basis;
    for (const auto& s : hw) gens.insert(gens.end(), s.vectors.begin(), s.vectors.end());
    std::vector<AlgebraElement> hw_all;
    for (const auto& s : hw) hw_all.insert(hw_all.end(), s.vectors.begin(), s.vectors.end());
    // Odd probes mix highest weight vectors only, which reaches diagonal
    // copies of repeated constituents.
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < probes; ++k) {
      auto c = random_combination(k % 2 ? hw_all : basis, rng);
      if (!c.is_zero()) gens.push_back(std::move(c));
    }
    for (const auto& g : gens) add_unique(p.nodes, closed_module(alg, g, levi, cap));
    // Refine: the highest weight vectors of every probed node generate
    // irreducible nodes below it.
    const std::size_t found = p.nodes.size();
    for (std::size_t k = 1; k < found; ++k) {
      const ModuleSpace node = p.nodes[k];
      for (const auto& [w, vec] : highest_weight_vectors(alg, node)) {
        add_unique(p.nodes, closed_module(alg, vec, levi, cap));
      }
    }
  }
  finish(alg, p, cap);
  return p;
}

std::vector<std::size_t> minimal_elements(const PosetInterval& p) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < p.nodes.size(); ++j) {
    if (p.nodes[j].is_zero()) continue;
    bool only_zero = true;
    for (const auto& [lo, hi] : p.edges) {
      if (hi == j && !p.nodes[lo].is_zero()) only_zero = false;
    }
    if (only_zero) out.push_back(j);
  }
  return out;
}

Decomposition decompose_by_hwv(const UqAlgebra& alg, const AlgebraElement& v, const LeviSpec& levi,
                               std::size_t cap) {
  ModuleSpace m = closed_module(alg, v, levi, cap);
  std::map<Weight, std::vector<AlgebraElement>> hw;
  for (auto& s : highest_weight_spaces(alg, m)) hw[s.weight] = std::move(s.vectors);

  Decomposition out{m, {}, ModuleSpace::zero(alg, levi)};
  while (out.accumulated.dim() < m.dim()) {
    const auto quotient = highest_weight_spaces_modulo(alg, m, out.accumulated);
    if (quotient.empty()) throw std::logic_error("decompose_by_hwv: nonzero quotient without highest weight");
    const auto& target = quotient.front();
    // Complete reducibility: the quotient has a highest weight vector at this
    // weight iff some highest weight vector of M(v) there lies outside the sum.
    const AlgebraElement* lift = nullptr;
    for (const auto& w : hw[target.weight]) {
      if (!out.accumulated.contains(w)) {
        lift = &w;
        break;
      }
    }
    if (!lift) throw std::logic_error("decompose_by_hwv: no highest weight lift outside the sum");
    DecompositionStep step{target.weight, *lift, target.vectors.size(), m.dim() - out.accumulated.dim(), 0};
    out.accumulated = span_sum(alg, out.accumulated, closed_module(alg, *lift, levi, cap));
    step.residual_after = m.dim() - out.accumulated.dim();
    out.steps.push_back(std::move(step));
  }
  return out;
}

namespace {

std::optional<std::string> cyclicity_obstruction(const UqAlgebra& alg, const ModuleSpace& m) {
  for (const auto& [lambda, mult] : isotypic_multiplicities(alg, m)) {
    const auto bound = weyl_dim_levi(lambda, m.levi());
    if (static_cast<std::int64_t>(mult) > bound) {
      return "isotype " + lambda.to_string() + " occurs with multiplicity " + std::to_string(mult) +
             " > " + std::to_string(bound);
    }
  }
  return std::nullopt;
}

bool find_generator(const UqAlgebra& alg, const ModuleSpace& m, std::size_t probes, std::mt19937_64& rng,
                    std::size_t cap) {
  const auto basis = m.basis();
  for (std::size_t k = 0; k < probes; ++k) {
    const auto g = random_combination(basis, rng);
    if (g.is_zero()) continue;
    if (closed_module(alg, g, m.levi(), cap) == m) return true;
  }
  return false;
}

}  // namespace

LatticeVerdict lattice_probe(const UqAlgebra& alg, const std::vector<ModuleSpace>& nodes, std::size_t probes,
                             std::uint64_t seed, std::size_t cap) {
  LatticeVerdict verdict;
  verdict.certified = true;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const auto& a = nodes[i];
      const auto& b = nodes[j];
      if (a.contains(b) || b.contains(a)) continue;
      ++verdict.pairs_checked;

      const ModuleSpace join = span_sum(alg, a, b);
      if (auto why = cyclicity_obstruction(alg, join)) {
        verdict.kind = LatticeVerdict::Kind::Counterexample;
        verdict.failure = LatticeVerdict::Failure::NoCyclicUpperBound;
        verdict.pair = std::make_pair(i, j);
        verdict.reason = "sum of nodes " + std::to_string(i) + " and " + std::to_string(j) +
                         " is not cyclic: " + *why + "; every upper bound contains it";
        return verdict;
      }
      if (find_generator(alg, join, probes, rng, cap)) ++verdict.join_witnesses;

      const ModuleSpace meet = intersection(alg, a, b);
      if (auto why = cyclicity_obstruction(alg, meet)) {
        verdict.kind = LatticeVerdict::Kind::Counterexample;
        verdict.failure = LatticeVerdict::Failure::NoGreatestLowerBound;
        verdict.pair = std::make_pair(i, j);
        verdict.reason = "intersection of nodes " + std::to_string(i) + " and " + std::to_string(j) +
                         " is not cyclic: " + *why + "; its cyclic submodules have no maximum";
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace uqa
