#include "uqa/module_engine.hpp"

#include <deque>

#include "uqa/hopf.hpp"

namespace uqa {

ModuleSpace::ModuleSpace(const UqAlgebra& alg, LeviSpec levi, Echelon<Monomial> space)
    : levi_(std::move(levi)), space_(std::move(space)) {
  std::size_t pos = 0;
  for (const auto& [pivot, row] : space_.rows()) {
    const Weight w = alg.datum().root_to_weight(alg.grade(pivot));
    weights_.push_back(w);
    index_[w].push_back(pos++);
  }
}

ModuleSpace ModuleSpace::zero(const UqAlgebra& alg, const LeviSpec& levi) {
  return ModuleSpace(alg, levi, Echelon<Monomial>());
}

std::vector<AlgebraElement> ModuleSpace::basis() const {
  std::vector<AlgebraElement> out;
  out.reserve(space_.dim());
  for (const auto& [pivot, row] : space_.rows()) out.emplace_back(row);
  return out;
}

// ---------------------------------------------------------------------------

ClosureVerdict submodule_closure(const UqAlgebra& alg, const std::vector<AlgebraElement>& gens,
                                 const LeviSpec& levi, std::size_t cap, ActionOrder order) {
  Echelon<Monomial> space;
  std::deque<AlgebraElement> queue;
  ClosureVerdict verdict{ClosureVerdict::Status::Closed, std::nullopt};

  auto admit = [&](const AlgebraElement& x) -> bool {
    auto residual = space.insert(x.terms());
    if (residual.empty()) return true;
    verdict.last_growth_step = verdict.steps;
    queue.emplace_back(std::move(residual));
    return space.dim() <= cap;
  };

  // ad(K_mu)-stability puts every graded component of a generator in the module.
  for (const auto& g : gens) {
    for (const auto& [grade, comp] : alg.homogeneous_components(g)) {
      if (!admit(comp)) {
        verdict.status = ClosureVerdict::Status::CapExceeded;
        verdict.dim = space.dim();
        return verdict;
      }
    }
  }

  std::vector<int> nodes(levi.nodes().begin(), levi.nodes().end());
  if (order == ActionOrder::Reverse) std::reverse(nodes.begin(), nodes.end());

  while (!queue.empty()) {
    const AlgebraElement x = std::move(queue.front());
    queue.pop_front();
    for (int j : nodes) {
      for (int pass = 0; pass < 2; ++pass) {
        const bool raise = (pass == 0) == (order == ActionOrder::Forward);
        const AlgebraElement y = raise ? ad_E(alg, j, x) : ad_F(alg, j, x);
        ++verdict.steps;
        if (y.is_zero()) continue;
        if (!admit(y)) {
          verdict.status = ClosureVerdict::Status::CapExceeded;
          verdict.dim = space.dim();
          return verdict;
        }
      }
    }
  }
  verdict.dim = space.dim();
  verdict.module.emplace(alg, levi, std::move(space));
  return verdict;
}

ClosureVerdict cyclic_closure(const UqAlgebra& alg, const AlgebraElement& v, const LeviSpec& levi,
                              std::size_t cap, ActionOrder order) {
  if (v.is_zero()) throw std::invalid_argument("cyclic_closure: generator is zero");
  return submodule_closure(alg, {v}, levi, cap, order);
}

ModuleSpace closed_module(const UqAlgebra& alg, const AlgebraElement& v, const LeviSpec& levi,
                          std::size_t cap) {
  if (v.is_zero()) return ModuleSpace::zero(alg, levi);
  ClosureVerdict verdict = cyclic_closure(alg, v, levi, cap);
  if (!verdict.closed()) throw CapExceededError(verdict.dim, cap);
  return std::move(*verdict.module);
}

Finiteness is_locally_finite(const UqAlgebra& alg, const AlgebraElement& v, const LeviSpec& levi,
                             std::size_t cap) {
  return cyclic_closure(alg, v, levi, cap).closed() ? Finiteness::Yes : Finiteness::Unknown;
}

std::map<Weight, std::size_t> weight_spaces(const ModuleSpace& m) {
  std::map<Weight, std::size_t> out;
  for (const auto& [w, pos] : m.weight_index()) out[w] = pos.size();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using RaisedKey = std::pair<int, Monomial>;

// Echelon basis of { sum c_k b_k : ad(E_j)(sum c_k b_k) lies in `modulo` for j in S }.
std::vector<AlgebraElement> raising_kernel(const UqAlgebra& alg, const std::vector<AlgebraElement>& vecs,
                                           const LeviSpec& levi, const Echelon<Monomial>* modulo) {
  std::vector<SparseVec<RaisedKey>> cols;
  for (const auto& b : vecs) {
    SparseVec<RaisedKey> col;
    for (int j : levi.nodes()) {
      AlgebraElement img = ad_E(alg, j, b);
      if (modulo) img = AlgebraElement(modulo->reduce(img.terms()));
      for (const auto& [m, c] : img.terms()) col.emplace(RaisedKey{j, m}, c);
    }
    cols.push_back(std::move(col));
  }
  const auto kernel = nullspace(columns_to_dense(cols), vecs.size());
  Echelon<Monomial> span;
  for (const auto& coeffs : kernel) {
    AlgebraElement v;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      if (!coeffs[k].is_zero()) v += coeffs[k] * vecs[k];
    }
    span.insert(v.terms());
  }
  std::vector<AlgebraElement> out;
  for (const auto& [p, row] : span.rows()) out.emplace_back(row);
  return out;
}

}  // namespace

std::vector<HighestWeightSpace> highest_weight_spaces(const UqAlgebra& alg, const ModuleSpace& m) {
  std::vector<HighestWeightSpace> out;
  const auto basis = m.basis();
  for (const auto& [w, positions] : m.weight_index()) {
    std::vector<AlgebraElement> vecs;
    for (std::size_t p : positions) vecs.push_back(basis[p]);
    auto kernel = raising_kernel(alg, vecs, m.levi(), nullptr);
    if (!kernel.empty()) out.push_back({w, std::move(kernel)});
  }
  return out;
}

std::vector<HighestWeightSpace> highest_weight_spaces_modulo(const UqAlgebra& alg, const ModuleSpace& m,
                                                             const ModuleSpace& sub) {
  std::vector<HighestWeightSpace> out;
  const auto basis = m.basis();
  for (const auto& [w, positions] : m.weight_index()) {
    Echelon<Monomial> reps;
    for (std::size_t p : positions) reps.insert(sub.echelon().reduce(basis[p].terms()));
    if (reps.empty()) continue;
    std::vector<AlgebraElement> vecs;
    for (const auto& [pivot, row] : reps.rows()) vecs.emplace_back(row);
    auto kernel = raising_kernel(alg, vecs, m.levi(), &sub.echelon());
    if (!kernel.empty()) out.push_back({w, std::move(kernel)});
  }
  return out;
}

std::vector<std::pair<Weight, AlgebraElement>> highest_weight_vectors(const UqAlgebra& alg,
                                                                      const ModuleSpace& m) {
  std::vector<std::pair<Weight, AlgebraElement>> out;
  for (auto& space : highest_weight_spaces(alg, m)) {
    for (auto& v : space.vectors) out.emplace_back(space.weight, std::move(v));
  }
  return out;
}

std::map<Weight, std::size_t> isotypic_multiplicities(const UqAlgebra& alg, const ModuleSpace& m) {
  std::map<Weight, std::size_t> out;
  for (const auto& space : highest_weight_spaces(alg, m)) out[space.weight] = space.vectors.size();
  return out;
}

IsotypeResult certify_isotype(const UqAlgebra& alg, const ModuleSpace& m, std::size_t cap) {
  if (m.is_zero()) return NotIrreducibleCyclicHW{"zero module", 0};
  const auto hw = highest_weight_vectors(alg, m);
  if (hw.size() != 1) {
    return NotIrreducibleCyclicHW{
        "highest weight space has dimension " + std::to_string(hw.size()) + ", expected 1", hw.size()};
  }
  const auto& [lambda, w] = hw.front();
  if (!s_dominant(lambda, m.levi())) {
    return NotIrreducibleCyclicHW{"highest weight " + lambda.to_string() + " is not S-dominant", 1};
  }
  const std::int64_t expected = weyl_dim_levi(lambda, m.levi());
  if (static_cast<std::int64_t>(m.dim()) != expected) {
    return NotIrreducibleCyclicHW{"dimension " + std::to_string(m.dim()) + " differs from Weyl dimension " +
                                      std::to_string(expected),
                                  1};
  }
  const ClosureVerdict gen = cyclic_closure(alg, w, m.levi(), cap);
  if (!gen.closed() || !(*gen.module == m)) {
    return NotIrreducibleCyclicHW{"highest weight vector does not generate the module", 1};
  }
  return IsotypeCertificate{lambda, w, expected, true};
}

const IsotypeCertificate* certificate_of(const IsotypeResult& r) {
  const auto* c = std::get_if<IsotypeCertificate>(&r);
  return (c && c->certified) ? c : nullptr;
}

bool lambda_membership(const UqAlgebra& alg, const Weight& lambda, const AlgebraElement& v,
                       const LeviSpec& levi, std::size_t cap) {
  if (v.is_zero()) return false;
  const auto wt = alg.q_weight(v);
  if (!wt || *wt != lambda) return false;
  for (int j : levi.nodes()) {
    if (!ad_E(alg, j, v).is_zero()) return false;
  }
  return is_locally_finite(alg, v, levi, cap) == Finiteness::Yes;
}

bool same_embedding(const UqAlgebra& alg, const AlgebraElement& v, const AlgebraElement& w,
                    const LeviSpec& levi, std::size_t cap) {
  return closed_module(alg, v, levi, cap) == closed_module(alg, w, levi, cap);
}

ModuleSpace span_sum(const UqAlgebra& alg, const ModuleSpace& a, const ModuleSpace& b) {
  Echelon<Monomial> s = a.echelon();
  for (const auto& [p, row] : b.echelon().rows()) s.insert(row);
  return ModuleSpace(alg, a.levi(), std::move(s));
}

ModuleSpace intersection(const UqAlgebra& alg, const ModuleSpace& a, const ModuleSpace& b) {
  // Kernel of [A | -B]; the A-half of each kernel vector spans the intersection.
  const auto ab = a.basis();
  const auto bb = b.basis();
  std::vector<SparseVec<Monomial>> cols;
  for (const auto& x : ab) cols.push_back(x.terms());
  for (const auto& x : bb) cols.push_back((Scalar(-1) * x).terms());
  Echelon<Monomial> s;
  for (const auto& coeffs : nullspace(columns_to_dense(cols), cols.size())) {
    AlgebraElement v;
    for (std::size_t k = 0; k < ab.size(); ++k) {
      if (!coeffs[k].is_zero()) v += coeffs[k] * ab[k];
    }
    s.insert(v.terms());
  }
  return ModuleSpace(alg, a.levi(), std::move(s));
}

bool is_cyclic(const UqAlgebra& alg, const ModuleSpace& m) {
  for (const auto& [lambda, mult] : isotypic_multiplicities(alg, m)) {
    if (!s_dominant(lambda, m.levi())) return false;
    if (static_cast<std::int64_t>(mult) > weyl_dim_levi(lambda, m.levi())) return false;
  }
  return true;
}

}  // namespace uqa
