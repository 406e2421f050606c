#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "uqa/linalg.hpp"
#include "uqa/root_data.hpp"
#include "uqa/uq_algebra.hpp"

namespace uqa {

inline constexpr std::size_t kDefaultCap = 500;

/// Finite-dimensional subspace of U_q(g) stable under the adjoint action of
/// the Levi, held in canonical reduced echelon form. Every basis row is
/// homogeneous for the adjoint grading.
class ModuleSpace {
 public:
  ModuleSpace(const UqAlgebra& alg, LeviSpec levi, Echelon<Monomial> space);
  static ModuleSpace zero(const UqAlgebra& alg, const LeviSpec& levi);

  const LeviSpec& levi() const { return levi_; }
  const Echelon<Monomial>& echelon() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  bool is_zero() const { return space_.empty(); }

  /// Basis rows in increasing pivot order.
  std::vector<AlgebraElement> basis() const;
  /// Weight of each basis row, aligned with basis().
  const std::vector<Weight>& basis_weights() const { return weights_; }
  /// Weight -> positions in basis().
  const std::map<Weight, std::vector<std::size_t>>& weight_index() const { return index_; }

  bool contains(const AlgebraElement& a) const { return space_.contains(a.terms()); }
  bool contains(const ModuleSpace& other) const { return space_.contains_space(other.space_); }
  /// Representative of a modulo this subspace.
  AlgebraElement reduce(const AlgebraElement& a) const { return AlgebraElement(space_.reduce(a.terms())); }

  bool operator==(const ModuleSpace& o) const { return space_ == o.space_; }

 private:
  LeviSpec levi_;
  Echelon<Monomial> space_;
  std::vector<Weight> weights_;
  std::map<Weight, std::vector<std::size_t>> index_;
};

struct ClosureVerdict {
  enum class Status { Closed, CapExceeded };
  Status status;
  std::optional<ModuleSpace> module;  // set when Closed
  std::size_t dim = 0;                // final or partial dimension
  std::size_t steps = 0;              // generator applications performed
  std::size_t last_growth_step = 0;

  bool closed() const { return status == Status::Closed; }
};

/// Thrown by operations whose precondition is local finiteness within the cap.
struct CapExceededError : std::runtime_error {
  CapExceededError(std::size_t partial, std::size_t cap)
      : std::runtime_error("closure exceeded cap " + std::to_string(cap) + " (partial dimension " +
                           std::to_string(partial) + ")"),
        partial_dim(partial) {}
  std::size_t partial_dim;
};

enum class ActionOrder { Forward, Reverse };

/// M(v): breadth-first closure of the graded components of v under ad(E_j),
/// ad(F_j) for j in S. Throws std::invalid_argument for v = 0.
ClosureVerdict cyclic_closure(const UqAlgebra& alg, const AlgebraElement& v, const LeviSpec& levi,
                              std::size_t cap = kDefaultCap, ActionOrder order = ActionOrder::Forward);

/// Smallest submodule containing all the given elements.
ClosureVerdict submodule_closure(const UqAlgebra& alg, const std::vector<AlgebraElement>& gens,
                                 const LeviSpec& levi, std::size_t cap = kDefaultCap,
                                 ActionOrder order = ActionOrder::Forward);

/// Closed module or CapExceededError.
ModuleSpace closed_module(const UqAlgebra& alg, const AlgebraElement& v, const LeviSpec& levi,
                          std::size_t cap = kDefaultCap);

enum class Finiteness { Yes, Unknown };
Finiteness is_locally_finite(const UqAlgebra& alg, const AlgebraElement& v, const LeviSpec& levi,
                             std::size_t cap = kDefaultCap);

std::map<Weight, std::size_t> weight_spaces(const ModuleSpace& m);

struct HighestWeightSpace {
  Weight weight;
  std::vector<AlgebraElement> vectors;  // echelon basis of the kernel at this weight
};

/// Basis of the joint kernel of ad(E_j), j in S, on each weight space of m.
std::vector<HighestWeightSpace> highest_weight_spaces(const UqAlgebra& alg, const ModuleSpace& m);
/// Highest weight spaces of the quotient m / sub: at each weight, a basis of
/// coset representatives (reduced modulo sub) killed by every ad(E_j) modulo
/// sub. Requires sub to be a submodule of m.
std::vector<HighestWeightSpace> highest_weight_spaces_modulo(const UqAlgebra& alg, const ModuleSpace& m,
                                                             const ModuleSpace& sub);
/// Flattened (weight, vector) list of highest_weight_spaces.
std::vector<std::pair<Weight, AlgebraElement>> highest_weight_vectors(const UqAlgebra& alg,
                                                                      const ModuleSpace& m);

/// Multiplicity of each isotype, read off as the dimension of the highest
/// weight space (the modules here are completely reducible).
std::map<Weight, std::size_t> isotypic_multiplicities(const UqAlgebra& alg, const ModuleSpace& m);

struct IsotypeCertificate {
  Weight lambda;
  AlgebraElement hw_vector;
  std::int64_t dim = 0;
  bool certified = false;
};

struct NotIrreducibleCyclicHW {
  std::string reason;
  std::size_t hw_space_dim = 0;
};

using IsotypeResult = std::variant<IsotypeCertificate, NotIrreducibleCyclicHW>;

/// Certifies m as V(lambda): a one-dimensional highest weight space spanned
/// by w with M(w) = m, lambda S-dominant and dim m = weyl_dim_levi(lambda).
IsotypeResult certify_isotype(const UqAlgebra& alg, const ModuleSpace& m, std::size_t cap = kDefaultCap);
const IsotypeCertificate* certificate_of(const IsotypeResult& r);

/// v != 0, weight lambda, killed by every ad(E_j) with j in S, locally finite.
bool lambda_membership(const UqAlgebra& alg, const Weight& lambda, const AlgebraElement& v,
                       const LeviSpec& levi, std::size_t cap = kDefaultCap);

/// M(v) == M(w); throws CapExceededError when either closure is indeterminate.
bool same_embedding(const UqAlgebra& alg, const AlgebraElement& v, const AlgebraElement& w,
                    const LeviSpec& levi, std::size_t cap = kDefaultCap);

ModuleSpace span_sum(const UqAlgebra& alg, const ModuleSpace& a, const ModuleSpace& b);
ModuleSpace intersection(const UqAlgebra& alg, const ModuleSpace& a, const ModuleSpace& b);

/// A completely reducible module is cyclic iff every isotypic multiplicity is
/// at most the dimension of the corresponding irreducible.
bool is_cyclic(const UqAlgebra& alg, const ModuleSpace& m);

}  // namespace uqa
