#pragma once

#include <tuple>
#include <utility>

#include "uqa/uq_algebra.hpp"

namespace uqa {

/// Element of U_q(g) (x) U_q(g) with both legs in normal form.
class TensorElement {
 public:
  using Key = std::pair<Monomial, Monomial>;
  using Terms = SparseVec<Key>;

  TensorElement() = default;
  explicit TensorElement(Terms t);
  static TensorElement pure(const AlgebraElement& left, const AlgebraElement& right);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  TensorElement& add(const Monomial& l, const Monomial& r, const Scalar& c);
  TensorElement& operator+=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  bool operator==(const TensorElement&) const = default;

 private:
  Terms terms_;
};

/// Leg-wise product (a (x) b)(c (x) d) = ac (x) bd.
TensorElement tensor_multiply(const UqAlgebra& alg, const TensorElement& x, const TensorElement& y);

/// Delta(E_i) = E_i (x) 1 + K_i (x) E_i, Delta(F_i) = F_i (x) K_i^{-1} + 1 (x) F_i,
/// Delta(K_mu) = K_mu (x) K_mu, extended multiplicatively.
TensorElement coproduct(const UqAlgebra& alg, const AlgebraElement& a);

/// epsilon(E_i) = epsilon(F_i) = 0, epsilon(K_mu) = 1.
Scalar counit(const AlgebraElement& a);

/// Anti-homomorphism with S(E_i) = -K_i^{-1} E_i, S(F_i) = -F_i K_i, S(K_mu) = K_{-mu}.
AlgebraElement antipode(const UqAlgebra& alg, const AlgebraElement& a);

/// m(S (x) id) and m(id (x) S) applied to a tensor.
AlgebraElement multiply_antipode_left(const UqAlgebra& alg, const TensorElement& t);
AlgebraElement multiply_antipode_right(const UqAlgebra& alg, const TensorElement& t);

/// (Delta (x) id) t and (id (x) Delta) t, returned as triple tensors keyed by
/// (left, middle, right) monomials.
using TripleTerms = SparseVec<std::tuple<Monomial, Monomial, Monomial>>;
TripleTerms coproduct_left_leg(const UqAlgebra& alg, const TensorElement& t);
TripleTerms coproduct_right_leg(const UqAlgebra& alg, const TensorElement& t);

/// ad_L(a)(b) = a_(1) b S(a_(2)) through the coproduct and antipode.
AlgebraElement ad_left_generic(const UqAlgebra& alg, const AlgebraElement& a, const AlgebraElement& b);

/// ad(E_i)(b) = E_i b - K_i b K_i^{-1} E_i
AlgebraElement ad_E(const UqAlgebra& alg, int i, const AlgebraElement& b);
/// ad(F_i)(b) = F_i b K_i - b F_i K_i
AlgebraElement ad_F(const UqAlgebra& alg, int i, const AlgebraElement& b);
/// ad(K_mu)(b) = K_mu b K_{-mu}; scales each graded component.
AlgebraElement ad_K(const UqAlgebra& alg, const Weight& mu, const AlgebraElement& b);

/// ad_L(a)(b), applying the generator fast paths factor by factor to each
/// monomial of a.
AlgebraElement ad_left(const UqAlgebra& alg, const AlgebraElement& a, const AlgebraElement& b);

}  // namespace uqa
