#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uqa/linalg.hpp"
#include "uqa/root_data.hpp"
#include "uqa/scalar.hpp"

namespace uqa {

/// Sequence of node indices, read left to right as a product of generators.
using Word = std::vector<std::uint8_t>;

/// Triangular normal monomial F_{f_1} ... F_{f_m} K_mu E_{e_1} ... E_{e_n}
/// with both words canonical for their graded piece.
struct Monomial {
  Word f;
  Weight torus;
  Word e;

  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial&) const = default;
};

/// Content (multidegree in the simple-root basis) of a word.
RootCoords word_content(const Word& w, int rank);

/// Finite linear combination of normal monomials with nonzero coefficients.
class AlgebraElement {
 public:
  using Terms = SparseVec<Monomial>;

  AlgebraElement() = default;
  explicit AlgebraElement(Terms terms);
  static AlgebraElement monomial(Monomial m, Scalar c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of m (zero when absent).
  Scalar coefficient(const Monomial& m) const;

  AlgebraElement& add(const Monomial& m, const Scalar& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
  AlgebraElement operator-() const { return Scalar(-1) * *this; }

  bool operator==(const AlgebraElement&) const = default;

 private:
  Terms terms_;
};

enum class Side { E, F };

/// One factor of a raw word expression.
struct Generator {
  enum class Kind { E, F, K };
  Kind kind;
  int node = 0;    // for E and F
  Weight weight;   // for K
};

/// Sum of coefficient * (product of generators, in the written order).
using RawExpression = std::vector<std::pair<Scalar, std::vector<Generator>>>;

/// The simply-connected quantized enveloping algebra U_q(g) for one Cartan
/// datum. Elements are kept in the triangular normal form F-word K_mu E-word.
///
/// Relations:
///   K_mu E_j = q^{(mu,alpha_j)} E_j K_mu,  K_mu F_j = q^{-(mu,alpha_j)} F_j K_mu,
///   E_i F_j - F_j E_i = delta_ij (K_i - K_i^{-1}) / (q_i - q_i^{-1}),
///   q-Serre relations among the E's and among the F's.
///
/// Graded pieces of the positive and negative parts and the E-word by F-word
/// straightening table are memoized. The caches are guarded by a mutex; each
/// entry is computed deterministically, so concurrent readers always see the
/// same canonical representatives.
class UqAlgebra {
 public:
  explicit UqAlgebra(CartanDatum datum);
  ~UqAlgebra();
  UqAlgebra(const UqAlgebra&) = delete;
  UqAlgebra& operator=(const UqAlgebra&) = delete;

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }

  AlgebraElement one() const;
  AlgebraElement E(int i) const;
  AlgebraElement F(int i) const;
  AlgebraElement K(const Weight& mu) const;
  /// K_{k alpha_i}
  AlgebraElement K_alpha(int i, int k = 1) const;

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement multiply_monomials(const Monomial& a, const Monomial& b) const;
  AlgebraElement normal_form(const RawExpression& raw) const;
  AlgebraElement generator_product(const std::vector<Generator>& gens) const;

  /// Adjoint grading of a monomial: content(e) - content(f) in root coordinates.
  RootCoords grade(const Monomial& m) const;
  /// Common grade of all terms as a weight, or nullopt when inhomogeneous.
  /// The zero element has grade 0.
  std::optional<Weight> q_weight(const AlgebraElement& a) const;
  /// Splits a into its graded components.
  std::map<RootCoords, AlgebraElement> homogeneous_components(const AlgebraElement& a) const;

  /// Dimension of the piece of content nu of the positive (E) or negative (F)
  /// part. Throws std::invalid_argument when nu has a negative entry.
  int graded_dim(const RootCoords& nu, Side side) const;
  /// Canonical representative words of content nu, increasing order.
  std::vector<Word> canonical_words(const RootCoords& nu, Side side) const;
  /// Expresses an arbitrary word as a combination of canonical words.
  std::vector<std::pair<Word, Scalar>> reduce_word(const Word& w, Side side) const;

  /// The q-Serre relation for i != j as a raw expression in E's or F's.
  RawExpression serre_relation(int i, int j, Side side) const;

 private:
  struct GradedPiece {
    std::vector<Word> canonical;
    std::map<Word, std::vector<std::pair<Word, Scalar>>> rewrite;
  };
  struct Caches;

  std::shared_ptr<const GradedPiece> piece(const RootCoords& nu) const;
  std::shared_ptr<const GradedPiece> compute_piece(const RootCoords& nu) const;
  const AlgebraElement& ef_product(const Word& e, const Word& f) const;
  AlgebraElement compute_ef_product(const Word& e, const Word& f) const;
  std::vector<std::pair<Word, Scalar>> serre_words(int i, int j) const;

  CartanDatum datum_;
  std::unique_ptr<Caches> caches_;
};

}  // namespace uqa
