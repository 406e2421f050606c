#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqa {

/// Element of the weight lattice P in fundamental-weight coordinates.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a);
  Weight operator-() const { return (-1) * *this; }

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  /// Text form in the fundamental-weight basis, e.g. `w1-2*w2`; zero is `0`.
  std::string to_string() const;
};

/// Nonnegative (or signed) coordinates in the simple-root basis.
using RootCoords = std::vector<int>;

struct UnsupportedType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Cartan matrix with a_ij = <alpha_j, alpha_i^vee> and minimal symmetrizers d
/// such that (alpha_i, alpha_j) = d_i a_ij. Nodes are 0-based; Bourbaki
/// numbering shifted down by one.
class CartanDatum {
 public:
  static CartanDatum build(char type_letter, int rank);

  char type_letter() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }
  int a(int i, int j) const { return cartan_[idx(i, j)]; }
  int d(int i) const { return d_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& symmetrizers() const { return d_; }
  std::vector<std::vector<int>> cartan_matrix() const;

  /// (alpha_i, alpha_j)
  int root_form(int i, int j) const { return d(i) * a(i, j); }

  /// alpha_i in the fundamental-weight basis (i-th Cartan column).
  Weight simple_root(int i) const;
  /// sum_j beta_j alpha_j in the fundamental-weight basis.
  Weight root_to_weight(const RootCoords& beta) const;
  /// Coordinates of mu in the simple-root basis when mu lies in Q.
  std::optional<RootCoords> weight_to_root(const Weight& mu) const;
  bool in_root_lattice(const Weight& mu) const { return weight_to_root(mu).has_value(); }

  /// Bilinear form (mu, beta) for mu in P and beta in Q.
  long form(const Weight& mu, const RootCoords& beta) const;
  /// (alpha_i, beta) for beta in Q.
  long root_pairing(int i, const RootCoords& beta) const;

  /// Positive roots in the simple-root basis, ordered by height then
  /// lexicographically; generated by alpha-strings.
  const std::vector<RootCoords>& positive_roots() const { return positive_roots_; }
  const RootCoords& highest_root() const { return positive_roots_.back(); }

  bool operator==(const CartanDatum& o) const { return type_ == o.type_ && rank_ == o.rank_; }

 private:
  CartanDatum(char type, int rank, std::vector<int> cartan, std::vector<int> d);
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(j);
  }
  void generate_positive_roots();

  char type_;
  int rank_;
  std::vector<int> cartan_;
  std::vector<int> d_;
  std::vector<RootCoords> positive_roots_;
};

struct Pairing {
  int bracket;  // <mu, alpha_j^vee>
  int form;     // (mu, alpha_j)
};

Pairing pairing(const CartanDatum& datum, const Weight& mu, int j);
Weight simple_root_coords(const CartanDatum& datum, int i);

/// Nodes whose coefficient in the highest root equals 1.
std::set<int> cominuscule_nodes(const CartanDatum& datum);

/// Subset S of the nodes defining the Levi subalgebra; `x` is recorded when
/// S is the complement of a single node.
class LeviSpec {
 public:
  static LeviSpec from_subset(const CartanDatum& datum, std::set<int> nodes);
  static LeviSpec complement_of(const CartanDatum& datum, int x);

  const CartanDatum& datum() const { return datum_; }
  const std::set<int>& nodes() const { return nodes_; }
  std::optional<int> x() const { return x_; }
  bool contains(int j) const { return nodes_.count(j) != 0; }
  std::string to_string() const;

 private:
  LeviSpec(CartanDatum datum, std::set<int> nodes, std::optional<int> x)
      : datum_(std::move(datum)), nodes_(std::move(nodes)), x_(x) {}

  CartanDatum datum_;
  std::set<int> nodes_;
  std::optional<int> x_;
};

/// <lambda, alpha_j^vee> >= 0 for every j in S.
bool s_dominant(const Weight& lambda, const LeviSpec& levi);

/// Weyl dimension of the irreducible module of highest weight lambda for the
/// semisimple part of the Levi. Throws std::invalid_argument when lambda is not
/// S-dominant.
std::int64_t weyl_dim_levi(const Weight& lambda, const LeviSpec& levi);

/// Positive roots whose support lies in S.
std::vector<RootCoords> levi_positive_roots(const LeviSpec& levi);

}  // namespace uqa
