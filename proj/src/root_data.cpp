#include "uqa/root_data.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace uqa {

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.coords.size() != coords.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.coords.size() != coords.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator*(int k, Weight a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const int c = coords[i];
    if (c == 0) continue;
    if (c < 0) os << "-";
    else if (!first) os << "+";
    const int m = c < 0 ? -c : c;
    if (m != 1) os << m << "*";
    os << "w" << (i + 1);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Symmetric matrix of (alpha_i, alpha_j) and the symmetrizers for each type.
struct FormTable {
  std::vector<std::vector<int>> b;
  std::vector<int> d;
};

FormTable chain(int n, const std::vector<int>& d) {
  FormTable t;
  t.d = d;
  t.b.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) t.b[i][i] = 2 * d[i];
  for (int i = 0; i + 1 < n; ++i) {
    const int off = -std::max(d[i], d[i + 1]);
    t.b[i][i + 1] = t.b[i + 1][i] = off;
  }
  return t;
}

void link(FormTable& t, int i, int j) {
  const int off = -std::max(t.d[i], t.d[j]);
  t.b[i][j] = t.b[j][i] = off;
}

FormTable form_table(char type, int n) {
  switch (type) {
    case 'A':
      if (n < 1) break;
      return chain(n, std::vector<int>(n, 1));
    case 'B': {
      if (n < 2) break;
      std::vector<int> d(n, 2);
      d[n - 1] = 1;
      FormTable t = chain(n, d);
      t.b[n - 2][n - 1] = t.b[n - 1][n - 2] = -2;
      return t;
    }
    case 'C': {
      if (n < 2) break;
      std::vector<int> d(n, 1);
      d[n - 1] = 2;
      FormTable t = chain(n, d);
      t.b[n - 2][n - 1] = t.b[n - 1][n - 2] = -2;
      return t;
    }
    case 'D': {
      if (n < 4) break;
      FormTable t = chain(n - 1, std::vector<int>(n - 1, 1));
      t.d.push_back(1);
      for (auto& row : t.b) row.push_back(0);
      t.b.emplace_back(n, 0);
      t.b[n - 1][n - 1] = 2;
      link(t, n - 3, n - 1);
      return t;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      FormTable t;
      t.d.assign(n, 1);
      t.b.assign(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) t.b[i][i] = 2;
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      link(t, 0, 2);
      link(t, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(t, i, i + 1);
      return t;
    }
    case 'F': {
      if (n != 4) break;
      FormTable t = chain(4, {2, 2, 1, 1});
      return t;
    }
    case 'G': {
      if (n != 2) break;
      FormTable t;
      t.d = {1, 3};
      t.b = {{2, -3}, {-3, 6}};
      return t;
    }
    default:
      break;
  }
  throw UnsupportedType("unsupported Cartan type " + std::string(1, type) + std::to_string(n));
}

}  // namespace

CartanDatum::CartanDatum(char type, int rank, std::vector<int> cartan, std::vector<int> d)
    : type_(type), rank_(rank), cartan_(std::move(cartan)), d_(std::move(d)) {
  generate_positive_roots();
}

CartanDatum CartanDatum::build(char type_letter, int rank) {
  FormTable t = form_table(type_letter, rank);
  std::vector<int> cartan(static_cast<std::size_t>(rank * rank));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      cartan[static_cast<std::size_t>(i * rank + j)] = t.b[i][j] / t.d[i];
    }
  }
  return CartanDatum(type_letter, rank, std::move(cartan), std::move(t.d));
}

std::vector<std::vector<int>> CartanDatum::cartan_matrix() const {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) m[i].push_back(a(i, j));
  }
  return m;
}

Weight CartanDatum::simple_root(int i) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("node index out of range");
  Weight w = Weight::zero(rank_);
  for (int j = 0; j < rank_; ++j) w.coords[j] = a(j, i);
  return w;
}

Weight CartanDatum::root_to_weight(const RootCoords& beta) const {
  Weight w = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (beta[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) w.coords[j] += beta[i] * a(j, i);
  }
  return w;
}

std::optional<RootCoords> CartanDatum::weight_to_root(const Weight& mu) const {
  // Solve A n = mu over Q, then check integrality.
  const int n = rank_;
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[j][i] = a(j, i);
    m[j][n] = mu.coords[j];
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const mpq_class f = m[r][col] / m[col][col];
      for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  RootCoords out(n);
  for (int i = 0; i < n; ++i) {
    mpq_class v = m[i][n] / m[i][i];
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    out[i] = static_cast<int>(v.get_num().get_si());
  }
  return out;
}

long CartanDatum::form(const Weight& mu, const RootCoords& beta) const {
  long s = 0;
  for (int j = 0; j < rank_; ++j) s += static_cast<long>(beta[j]) * mu.coords[j] * d(j);
  return s;
}

long CartanDatum::root_pairing(int i, const RootCoords& beta) const {
  long s = 0;
  for (int j = 0; j < rank_; ++j) s += static_cast<long>(beta[j]) * root_form(i, j);
  return s;
}

void CartanDatum::generate_positive_roots() {
  // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0, where p is the
  // length of the alpha_i-string below beta.
  std::set<RootCoords> known;
  std::vector<RootCoords> layer;
  for (int i = 0; i < rank_; ++i) {
    RootCoords r(rank_, 0);
    r[i] = 1;
    layer.push_back(r);
    known.insert(r);
  }
  std::vector<RootCoords> all;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    all.insert(all.end(), layer.begin(), layer.end());
    std::set<RootCoords> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < rank_; ++i) {
        int p = 0;
        RootCoords down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        long bracket = 0;
        for (int j = 0; j < rank_; ++j) bracket += static_cast<long>(beta[j]) * a(i, j);
        if (p - bracket > 0) {
          RootCoords up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
  positive_roots_ = std::move(all);
}

Pairing pairing(const CartanDatum& datum, const Weight& mu, int j) {
  const int b = mu.coords.at(static_cast<std::size_t>(j));
  return {b, b * datum.d(j)};
}

Weight simple_root_coords(const CartanDatum& datum, int i) { return datum.simple_root(i); }

std::set<int> cominuscule_nodes(const CartanDatum& datum) {
  std::set<int> out;
  const RootCoords& theta = datum.highest_root();
  for (int i = 0; i < datum.rank(); ++i) {
    if (theta[i] == 1) out.insert(i);
  }
  return out;
}

// ---------------------------------------------------------------------------

LeviSpec LeviSpec::from_subset(const CartanDatum& datum, std::set<int> nodes) {
  for (int j : nodes) {
    if (j < 0 || j >= datum.rank()) throw std::out_of_range("Levi node out of range");
  }
  std::optional<int> x;
  if (static_cast<int>(nodes.size()) + 1 == datum.rank()) {
    for (int i = 0; i < datum.rank(); ++i) {
      if (!nodes.count(i)) x = i;
    }
  }
  return LeviSpec(datum, std::move(nodes), x);
}

LeviSpec LeviSpec::complement_of(const CartanDatum& datum, int x) {
  if (x < 0 || x >= datum.rank()) throw std::out_of_range("Levi node out of range");
  std::set<int> nodes;
  for (int i = 0; i < datum.rank(); ++i) {
    if (i != x) nodes.insert(i);
  }
  return LeviSpec(datum, std::move(nodes), x);
}

std::string LeviSpec::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int j : nodes_) {
    if (!first) os << ",";
    os << (j + 1);
    first = false;
  }
  os << "}";
  return os.str();
}

bool s_dominant(const Weight& lambda, const LeviSpec& levi) {
  return std::all_of(levi.nodes().begin(), levi.nodes().end(),
                     [&](int j) { return lambda.coords.at(static_cast<std::size_t>(j)) >= 0; });
}

std::vector<RootCoords> levi_positive_roots(const LeviSpec& levi) {
  std::vector<RootCoords> out;
  for (const auto& beta : levi.datum().positive_roots()) {
    bool inside = true;
    for (int j = 0; j < levi.datum().rank(); ++j) {
      if (beta[j] != 0 && !levi.contains(j)) inside = false;
    }
    if (inside) out.push_back(beta);
  }
  return out;
}

std::int64_t weyl_dim_levi(const Weight& lambda, const LeviSpec& levi) {
  if (!s_dominant(lambda, levi)) {
    throw std::invalid_argument("weyl_dim_levi: weight " + lambda.to_string() +
                                " is not dominant for S = " + levi.to_string());
  }
  const CartanDatum& datum = levi.datum();
  // rho_S = sum_{j in S} w_j pairs to 1 with every simple coroot of the Levi.
  Weight shifted = lambda;
  for (int j : levi.nodes()) shifted.coords[j] += 1;
  Weight rho = Weight::zero(datum.rank());
  for (int j : levi.nodes()) rho.coords[j] = 1;
  mpq_class dim = 1;
  for (const auto& beta : levi_positive_roots(levi)) {
    dim *= mpq_class(datum.form(shifted, beta), datum.form(rho, beta));
  }
  dim.canonicalize();
  return dim.get_num().get_si();
}

}  // namespace uqa
