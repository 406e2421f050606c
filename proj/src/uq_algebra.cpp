#include "uqa/uq_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace uqa {

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = f.size() <=> o.f.size(); c != 0) return c;
  if (auto c = f <=> o.f; c != 0) return c;
  if (auto c = torus <=> o.torus; c != 0) return c;
  if (auto c = e.size() <=> o.e.size(); c != 0) return c;
  return e <=> o.e;
}

RootCoords word_content(const Word& w, int rank) {
  RootCoords c(static_cast<std::size_t>(rank), 0);
  for (auto i : w) c[i] += 1;
  return c;
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

AlgebraElement AlgebraElement::monomial(Monomial m, Scalar c) {
  Terms t;
  if (!c.is_zero()) t.emplace(std::move(m), std::move(c));
  return AlgebraElement(std::move(t));
}

Scalar AlgebraElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

AlgebraElement& AlgebraElement::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  axpy(terms_, Scalar(1), o.terms_);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  axpy(terms_, Scalar(-1), o.terms_);
  return *this;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  return AlgebraElement(scaled(a.terms_, c));
}

// ---------------------------------------------------------------------------
// UqAlgebra

struct UqAlgebra::Caches {
  std::mutex mu;
  std::map<RootCoords, std::shared_ptr<const GradedPiece>> pieces;
  std::map<std::pair<Word, Word>, AlgebraElement> ef;
};

UqAlgebra::UqAlgebra(CartanDatum datum)
    : datum_(std::move(datum)), caches_(std::make_unique<Caches>()) {}

UqAlgebra::~UqAlgebra() = default;

AlgebraElement UqAlgebra::one() const {
  return AlgebraElement::monomial({{}, Weight::zero(rank()), {}});
}

AlgebraElement UqAlgebra::E(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("unknown node index");
  return AlgebraElement::monomial({{}, Weight::zero(rank()), {static_cast<std::uint8_t>(i)}});
}

AlgebraElement UqAlgebra::F(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("unknown node index");
  return AlgebraElement::monomial({{static_cast<std::uint8_t>(i)}, Weight::zero(rank()), {}});
}

AlgebraElement UqAlgebra::K(const Weight& mu) const {
  if (mu.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  return AlgebraElement::monomial({{}, mu, {}});
}

AlgebraElement UqAlgebra::K_alpha(int i, int k) const { return K(k * datum_.simple_root(i)); }

RootCoords UqAlgebra::grade(const Monomial& m) const {
  RootCoords g = word_content(m.e, rank());
  for (auto i : m.f) g[i] -= 1;
  return g;
}

std::optional<Weight> UqAlgebra::q_weight(const AlgebraElement& a) const {
  if (a.is_zero()) return Weight::zero(rank());
  const RootCoords g = grade(a.terms().begin()->first);
  for (const auto& [m, c] : a.terms()) {
    if (grade(m) != g) return std::nullopt;
  }
  return datum_.root_to_weight(g);
}

std::map<RootCoords, AlgebraElement> UqAlgebra::homogeneous_components(const AlgebraElement& a) const {
  std::map<RootCoords, AlgebraElement> out;
  for (const auto& [m, c] : a.terms()) out[grade(m)].add(m, c);
  return out;
}

// ---------------------------------------------------------------------------
// Graded pieces

std::vector<std::pair<Word, Scalar>> UqAlgebra::serre_words(int i, int j) const {
  const int m = 1 - datum_.a(i, j);
  const int d = datum_.d(i);
  std::vector<std::pair<Word, Scalar>> out;
  for (int k = 0; k <= m; ++k) {
    Word w(static_cast<std::size_t>(m - k), static_cast<std::uint8_t>(i));
    w.push_back(static_cast<std::uint8_t>(j));
    w.insert(w.end(), static_cast<std::size_t>(k), static_cast<std::uint8_t>(i));
    Scalar c = q_binomial(m, k, d);
    out.emplace_back(std::move(w), (k % 2) ? -c : c);
  }
  return out;
}

RawExpression UqAlgebra::serre_relation(int i, int j, Side side) const {
  if (i == j) throw std::invalid_argument("serre_relation needs distinct nodes");
  RawExpression raw;
  for (auto& [w, c] : serre_words(i, j)) {
    std::vector<Generator> gens;
    for (auto n : w) {
      gens.push_back({side == Side::E ? Generator::Kind::E : Generator::Kind::F, n, {}});
    }
    raw.emplace_back(c, std::move(gens));
  }
  return raw;
}

namespace {

std::vector<Word> words_of_content(const RootCoords& nu) {
  Word w;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    w.insert(w.end(), static_cast<std::size_t>(nu[i]), static_cast<std::uint8_t>(i));
  }
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

std::shared_ptr<const UqAlgebra::GradedPiece> UqAlgebra::compute_piece(const RootCoords& nu) const {
  // Span the degree-nu part of the two-sided q-Serre ideal by all words
  // u * R * w, row-reduce with the largest word as pivot, and keep the
  // non-pivot words as canonical representatives.
  const std::vector<Word> words = words_of_content(nu);
  Echelon<Word> relations;
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      if (i == j) continue;
      const auto serre = serre_words(i, j);
      RootCoords rest = nu;
      rest[i] -= 1 - datum_.a(i, j);
      rest[j] -= 1;
      if (std::any_of(rest.begin(), rest.end(), [](int c) { return c < 0; })) continue;
      for (const Word& w : words_of_content(rest)) {
        for (std::size_t p = 0; p <= w.size(); ++p) {
          SparseVec<Word> row;
          for (const auto& [r, c] : serre) {
            Word full(w.begin(), w.begin() + static_cast<long>(p));
            full.insert(full.end(), r.begin(), r.end());
            full.insert(full.end(), w.begin() + static_cast<long>(p), w.end());
            row[full] += c;
          }
          std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
          relations.insert(row);
        }
      }
    }
  }
  auto piece = std::make_shared<GradedPiece>();
  for (const Word& w : words) {
    auto it = relations.rows().find(w);
    if (it == relations.rows().end()) {
      piece->canonical.push_back(w);
      continue;
    }
    std::vector<std::pair<Word, Scalar>> rhs;
    for (const auto& [k, c] : it->second) {
      if (k != w) rhs.emplace_back(k, -c);
    }
    piece->rewrite.emplace(w, std::move(rhs));
  }
  return piece;
}

std::shared_ptr<const UqAlgebra::GradedPiece> UqAlgebra::piece(const RootCoords& nu) const {
  {
    std::lock_guard lock(caches_->mu);
    auto it = caches_->pieces.find(nu);
    if (it != caches_->pieces.end()) return it->second;
  }
  auto computed = compute_piece(nu);
  std::lock_guard lock(caches_->mu);
  return caches_->pieces.try_emplace(nu, std::move(computed)).first->second;
}

int UqAlgebra::graded_dim(const RootCoords& nu, Side side) const {
  (void)side;  // the E and F pieces share their relations
  if (static_cast<int>(nu.size()) != rank() ||
      std::any_of(nu.begin(), nu.end(), [](int c) { return c < 0; })) {
    throw std::invalid_argument("graded_dim: content must lie in Q_+");
  }
  return static_cast<int>(piece(nu)->canonical.size());
}

std::vector<Word> UqAlgebra::canonical_words(const RootCoords& nu, Side side) const {
  (void)side;
  if (std::any_of(nu.begin(), nu.end(), [](int c) { return c < 0; })) {
    throw std::invalid_argument("canonical_words: content must lie in Q_+");
  }
  return piece(nu)->canonical;
}

std::vector<std::pair<Word, Scalar>> UqAlgebra::reduce_word(const Word& w, Side side) const {
  (void)side;
  if (w.size() < 2) return {{w, Scalar(1)}};
  const auto p = piece(word_content(w, rank()));
  auto it = p->rewrite.find(w);
  if (it == p->rewrite.end()) return {{w, Scalar(1)}};
  return it->second;
}

// ---------------------------------------------------------------------------
// Straightening

const AlgebraElement& UqAlgebra::ef_product(const Word& e, const Word& f) const {
  auto key = std::make_pair(e, f);
  {
    std::lock_guard lock(caches_->mu);
    auto it = caches_->ef.find(key);
    if (it != caches_->ef.end()) return it->second;
  }
  AlgebraElement computed = compute_ef_product(e, f);
  std::lock_guard lock(caches_->mu);
  return caches_->ef.try_emplace(std::move(key), std::move(computed)).first->second;
}

AlgebraElement UqAlgebra::compute_ef_product(const Word& e, const Word& f) const {
  const Weight zero = Weight::zero(rank());
  AlgebraElement result;
  if (e.empty()) {
    for (auto& [w, c] : reduce_word(f, Side::F)) result.add({w, zero, {}}, c);
    return result;
  }
  if (f.empty()) {
    for (auto& [w, c] : reduce_word(e, Side::E)) result.add({{}, zero, w}, c);
    return result;
  }
  // E_{e'} E_i F_f with
  //   E_i F_f = F_f E_i + sum_{p : f_p = i} F_{f \ p}
  //             (q^{-(a_i,b_p)} K_i - q^{(a_i,b_p)} K_i^{-1}) / (q_i - q_i^{-1}),
  // where b_p is the content of f to the right of position p.
  const int i = e.back();
  const Word head(e.begin(), e.end() - 1);

  for (const auto& [m, c] : ef_product(head, f).terms()) {
    Word ew = m.e;
    ew.push_back(static_cast<std::uint8_t>(i));
    for (auto& [w, s] : reduce_word(ew, Side::E)) result.add({m.f, m.torus, w}, c * s);
  }

  const int di = datum_.d(i);
  const Scalar inv_qdiff = (Scalar::q_power(di) - Scalar::q_power(-di)).inverse();
  const Weight alpha = datum_.simple_root(i);
  RootCoords right(static_cast<std::size_t>(rank()), 0);
  for (std::size_t p = f.size(); p-- > 0;) {
    if (f[p] == i) {
      const long s = datum_.root_pairing(i, right);
      Word rest = f;
      rest.erase(rest.begin() + static_cast<long>(p));
      for (const auto& [m, c] : ef_product(head, rest).terms()) {
        // E'' K_{+-alpha_i} = q^{-+(alpha_i, wt E'')} K_{+-alpha_i} E''
        const long t = datum_.root_pairing(i, word_content(m.e, rank()));
        const Scalar base = c * inv_qdiff;
        result.add({m.f, m.torus + alpha, m.e}, base * Scalar::q_power(static_cast<int>(-s - t)));
        result.add({m.f, m.torus - alpha, m.e}, -base * Scalar::q_power(static_cast<int>(s + t)));
      }
    }
    right[f[p]] += 1;
  }
  return result;
}

AlgebraElement UqAlgebra::multiply_monomials(const Monomial& a, const Monomial& b) const {
  AlgebraElement out;
  for (const auto& [m, coef] : ef_product(a.e, b.f).terms()) {
    // K_mu F_{c'} = q^{-(mu, wt c')} F_{c'} K_mu and E_{b'} K_nu = q^{-(nu, wt b')} K_nu E_{b'}
    const long ex = -datum_.form(a.torus, word_content(m.f, rank())) -
                    datum_.form(b.torus, word_content(m.e, rank()));
    const Scalar s = coef * Scalar::q_power(static_cast<int>(ex));
    Word fw = a.f;
    fw.insert(fw.end(), m.f.begin(), m.f.end());
    Word ew = m.e;
    ew.insert(ew.end(), b.e.begin(), b.e.end());
    const Weight torus = a.torus + m.torus + b.torus;
    const auto fr = reduce_word(fw, Side::F);
    const auto er = reduce_word(ew, Side::E);
    for (const auto& [fwd, fc] : fr) {
      for (const auto& [ewd, ec] : er) out.add({fwd, torus, ewd}, s * fc * ec);
    }
  }
  return out;
}

AlgebraElement UqAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const Scalar c = ca * cb;
      const AlgebraElement prod = multiply_monomials(ma, mb);
      for (const auto& [m, s] : prod.terms()) out.add(m, c * s);
    }
  }
  return out;
}

AlgebraElement UqAlgebra::generator_product(const std::vector<Generator>& gens) const {
  AlgebraElement acc = one();
  for (const auto& g : gens) {
    switch (g.kind) {
      case Generator::Kind::E: acc = multiply(acc, E(g.node)); break;
      case Generator::Kind::F: acc = multiply(acc, F(g.node)); break;
      case Generator::Kind::K: acc = multiply(acc, K(g.weight)); break;
    }
  }
  return acc;
}

AlgebraElement UqAlgebra::normal_form(const RawExpression& raw) const {
  AlgebraElement out;
  for (const auto& [c, gens] : raw) out += c * generator_product(gens);
  return out;
}

}  // namespace uqa
