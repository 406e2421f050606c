#include "uqa/hopf.hpp"

namespace uqa {

TensorElement::TensorElement(Terms t) : terms_(std::move(t)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

TensorElement TensorElement::pure(const AlgebraElement& left, const AlgebraElement& right) {
  TensorElement out;
  for (const auto& [l, a] : left.terms()) {
    for (const auto& [r, b] : right.terms()) out.add(l, r, a * b);
  }
  return out;
}

TensorElement& TensorElement::add(const Monomial& l, const Monomial& r, const Scalar& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(Key{l, r}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  axpy(terms_, Scalar(1), o.terms_);
  return *this;
}

TensorElement tensor_multiply(const UqAlgebra& alg, const TensorElement& x, const TensorElement& y) {
  TensorElement out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const AlgebraElement left = alg.multiply_monomials(kx.first, ky.first);
      const AlgebraElement right = alg.multiply_monomials(kx.second, ky.second);
      const Scalar c = cx * cy;
      for (const auto& [l, a] : left.terms()) {
        for (const auto& [r, b] : right.terms()) out.add(l, r, c * a * b);
      }
    }
  }
  return out;
}

namespace {

TensorElement coproduct_monomial(const UqAlgebra& alg, const Monomial& m) {
  TensorElement acc = TensorElement::pure(alg.one(), alg.one());
  for (auto i : m.f) {
    TensorElement g = TensorElement::pure(alg.F(i), alg.K_alpha(i, -1));
    g += TensorElement::pure(alg.one(), alg.F(i));
    acc = tensor_multiply(alg, acc, g);
  }
  if (!m.torus.is_zero()) {
    acc = tensor_multiply(alg, acc, TensorElement::pure(alg.K(m.torus), alg.K(m.torus)));
  }
  for (auto i : m.e) {
    TensorElement g = TensorElement::pure(alg.E(i), alg.one());
    g += TensorElement::pure(alg.K_alpha(i), alg.E(i));
    acc = tensor_multiply(alg, acc, g);
  }
  return acc;
}

AlgebraElement antipode_monomial(const UqAlgebra& alg, const Monomial& m) {
  // S(F_f K E_e) = S(E_{e_n}) ... S(E_{e_1}) K_{-mu} S(F_{f_m}) ... S(F_{f_1})
  AlgebraElement acc = alg.one();
  for (auto it = m.e.rbegin(); it != m.e.rend(); ++it) {
    acc = alg.multiply(acc, Scalar(-1) * alg.multiply(alg.K_alpha(*it, -1), alg.E(*it)));
  }
  acc = alg.multiply(acc, alg.K(-m.torus));
  for (auto it = m.f.rbegin(); it != m.f.rend(); ++it) {
    acc = alg.multiply(acc, Scalar(-1) * alg.multiply(alg.F(*it), alg.K_alpha(*it)));
  }
  return acc;
}

}  // namespace

TensorElement coproduct(const UqAlgebra& alg, const AlgebraElement& a) {
  TensorElement out;
  for (const auto& [m, c] : a.terms()) {
    const TensorElement part = coproduct_monomial(alg, m);
    for (const auto& [k, v] : part.terms()) out.add(k.first, k.second, c * v);
  }
  return out;
}

Scalar counit(const AlgebraElement& a) {
  Scalar s;
  for (const auto& [m, c] : a.terms()) {
    if (m.f.empty() && m.e.empty()) s += c;
  }
  return s;
}

AlgebraElement antipode(const UqAlgebra& alg, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [m, c] : a.terms()) out += c * antipode_monomial(alg, m);
  return out;
}

AlgebraElement multiply_antipode_left(const UqAlgebra& alg, const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms()) {
    out += c * alg.multiply(antipode_monomial(alg, k.first), AlgebraElement::monomial(k.second));
  }
  return out;
}

AlgebraElement multiply_antipode_right(const UqAlgebra& alg, const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms()) {
    out += c * alg.multiply(AlgebraElement::monomial(k.first), antipode_monomial(alg, k.second));
  }
  return out;
}

TripleTerms coproduct_left_leg(const UqAlgebra& alg, const TensorElement& t) {
  TripleTerms out;
  for (const auto& [k, c] : t.terms()) {
    TripleTerms part;
    const TensorElement delta = coproduct_monomial(alg, k.first);
    for (const auto& [kk, v] : delta.terms()) {
      part.emplace(std::make_tuple(kk.first, kk.second, k.second), c * v);
    }
    axpy(out, Scalar(1), part);
  }
  return out;
}

TripleTerms coproduct_right_leg(const UqAlgebra& alg, const TensorElement& t) {
  TripleTerms out;
  for (const auto& [k, c] : t.terms()) {
    TripleTerms part;
    const TensorElement delta = coproduct_monomial(alg, k.second);
    for (const auto& [kk, v] : delta.terms()) {
      part.emplace(std::make_tuple(k.first, kk.first, kk.second), c * v);
    }
    axpy(out, Scalar(1), part);
  }
  return out;
}

AlgebraElement ad_left_generic(const UqAlgebra& alg, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  const TensorElement delta = coproduct(alg, a);
  for (const auto& [k, c] : delta.terms()) {
    const AlgebraElement left = alg.multiply(AlgebraElement::monomial(k.first), b);
    out += c * alg.multiply(left, antipode_monomial(alg, k.second));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generator fast paths

AlgebraElement ad_K(const UqAlgebra& alg, const Weight& mu, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [m, c] : b.terms()) {
    const long ex = alg.datum().form(mu, alg.grade(m));
    out.add(m, c * Scalar::q_power(static_cast<int>(ex)));
  }
  return out;
}

AlgebraElement ad_E(const UqAlgebra& alg, int i, const AlgebraElement& b) {
  // K_i b K_i^{-1} = ad(K_i)(b)
  return alg.multiply(alg.E(i), b) - alg.multiply(ad_K(alg, alg.datum().simple_root(i), b), alg.E(i));
}

AlgebraElement ad_F(const UqAlgebra& alg, int i, const AlgebraElement& b) {
  const AlgebraElement Ki = alg.K_alpha(i);
  const AlgebraElement Fi = alg.F(i);
  return alg.multiply(alg.multiply(Fi, b), Ki) - alg.multiply(alg.multiply(b, Fi), Ki);
}

AlgebraElement ad_left(const UqAlgebra& alg, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [m, c] : a.terms()) {
    AlgebraElement acc = b;
    for (auto it = m.e.rbegin(); it != m.e.rend(); ++it) acc = ad_E(alg, *it, acc);
    if (!m.torus.is_zero()) acc = ad_K(alg, m.torus, acc);
    for (auto it = m.f.rbegin(); it != m.f.rend(); ++it) acc = ad_F(alg, *it, acc);
    out += c * acc;
  }
  return out;
}

}  // namespace uqa
