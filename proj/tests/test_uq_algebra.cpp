#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "test_support.hpp"
#include "uqa/uq_algebra.hpp"

using namespace uqa;

namespace {

const Scalar q = Scalar::q_power(1);

Generator E(int i) { return {Generator::Kind::E, i, {}}; }
Generator F(int i) { return {Generator::Kind::F, i, {}}; }
Generator K(const Weight& w) { return {Generator::Kind::K, 0, w}; }

/// Every defining relation, written as a raw expression that must vanish.
std::vector<RawExpression> defining_relations(const UqAlgebra& alg) {
  const auto& datum = alg.datum();
  const int n = datum.rank();
  std::vector<RawExpression> rels;
  std::vector<Weight> torus;
  for (int i = 0; i < n; ++i) {
    Weight w = Weight::zero(n);
    w.coords[i] = 1;
    torus.push_back(w);          // fundamental weights
    torus.push_back(-w);
    torus.push_back(datum.simple_root(i));
  }
  for (const auto& mu : torus) {
    rels.push_back({{1, {K(mu), K(-mu)}}, {-1, {}}});
    for (int j = 0; j < n; ++j) {
      const int form = pairing(datum, mu, j).form;
      rels.push_back({{1, {K(mu), E(j)}}, {-q.pow(form), {E(j), K(mu)}}});
      rels.push_back({{1, {K(mu), F(j)}}, {-q.pow(-form), {F(j), K(mu)}}});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      RawExpression r{{1, {E(i), F(j)}}, {-1, {F(j), E(i)}}};
      if (i == j) {
        const Scalar inv = (q.pow(datum.d(i)) - q.pow(-datum.d(i))).inverse();
        r.push_back({-inv, {K(datum.simple_root(i))}});
        r.push_back({inv, {K(-datum.simple_root(i))}});
      } else {
        rels.push_back(alg.serre_relation(i, j, Side::E));
        rels.push_back(alg.serre_relation(i, j, Side::F));
      }
      rels.push_back(r);
    }
  }
  return rels;
}

}  // namespace

TEST_CASE("defining relations normalize to zero", "[uq-core]") {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'A', 3}, {'G', 2}}) {
    UqAlgebra alg(CartanDatum::build(t, n));
    CAPTURE(alg.datum().name());
    for (const auto& rel : defining_relations(alg)) CHECK(alg.normal_form(rel).is_zero());
  }
}

TEST_CASE("straightening examples in A2", "[uq-core]") {
  UqAlgebra alg(CartanDatum::build('A', 2));
  SECTION("K_{alpha_1} E_1 = q^2 E_1 K_{alpha_1}") {
    const auto lhs = alg.multiply(alg.K_alpha(0), alg.E(0));
    const auto rhs = alg.multiply(alg.E(0), alg.K_alpha(0));
    CHECK(lhs == q.pow(2) * rhs);
    CHECK(lhs == AlgebraElement::monomial({{}, alg.datum().simple_root(0), {0}}));
  }
  SECTION("E_1 F_1") {
    const auto inv = (q - q.inverse()).inverse();
    const auto expected = alg.multiply(alg.F(0), alg.E(0)) + inv * alg.K_alpha(0) - inv * alg.K_alpha(0, -1);
    CHECK(alg.multiply(alg.E(0), alg.F(0)) == expected);
  }
  SECTION("unit") {
    const auto x = alg.normal_form({{q + 2, {F(1), E(0), E(1)}}});
    CHECK(alg.multiply(alg.one(), x) == x);
    CHECK(alg.multiply(x, alg.one()) == x);
    CHECK(alg.normal_form({{1, {}}}) == alg.one());
  }
  SECTION("q-Serre combination vanishes") {
    const RawExpression serre{{1, {E(0), E(0), E(1)}}, {-(q + q.inverse()), {E(0), E(1), E(0)}},
                              {1, {E(1), E(0), E(0)}}};
    CHECK(alg.normal_form(serre).is_zero());
  }
  SECTION("F_2 K_{-2 w_2} is already normal; K_mu F_2 picks up q^2") {
    const Weight mu({0, -2});
    const auto fk = alg.normal_form({{1, {F(1), K(mu)}}});
    CHECK(fk == AlgebraElement::monomial({{1}, mu, {}}));
    CHECK(alg.normal_form({{1, {K(mu), F(1)}}}) == q.pow(2) * fk);
  }
}

TEST_CASE("adjoint grading", "[uq-core]") {
  UqAlgebra alg(CartanDatum::build('A', 2));
  CHECK(alg.q_weight(alg.E(0)) == alg.datum().simple_root(0));
  CHECK(alg.q_weight(alg.K(Weight({0, -2}))) == Weight::zero(2));
  CHECK_FALSE(alg.q_weight(alg.E(0) + alg.F(0)).has_value());

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = alg.generator_product(testing_support::random_word(rng, 2, 2));
    auto b = alg.generator_product(testing_support::random_word(rng, 2, 2));
    auto ab = alg.multiply(a, b);
    if (ab.is_zero()) continue;
    CHECK(*alg.q_weight(ab) == *alg.q_weight(a) + *alg.q_weight(b));
  }
}

TEST_CASE("graded dimensions", "[uq-core]") {
  UqAlgebra alg(CartanDatum::build('A', 2));
  CHECK(alg.graded_dim({1, 0}, Side::E) == 1);
  CHECK(alg.graded_dim({1, 1}, Side::E) == 2);
  CHECK(alg.graded_dim({2, 1}, Side::E) == 2);
  CHECK(alg.graded_dim({2, 1}, Side::F) == 2);
  CHECK(alg.canonical_words({2, 1}, Side::E) == std::vector<Word>{{0, 0, 1}, {0, 1, 0}});
  CHECK_THROWS_AS(alg.graded_dim({-1, 1}, Side::E), std::invalid_argument);
  CHECK(alg.graded_dim({0, 0}, Side::E) == 1);
}

TEST_CASE("graded dimensions agree with the Kostant partition oracle", "[uq-core][oracle]") {
  for (auto [t, n, h] : std::vector<std::tuple<char, int, int>>{{'A', 2, 6}, {'B', 2, 6}, {'A', 3, 5}, {'G', 2, 5}}) {
    UqAlgebra alg(CartanDatum::build(t, n));
    const auto roots = oracle::positive_roots_by_reflection(alg.datum());
    for (const auto& nu : oracle::contents_up_to(n, h)) {
      CAPTURE(alg.datum().name(), nu);
      CHECK(alg.graded_dim(nu, Side::E) == oracle::kostant_count(roots, nu));
    }
  }
}

TEST_CASE("multiplication is associative on seeded triples", "[uq-core][property]") {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}}) {
    UqAlgebra alg(CartanDatum::build(t, n));
    std::mt19937_64 rng(1234 + n);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = testing_support::random_element(alg, rng, 2);
      const auto b = testing_support::random_element(alg, rng, 2);
      const auto c = testing_support::random_element(alg, rng, 2);
      CHECK(alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c)));
    }
  }
}
