#include <catch_amalgamated.hpp>

#include <random>

#include "test_support.hpp"
#include "uqa/hopf.hpp"

using namespace uqa;

namespace {

const Scalar q = Scalar::q_power(1);

std::vector<AlgebraElement> generators(const UqAlgebra& alg) {
  std::vector<AlgebraElement> gens{alg.one()};
  for (int i = 0; i < alg.rank(); ++i) {
    gens.push_back(alg.E(i));
    gens.push_back(alg.F(i));
    gens.push_back(alg.K_alpha(i));
    gens.push_back(alg.K_alpha(i, -1));
    Weight w = Weight::zero(alg.rank());
    w.coords[i] = -2;
    gens.push_back(alg.K(w));
  }
  return gens;
}

}  // namespace

TEST_CASE("coproduct, counit and antipode on generators", "[hopf]") {
  UqAlgebra alg(CartanDatum::build('A', 2));
  CHECK(coproduct(alg, alg.E(0)) ==
        TensorElement::pure(alg.E(0), alg.one()) + TensorElement::pure(alg.K_alpha(0), alg.E(0)));
  CHECK(coproduct(alg, alg.one()) == TensorElement::pure(alg.one(), alg.one()));
  const Weight mu({0, -2});
  CHECK(coproduct(alg, alg.K(mu)) == TensorElement::pure(alg.K(mu), alg.K(mu)));

  CHECK(counit(alg.one()).is_one());
  CHECK(counit(alg.E(0)).is_zero());
  CHECK(counit(alg.K(mu)).is_one());

  CHECK(antipode(alg, alg.K(mu)) == alg.K(-mu));
  CHECK(antipode(alg, alg.E(1)) == Scalar(-1) * alg.multiply(alg.K_alpha(1, -1), alg.E(1)));
  CHECK(antipode(alg, alg.one()) == alg.one());
}

TEST_CASE("ad_L examples", "[hopf]") {
  UqAlgebra alg(CartanDatum::build('A', 2));
  const auto e1f1 = alg.multiply(alg.E(0), alg.F(0));
  CHECK(ad_left_generic(alg, e1f1, alg.one()) == counit(e1f1) * alg.one());
  CHECK(ad_left(alg, e1f1, alg.one()).is_zero());

  const Weight mu({0, -2});
  // ad(F_x)(K_mu) = (q^{(mu,alpha_x)} - 1) K_mu F_x K_{alpha_x}
  const auto expected = (q.pow(-2) - 1) * alg.multiply(alg.multiply(alg.K(mu), alg.F(1)), alg.K_alpha(1));
  CHECK(ad_F(alg, 1, alg.K(mu)) == expected);
  CHECK(ad_left_generic(alg, alg.F(1), alg.K(mu)) == expected);
  // ad(F_1) fixes K_{-2 w_2} up to zero since (w_2, alpha_1) = 0
  CHECK(ad_F(alg, 0, alg.K(mu)).is_zero());

  for (int j = 0; j < 2; ++j) {
    CHECK(ad_K(alg, mu, alg.E(j)) == q.pow(pairing(alg.datum(), mu, j).form) * alg.E(j));
  }
}

TEST_CASE("Hopf axioms on generators and seeded elements", "[hopf][property]") {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}}) {
    UqAlgebra alg(CartanDatum::build(t, n));
    CAPTURE(alg.datum().name());
    std::vector<AlgebraElement> sample = generators(alg);
    std::mt19937_64 rng(99 + n);
    for (int k = 0; k < 20; ++k) sample.push_back(testing_support::random_element(alg, rng, 3));
    for (const auto& a : sample) {
      const TensorElement delta = coproduct(alg, a);
      CHECK(multiply_antipode_left(alg, delta) == counit(a) * alg.one());
      CHECK(multiply_antipode_right(alg, delta) == counit(a) * alg.one());
      CHECK(coproduct_left_leg(alg, delta) == coproduct_right_leg(alg, delta));
    }
  }
}

TEST_CASE("fast paths agree with the generic adjoint action", "[hopf][property]") {
  UqAlgebra alg(CartanDatum::build('A', 2));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto b = testing_support::random_element(alg, rng, 3);
    for (int i = 0; i < 2; ++i) {
      CHECK(ad_E(alg, i, b) == ad_left_generic(alg, alg.E(i), b));
      CHECK(ad_F(alg, i, b) == ad_left_generic(alg, alg.F(i), b));
    }
    const Weight mu = testing_support::random_weight(rng, 2);
    CHECK(ad_K(alg, mu, b) == ad_left_generic(alg, alg.K(mu), b));
    const auto a = testing_support::random_element(alg, rng, 2);
    CHECK(ad_left(alg, a, b) == ad_left_generic(alg, a, b));
  }
}

TEST_CASE("module law and grading shift", "[hopf][property]") {
  UqAlgebra alg(CartanDatum::build('A', 2));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = alg.generator_product(testing_support::random_word(rng, 2, 2));
    const auto b = alg.generator_product(testing_support::random_word(rng, 2, 2));
    const auto v = testing_support::random_element(alg, rng, 2);
    CHECK(ad_left_generic(alg, alg.multiply(a, b), v) ==
          ad_left_generic(alg, a, ad_left_generic(alg, b, v)));
    const auto vh = alg.generator_product(testing_support::random_word(rng, 2, 2));
    const auto img = ad_left(alg, a, vh);
    if (!img.is_zero()) CHECK(*alg.q_weight(img) == *alg.q_weight(a) + *alg.q_weight(vh));
  }
}
