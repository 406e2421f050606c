#include <catch_amalgamated.hpp>

#include "uqa/cominuscule.hpp"
#include "uqa/hopf.hpp"

using namespace uqa;

namespace {

bool has_flag(const FamilyReport& r, const std::string& needle) {
  for (const auto& f : r.flags) {
    if (f.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("lowered torus elements", "[cominuscule]") {
  UqAlgebra a2(CartanDatum::build('A', 2));
  const auto levi = LeviSpec::complement_of(a2.datum(), 1);
  CHECK(krahmer_element(a2, levi, 0).is_zero());

  const Weight mu({0, -2});
  const auto closed = (Scalar::q_power(-2) - 1) *
                      a2.multiply(a2.multiply(a2.K(mu), a2.F(1)), a2.K_alpha(1));
  CHECK(krahmer_element(a2, levi, 1) == closed);
  CHECK(krahmer_element(a2, levi, 1) == ad_left_generic(a2, a2.F(1), a2.K(mu)));

  UqAlgebra a3(CartanDatum::build('A', 3));
  const auto l3 = LeviSpec::complement_of(a3.datum(), 2);
  const Weight mu3({0, 0, -4});
  CHECK(krahmer_element(a3, l3, 2) ==
        (Scalar::q_power(-4) - 1) * a3.multiply(a3.multiply(a3.K(mu3), a3.F(2)), a3.K_alpha(2)));

  UqAlgebra b2(CartanDatum::build('B', 2));
  const auto lb = LeviSpec::complement_of(b2.datum(), 0);
  // d_1 = 2 in B2
  CHECK(krahmer_element(b2, lb, 1) == (Scalar::q_power(-4) - 1) * b2.multiply(b2.multiply(b2.K(Weight({-2, 0})), b2.F(0)),
                                                                              b2.K_alpha(0)));
  CHECK_THROWS_AS(krahmer_element(a2, LeviSpec::from_subset(a2.datum(), {}), 1), std::invalid_argument);
}

TEST_CASE("A2 fiber family", "[cominuscule]") {
  UqAlgebra alg(CartanDatum::build('A', 2));
  auto r = verify_fiber_family(alg, 1, {1, 2, 3});
  CHECK(r.cominuscule);
  REQUIRE(r.entries.size() == 3);
  for (const auto& e : r.entries) {
    CHECK(e.is_hwv);
    CHECK(e.lowered.dim == 2);
    CHECK(e.literal.dim == 1);
    const auto* lit = certificate_of(*e.literal.isotype);
    REQUIRE(lit);
    CHECK(lit->lambda == Weight::zero(2));
  }
  CHECK(r.certified_count() == 3);
  CHECK(r.fiber_ok());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(r.same[i][j] == (i == j));
  }
  CHECK(has_flag(r, "n = 1: literal reading"));
  CHECK(has_flag(r, "n = 3: literal reading"));
  const auto table = family_summary_table(r);
  CHECK(table.find("certified lambda") != std::string::npos);
}

TEST_CASE("degenerate and non-cominuscule entries", "[cominuscule]") {
  UqAlgebra alg(CartanDatum::build('A', 2));
  auto r = verify_fiber_family(alg, 1, {0, 1});
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].degenerate);
  CHECK(has_flag(r, "degenerate"));
  CHECK(r.fiber_ok());

  UqAlgebra b2(CartanDatum::build('C', 3));
  // node 1 of C3 has highest-root coefficient 2
  auto nc = verify_fiber_family(b2, 0, {1}, 60);
  CHECK(!nc.cominuscule);
  CHECK(has_flag(nc, "not cominuscule"));
  CHECK(nc.entries[0].literal.dim == 1);
}

TEST_CASE("A3 fiber family", "[cominuscule]") {
  UqAlgebra alg(CartanDatum::build('A', 3));
  auto r = verify_fiber_family(alg, 2, {1, 2});
  REQUIRE(r.entries.size() == 2);
  for (const auto& e : r.entries) CHECK(e.lowered.dim == 3);
  CHECK(r.fiber_ok());
}
