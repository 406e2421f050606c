#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "uqa/hopf.hpp"
#include "uqa/poset.hpp"

using namespace uqa;

namespace {

struct A2Setup {
  UqAlgebra alg{CartanDatum::build('A', 2)};
  LeviSpec levi = LeviSpec::complement_of(alg.datum(), 1);

  AlgebraElement lowered(int n) const { return ad_F(alg, 1, alg.K(Weight({0, -2 * n}))); }
  AlgebraElement two_copy(int n) const { return lowered(1) + ad_F(alg, 0, lowered(n)); }
};

std::set<std::size_t> certified_nodes(const PosetInterval& p) {
  std::set<std::size_t> out;
  for (std::size_t k = 0; k < p.nodes.size(); ++k) {
    if (certificate_of(p.isotypes[k])) out.insert(k);
  }
  return out;
}

std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("leq on examples", "[poset]") {
  A2Setup s;
  const auto x1 = s.lowered(1);
  CHECK(leq(s.alg, x1, x1, s.levi));
  CHECK(leq(s.alg, ad_F(s.alg, 0, x1), x1, s.levi));
  CHECK(!leq(s.alg, x1, s.alg.one(), s.levi));
  CHECK(leq(s.alg, x1, s.two_copy(2), s.levi));
  CHECK(!leq(s.alg, s.two_copy(2), x1, s.levi));
}

TEST_CASE("leq is a preorder on seeded triples", "[poset][property]") {
  A2Setup s;
  const std::vector<AlgebraElement> pool{s.alg.one(),   s.lowered(1),  s.lowered(2),  s.two_copy(2),
                                         s.alg.E(1),    s.two_copy(3), s.alg.E(1) + s.lowered(1),
                                         ad_F(s.alg, 0, s.lowered(1))};
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto& c = pool[rng() % pool.size()];
    CHECK(leq(s.alg, a, a, s.levi));
    if (leq(s.alg, a, b, s.levi) && leq(s.alg, b, c, s.levi)) CHECK(leq(s.alg, a, c, s.levi));
    if (leq(s.alg, a, b, s.levi) && leq(s.alg, b, a, s.levi)) {
      CHECK(closed_module(s.alg, a, s.levi) == closed_module(s.alg, b, s.levi));
    }
  }
}

TEST_CASE("interval of the unit and of an irreducible", "[poset]") {
  A2Setup s;
  auto unit = interval(s.alg, s.alg.one(), s.levi);
  CHECK(unit.nodes.size() == 2);
  CHECK(unit.edges.size() == 1);
  CHECK(unit.exactness == Exactness::Exact);
  CHECK(minimal_elements(unit) == std::vector<std::size_t>{1});

  auto chain = interval(s.alg, s.lowered(1), s.levi);
  REQUIRE(chain.nodes.size() == 2);
  CHECK(chain.top().dim() == 2);
  CHECK(chain.covers(1, 0));
  CHECK(as_set(minimal_elements(chain)) == certified_nodes(chain));
}

TEST_CASE("diamond interval", "[poset]") {
  A2Setup s;
  auto p = interval(s.alg, s.alg.E(1) + s.lowered(1), s.levi);
  CHECK(p.exactness == Exactness::Exact);
  REQUIRE(p.nodes.size() == 4);
  CHECK(p.edges.size() == 4);
  CHECK(p.top().dim() == 4);
  const auto mins = minimal_elements(p);
  REQUIRE(mins.size() == 2);
  std::vector<ModuleSpace> expected{closed_module(s.alg, s.alg.E(1), s.levi),
                                    closed_module(s.alg, s.lowered(1), s.levi)};
  for (auto k : mins) {
    CHECK(std::count(expected.begin(), expected.end(), p.nodes[k]) == 1);
  }
  CHECK(as_set(mins) == certified_nodes(p));
  CHECK(lattice_probe(s.alg, p.nodes).kind == LatticeVerdict::Kind::Lattice);
}

TEST_CASE("two-copy interval is a probe lower bound", "[poset]") {
  A2Setup s;
  auto p = interval(s.alg, s.two_copy(2), s.levi, 12, 5);
  CHECK(p.exactness == Exactness::ProbeLowerBound);
  CHECK(p.top().dim() == 4);
  CHECK(p.nodes.front().is_zero());
  // M(x^(1)) and M(x^(2)) are found, together with at least one diagonal copy.
  CHECK(p.nodes.size() >= 5);
  CHECK(as_set(minimal_elements(p)) == certified_nodes(p));
  for (auto k : minimal_elements(p)) CHECK(p.nodes[k].dim() == 2);
  auto again = interval(s.alg, s.two_copy(2), s.levi, 12, 5);
  CHECK(again.nodes == p.nodes);
  CHECK(again.edges == p.edges);
}

TEST_CASE("decomposition by highest weight vectors", "[poset]") {
  A2Setup s;
  auto d1 = decompose_by_hwv(s.alg, s.alg.one(), s.levi);
  CHECK(d1.steps.size() == 1);
  CHECK(d1.accumulated == d1.module);

  auto dx = decompose_by_hwv(s.alg, s.lowered(1), s.levi);
  REQUIRE(dx.steps.size() == 1);
  CHECK(closed_module(s.alg, dx.steps[0].hw_vector, s.levi) == dx.module);

  auto dd = decompose_by_hwv(s.alg, s.alg.E(1) + s.lowered(1), s.levi);
  CHECK(dd.steps.size() == 2);
  CHECK(dd.module.dim() == 4);
  CHECK(dd.accumulated == dd.module);

  auto three = decompose_by_hwv(s.alg, s.two_copy(2) + ad_F(s.alg, 0, s.alg.E(1)) + s.alg.one(), s.levi);
  for (const auto& st : three.steps) {
    CHECK(st.residual_after < st.residual_before);
    CHECK(st.quotient_hw_dim >= 1);
  }
  CHECK(three.accumulated == three.module);
}

TEST_CASE("non-lattice configuration", "[poset]") {
  A2Setup s;
  const auto a = closed_module(s.alg, s.two_copy(2), s.levi);
  const auto b = closed_module(s.alg, s.two_copy(3), s.levi);
  CHECK(a.dim() == 4);
  CHECK(b.dim() == 4);
  auto verdict = lattice_probe(s.alg, {a, b});
  CHECK(verdict.kind == LatticeVerdict::Kind::Counterexample);
  CHECK(verdict.failure == LatticeVerdict::Failure::NoCyclicUpperBound);
  CHECK(verdict.certified);
  CHECK(verdict.pair == std::make_pair(std::size_t{0}, std::size_t{1}));

  const auto c = closed_module(s.alg, s.lowered(1), s.levi);
  const auto e = closed_module(s.alg, s.alg.E(1), s.levi);
  CHECK(lattice_probe(s.alg, {c, e, ModuleSpace::zero(s.alg, s.levi)}).kind == LatticeVerdict::Kind::Lattice);
}
