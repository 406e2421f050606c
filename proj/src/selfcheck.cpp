#include "uqa/selfcheck.hpp"

#include <map>

#include "uqa/hopf.hpp"
#include "uqa/parse.hpp"

namespace uqa {

std::int64_t partition_count(const CartanDatum& datum, const RootCoords& nu) {
  // ways[c] over all c <= nu, adding one root at a time.
  const std::size_t n = nu.size();
  std::size_t total = 1;
  std::vector<std::size_t> stride(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (nu[i] < 0) return 0;
    stride[i] = total;
    total *= static_cast<std::size_t>(nu[i] + 1);
  }
  std::vector<std::int64_t> ways(total, 0);
  ways[0] = 1;
  std::vector<int> c(n);
  for (const auto& root : datum.positive_roots()) {
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      bool fits = true;
      std::size_t from = 0;
      for (std::size_t i = n; i-- > 0;) {
        c[i] = static_cast<int>(rest / stride[i]);
        rest %= stride[i];
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (c[i] < root[i]) fits = false;
        from += static_cast<std::size_t>(c[i] - root[i]) * stride[i];
      }
      if (fits) ways[idx] += ways[from];
    }
  }
  return ways[total - 1];
}

AlgebraElement sample_element(const UqAlgebra& alg, std::mt19937_64& rng, int degree, int terms) {
  RawExpression raw;
  const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(terms));
  for (int t = 0; t < count; ++t) {
    std::vector<Generator> gens;
    const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(degree + 1));
    for (int k = 0; k < len; ++k) {
      const int node = static_cast<int>(rng() % static_cast<std::uint64_t>(alg.rank()));
      gens.push_back({rng() % 2 ? Generator::Kind::E : Generator::Kind::F, node, {}});
    }
    Weight mu = Weight::zero(alg.rank());
    for (auto& x : mu.coords) x = static_cast<int>(rng() % 3) - 1;
    const auto pos = static_cast<long>(rng() % (gens.size() + 1));
    gens.insert(gens.begin() + pos, Generator{Generator::Kind::K, 0, mu});
    long coeff = static_cast<long>(rng() % 7) - 3;
    if (coeff == 0) coeff = 1;
    raw.emplace_back(Scalar(coeff), gens);
  }
  return alg.normal_form(raw);
}

namespace {

class Tally {
 public:
  Tally(const UqAlgebra& alg, std::string suite) : r_{alg.datum().name(), std::move(suite), 0, 0, {}} {}
  void check(bool ok, const std::string& what) {
    ++r_.checked;
    if (ok) return;
    if (r_.failed++ == 0) r_.first_failure = what;
  }
  SuiteResult result() const { return r_; }

 private:
  SuiteResult r_;
};

std::vector<AlgebraElement> generator_list(const UqAlgebra& alg) {
  std::vector<AlgebraElement> gens{alg.one()};
  for (int i = 0; i < alg.rank(); ++i) {
    gens.push_back(alg.E(i));
    gens.push_back(alg.F(i));
    gens.push_back(alg.K_alpha(i));
    gens.push_back(alg.K_alpha(i, -1));
    Weight w = Weight::zero(alg.rank());
    w.coords[static_cast<std::size_t>(i)] = 1;
    gens.push_back(alg.K(w));
  }
  return gens;
}

}  // namespace

SuiteResult check_relations(const UqAlgebra& alg) {
  Tally t(alg, "relations");
  const auto& datum = alg.datum();
  const int r = alg.rank();
  using G = Generator;
  for (int i = 0; i < r; ++i) {
    Weight w = Weight::zero(r);
    w.coords[static_cast<std::size_t>(i)] = 1;
    const std::vector<Weight> torus{w, datum.simple_root(i), -datum.simple_root(i)};
    for (int j = 0; j < r; ++j) {
      RootCoords alpha_j(static_cast<std::size_t>(r), 0);
      alpha_j[static_cast<std::size_t>(j)] = 1;
      for (const auto& mu : torus) {
        const Scalar up = Scalar::q_power(static_cast<int>(datum.form(mu, alpha_j)));
        // K_mu E_j - q^{(mu,alpha_j)} E_j K_mu and K_mu F_j - q^{-(mu,alpha_j)} F_j K_mu
        RawExpression e{{Scalar(1), {G{G::Kind::K, 0, mu}, G{G::Kind::E, j, {}}}},
                        {-up, {G{G::Kind::E, j, {}}, G{G::Kind::K, 0, mu}}}};
        RawExpression f{{Scalar(1), {G{G::Kind::K, 0, mu}, G{G::Kind::F, j, {}}}},
                        {-up.inverse(), {G{G::Kind::F, j, {}}, G{G::Kind::K, 0, mu}}}};
        t.check(alg.normal_form(e).is_zero(), "K-E commutation");
        t.check(alg.normal_form(f).is_zero(), "K-F commutation");
        t.check(alg.multiply(alg.K(mu), alg.K(-mu)) == alg.one(), "K inverse");
      }
      RawExpression ef{{Scalar(1), {G{G::Kind::E, i, {}}, G{G::Kind::F, j, {}}}},
                       {Scalar(-1), {G{G::Kind::F, j, {}}, G{G::Kind::E, i, {}}}}};
      AlgebraElement lhs = alg.normal_form(ef);
      if (i == j) {
        const Scalar qi = Scalar::q_power(datum.d(i));
        lhs -= (qi - qi.inverse()).inverse() * (alg.K_alpha(i) - alg.K_alpha(i, -1));
      }
      t.check(lhs.is_zero(), "E-F relation");
      if (i != j) {
        t.check(alg.normal_form(alg.serre_relation(i, j, Side::E)).is_zero(), "Serre relation (E)");
        t.check(alg.normal_form(alg.serre_relation(i, j, Side::F)).is_zero(), "Serre relation (F)");
      }
    }
  }
  return t.result();
}

SuiteResult check_hopf(const UqAlgebra& alg, std::size_t samples, std::uint64_t seed, int degree) {
  Tally t(alg, "hopf");
  std::mt19937_64 rng(seed);
  auto elements = generator_list(alg);
  for (std::size_t k = 0; k < samples; ++k) elements.push_back(sample_element(alg, rng, degree, 2));
  for (const auto& a : elements) {
    const auto delta = coproduct(alg, a);
    const auto unit = counit(a) * alg.one();
    t.check(multiply_antipode_left(alg, delta) == unit, "m(S x id)Delta = eta epsilon on " + render_element(a));
    t.check(multiply_antipode_right(alg, delta) == unit, "m(id x S)Delta = eta epsilon on " + render_element(a));
    t.check(coproduct_left_leg(alg, delta) == coproduct_right_leg(alg, delta),
            "coassociativity on " + render_element(a));
  }
  return t.result();
}

SuiteResult check_module_law(const UqAlgebra& alg, std::size_t samples, std::uint64_t seed, int degree) {
  Tally t(alg, "module law");
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const auto a = sample_element(alg, rng, degree, 2);
    const auto b = sample_element(alg, rng, degree, 2);
    const auto c = sample_element(alg, rng, degree, 2);
    t.check(ad_left(alg, alg.multiply(a, b), c) == ad_left(alg, a, ad_left(alg, b, c)),
            "ad(ab) = ad(a)ad(b) on (" + render_element(a) + ", " + render_element(b) + ", " + render_element(c) + ")");
  }
  return t.result();
}

SuiteResult check_graded_dims(const UqAlgebra& alg, int max_height) {
  Tally t(alg, "graded dimensions");
  const int r = alg.rank();
  RootCoords nu(static_cast<std::size_t>(r), 0);
  // Odometer over all nu with 1 <= height <= max_height.
  while (true) {
    std::size_t pos = 0;
    while (pos < nu.size()) {
      ++nu[pos];
      int h = 0;
      for (int c : nu) h += c;
      if (h <= max_height) break;
      nu[pos] = 0;
      ++pos;
    }
    if (pos == nu.size()) break;
    const auto expected = partition_count(alg.datum(), nu);
    std::string label = "nu = (";
    for (std::size_t i = 0; i < nu.size(); ++i) label += (i ? "," : "") + std::to_string(nu[i]);
    label += ")";
    t.check(alg.graded_dim(nu, Side::E) == expected, "E-side dimension at " + label);
    t.check(alg.graded_dim(nu, Side::F) == expected, "F-side dimension at " + label);
  }
  return t.result();
}

std::vector<SuiteResult> run_selfcheck(const UqAlgebra& alg, std::size_t hopf_samples, std::size_t law_samples,
                                       int max_height, std::uint64_t seed) {
  return {check_relations(alg), check_hopf(alg, hopf_samples, seed, 3), check_module_law(alg, law_samples, seed + 1, 2),
          check_graded_dims(alg, max_height)};
}

}  // namespace uqa
