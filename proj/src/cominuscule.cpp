#include "uqa/cominuscule.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "uqa/hopf.hpp"

namespace uqa {

namespace {

int node_of(const LeviSpec& levi) {
  if (!levi.x()) throw std::invalid_argument("the Levi must be the complement of a single node");
  return *levi.x();
}

ModuleOutcome outcome(const UqAlgebra& alg, const AlgebraElement& v, const LeviSpec& levi, std::size_t cap) {
  ModuleOutcome out;
  if (v.is_zero()) return out;
  auto verdict = cyclic_closure(alg, v, levi, cap);
  out.closed = verdict.closed();
  out.dim = verdict.dim;
  if (out.closed) {
    out.isotype = certify_isotype(alg, *verdict.module, cap);
    out.module = std::move(verdict.module);
  }
  return out;
}

const IsotypeCertificate* cert(const ModuleOutcome& o) { return o.isotype ? certificate_of(*o.isotype) : nullptr; }

std::string describe(const ModuleOutcome& o) {
  if (!o.closed) return "closure did not finish within the cap";
  if (const auto* c = cert(o)) return "V(" + c->lambda.to_string() + ") of dim " + std::to_string(c->dim);
  return "dim " + std::to_string(o.dim) + ", not irreducible";
}

}  // namespace

AlgebraElement family_torus(const UqAlgebra& alg, const LeviSpec& levi, int n) {
  Weight mu = Weight::zero(alg.rank());
  mu.coords[static_cast<std::size_t>(node_of(levi))] = -2 * n;
  return alg.K(mu);
}

AlgebraElement krahmer_element(const UqAlgebra& alg, const LeviSpec& levi, int n) {
  return ad_F(alg, node_of(levi), family_torus(alg, levi, n));
}

std::size_t FamilyReport::certified_count() const {
  std::size_t k = 0;
  for (const auto& e : entries) {
    if (const auto* c = cert(e.lowered); c && c->lambda == expected_lambda) ++k;
  }
  return k;
}

bool FamilyReport::fiber_ok() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].degenerate) continue;
    const auto* c = cert(entries[i].lowered);
    if (!c || c->lambda != expected_lambda || !entries[i].is_hwv) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!entries[j].degenerate && same[i][j]) return false;
    }
  }
  return true;
}

FamilyReport verify_fiber_family(const UqAlgebra& alg, int x, const std::vector<int>& ns, std::size_t cap) {
  const auto& datum = alg.datum();
  FamilyReport r{datum.name(), x, LeviSpec::complement_of(datum, x), cominuscule_nodes(datum).count(x) != 0,
                 -datum.simple_root(x), {}, {}, {}};
  if (!r.cominuscule) {
    r.flags.push_back("node " + std::to_string(x + 1) +
                      " is not cominuscule; finiteness of the closures is only tested up to the cap");
  }

  for (int n : ns) {
    FamilyEntry e;
    e.n = n;
    e.torus = family_torus(alg, r.levi, n);
    e.element = krahmer_element(alg, r.levi, n);
    e.degenerate = e.element.is_zero();
    e.literal = outcome(alg, e.torus, r.levi, cap);
    if (e.degenerate) {
      r.flags.push_back("n = " + std::to_string(n) + ": ad(F_" + std::to_string(x + 1) +
                        ")(K) vanishes, degenerate entry with no lowered module");
    } else {
      e.hw_weight = alg.q_weight(e.element);
      bool killed = true;
      for (int j : r.levi.nodes()) killed = killed && ad_E(alg, j, e.element).is_zero();
      e.is_hwv = killed && e.hw_weight == r.expected_lambda;
      e.lowered = outcome(alg, e.element, r.levi, cap);
      if (!e.is_hwv) {
        r.flags.push_back("n = " + std::to_string(n) + ": lowered element is not a highest weight vector of weight " +
                          r.expected_lambda.to_string());
      }
      const auto* c = cert(e.lowered);
      if (!c || c->lambda != r.expected_lambda) {
        r.flags.push_back("n = " + std::to_string(n) + ": lowered module is " + describe(e.lowered) +
                          ", expected V(" + r.expected_lambda.to_string() + ")");
      }
    }
    const auto* lc = cert(e.literal);
    if (!lc || lc->lambda != r.expected_lambda) {
      r.flags.push_back("n = " + std::to_string(n) + ": literal reading, the Levi closure of K_{" +
                        (-2 * n == 0 ? std::string("0") : std::to_string(-2 * n) + "*w" + std::to_string(x + 1)) +
                        "} is " + describe(e.literal) + ", not V(" + r.expected_lambda.to_string() + ")");
    }
    r.entries.push_back(std::move(e));
  }

  const std::size_t k = r.entries.size();
  r.same.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& a = r.entries[i].lowered.module;
      const auto& b = r.entries[j].lowered.module;
      r.same[i][j] = a && b && *a == *b;
    }
  }
  return r;
}

std::string family_summary_table(const FamilyReport& r) {
  std::ostringstream out;
  out << r.algebra << ", x = " << r.x + 1 << ", S = " << r.levi.to_string() << "\n";
  out << std::left << std::setw(4) << "n" << std::setw(13) << "literal dim" << std::setw(13) << "lowered dim"
      << std::setw(20) << "certified lambda" << "distinct from previous\n";
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const auto& e = r.entries[i];
    const auto* c = cert(e.lowered);
    std::string distinct = "-";
    if (i > 0 && !e.degenerate && !r.entries[i - 1].degenerate) distinct = r.same[i][i - 1] ? "no" : "yes";
    const std::string lit = e.literal.closed ? std::to_string(e.literal.dim) : ">" + std::to_string(e.literal.dim - 1);
    std::string low = "-";
    if (!e.degenerate) low = e.lowered.closed ? std::to_string(e.lowered.dim) : ">" + std::to_string(e.lowered.dim - 1);
    out << std::setw(4) << e.n << std::setw(13) << lit << std::setw(13) << low << std::setw(20)
        << (c ? c->lambda.to_string() : std::string("-")) << distinct << "\n";
  }
  for (const auto& f : r.flags) out << "flag: " << f << "\n";
  return out.str();
}

}  // namespace uqa
