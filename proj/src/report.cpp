#include "uqa/report.hpp"

#include <sstream>

#include "uqa/parse.hpp"

namespace uqa {

Json weight_json(const Weight& w) { return w.to_string(); }

Json conventions_json() {
  Json j;
  j["cartan"] = "a_ij = <alpha_j, alpha_i^vee>, (alpha_i, alpha_j) = d_i a_ij, q_i = q^d_i";
  j["torus"] = "K_mu E_j K_-mu = q^(mu, alpha_j) E_j, K_mu F_j K_-mu = q^-(mu, alpha_j) F_j";
  j["commutator"] = "E_i F_j - F_j E_i = delta_ij (K_i - K_i^-1) / (q_i - q_i^-1)";
  j["coproduct"] = "E_i -> E_i x 1 + K_i x E_i, F_i -> F_i x K_i^-1 + 1 x F_i, K_mu -> K_mu x K_mu";
  j["antipode"] = "E_i -> -K_i^-1 E_i, F_i -> -F_i K_i, K_mu -> K_-mu";
  j["adjoint"] = "ad(a)b = a_(1) b S(a_(2))";
  j["normal_form"] = "F-word K_mu E-word";
  return j;
}

namespace {

bool fully_dominant(const Weight& w) {
  for (int c : w.coords) {
    if (c < 0) return false;
  }
  return true;
}

}  // namespace

Json isotype_json(const IsotypeResult& r, std::size_t module_dim) {
  Json j;
  if (const auto* c = std::get_if<IsotypeCertificate>(&r)) {
    j["lambda"] = c->lambda.to_string();
    // Highest weights are dominant for the Levi nodes; full dominance is
    // recorded, not assumed.
    j["dominant"] = fully_dominant(c->lambda);
    j["dim"] = c->dim;
    j["certified"] = c->certified;
    j["hw_vector"] = render_element(c->hw_vector);
  } else {
    const auto& f = std::get<NotIrreducibleCyclicHW>(r);
    j["lambda"] = nullptr;
    j["dim"] = module_dim;
    j["certified"] = false;
    j["reason"] = f.reason;
  }
  return j;
}

namespace {

Json weights_array(const ModuleSpace& m) {
  Json arr = Json::array();
  for (const auto& [w, d] : weight_spaces(m)) {
    arr.push_back({{"weight", w.to_string()}, {"coords", w.coords}, {"dim", d}});
  }
  return arr;
}

std::string isotype_label(const IsotypeResult& r) {
  if (const auto* c = certificate_of(r)) return "V(" + c->lambda.to_string() + ")";
  return "";
}

}  // namespace

Json hwv_json(const UqAlgebra& alg, const ModuleSpace& m) {
  Json arr = Json::array();
  for (const auto& [w, v] : highest_weight_vectors(alg, m)) {
    arr.push_back({{"weight", w.to_string()}, {"vector", render_element(v)}});
  }
  return arr;
}

Json closure_json(const UqAlgebra& alg, const ClosureVerdict& verdict, std::size_t cap) {
  Json j;
  j["status"] = verdict.closed() ? "Closed" : "CapExceeded";
  j["dim"] = verdict.dim;
  j["cap"] = cap;
  if (!verdict.closed()) {
    j["locally_finite"] = "Unknown";
    j["last_growth_step"] = verdict.last_growth_step;
    j["weights"] = Json::array();
    j["hwvs"] = Json::array();
    j["isotype"] = nullptr;
    return j;
  }
  const auto& m = *verdict.module;
  j["locally_finite"] = "Yes";
  j["weights"] = weights_array(m);
  j["hwvs"] = hwv_json(alg, m);
  j["isotype"] = isotype_json(certify_isotype(alg, m, cap), m.dim());
  Json basis = Json::array();
  for (const auto& b : m.basis()) basis.push_back(render_element(b));
  j["basis"] = basis;
  return j;
}

std::string closure_text(const UqAlgebra& alg, const ClosureVerdict& verdict, std::size_t cap) {
  std::ostringstream os;
  if (!verdict.closed()) {
    os << "status: CapExceeded (locally finite: Unknown)\n"
       << "partial dim: " << verdict.dim << " > cap " << cap << "\n";
    return os.str();
  }
  const auto& m = *verdict.module;
  os << "status: Closed\n" << "dim: " << m.dim() << "\n" << "weights:\n";
  for (const auto& [w, d] : weight_spaces(m)) os << "  " << w.to_string() << ": " << d << "\n";
  os << "highest weight vectors:\n";
  for (const auto& [w, v] : highest_weight_vectors(alg, m)) os << "  " << w.to_string() << ": " << render_element(v) << "\n";
  const auto iso = certify_isotype(alg, m, cap);
  if (const auto* c = certificate_of(iso)) {
    os << "isotype: V(" << c->lambda.to_string() << "), dim " << c->dim << ", certified\n";
  } else {
    os << "isotype: not irreducible (" << std::get<NotIrreducibleCyclicHW>(iso).reason << ")\n";
  }
  os << "basis:\n";
  for (const auto& b : m.basis()) os << "  " << render_element(b) << "\n";
  return os.str();
}

Json interval_json(const PosetInterval& p) {
  Json j;
  j["exactness"] = p.exactness == Exactness::Exact ? "Exact" : "ProbeLowerBound";
  j["probes"] = p.probes;
  j["seed"] = p.seed;
  Json nodes = Json::array();
  for (std::size_t k = 0; k < p.nodes.size(); ++k) {
    Json n;
    n["id"] = k;
    n["dim"] = p.nodes[k].dim();
    n["weights"] = weights_array(p.nodes[k]);
    n["isotype"] = p.nodes[k].is_zero() ? Json(nullptr) : isotype_json(p.isotypes[k], p.nodes[k].dim());
    nodes.push_back(n);
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& [lo, hi] : p.edges) edges.push_back({lo, hi});
  j["edges"] = edges;
  j["minimal"] = minimal_elements(p);
  return j;
}

std::string interval_text(const PosetInterval& p) {
  std::ostringstream os;
  os << "interval: " << p.nodes.size() << " nodes, " << p.edges.size() << " covering edges, "
     << (p.exactness == Exactness::Exact ? "exact" : "probe lower bound") << "\n";
  for (std::size_t k = 0; k < p.nodes.size(); ++k) {
    os << "  node " << k << ": dim " << p.nodes[k].dim();
    const auto label = isotype_label(p.isotypes[k]);
    if (!label.empty()) os << ", " << label;
    os << "\n";
  }
  for (const auto& [lo, hi] : p.edges) os << "  " << lo << " < " << hi << "\n";
  os << "minimal:";
  for (auto k : minimal_elements(p)) os << " " << k;
  os << "\n";
  return os.str();
}

std::string interval_dot(const PosetInterval& p) {
  std::ostringstream os;
  os << "digraph interval {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < p.nodes.size(); ++k) {
    os << "  n" << k << " [label=\"dim " << p.nodes[k].dim();
    const auto label = isotype_label(p.isotypes[k]);
    if (!label.empty()) os << "\\n" << label;
    os << "\"];\n";
  }
  for (const auto& [lo, hi] : p.edges) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

Json decomposition_json(const Decomposition& d) {
  Json j;
  j["dim"] = d.module.dim();
  Json steps = Json::array();
  for (const auto& s : d.steps) {
    steps.push_back({{"weight", s.weight.to_string()},
                     {"hw_vector", render_element(s.hw_vector)},
                     {"quotient_hw_dim", s.quotient_hw_dim},
                     {"residual_before", s.residual_before},
                     {"residual_after", s.residual_after}});
  }
  j["steps"] = steps;
  j["sum_equals_module"] = d.accumulated == d.module;
  return j;
}

Json lattice_json(const LatticeVerdict& v) {
  Json j;
  j["verdict"] = v.kind == LatticeVerdict::Kind::Lattice ? "Lattice" : "Counterexample";
  switch (v.failure) {
    case LatticeVerdict::Failure::None: j["failure"] = nullptr; break;
    case LatticeVerdict::Failure::NoCyclicUpperBound: j["failure"] = "NoCyclicUpperBound"; break;
    case LatticeVerdict::Failure::NoGreatestLowerBound: j["failure"] = "NoGreatestLowerBound"; break;
  }
  j["pair"] = v.pair ? Json{v.pair->first, v.pair->second} : Json(nullptr);
  j["basis"] = v.certified ? "multiplicity bound" : "probe";
  j["pairs_checked"] = v.pairs_checked;
  j["join_witnesses"] = v.join_witnesses;
  j["reason"] = v.reason;
  return j;
}

Json family_json(const FamilyReport& r) {
  Json j;
  j["algebra"] = r.algebra;
  j["x"] = r.x + 1;
  j["levi"] = r.levi.to_string();
  j["cominuscule"] = r.cominuscule;
  j["expected_lambda"] = r.expected_lambda.to_string();
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    auto side = [](const ModuleOutcome& o) -> Json {
      Json s;
      s["status"] = o.closed ? "Closed" : (o.dim == 0 ? "None" : "CapExceeded");
      s["dim"] = o.dim;
      s["isotype"] = o.isotype ? isotype_json(*o.isotype, o.dim) : Json(nullptr);
      return s;
    };
    Json x;
    x["n"] = e.n;
    x["torus"] = render_element(e.torus);
    x["element"] = render_element(e.element);
    x["degenerate"] = e.degenerate;
    x["is_hwv"] = e.is_hwv;
    x["hw_weight"] = e.hw_weight ? Json(e.hw_weight->to_string()) : Json(nullptr);
    x["literal_module"] = side(e.literal);
    x["krahmer_module"] = side(e.lowered);
    entries.push_back(x);
  }
  j["entries"] = entries;
  j["distinctness"] = r.same;
  j["fiber_ok"] = r.fiber_ok();
  j["flags"] = r.flags;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace uqa
