// uqa: command-line driver for cyclic adjoint module computations.
//
// Exit status: 0 success, 1 usage or input error, 2 indeterminate verdict
// (a closure exceeded the cap).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uqa/cominuscule.hpp"
#include "uqa/parse.hpp"
#include "uqa/poset.hpp"
#include "uqa/report.hpp"
#include "uqa/selfcheck.hpp"

using namespace uqa;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kIndeterminate = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string type;
  int rank = 0;
  std::optional<std::string> levi;
  std::optional<int> x;
  std::vector<std::string> elems;
  std::optional<std::size_t> cap;
  std::size_t probes = 16;
  std::uint64_t seed = 1;
  std::string n_range = "1..5";
  std::optional<std::string> out;
  std::string format = "text";
};

std::size_t resolve_cap(const Options& o) {
  if (o.cap) return *o.cap;
  if (const char* env = std::getenv("UQA_CAP")) {
    try {
      std::size_t used = 0;
      const long v = std::stol(env, &used);
      if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError("UQA_CAP must be a positive integer");
  }
  return kDefaultCap;
}

CartanDatum resolve_datum(const Options& o) {
  if (o.type.size() != 1) throw UsageError("--type must be one of A..G");
  if (o.rank <= 0) throw UsageError("--rank is required");
  return CartanDatum::build(o.type[0], o.rank);
}

LeviSpec resolve_levi(const Options& o, const CartanDatum& datum) {
  if (o.levi && o.x) throw UsageError("give either --levi or --x, not both");
  if (o.x) {
    if (*o.x < 1 || *o.x > datum.rank()) throw UsageError("--x is not a node of " + datum.name());
    return LeviSpec::complement_of(datum, *o.x - 1);
  }
  if (!o.levi) throw UsageError("--levi or --x is required");
  std::set<int> nodes;
  std::stringstream ss(*o.levi);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int i = 0;
    try {
      i = std::stoi(item);
    } catch (const std::exception&) {
      throw UsageError("bad --levi entry '" + item + "'");
    }
    if (i < 1 || i > datum.rank()) throw UsageError("--levi node " + item + " is not a node of " + datum.name());
    nodes.insert(i - 1);
  }
  return LeviSpec::from_subset(datum, nodes);
}

std::vector<int> resolve_range(const std::string& text) {
  std::vector<int> out;
  try {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      for (int n = lo; n <= hi; ++n) out.push_back(n);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    }
  } catch (const std::exception&) {
    throw UsageError("bad --n range '" + text + "'");
  }
  if (out.empty()) throw UsageError("--n range is empty");
  for (int n : out) {
    if (n < 0) throw UsageError("--n values must be nonnegative");
  }
  return out;
}

const std::string& single_elem(const Options& o) {
  if (o.elems.size() != 1) throw UsageError("--elem is required exactly once for " + o.command);
  return o.elems.front();
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw UsageError("format '" + o.format + "' is not supported by " + o.command);
}

struct Output {
  std::string text;
  int status = kOk;
};

Output cmd_info(const Options& o) {
  require_format(o, {"text", "json"});
  const auto datum = resolve_datum(o);
  Json j;
  j["algebra"] = datum.name();
  j["cartan_matrix"] = datum.cartan_matrix();
  j["symmetrizers"] = datum.symmetrizers();
  j["positive_roots"] = datum.positive_roots().size();
  j["highest_root"] = datum.highest_root();
  std::vector<int> comin;
  for (int i : cominuscule_nodes(datum)) comin.push_back(i + 1);
  j["cominuscule_nodes"] = comin;
  j["conventions"] = conventions_json();
  if (o.levi || o.x) {
    const auto levi = resolve_levi(o, datum);
    j["levi"] = levi.to_string();
    j["levi_positive_roots"] = levi_positive_roots(levi).size();
  }
  if (!o.elems.empty()) {
    UqAlgebra alg(datum);
    const auto a = parse_element(single_elem(o), alg);
    j["element"] = render_element(a);
    const auto w = alg.q_weight(a);
    j["weight"] = w ? Json(w->to_string()) : Json("NotHomogeneous");
  }
  if (o.format == "json") return {dump(j)};
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) os << k << ": " << v.dump() << "\n";
  return {os.str()};
}

Output cmd_closure(const Options& o, bool hwv_only) {
  require_format(o, {"text", "json"});
  const auto datum = resolve_datum(o);
  const auto levi = resolve_levi(o, datum);
  UqAlgebra alg(datum);
  const auto v = parse_element(single_elem(o), alg);
  if (v.is_zero()) throw UsageError("the element is zero");
  const std::size_t cap = resolve_cap(o);
  const auto verdict = cyclic_closure(alg, v, levi, cap);
  const int status = verdict.closed() ? kOk : kIndeterminate;
  if (hwv_only) {
    Json j;
    j["status"] = verdict.closed() ? "Closed" : "CapExceeded";
    j["dim"] = verdict.dim;
    j["hwvs"] = verdict.closed() ? hwv_json(alg, *verdict.module) : Json::array();
    if (o.format == "json") return {dump(j), status};
    std::ostringstream os;
    os << "status: " << j["status"].get<std::string>() << "\n";
    for (const auto& h : j["hwvs"]) {
      os << h["weight"].get<std::string>() << ": " << h["vector"].get<std::string>() << "\n";
    }
    return {os.str(), status};
  }
  if (o.format == "json") return {dump(closure_json(alg, verdict, cap)), status};
  return {closure_text(alg, verdict, cap), status};
}

Output cmd_decompose(const Options& o) {
  require_format(o, {"text", "json"});
  const auto datum = resolve_datum(o);
  const auto levi = resolve_levi(o, datum);
  UqAlgebra alg(datum);
  const auto v = parse_element(single_elem(o), alg);
  if (v.is_zero()) throw UsageError("the element is zero");
  const auto d = decompose_by_hwv(alg, v, levi, resolve_cap(o));
  const Json j = decomposition_json(d);
  if (o.format == "json") return {dump(j)};
  std::ostringstream os;
  os << "dim: " << d.module.dim() << "\n";
  for (const auto& s : d.steps) {
    os << "  " << s.weight.to_string() << ": " << render_element(s.hw_vector) << "  (residual " << s.residual_before
       << " -> " << s.residual_after << ")\n";
  }
  return {os.str()};
}

Output cmd_poset(const Options& o) {
  require_format(o, {"text", "json", "dot"});
  const auto datum = resolve_datum(o);
  const auto levi = resolve_levi(o, datum);
  UqAlgebra alg(datum);
  const std::size_t cap = resolve_cap(o);
  if (o.elems.empty()) throw UsageError("--elem is required for poset");
  std::vector<AlgebraElement> elems;
  for (const auto& t : o.elems) {
    elems.push_back(parse_element(t, alg));
    if (elems.back().is_zero()) throw UsageError("the element '" + t + "' is zero");
  }

  if (elems.size() == 1) {
    const auto p = interval(alg, elems.front(), levi, o.probes, o.seed, cap);
    const auto lattice = lattice_probe(alg, p.nodes, o.probes, o.seed, cap);
    if (o.format == "dot") return {interval_dot(p)};
    if (o.format == "json") {
      Json j = interval_json(p);
      j["lattice"] = lattice_json(lattice);
      return {dump(j)};
    }
    return {interval_text(p) + "lattice: " + lattice_json(lattice)["verdict"].get<std::string>() + "\n"};
  }

  // Several generators: probe the lattice property on their cyclic modules.
  if (o.format == "dot") throw UsageError("dot output needs a single --elem");
  std::vector<ModuleSpace> nodes;
  Json mods = Json::array();
  for (const auto& v : elems) {
    nodes.push_back(closed_module(alg, v, levi, cap));
    const auto& m = nodes.back();
    mods.push_back({{"element", render_element(v)},
                    {"dim", m.dim()},
                    {"isotype", isotype_json(certify_isotype(alg, m, cap), m.dim())}});
  }
  const auto lattice = lattice_probe(alg, nodes, o.probes, o.seed, cap);
  Json j;
  j["modules"] = mods;
  j["lattice"] = lattice_json(lattice);
  if (o.format == "json") return {dump(j)};
  std::ostringstream os;
  for (const auto& m : mods) os << m["element"].get<std::string>() << ": dim " << m["dim"] << "\n";
  os << "lattice: " << j["lattice"]["verdict"].get<std::string>();
  if (!lattice.reason.empty()) os << " (" << lattice.reason << ")";
  os << "\n";
  return {os.str()};
}

Output cmd_verify(const Options& o) {
  require_format(o, {"text", "json"});
  const auto datum = resolve_datum(o);
  if (!o.x) throw UsageError("--x is required for verify-cominuscule");
  if (o.levi) throw UsageError("verify-cominuscule uses the complement of --x; drop --levi");
  if (*o.x < 1 || *o.x > datum.rank()) throw UsageError("--x is not a node of " + datum.name());
  UqAlgebra alg(datum);
  const auto r = verify_fiber_family(alg, *o.x - 1, resolve_range(o.n_range), resolve_cap(o));
  int status = kOk;
  for (const auto& e : r.entries) {
    if ((!e.literal.closed) || (!e.degenerate && !e.lowered.closed)) status = kIndeterminate;
  }
  if (o.format == "json") return {dump(family_json(r)), status};
  return {family_summary_table(r), status};
}

Output cmd_selfcheck(const Options& o) {
  require_format(o, {"text", "json"});
  std::vector<CartanDatum> data;
  if (!o.type.empty() || o.rank > 0) {
    data.push_back(resolve_datum(o));
  } else {
    data = {CartanDatum::build('A', 2), CartanDatum::build('B', 2), CartanDatum::build('A', 3)};
  }
  Json arr = Json::array();
  bool ok = true;
  std::ostringstream os;
  for (const auto& d : data) {
    UqAlgebra alg(d);
    const int height = d.rank() >= 3 ? 5 : 6;
    for (const auto& s : run_selfcheck(alg, 20, 30, height, o.seed)) {
      ok = ok && s.passed();
      arr.push_back({{"algebra", s.algebra},
                     {"suite", s.suite},
                     {"checked", s.checked},
                     {"failed", s.failed},
                     {"first_failure", s.first_failure}});
      os << (s.passed() ? "PASS " : "FAIL ") << s.algebra << " " << s.suite << " (" << s.checked << " checks";
      if (!s.passed()) os << ", " << s.failed << " failed; first: " << s.first_failure;
      os << ")\n";
    }
  }
  if (o.format == "json") {
    Json j;
    j["suites"] = arr;
    j["passed"] = ok;
    return {dump(j), ok ? kOk : kUsage};
  }
  return {os.str(), ok ? kOk : kUsage};
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Cyclic adjoint modules of quantum Levi subalgebras"};
  app.add_option("command", o.command, "info | closure | hwv | decompose | poset | verify-cominuscule | selfcheck")
      ->required()
      ->check(CLI::IsMember({"info", "closure", "hwv", "decompose", "poset", "verify-cominuscule", "selfcheck"}));
  app.add_option("--type", o.type, "Cartan type letter A..G");
  app.add_option("--rank", o.rank, "rank");
  app.add_option("--levi", o.levi, "Levi nodes, 1-based and comma separated");
  app.add_option("--x", o.x, "Levi is the complement of this node (1-based)");
  app.add_option("--elem", o.elems, "algebra element; repeat for several (poset)");
  app.add_option("--cap", o.cap, "closure dimension cap (default 500, or UQA_CAP)")->check(CLI::PositiveNumber);
  app.add_option("--probes", o.probes, "number of seeded probe combinations");
  app.add_option("--seed", o.seed, "probe seed");
  app.add_option("--n", o.n_range, "family range, e.g. 1..5 or 0,2,3");
  app.add_option("--out", o.out, "write the report to this path");
  app.add_option("--format", o.format, "text | json | dot")->check(CLI::IsMember({"text", "json", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Output result;
  try {
    if (o.command == "info") {
      result = cmd_info(o);
    } else if (o.command == "closure") {
      result = cmd_closure(o, false);
    } else if (o.command == "hwv") {
      result = cmd_closure(o, true);
    } else if (o.command == "decompose") {
      result = cmd_decompose(o);
    } else if (o.command == "poset") {
      result = cmd_poset(o);
    } else if (o.command == "verify-cominuscule") {
      result = cmd_verify(o);
    } else {
      result = cmd_selfcheck(o);
    }
  } catch (const CapExceededError& e) {
    std::cerr << "uqa: indeterminate: " << e.what() << "\n";
    return kIndeterminate;
  } catch (const std::exception& e) {
    std::cerr << "uqa: " << e.what() << "\n";
    return kUsage;
  }

  if (o.out) {
    std::ofstream f(*o.out, std::ios::binary);
    if (!f) {
      std::cerr << "uqa: cannot write " << *o.out << "\n";
      return kUsage;
    }
    f << result.text;
  } else {
    std::cout << result.text;
  }
  return result.status;
}
