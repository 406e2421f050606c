#pragma once

// JSON, DOT and plain-text reports. Key order is fixed and every collection
// is emitted in a deterministic order, so equal inputs give byte-identical
// output.

#include <string>

#include <json.hpp>

#include "uqa/cominuscule.hpp"
#include "uqa/module_engine.hpp"
#include "uqa/poset.hpp"

namespace uqa {

using Json = nlohmann::ordered_json;

Json weight_json(const Weight& w);

/// Coefficient conventions of the algebra, Hopf structure and adjoint action.
Json conventions_json();
Json isotype_json(const IsotypeResult& r, std::size_t module_dim);

/// {status, dim, cap, weights, hwvs, isotype, basis}
Json closure_json(const UqAlgebra& alg, const ClosureVerdict& verdict, std::size_t cap);
std::string closure_text(const UqAlgebra& alg, const ClosureVerdict& verdict, std::size_t cap);

Json hwv_json(const UqAlgebra& alg, const ModuleSpace& m);

Json interval_json(const PosetInterval& p);
std::string interval_text(const PosetInterval& p);
/// Hasse diagram; node labels carry the dimension and the certified isotype.
std::string interval_dot(const PosetInterval& p);

Json decomposition_json(const Decomposition& d);
Json lattice_json(const LatticeVerdict& v);

Json family_json(const FamilyReport& r);

/// Serialization used by every command: two-space indent and a final newline.
std::string dump(const Json& j);

}  // namespace uqa
