#pragma once

#include <map>
#include <string>
#include <vector>

#include "smx/formula.hpp"
#include "smx/setops.hpp"
#include "smx/universe.hpp"

namespace smx {

// The two models a formula can be checked in. Native uses the urelement
// semantics of the canonical values; ZfmImage maps both sides of every
// atom through the pure-set encoding before comparing.
enum class Model { Native, ZfmImage };

const char* model_name(Model m);

using Env = std::map<std::string, Value>;

// Value of a closed-under-env term; matrix terms go through mk_matrix.
Value eval_term(const Term& t, const Env& env);

// Bounded Tarskian evaluation. Set-sorted quantifiers range over the set
// values of u, matrix-sorted quantifiers over all values of u. This is the
// reference semantics the structured schema checkers are validated against.
bool eval(const Formula& f, const Universe& u, Model model, const Env& env = {});

// Named separation filters: "is-set" (∃u: u = a) and "is-empty" (∀b: b ∉ a),
// as formulas with the given free matrix-sorted variable.
std::vector<std::string> phi_names();
FormulaPtr phi_formula(const std::string& name, const std::string& var);

// Named replacement maps: "singleton" (a ↦ {a}) and "wrap-1x2" (a ↦ [a a]).
std::vector<std::string> map_names();
const TotalMap& named_map(const std::string& name);

}  // namespace smx
