#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smx/eval.hpp"
#include "smx/formula.hpp"
#include "smx/universe.hpp"

namespace smx {

enum class SchemaId {
  SetMatrix,
  Reduction,
  Omission,
  DivisionSets,
  DivisionMatrices,
  Epsilon,
  ExtMatrices,
  ExtSets,
  Empty,
  Separation,
  Pairing,
  Union,
  Powerset,
  Infinity,
  Replacement,
  SetOfMatrices
};

const char* schema_name(SchemaId id);
std::optional<SchemaId> schema_from_name(const std::string& name);

// Parameters of a schema instance: shape(s) for the matrix schemas, a named
// separation filter, a named replacement map, or an infinity stage count.
struct SchemaParams {
  std::vector<Shape> shapes;
  std::string phi;
  std::string map;
  int stage = 0;  // 0 selects the default stage for the infinity schema

  std::string str() const;
};

enum class Theory { Smt, SmtMinus };
const char* theory_name(Theory t);
std::optional<Theory> theory_from_name(const std::string& name);

// Outcome of one bounded schema check. A failing verdict carries the
// refuting assignment of the schema's leading universal variables, in
// quantifier order; re-evaluating the body under it yields false.
struct Verdict {
  SchemaId schema;
  SchemaParams params;
  Model model;
  bool holds = true;
  std::vector<std::pair<std::string, Value>> witness;
  int universe_rank = 0;
  int universe_depth = 0;
  std::vector<Shape> universe_shapes;
  std::size_t universe_size = 0;
  bool universe_zfm_closed = false;
};

// The closed first-order formula of a schema instance.
// Throws SchemaError for unknown parameters or arity mismatches.
FormulaPtr instantiate_schema(SchemaId id, const SchemaParams& params);

struct CheckOptions {
  // Assignment blocks up to this many tuples are checked by enumeration;
  // larger blocks use the exact structural decision procedures, which agree
  // with enumeration (cross-validated on small universes in the test suite).
  std::size_t enumeration_budget = 2'000'000;
};

// Checks one schema instance over u. Top-level constructive existentials
// are discharged by building the witness with the corresponding value
// operation; the remaining quantifiers are bounded by u. In the zfm-image
// model, the check runs over zfm_closure(u) so that the pure sets matrices
// encode to are part of the quantification domain.
Verdict check_schema(SchemaId id, const SchemaParams& params, const Universe& u, Model model,
                     const CheckOptions& opts = {});

// Instantiates every schema of the theory at every admissible shape with
// rows/cols up to the bound and checks each instance. SmtMinus omits the
// epsilon schema and the set/matrix division subschema.
std::vector<Verdict> check_suite(Theory theory, const Universe& u, Model model, Shape shape_bound,
                                 const CheckOptions& opts = {});

}  // namespace smx
