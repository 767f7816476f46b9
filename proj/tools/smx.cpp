// Command-line front end for the set-matrix kernel: term normalization,
// equality/membership queries, pure-set encoding, universe enumeration,
// axiom-schema checks in the native and encoded models, and the
// transitivity/ordinal predicates.
//
// Exit codes: 0 true/holds, 1 false/fails, 2 parse or usage error,
// 3 sort/guard violation, 4 resource limit exceeded.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "smx/encode.hpp"
#include "smx/eval.hpp"
#include "smx/schemas.hpp"
#include "smx/setops.hpp"
#include "smx/textio.hpp"
#include "smx/universe.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSort = 3;
constexpr int kExitLimit = 4;

std::string read_term_arg(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

smx::Shape parse_shape(const std::string& text) {
  auto x = text.find('x');
  if (x == std::string::npos) x = text.find('X');
  if (x == std::string::npos || x == 0 || x + 1 >= text.size())
    throw smx::SchemaError("shape must look like 'MxN', got '" + text + "'");
  int rows = 0, cols = 0;
  try {
    rows = std::stoi(text.substr(0, x));
    cols = std::stoi(text.substr(x + 1));
  } catch (const std::exception&) {
    throw smx::SchemaError("shape must look like 'MxN', got '" + text + "'");
  }
  if (rows < 1 || cols < 1) throw smx::SchemaError("shape components must be positive: " + text);
  return smx::Shape{rows, cols};
}

std::vector<smx::Shape> parse_shape_list(const std::string& text) {
  std::vector<smx::Shape> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_shape(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

int depth_of(smx::Value v) {
  int d = 0;
  for (const smx::Value& k : v.is_set() ? v.elems() : v.entries())
    d = std::max(d, depth_of(k) + 1);
  return d;
}

std::string witness_text(const smx::Verdict& v) {
  std::string out;
  for (const auto& [name, value] : v.witness) {
    if (!out.empty()) out += " ";
    out += name + "=" + smx::print(value);
  }
  return out;
}

std::string verdict_line(const smx::Verdict& v) {
  std::string params = v.params.str();
  std::string line = std::string(smx::schema_name(v.schema)) +
                     (params.empty() ? "" : "(" + params + ")") + " " +
                     smx::model_name(v.model) + " " + (v.holds ? "holds" : "fails");
  if (!v.witness.empty()) line += " witness " + witness_text(v);
  return line;
}

nlohmann::json verdict_json(const smx::Verdict& v) {
  nlohmann::json j;
  j["schema"] = smx::schema_name(v.schema);
  nlohmann::json shapes = nlohmann::json::array();
  for (const smx::Shape& s : v.params.shapes) shapes.push_back(s.str());
  j["shapes"] = std::move(shapes);
  if (!v.params.phi.empty()) j["phi"] = v.params.phi;
  if (!v.params.map.empty()) j["map"] = v.params.map;
  if (v.params.stage > 0) j["stage"] = v.params.stage;
  j["model"] = smx::model_name(v.model);
  j["holds"] = v.holds;
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& [name, value] : v.witness)
    witness.push_back({{"var", name}, {"value", smx::print(value)}});
  j["witness"] = std::move(witness);
  nlohmann::json ushapes = nlohmann::json::array();
  for (const smx::Shape& s : v.universe_shapes) ushapes.push_back(s.str());
  j["universe"] = {{"rank", v.universe_rank},
                   {"depth", v.universe_depth},
                   {"shapes", std::move(ushapes)},
                   {"size", v.universe_size},
                   {"zfm_closed", v.universe_zfm_closed}};
  return j;
}

struct CheckArgs {
  std::string schema;
  std::string suite;
  std::string schema_shapes;
  std::string phi;
  std::string map;
  std::string model = "native";
  std::string shapes;
  std::string shape_bound;
  int rank = 1;
  int depth = 1;
  std::size_t cap = smx::kDefaultUniverseCap;
  bool json = false;
};

int run_check(const CheckArgs& args) {
  if (args.schema.empty() == args.suite.empty()) {
    std::cerr << "check: exactly one of --schema and --suite is required\n";
    return kExitUsage;
  }
  smx::Model model;
  if (args.model == "native") {
    model = smx::Model::Native;
  } else if (args.model == "zfm" || args.model == "zfm-image") {
    model = smx::Model::ZfmImage;
  } else {
    std::cerr << "check: unknown model '" << args.model << "' (native|zfm)\n";
    return kExitUsage;
  }
  std::vector<smx::Shape> universe_shapes = parse_shape_list(args.shapes);
  smx::Universe u = smx::enum_universe(args.rank, universe_shapes, args.depth, args.cap);

  std::vector<smx::Verdict> verdicts;
  if (!args.suite.empty()) {
    auto theory = smx::theory_from_name(args.suite);
    if (!theory) {
      std::cerr << "check: unknown suite '" << args.suite << "' (smt|smt-minus)\n";
      return kExitUsage;
    }
    smx::Shape bound{1, 1};
    if (!args.shape_bound.empty()) {
      bound = parse_shape(args.shape_bound);
    } else {
      for (const smx::Shape& s : universe_shapes) {
        bound.rows = std::max(bound.rows, s.rows);
        bound.cols = std::max(bound.cols, s.cols);
      }
    }
    verdicts = smx::check_suite(*theory, u, model, bound);
  } else {
    auto id = smx::schema_from_name(args.schema);
    if (!id) {
      std::cerr << "check: unknown schema '" << args.schema << "'\n";
      return kExitUsage;
    }
    smx::SchemaParams params;
    params.shapes = parse_shape_list(args.schema_shapes.empty() ? args.shapes : args.schema_shapes);
    params.phi = args.phi;
    params.map = args.map;
    // Shape-free schemas ignore universe shapes passed through --shapes.
    if (args.schema_shapes.empty()) {
      smx::SchemaParams probe = params;
      try {
        smx::instantiate_schema(*id, probe);
      } catch (const smx::SchemaError&) {
        params.shapes.clear();
      }
    }
    verdicts.push_back(smx::check_schema(*id, params, u, model));
  }

  bool all_hold = true;
  if (args.json) {
    nlohmann::json out = nlohmann::json::array();
    for (const smx::Verdict& v : verdicts) {
      out.push_back(verdict_json(v));
      all_hold = all_hold && v.holds;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const smx::Verdict& v : verdicts) {
      std::cout << verdict_line(v) << "\n";
      all_hold = all_hold && v.holds;
    }
  }
  return all_hold ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set-matrix kernel: canonical terms, pure-set encoding, bounded axiom checks"};
  app.require_subcommand(1);

  std::string term_a, term_b, def_choice, shape_text;
  bool expand = false;

  auto* norm = app.add_subcommand("norm", "parse a term and print its canonical form");
  norm->add_option("term", term_a, "term text ('-' reads stdin)")->required();

  auto* eq_cmd = app.add_subcommand("eq", "test equality of two terms");
  eq_cmd->add_option("a", term_a)->required();
  eq_cmd->add_option("b", term_b)->required();

  auto* mem_cmd = app.add_subcommand("mem", "test membership of the first term in the second");
  mem_cmd->add_option("a", term_a)->required();
  mem_cmd->add_option("b", term_b)->required();

  auto* encode_cmd = app.add_subcommand("encode", "print the pure-set encoding of a term");
  encode_cmd->add_option("term", term_a)->required();
  encode_cmd->add_flag("--expand", expand, "also print element count and nesting depth");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "check axiom schemas over a bounded universe");
  check_cmd->add_option("--schema", check_args.schema,
                        "schema name (set-matrix, reduction, omission, division-sets, "
                        "division-matrices, epsilon, ext-matrices, ext-sets, empty, separation, "
                        "pairing, union, powerset, infinity, replacement, set-of-matrices)");
  check_cmd->add_option("--suite", check_args.suite, "check a whole theory: smt or smt-minus");
  check_cmd->add_option("--schema-shapes", check_args.schema_shapes,
                        "shape parameters for --schema (defaults to --shapes)");
  check_cmd->add_option("--phi", check_args.phi, "separation filter: is-set or is-empty");
  check_cmd->add_option("--map", check_args.map, "replacement map: singleton or wrap-1x2");
  check_cmd->add_option("--model", check_args.model, "native or zfm");
  check_cmd->add_option("--rank", check_args.rank, "universe set-nesting rounds");
  check_cmd->add_option("--depth", check_args.depth, "universe matrix-nesting rounds");
  check_cmd->add_option("--shapes", check_args.shapes, "universe shapes, e.g. 1x2,2x1,2x2");
  check_cmd->add_option("--shape-bound", check_args.shape_bound,
                        "suite shape bound MxN (default: componentwise max of --shapes)");
  check_cmd->add_option("--cap", check_args.cap, "universe size cap");
  check_cmd->add_flag("--json", check_args.json, "emit verdicts as JSON");

  auto* trans_cmd = app.add_subcommand("transitive", "test transitivity of a set term");
  trans_cmd->add_option("--def", def_choice, "definition: i, ii or iii")->required();
  trans_cmd->add_option("term", term_a)->required();

  auto* ord_cmd = app.add_subcommand("ordinal", "test whether a set term is an ordinal");
  ord_cmd->add_option("term", term_a)->required();

  int rank = 1, depth = 1;
  std::size_t cap = smx::kDefaultUniverseCap;
  std::string shapes_text;
  auto* enum_cmd = app.add_subcommand("enum", "enumerate a bounded universe");
  enum_cmd->add_option("--rank", rank, "set-nesting rounds");
  enum_cmd->add_option("--depth", depth, "matrix-nesting rounds");
  enum_cmd->add_option("--shapes", shapes_text, "admitted shapes, e.g. 1x2,2x1");
  enum_cmd->add_option("--cap", cap, "universe size cap");

  auto* mat_cmd = app.add_subcommand("matrices-over", "enumerate matrices with entries in a set");
  mat_cmd->add_option("term", term_a)->required();
  mat_cmd->add_option("--shape", shape_text, "matrix shape MxN")->required();
  mat_cmd->add_option("--cap", cap, "result size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (norm->parsed()) {
      std::cout << smx::print(smx::parse(read_term_arg(term_a))) << "\n";
      return kExitTrue;
    }
    if (eq_cmd->parsed()) {
      bool r = smx::eq(smx::parse(read_term_arg(term_a)), smx::parse(read_term_arg(term_b)));
      std::cout << (r ? "true" : "false") << "\n";
      return r ? kExitTrue : kExitFalse;
    }
    if (mem_cmd->parsed()) {
      bool r = smx::mem(smx::parse(read_term_arg(term_a)), smx::parse(read_term_arg(term_b)));
      std::cout << (r ? "true" : "false") << "\n";
      return r ? kExitTrue : kExitFalse;
    }
    if (encode_cmd->parsed()) {
      smx::Value enc = smx::encode_zfm(smx::parse(read_term_arg(term_a)));
      std::cout << smx::print(enc) << "\n";
      if (expand)
        std::cout << "elements " << enc.size() << "\n"
                  << "depth " << depth_of(enc) << "\n";
      return kExitTrue;
    }
    if (check_cmd->parsed()) return run_check(check_args);
    if (trans_cmd->parsed()) {
      smx::Value v = smx::parse(read_term_arg(term_a));
      bool r;
      if (def_choice == "i")
        r = smx::is_transitive_i(v);
      else if (def_choice == "ii")
        r = smx::is_transitive_ii(v);
      else if (def_choice == "iii")
        r = smx::is_transitive_iii(v);
      else {
        std::cerr << "transitive: --def must be i, ii or iii\n";
        return kExitUsage;
      }
      std::cout << (r ? "true" : "false") << "\n";
      return r ? kExitTrue : kExitFalse;
    }
    if (ord_cmd->parsed()) {
      bool r = smx::is_ordinal(smx::parse(read_term_arg(term_a)));
      std::cout << (r ? "true" : "false") << "\n";
      return r ? kExitTrue : kExitFalse;
    }
    if (enum_cmd->parsed()) {
      smx::Universe u = smx::enum_universe(rank, parse_shape_list(shapes_text), depth, cap);
      for (const smx::Value& v : u.values) std::cout << smx::print(v) << "\n";
      std::cout << "count " << u.values.size() << "\n";
      return kExitTrue;
    }
    if (mat_cmd->parsed()) {
      smx::Value x = smx::parse(read_term_arg(term_a));
      smx::Shape shape = parse_shape(shape_text);
      if (!x.is_set()) throw smx::SortError("matrices-over: expected a set, got " + smx::print(x));
      std::size_t count = 1;
      for (std::size_t i = 0; i < shape.cells() && shape.cells() >= 2; ++i) {
        count *= x.size();
        if (count > cap)
          throw smx::LimitError("matrices-over: " + std::to_string(x.size()) + "^" +
                                std::to_string(shape.cells()) + " results exceed cap " +
                                std::to_string(cap));
      }
      smx::Value result = smx::matrices_over(x, shape);
      for (const smx::Value& v : result.elems()) std::cout << smx::print(v) << "\n";
      std::cout << "count " << result.size() << "\n";
      return kExitTrue;
    }
  } catch (const smx::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const smx::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const smx::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const smx::SortError& e) {
    std::cerr << "sort error: " << e.what() << "\n";
    return kExitSort;
  } catch (const smx::GuardViolation& e) {
    std::cerr << "guard violation: " << e.what() << "\n";
    return kExitSort;
  } catch (const smx::LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const smx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
