#include "smx/schemas.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "smx/encode.hpp"
#include "smx/setops.hpp"

namespace smx {

namespace {

struct SchemaInfo {
  SchemaId id;
  const char* name;
};

constexpr SchemaInfo kSchemas[] = {
    {SchemaId::SetMatrix, "set-matrix"},
    {SchemaId::Reduction, "reduction"},
    {SchemaId::Omission, "omission"},
    {SchemaId::DivisionSets, "division-sets"},
    {SchemaId::DivisionMatrices, "division-matrices"},
    {SchemaId::Epsilon, "epsilon"},
    {SchemaId::ExtMatrices, "ext-matrices"},
    {SchemaId::ExtSets, "ext-sets"},
    {SchemaId::Empty, "empty"},
    {SchemaId::Separation, "separation"},
    {SchemaId::Pairing, "pairing"},
    {SchemaId::Union, "union"},
    {SchemaId::Powerset, "powerset"},
    {SchemaId::Infinity, "infinity"},
    {SchemaId::Replacement, "replacement"},
    {SchemaId::SetOfMatrices, "set-of-matrices"},
};

constexpr int kDefaultInfinityStage = 4;

std::vector<std::string> cell_var_names(const std::string& stem, Shape s) {
  const bool wide = s.rows > 9 || s.cols > 9;
  std::vector<std::string> names;
  names.reserve(s.cells());
  for (int i = 1; i <= s.rows; ++i)
    for (int j = 1; j <= s.cols; ++j)
      names.push_back(wide ? stem + std::to_string(i) + "_" + std::to_string(j)
                           : stem + std::to_string(i) + std::to_string(j));
  return names;
}

std::vector<TermPtr> mat_vars(const std::vector<std::string>& names) {
  std::vector<TermPtr> out;
  out.reserve(names.size());
  for (const std::string& n : names) out.push_back(mat_var(n));
  return out;
}

FormulaPtr forall_mat_block(const std::vector<std::string>& names, FormulaPtr body) {
  for (auto it = names.rbegin(); it != names.rend(); ++it) body = forall_mat(*it, body);
  return body;
}

Shape one_shape(const SchemaParams& p, SchemaId id, bool need_multi_cell) {
  if (p.shapes.size() != 1)
    throw SchemaError(std::string(schema_name(id)) + " takes exactly one shape parameter");
  Shape s = p.shapes[0];
  if (s.rows < 1 || s.cols < 1)
    throw SchemaError(std::string(schema_name(id)) + ": invalid shape " + s.str());
  if (need_multi_cell && s.cells() < 2)
    throw SchemaError(std::string(schema_name(id)) + " requires a shape with at least two cells");
  return s;
}

void no_shapes(const SchemaParams& p, SchemaId id) {
  if (!p.shapes.empty())
    throw SchemaError(std::string(schema_name(id)) + " takes no shape parameters");
}

}  // namespace

const char* schema_name(SchemaId id) {
  for (const SchemaInfo& s : kSchemas)
    if (s.id == id) return s.name;
  return "?";
}

std::optional<SchemaId> schema_from_name(const std::string& name) {
  for (const SchemaInfo& s : kSchemas)
    if (name == s.name) return s.id;
  return std::nullopt;
}

std::string SchemaParams::str() const {
  std::string out;
  for (const Shape& s : shapes) {
    if (!out.empty()) out += ",";
    out += s.str();
  }
  if (!phi.empty()) out += (out.empty() ? "" : ",") + ("phi=" + phi);
  if (!map.empty()) out += (out.empty() ? "" : ",") + ("map=" + map);
  if (stage > 0) out += (out.empty() ? "" : ",") + ("k=" + std::to_string(stage));
  return out;
}

const char* theory_name(Theory t) { return t == Theory::Smt ? "smt" : "smt-minus"; }

std::optional<Theory> theory_from_name(const std::string& name) {
  if (name == "smt") return Theory::Smt;
  if (name == "smt-minus") return Theory::SmtMinus;
  return std::nullopt;
}

FormulaPtr instantiate_schema(SchemaId id, const SchemaParams& params) {
  switch (id) {
    case SchemaId::SetMatrix: {
      Shape s = one_shape(params, id, false);
      auto names = cell_var_names("a", s);
      FormulaPtr body = exists_mat("b", equal_f(mat_var("b"), matrix_term(s, mat_vars(names))));
      return forall_mat_block(names, body);
    }
    case SchemaId::Reduction: {
      no_shapes(params, id);
      return forall_set("x", equal_f(matrix_term(Shape{1, 1}, {set_var("x")}), set_var("x")));
    }
    case SchemaId::Omission: {
      Shape s = one_shape(params, id, false);
      auto names = cell_var_names("a", s);
      TermPtr m = matrix_term(s, mat_vars(names));
      return forall_mat_block(names, equal_f(matrix_term(Shape{1, 1}, {m}), m));
    }
    case SchemaId::DivisionSets: {
      Shape s = one_shape(params, id, true);
      auto names = cell_var_names("a", s);
      FormulaPtr body = not_f(equal_f(set_var("x"), matrix_term(s, mat_vars(names))));
      return forall_set("x", forall_mat_block(names, body));
    }
    case SchemaId::DivisionMatrices: {
      if (params.shapes.size() != 2)
        throw SchemaError("division-matrices takes exactly two shape parameters");
      Shape s1 = params.shapes[0];
      Shape s2 = params.shapes[1];
      if (s1.cells() < 2 || s2.cells() < 2)
        throw SchemaError("division-matrices requires shapes with at least two cells");
      if (s1 == s2) throw SchemaError("division-matrices requires two different shapes");
      auto an = cell_var_names("a", s1);
      auto bn = cell_var_names("b", s2);
      FormulaPtr body =
          not_f(equal_f(matrix_term(s1, mat_vars(an)), matrix_term(s2, mat_vars(bn))));
      return forall_mat_block(an, forall_mat_block(bn, body));
    }
    case SchemaId::Epsilon: {
      Shape s = one_shape(params, id, true);
      auto names = cell_var_names("a", s);
      FormulaPtr body = not_f(mem_f(mat_var("b"), matrix_term(s, mat_vars(names))));
      return forall_mat_block(names, forall_mat("b", body));
    }
    case SchemaId::ExtMatrices: {
      Shape s = one_shape(params, id, false);
      auto an = cell_var_names("a", s);
      auto bn = cell_var_names("b", s);
      std::vector<FormulaPtr> cellwise;
      for (std::size_t i = 0; i < an.size(); ++i)
        cellwise.push_back(equal_f(mat_var(an[i]), mat_var(bn[i])));
      FormulaPtr body = iff_f(
          equal_f(matrix_term(s, mat_vars(an)), matrix_term(s, mat_vars(bn))), and_f(cellwise));
      return forall_mat_block(an, forall_mat_block(bn, body));
    }
    case SchemaId::ExtSets: {
      no_shapes(params, id);
      FormulaPtr same_members = forall_mat(
          "g", iff_f(mem_f(mat_var("g"), set_var("x")), mem_f(mat_var("g"), set_var("y"))));
      return forall_set(
          "x", forall_set("y", iff_f(equal_f(set_var("x"), set_var("y")), same_members)));
    }
    case SchemaId::Empty: {
      no_shapes(params, id);
      return exists_set("x", and_f({equal_f(set_var("x"), empty_term()),
                                    forall_mat("a", not_f(mem_f(mat_var("a"), set_var("x"))))}));
    }
    case SchemaId::Separation: {
      no_shapes(params, id);
      FormulaPtr phi = phi_formula(params.phi, "a");  // validates the name
      FormulaPtr body = forall_mat(
          "a", iff_f(mem_f(mat_var("a"), set_var("y")),
                     and_f({mem_f(mat_var("a"), set_var("x")), phi})));
      return forall_set("x", exists_set("y", body));
    }
    case SchemaId::Pairing: {
      no_shapes(params, id);
      FormulaPtr body = forall_mat(
          "g", iff_f(mem_f(mat_var("g"), set_var("x")),
                     or_f({equal_f(mat_var("g"), mat_var("a")), equal_f(mat_var("g"), mat_var("b"))})));
      return forall_mat("a", forall_mat("b", exists_set("x", body)));
    }
    case SchemaId::Union: {
      no_shapes(params, id);
      FormulaPtr guard = forall_mat(
          "a", implies_f(mem_f(mat_var("a"), set_var("x")),
                         exists_set("u", equal_f(set_var("u"), mat_var("a")))));
      FormulaPtr member = exists_set(
          "z", and_f({mem_f(set_var("z"), set_var("x")), mem_f(mat_var("b"), set_var("z"))}));
      FormulaPtr concl =
          exists_set("y", forall_mat("b", iff_f(mem_f(mat_var("b"), set_var("y")), member)));
      return forall_set("x", implies_f(guard, concl));
    }
    case SchemaId::Powerset: {
      no_shapes(params, id);
      FormulaPtr subset = forall_mat(
          "g", implies_f(mem_f(mat_var("g"), set_var("u")), mem_f(mat_var("g"), set_var("x"))));
      FormulaPtr body = forall_mat(
          "a", iff_f(mem_f(mat_var("a"), set_var("y")),
                     exists_set("u", and_f({equal_f(set_var("u"), mat_var("a")), subset}))));
      return forall_set("x", exists_set("y", body));
    }
    case SchemaId::Infinity: {
      no_shapes(params, id);
      FormulaPtr singleton_of_y = forall_mat(
          "g", iff_f(mem_f(mat_var("g"), set_var("s")), equal_f(mat_var("g"), set_var("y"))));
      FormulaPtr closure = forall_set(
          "y", implies_f(mem_f(set_var("y"), set_var("x")),
                         exists_set("s", and_f({singleton_of_y, mem_f(set_var("s"), set_var("x"))}))));
      return exists_set("x", and_f({mem_f(empty_term(), set_var("x")), closure}));
    }
    case SchemaId::Replacement: {
      no_shapes(params, id);
      named_map(params.map);  // validates the name
      TermPtr fa = map_app(params.map, mat_var("a"));
      FormulaPtr unique = forall_mat(
          "b2", implies_f(equal_f(mat_var("b2"), map_app(params.map, mat_var("a"))),
                          equal_f(mat_var("b2"), mat_var("b"))));
      FormulaPtr premise = forall_mat(
          "a", implies_f(mem_f(mat_var("a"), set_var("x")),
                         exists_mat("b", and_f({equal_f(mat_var("b"), fa), unique}))));
      FormulaPtr image = exists_mat(
          "g", and_f({mem_f(mat_var("g"), set_var("x")),
                      equal_f(mat_var("z"), map_app(params.map, mat_var("g")))}));
      FormulaPtr concl =
          exists_set("y", forall_mat("z", iff_f(mem_f(mat_var("z"), set_var("y")), image)));
      return forall_set("x", implies_f(premise, concl));
    }
    case SchemaId::SetOfMatrices: {
      Shape s = one_shape(params, id, false);
      auto bn = cell_var_names("b", s);
      std::vector<FormulaPtr> conj{equal_f(mat_var("a"), matrix_term(s, mat_vars(bn)))};
      for (const std::string& n : bn) conj.push_back(mem_f(mat_var(n), set_var("x")));
      FormulaPtr inner = and_f(std::move(conj));
      for (auto it = bn.rbegin(); it != bn.rend(); ++it) inner = exists_mat(*it, inner);
      FormulaPtr body = forall_mat("a", iff_f(mem_f(mat_var("a"), set_var("y")), inner));
      return forall_set("x", exists_set("y", body));
    }
  }
  throw SchemaError("unknown schema");
}

// ---------------------------------------------------------------------------
// Structured checkers.
//
// Every checker decides exactly the bounded statement of its schema instance:
// leading constructive existentials are discharged by construction, all other
// quantifiers range over the universe. Blocks of matrix-entry variables are
// quantified over one representative per model identity (encoding class in
// the zfm-image model; identity classes are trivial natively), which is sound
// because atoms and matrix construction factor through the encoding — a fact
// the context verifies per run (entry congruence below). Where a block is too
// large to enumerate, an exact structural argument replaces the loop; the
// test suite cross-validates both routes against the reference evaluator.
// ---------------------------------------------------------------------------

namespace {

using Witness = std::vector<std::pair<std::string, Value>>;

struct Ctx {
  const Universe* u = nullptr;
  Model model = Model::Native;
  CheckOptions opts;
  std::vector<Value> dom;       // one representative per model identity, ascending
  std::vector<Value> dom_sets;  // set-sorted representatives
  std::unordered_map<const detail::Node*, Value> rep_by_key;
  std::unordered_set<const detail::Node*> key_image;

  Value key(Value v) const { return model == Model::Native ? v : encode_zfm(v); }
  bool eq_m(Value a, Value b) const { return key(a) == key(b); }
  bool mem_m(Value a, Value b) const { return mem(key(a), key(b)); }

  Value rep_of_key(Value k) const {
    auto it = rep_by_key.find(k.node());
    if (it == rep_by_key.end()) throw Error("internal: key without representative in universe");
    return it->second;
  }
};

Ctx make_ctx(const Universe& u, Model model, const CheckOptions& opts) {
  Ctx ctx;
  ctx.u = &u;
  ctx.model = model;
  ctx.opts = opts;
  for (const Value& v : u.values) {
    Value k = ctx.key(v);
    if (ctx.key_image.insert(k.node()).second) {
      ctx.dom.push_back(v);
      ctx.rep_by_key.emplace(k.node(), v);
      if (v.is_set()) ctx.dom_sets.push_back(v);
    }
  }
  return ctx;
}

std::size_t pow_clamped(std::size_t base, std::size_t exp, std::size_t clamp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > clamp / base) return clamp + 1;
    out *= base;
  }
  return out;
}

bool block_enumerable(const Ctx& ctx, std::size_t vars) {
  return pow_clamped(ctx.dom.size(), vars, ctx.opts.enumeration_budget) <=
         ctx.opts.enumeration_budget;
}

// Calls fn for every tuple of dom^k in lexicographic order (leftmost variable
// slowest); stops when fn returns false.
template <typename Fn>
void for_tuples(const std::vector<Value>& dom, std::size_t k, Fn&& fn) {
  if (dom.empty()) return;
  std::vector<std::size_t> odo(k, 0);
  std::vector<Value> tuple(k, dom[0]);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) tuple[i] = dom[odo[i]];
    if (!fn(tuple)) return;
    std::size_t i = k;
    while (true) {
      if (i == 0) return;
      --i;
      if (++odo[i] < dom.size()) break;
      odo[i] = 0;
    }
  }
}

Witness named_tuple(const std::vector<std::string>& names, const std::vector<Value>& values) {
  Witness w;
  for (std::size_t i = 0; i < names.size(); ++i) w.emplace_back(names[i], values[i]);
  return w;
}

std::vector<Value> index_pairs(Shape s) {
  std::vector<Value> idx;
  idx.reserve(s.cells());
  for (int i = 1; i <= s.rows; ++i)
    for (int j = 1; j <= s.cols; ++j) idx.push_back(kpair(vn_ordinal(i), vn_ordinal(j)));
  return idx;
}

// Verifies that the encoding of a matrix depends only on the encodings of
// its entries, over every same-key value pair of the universe. This is the
// soundness premise for quantifying entry blocks over representatives. The
// encoder builds matrices through zfm_matrix_image, so a violation here
// means a kernel bug, not a refuted schema.
void verify_entry_congruence(const Ctx& ctx, Shape s) {
  if (ctx.model == Model::Native || s.cells() < 2 || ctx.dom.empty()) return;
  std::vector<Value> base(s.cells(), ctx.dom[0]);
  for (const Value& v : ctx.u->values) {
    Value r = ctx.rep_of_key(ctx.key(v));
    if (r == v) continue;
    for (std::size_t c = 0; c < s.cells(); ++c) {
      std::vector<Value> with_v = base;
      std::vector<Value> with_r = base;
      with_v[c] = v;
      with_r[c] = r;
      if (ctx.key(mk_matrix(s, with_v)) != ctx.key(mk_matrix(s, with_r)))
        throw Error("internal: encoding congruence violated for shape " + s.str());
    }
  }
}

// If `a` is equal in the model to an s-shaped matrix over the universe,
// returns the cellwise-minimal entry representatives; nullopt otherwise.
std::optional<std::vector<Value>> match_matrix_m(const Ctx& ctx, Value a, Shape s) {
  if (ctx.model == Model::Native) {
    if (!a.is_matrix() || a.shape() != s) return std::nullopt;
    return std::vector<Value>(a.entries().begin(), a.entries().end());
  }
  Value k = ctx.key(a);
  if (!k.is_set() || k.size() != s.cells()) return std::nullopt;
  const std::vector<Value> idx = index_pairs(s);
  std::vector<Value> entries(s.cells(), empty_set());
  std::vector<bool> seen(s.cells(), false);
  for (const Value& el : k.elems()) {
    auto kv = kpair_split(el);
    if (!kv) return std::nullopt;
    std::size_t cell = idx.size();
    for (std::size_t c = 0; c < idx.size(); ++c)
      if (idx[c] == kv->first) {
        cell = c;
        break;
      }
    if (cell == idx.size() || seen[cell]) return std::nullopt;
    seen[cell] = true;
    entries[cell] = ctx.rep_of_key(kv->second);
  }
  for (bool b : seen)
    if (!b) return std::nullopt;
  return entries;
}

std::optional<Witness> check_set_matrix(const Ctx& ctx, Shape s) {
  verify_entry_congruence(ctx, s);
  const auto names = cell_var_names("a", s);
  if (block_enumerable(ctx, s.cells())) {
    std::optional<Witness> failure;
    for_tuples(ctx.dom, s.cells(), [&](const std::vector<Value>& t) {
      Value witness = mk_matrix(s, t);
      if (!ctx.eq_m(witness, mk_matrix(s, t))) {
        failure = named_tuple(names, t);
        return false;
      }
      return true;
    });
    return failure;
  }
  // Construction is total and deterministic; exercise it once per class and
  // cell instead of per tuple.
  std::vector<Value> base(s.cells(), ctx.dom[0]);
  for (const Value& r : ctx.dom)
    for (std::size_t c = 0; c < s.cells(); ++c) {
      std::vector<Value> t = base;
      t[c] = r;
      if (!ctx.eq_m(mk_matrix(s, t), mk_matrix(s, t)))
        return named_tuple(names, t);
    }
  return std::nullopt;
}

std::optional<Witness> check_reduction(const Ctx& ctx) {
  for (const Value& x : ctx.dom_sets)
    if (!ctx.eq_m(mk_matrix(Shape{1, 1}, {x}), x)) return Witness{{"x", x}};
  return std::nullopt;
}

std::optional<Witness> check_omission(const Ctx& ctx, Shape s) {
  verify_entry_congruence(ctx, s);
  const auto names = cell_var_names("a", s);
  if (block_enumerable(ctx, s.cells())) {
    std::optional<Witness> failure;
    for_tuples(ctx.dom, s.cells(), [&](const std::vector<Value>& t) {
      Value m = mk_matrix(s, t);
      if (!ctx.eq_m(mk_matrix(Shape{1, 1}, {m}), m)) {
        failure = named_tuple(names, t);
        return false;
      }
      return true;
    });
    return failure;
  }
  // 1x1 erasure is a constructor law independent of the wrapped value;
  // verify it across every class and one matrix per class and cell.
  std::vector<Value> base(s.cells(), ctx.dom[0]);
  for (const Value& r : ctx.dom) {
    if (!ctx.eq_m(mk_matrix(Shape{1, 1}, {r}), r))
      throw Error("internal: 1x1 erasure violated");
    for (std::size_t c = 0; c < s.cells(); ++c) {
      std::vector<Value> t = base;
      t[c] = r;
      Value m = mk_matrix(s, t);
      if (!ctx.eq_m(mk_matrix(Shape{1, 1}, {m}), m)) return named_tuple(names, t);
    }
  }
  return std::nullopt;
}

std::optional<Witness> check_division_sets(const Ctx& ctx, Shape s) {
  verify_entry_congruence(ctx, s);
  // x = [a11..amn] holds in the model exactly when x matches the matrix
  // image structurally, so scan the set-sorted domain instead of the
  // |dom|^(cells)-fold entry block.
  const auto names = cell_var_names("a", s);
  for (const Value& x : ctx.dom_sets)
    if (auto entries = match_matrix_m(ctx, x, s)) {
      Witness w{{"x", x}};
      for (auto& nv : named_tuple(names, *entries)) w.push_back(std::move(nv));
      return w;
    }
  return std::nullopt;
}

std::vector<Value> tuple_from_index(const std::vector<Value>& dom, std::size_t k,
                                    std::size_t index) {
  std::vector<Value> t(k, dom[0]);
  for (std::size_t i = k; i-- > 0;) {
    t[i] = dom[index % dom.size()];
    index /= dom.size();
  }
  return t;
}

std::optional<Witness> check_division_matrices(const Ctx& ctx, Shape s1, Shape s2) {
  verify_entry_congruence(ctx, s1);
  verify_entry_congruence(ctx, s2);
  const auto an = cell_var_names("a", s1);
  const auto bn = cell_var_names("b", s2);
  const std::size_t n = ctx.dom.size();
  const std::size_t p1 = pow_clamped(n, s1.cells(), ctx.opts.enumeration_budget);
  const std::size_t p2 = pow_clamped(n, s2.cells(), ctx.opts.enumeration_budget);
  if (p1 <= ctx.opts.enumeration_budget && p2 <= ctx.opts.enumeration_budget &&
      p1 + p2 <= ctx.opts.enumeration_budget) {
    std::unordered_map<const detail::Node*, std::size_t> side2;
    side2.reserve(p2 * 2);
    std::size_t index = 0;
    for_tuples(ctx.dom, s2.cells(), [&](const std::vector<Value>& t) {
      side2.emplace(ctx.key(mk_matrix(s2, t)).node(), index++);  // keeps the lex-least tuple
      return true;
    });
    std::optional<Witness> failure;
    for_tuples(ctx.dom, s1.cells(), [&](const std::vector<Value>& t) {
      auto hit = side2.find(ctx.key(mk_matrix(s1, t)).node());
      if (hit == side2.end()) return true;
      failure = named_tuple(an, t);
      for (auto& nv : named_tuple(bn, tuple_from_index(ctx.dom, s2.cells(), hit->second)))
        failure->push_back(std::move(nv));
      return false;
    });
    return failure;
  }
  if (ctx.model == Model::Native) return std::nullopt;  // canonical matrices compare shape first
  // Encoded matrices of different shapes have different index-pair supports;
  // verify that, and that no two index/entry pairs collide across cells and
  // entry classes, which rules out any equality between the two sides.
  std::vector<Value> idx = index_pairs(s1);
  const std::vector<Value> idx2 = index_pairs(s2);
  idx.insert(idx.end(), idx2.begin(), idx2.end());
  std::sort(idx.begin(), idx.end(), ValueLess{});
  const std::size_t distinct =
      static_cast<std::size_t>(std::distance(idx.begin(), std::unique(idx.begin(), idx.end())));
  if (distinct == s1.cells() && distinct == s2.cells())
    throw Error("internal: distinct shapes share an index support");
  idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(distinct), idx.end());
  std::unordered_set<const detail::Node*> pairs;
  pairs.reserve(distinct * n * 2);
  for (const Value& p : idx)
    for (const Value& r : ctx.dom)
      if (!pairs.insert(kpair(p, ctx.key(r)).node()).second)
        throw Error("internal: index/entry pair collision");
  return std::nullopt;
}

std::optional<Witness> check_epsilon(const Ctx& ctx, Shape s) {
  verify_entry_congruence(ctx, s);
  const auto names = cell_var_names("a", s);
  if (ctx.model == Model::Native && block_enumerable(ctx, s.cells())) {
    std::optional<Witness> failure;
    for_tuples(ctx.dom, s.cells(), [&](const std::vector<Value>& t) {
      Value m = mk_matrix(s, t);
      for (const Value& b : ctx.dom)
        if (mem(b, m)) {
          failure = named_tuple(names, t);
          failure->emplace_back("b", b);
          return false;
        }
      return true;
    });
    return failure;
  }
  // Natively a matrix has no members by construction. In the encoded model
  // b ∈_m [a..] holds exactly when the key of b is one of the index/entry
  // pairs of the encoded matrix, so collect per cell the entry classes whose
  // pair lies in the universe's key image.
  const std::vector<Value> idx = index_pairs(s);
  std::vector<std::vector<Value>> bad(s.cells());
  if (ctx.model == Model::ZfmImage) {
    for (std::size_t c = 0; c < s.cells(); ++c)
      for (const Value& r : ctx.dom)
        if (ctx.key_image.count(kpair(idx[c], ctx.key(r)).node())) bad[c].push_back(r);
  }
  std::optional<std::vector<Value>> least;
  for (std::size_t c = 0; c < s.cells(); ++c) {
    if (bad[c].empty()) continue;
    std::vector<Value> t(s.cells(), ctx.dom[0]);
    t[c] = bad[c][0];
    if (!least || std::lexicographical_compare(t.begin(), t.end(), least->begin(), least->end(),
                                               ValueLess{}))
      least = t;
  }
  if (!least) return std::nullopt;
  std::optional<Value> b;
  for (std::size_t c = 0; c < s.cells(); ++c) {
    Value pair = kpair(idx[c], ctx.key((*least)[c]));
    if (!ctx.key_image.count(pair.node())) continue;
    Value cand = ctx.rep_of_key(pair);
    if (!b || compare(cand, *b) < 0) b = cand;
  }
  Witness w = named_tuple(names, *least);
  w.emplace_back("b", *b);
  return w;
}

std::optional<Witness> check_ext_matrices(const Ctx& ctx, Shape s) {
  verify_entry_congruence(ctx, s);
  const auto an = cell_var_names("a", s);
  const auto bn = cell_var_names("b", s);
  if (block_enumerable(ctx, s.cells())) {
    // Representatives have pairwise distinct keys, so over representatives
    // the right side of the biconditional is tuple identity: matrices built
    // from distinct tuples must be distinct, and from equal tuples equal.
    std::unordered_map<const detail::Node*, std::size_t> first;
    std::optional<Witness> failure;
    std::size_t index = 0;
    for_tuples(ctx.dom, s.cells(), [&](const std::vector<Value>& t) {
      Value m = mk_matrix(s, t);
      if (!ctx.eq_m(m, mk_matrix(s, t))) {  // determinism of construction
        failure = named_tuple(an, t);
        for (auto& nv : named_tuple(bn, t)) failure->push_back(std::move(nv));
        return false;
      }
      auto [it, inserted] = first.emplace(ctx.key(m).node(), index++);
      if (!inserted) {
        failure = named_tuple(an, tuple_from_index(ctx.dom, s.cells(), it->second));
        for (auto& nv : named_tuple(bn, t)) failure->push_back(std::move(nv));
        return false;
      }
      return true;
    });
    return failure;
  }
  if (ctx.model == Model::Native) return std::nullopt;  // canonical equality is cellwise
  // Exact structural route: every index/entry pair is distinct across cells
  // and entry classes, so an encoded matrix determines its entry classes.
  const std::vector<Value> idx = index_pairs(s);
  std::unordered_set<const detail::Node*> pairs;
  pairs.reserve(idx.size() * ctx.dom.size() * 2);
  for (const Value& p : idx)
    for (const Value& r : ctx.dom)
      if (!pairs.insert(kpair(p, ctx.key(r)).node()).second)
        throw Error("internal: index/entry pair collision");
  return std::nullopt;
}

std::optional<Witness> check_ext_sets(const Ctx& ctx) {
  for (const Value& x : ctx.dom_sets)
    for (const Value& y : ctx.dom_sets) {
      const bool lhs = ctx.eq_m(x, y);
      bool rhs = true;
      for (const Value& g : ctx.dom)
        if (ctx.mem_m(g, x) != ctx.mem_m(g, y)) {
          rhs = false;
          break;
        }
      if (lhs != rhs) return Witness{{"x", x}, {"y", y}};
    }
  return std::nullopt;
}

std::optional<Witness> check_empty(const Ctx& ctx) {
  Value w = empty();
  if (!ctx.eq_m(w, empty_set())) throw Error("internal: empty() is not the empty set");
  for (const Value& a : ctx.dom)
    if (ctx.mem_m(a, w)) return Witness{{"a", a}};
  return std::nullopt;
}

bool phi_holds(const Ctx& ctx, const std::string& phi, Value v) {
  return eval(*phi_formula(phi, "v"), *ctx.u, ctx.model, Env{{"v", v}});
}

std::optional<Witness> check_separation(const Ctx& ctx, const std::string& phi) {
  // The filter formula factors through model identities, so the value-level
  // operation builds a witness that works in both models.
  for (const Value& x : ctx.dom_sets) {
    Value y = separation(x, Predicate{phi, [&](Value v) { return phi_holds(ctx, phi, v); }});
    for (const Value& a : ctx.dom)
      if (ctx.mem_m(a, y) != (ctx.mem_m(a, x) && phi_holds(ctx, phi, a)))
        return Witness{{"x", x}};
  }
  return std::nullopt;
}

std::optional<Witness> check_pairing(const Ctx& ctx) {
  for (const Value& a : ctx.dom)
    for (const Value& b : ctx.dom) {
      Value y = pair_set(a, b);
      for (const Value& g : ctx.dom)
        if (ctx.mem_m(g, y) != (ctx.eq_m(g, a) || ctx.eq_m(g, b)))
          return Witness{{"a", a}, {"b", b}};
    }
  return std::nullopt;
}

std::optional<Witness> check_union(const Ctx& ctx) {
  for (const Value& x : ctx.dom_sets) {
    // Guard of the axiom: every member of x must be equal in the model to
    // some set. The representative of a member's identity class is minimal
    // in the value order, hence a set exactly when the class contains one.
    bool guard = true;
    for (const Value& ek : ctx.key(x).elems())
      if (!ctx.rep_of_key(ek).is_set()) {
        guard = false;
        break;
      }
    if (!guard) continue;  // antecedent fails, instance is vacuously true here
    Value y = empty_set();
    if (ctx.model == Model::Native) {
      y = union_of(x);
    } else {
      std::vector<Value> flat;
      for (const Value& ek : ctx.key(x).elems())
        flat.insert(flat.end(), ek.elems().begin(), ek.elems().end());
      y = mk_set(flat);
    }
    for (const Value& b : ctx.dom) {
      bool rhs = false;
      for (const Value& z : ctx.dom_sets)
        if (ctx.mem_m(z, x) && ctx.mem_m(b, z)) {
          rhs = true;
          break;
        }
      if (ctx.mem_m(b, y) != rhs) return Witness{{"x", x}};
    }
  }
  return std::nullopt;
}

std::optional<Witness> check_powerset(const Ctx& ctx) {
  // Encoding commutes with subset formation, so the value-level powerset is
  // the witness in both models.
  for (const Value& x : ctx.dom_sets) {
    if (pow_clamped(2, x.size(), ctx.u->cap) > ctx.u->cap)
      throw LimitError("powerset witness for a set of " + std::to_string(x.size()) +
                       " elements exceeds the universe cap " + std::to_string(ctx.u->cap));
    Value y = powerset(x);
    for (const Value& a : ctx.dom) {
      bool rhs = false;
      for (const Value& u : ctx.dom_sets) {
        if (!ctx.eq_m(u, a)) continue;
        bool subset = true;
        for (const Value& e : ctx.key(u).elems())
          if (!mem(e, ctx.key(x))) {
            subset = false;
            break;
          }
        if (subset) {
          rhs = true;
          break;
        }
      }
      if (ctx.mem_m(a, y) != rhs) return Witness{{"x", x}};
    }
  }
  return std::nullopt;
}

std::optional<Witness> check_infinity(const Ctx& ctx, int stage) {
  // Bounded stage reading: the k-th tower stage contains the empty set and
  // the singleton successor of everything in the previous stage.
  Value x = infinity_stage(stage);
  Value prev = infinity_stage(stage - 1);
  if (!ctx.mem_m(empty_set(), x)) return Witness{};
  for (const Value& y : prev.elems())
    if (!ctx.mem_m(mk_set({y}), x)) return Witness{};
  return std::nullopt;
}

std::optional<Witness> check_replacement(const Ctx& ctx, const std::string& map) {
  const TotalMap& f = named_map(map);
  // The map must be well defined on model identities for the image to be.
  for (const Value& v : ctx.u->values) {
    Value r = ctx.rep_of_key(ctx.key(v));
    if (r != v && !ctx.eq_m(f.fn(v), f.fn(r)))
      throw Error("internal: map '" + map + "' is not congruent with the model");
  }
  for (const Value& x : ctx.dom_sets) {
    Value y = replacement(x, f);
    for (const Value& z : ctx.dom) {
      bool rhs = false;
      for (const Value& ek : ctx.key(x).elems())
        if (ctx.eq_m(z, f.fn(ctx.rep_of_key(ek)))) {
          rhs = true;
          break;
        }
      if (ctx.mem_m(z, y) != rhs) return Witness{{"x", x}};
    }
  }
  return std::nullopt;
}

std::optional<Witness> check_set_of_matrices(const Ctx& ctx, Shape s) {
  verify_entry_congruence(ctx, s);
  // Encoding commutes with matrices_over (the encoder maps the constructed
  // matrices to exactly the function-sets over the encoded entries).
  for (const Value& x : ctx.dom_sets) {
    if (pow_clamped(x.size(), s.cells(), ctx.u->cap) > ctx.u->cap)
      throw LimitError("matrices-over witness " + std::to_string(x.size()) + "^" +
                       std::to_string(s.cells()) + " exceeds the universe cap " +
                       std::to_string(ctx.u->cap));
    Value y = matrices_over(x, s);
    for (const Value& a : ctx.dom) {
      bool rhs = false;
      if (s.cells() == 1) {
        rhs = ctx.mem_m(a, x);
      } else if (auto entries = match_matrix_m(ctx, a, s)) {
        rhs = true;
        for (const Value& e : *entries)
          if (!ctx.mem_m(e, x)) {
            rhs = false;
            break;
          }
      }
      if (ctx.mem_m(a, y) != rhs) return Witness{{"x", x}};
    }
  }
  return std::nullopt;
}

// Re-evaluates the instantiated formula body under a failing witness: strip
// the leading universal prefix the witness binds and confirm the rest is
// false in the model.
void confirm_witness(SchemaId id, const SchemaParams& params, const Witness& witness,
                     const Universe& u, Model model) {
  FormulaPtr formula = instantiate_schema(id, params);
  const Formula* f = formula.get();
  Env env;
  std::size_t i = 0;
  while (i < witness.size() &&
         (f->kind == Formula::Kind::ForallSet || f->kind == Formula::Kind::ForallMat) &&
         f->var == witness[i].first) {
    env.emplace(f->var, witness[i].second);
    f = f->body.get();
    ++i;
  }
  if (i != witness.size()) return;  // not a plain universal-prefix witness
  if (eval(*f, u, model, env))
    throw Error(std::string("internal: witness for ") + schema_name(id) +
                " does not refute the schema body");
}

SchemaParams normalize_params(SchemaId id, const SchemaParams& params) {
  SchemaParams p = params;
  if (id == SchemaId::Infinity && p.stage == 0) p.stage = kDefaultInfinityStage;
  if (id == SchemaId::Separation && p.phi.empty())
    throw SchemaError("separation requires a filter name (--phi)");
  if (id == SchemaId::Replacement && p.map.empty())
    throw SchemaError("replacement requires a map name (--map)");
  return p;
}

}  // namespace

Verdict check_schema(SchemaId id, const SchemaParams& params0, const Universe& u0, Model model,
                     const CheckOptions& opts) {
  SchemaParams params = normalize_params(id, params0);
  instantiate_schema(id, params);  // validate parameters
  Universe closed;
  const Universe* u = &u0;
  if (model == Model::ZfmImage && !u0.zfm_closed) {
    closed = zfm_closure(u0);
    u = &closed;
  }
  Ctx ctx = make_ctx(*u, model, opts);

  std::optional<Witness> failure;
  switch (id) {
    case SchemaId::SetMatrix:
      failure = check_set_matrix(ctx, params.shapes[0]);
      break;
    case SchemaId::Reduction:
      failure = check_reduction(ctx);
      break;
    case SchemaId::Omission:
      failure = check_omission(ctx, params.shapes[0]);
      break;
    case SchemaId::DivisionSets:
      failure = check_division_sets(ctx, params.shapes[0]);
      break;
    case SchemaId::DivisionMatrices:
      failure = check_division_matrices(ctx, params.shapes[0], params.shapes[1]);
      break;
    case SchemaId::Epsilon:
      failure = check_epsilon(ctx, params.shapes[0]);
      break;
    case SchemaId::ExtMatrices:
      failure = check_ext_matrices(ctx, params.shapes[0]);
      break;
    case SchemaId::ExtSets:
      failure = check_ext_sets(ctx);
      break;
    case SchemaId::Empty:
      failure = check_empty(ctx);
      break;
    case SchemaId::Separation:
      failure = check_separation(ctx, params.phi);
      break;
    case SchemaId::Pairing:
      failure = check_pairing(ctx);
      break;
    case SchemaId::Union:
      failure = check_union(ctx);
      break;
    case SchemaId::Powerset:
      failure = check_powerset(ctx);
      break;
    case SchemaId::Infinity:
      failure = check_infinity(ctx, params.stage);
      break;
    case SchemaId::Replacement:
      failure = check_replacement(ctx, params.map);
      break;
    case SchemaId::SetOfMatrices:
      failure = check_set_of_matrices(ctx, params.shapes[0]);
      break;
  }

  Verdict v;
  v.schema = id;
  v.params = params;
  v.model = model;
  v.holds = !failure.has_value();
  if (failure) {
    v.witness = std::move(*failure);
    if (!v.witness.empty() && id != SchemaId::Infinity)
      confirm_witness(id, params, v.witness, *u, model);
  }
  v.universe_rank = u->rank;
  v.universe_depth = u->depth;
  v.universe_shapes = u->shapes;
  v.universe_size = u->values.size();
  v.universe_zfm_closed = u->zfm_closed;
  return v;
}

std::vector<Verdict> check_suite(Theory theory, const Universe& u0, Model model, Shape shape_bound,
                                 const CheckOptions& opts) {
  if (shape_bound.rows < 1 || shape_bound.cols < 1)
    throw SchemaError("suite shape bound must be positive, got " + shape_bound.str());
  Universe closed;
  const Universe* u = &u0;
  if (model == Model::ZfmImage && !u0.zfm_closed) {
    closed = zfm_closure(u0);
    u = &closed;
  }

  std::vector<Shape> all_shapes;
  for (int m = 1; m <= shape_bound.rows; ++m)
    for (int n = 1; n <= shape_bound.cols; ++n) all_shapes.push_back(Shape{m, n});
  std::sort(all_shapes.begin(), all_shapes.end());
  std::vector<Shape> multi_cell;
  for (const Shape& s : all_shapes)
    if (s.cells() >= 2) multi_cell.push_back(s);

  std::vector<Verdict> out;
  auto shaped = [&](SchemaId id, const std::vector<Shape>& shapes) {
    for (const Shape& s : shapes) {
      SchemaParams p;
      p.shapes = {s};
      out.push_back(check_schema(id, p, *u, model, opts));
    }
  };

  shaped(SchemaId::SetMatrix, all_shapes);
  out.push_back(check_schema(SchemaId::Reduction, {}, *u, model, opts));
  shaped(SchemaId::Omission, all_shapes);
  if (theory == Theory::Smt) shaped(SchemaId::DivisionSets, multi_cell);
  for (std::size_t i = 0; i < multi_cell.size(); ++i)
    for (std::size_t j = i + 1; j < multi_cell.size(); ++j) {
      SchemaParams p;
      p.shapes = {multi_cell[i], multi_cell[j]};
      out.push_back(check_schema(SchemaId::DivisionMatrices, p, *u, model, opts));
    }
  if (theory == Theory::Smt) shaped(SchemaId::Epsilon, multi_cell);
  shaped(SchemaId::ExtMatrices, all_shapes);
  out.push_back(check_schema(SchemaId::ExtSets, {}, *u, model, opts));
  out.push_back(check_schema(SchemaId::Empty, {}, *u, model, opts));
  for (const std::string& phi : phi_names()) {
    SchemaParams p;
    p.phi = phi;
    out.push_back(check_schema(SchemaId::Separation, p, *u, model, opts));
  }
  out.push_back(check_schema(SchemaId::Pairing, {}, *u, model, opts));
  out.push_back(check_schema(SchemaId::Union, {}, *u, model, opts));
  out.push_back(check_schema(SchemaId::Powerset, {}, *u, model, opts));
  out.push_back(check_schema(SchemaId::Infinity, {}, *u, model, opts));
  for (const std::string& map : map_names()) {
    SchemaParams p;
    p.map = map;
    out.push_back(check_schema(SchemaId::Replacement, p, *u, model, opts));
  }
  shaped(SchemaId::SetOfMatrices, all_shapes);
  return out;
}

}  // namespace smx
