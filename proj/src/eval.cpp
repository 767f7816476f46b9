#include "smx/eval.hpp"

#include "smx/encode.hpp"

namespace smx {

const char* model_name(Model m) { return m == Model::Native ? "native" : "zfm-image"; }

Value eval_term(const Term& t, const Env& env) {
  switch (t.kind) {
    case Term::Kind::SetVar:
    case Term::Kind::MatVar: {
      auto it = env.find(t.name);
      if (it == env.end()) throw EvalError("unbound variable '" + t.name + "'");
      if (t.kind == Term::Kind::SetVar && !it->second.is_set())
        throw EvalError("set variable '" + t.name + "' bound to a matrix");
      return it->second;
    }
    case Term::Kind::Empty:
      return empty_set();
    case Term::Kind::Matrix: {
      std::vector<Value> entries;
      entries.reserve(t.subs.size());
      for (const TermPtr& s : t.subs) entries.push_back(eval_term(*s, env));
      return mk_matrix(t.shape, entries);
    }
    case Term::Kind::MapApp:
      return named_map(t.name).fn(eval_term(*t.subs[0], env));
  }
  throw EvalError("malformed term");
}

namespace {

bool atom_key_equal(Value a, Value b, Model model) {
  if (model == Model::Native) return a == b;
  return encode_zfm(a) == encode_zfm(b);
}

bool atom_key_mem(Value a, Value b, Model model) {
  if (model == Model::Native) return mem(a, b);
  return mem(encode_zfm(a), encode_zfm(b));
}

bool eval_rec(const Formula& f, const Universe& u, Model model, Env& env) {
  switch (f.kind) {
    case Formula::Kind::Mem:
      return atom_key_mem(eval_term(*f.lhs, env), eval_term(*f.rhs, env), model);
    case Formula::Kind::Equal:
      return atom_key_equal(eval_term(*f.lhs, env), eval_term(*f.rhs, env), model);
    case Formula::Kind::Not:
      return !eval_rec(*f.kids[0], u, model, env);
    case Formula::Kind::And:
      for (const FormulaPtr& k : f.kids)
        if (!eval_rec(*k, u, model, env)) return false;
      return true;
    case Formula::Kind::Or:
      for (const FormulaPtr& k : f.kids)
        if (eval_rec(*k, u, model, env)) return true;
      return false;
    case Formula::Kind::Implies:
      return !eval_rec(*f.kids[0], u, model, env) || eval_rec(*f.kids[1], u, model, env);
    case Formula::Kind::Iff:
      return eval_rec(*f.kids[0], u, model, env) == eval_rec(*f.kids[1], u, model, env);
    case Formula::Kind::ForallSet:
    case Formula::Kind::ExistsSet:
    case Formula::Kind::ForallMat:
    case Formula::Kind::ExistsMat: {
      const bool universal =
          f.kind == Formula::Kind::ForallSet || f.kind == Formula::Kind::ForallMat;
      const bool set_sorted =
          f.kind == Formula::Kind::ForallSet || f.kind == Formula::Kind::ExistsSet;
      const std::vector<Value>& domain = set_sorted ? u.set_values : u.values;
      auto saved = env.find(f.var);
      const bool had = saved != env.end();
      const Value old = had ? saved->second : empty_set();
      bool result = universal;
      for (const Value& v : domain) {
        env.insert_or_assign(f.var, v);
        const bool inner = eval_rec(*f.body, u, model, env);
        if (inner != universal) {
          result = inner;
          break;
        }
      }
      if (had)
        env.insert_or_assign(f.var, old);
      else
        env.erase(f.var);
      return result;
    }
  }
  throw EvalError("malformed formula");
}

}  // namespace

bool eval(const Formula& f, const Universe& u, Model model, const Env& env) {
  Env scratch = env;
  return eval_rec(f, u, model, scratch);
}

std::vector<std::string> phi_names() { return {"is-set", "is-empty"}; }

FormulaPtr phi_formula(const std::string& name, const std::string& var) {
  if (name == "is-set")
    return exists_set("u'", equal_f(set_var("u'"), mat_var(var)));
  if (name == "is-empty")
    return forall_mat("b'", not_f(mem_f(mat_var("b'"), mat_var(var))));
  throw EvalError("unknown separation filter '" + name + "'");
}

std::vector<std::string> map_names() { return {"singleton", "wrap-1x2"}; }

const TotalMap& named_map(const std::string& name) {
  static const TotalMap singleton{"singleton", [](Value v) { return mk_set({v}); }};
  static const TotalMap wrap1x2{"wrap-1x2",
                                [](Value v) { return mk_matrix(Shape{1, 2}, {v, v}); }};
  if (name == "singleton") return singleton;
  if (name == "wrap-1x2") return wrap1x2;
  throw EvalError("unknown map '" + name + "'");
}

}  // namespace smx
