#include "smx/formula.hpp"

#include <utility>

namespace smx {

namespace {

TermPtr make_term(Term t) { return std::make_shared<const Term>(std::move(t)); }
FormulaPtr make_formula(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

FormulaPtr connective(Formula::Kind kind, std::vector<FormulaPtr> fs) {
  Formula f;
  f.kind = kind;
  f.kids = std::move(fs);
  return make_formula(std::move(f));
}

FormulaPtr quantifier(Formula::Kind kind, std::string var, FormulaPtr body) {
  Formula f;
  f.kind = kind;
  f.var = std::move(var);
  f.body = std::move(body);
  return make_formula(std::move(f));
}

}  // namespace

TermPtr set_var(std::string name) {
  Term t;
  t.kind = Term::Kind::SetVar;
  t.name = std::move(name);
  return make_term(std::move(t));
}

TermPtr mat_var(std::string name) {
  Term t;
  t.kind = Term::Kind::MatVar;
  t.name = std::move(name);
  return make_term(std::move(t));
}

TermPtr empty_term() {
  Term t;
  t.kind = Term::Kind::Empty;
  return make_term(std::move(t));
}

TermPtr matrix_term(Shape shape, std::vector<TermPtr> subs) {
  if (shape.rows < 1 || shape.cols < 1)
    throw ShapeError("matrix term shape must be positive, got " + shape.str());
  if (subs.size() != shape.cells())
    throw ArityError("matrix term of shape " + shape.str() + " needs " +
                     std::to_string(shape.cells()) + " subterms, got " +
                     std::to_string(subs.size()));
  Term t;
  t.kind = Term::Kind::Matrix;
  t.shape = shape;
  t.subs = std::move(subs);
  return make_term(std::move(t));
}

TermPtr map_app(std::string map_name, TermPtr arg) {
  Term t;
  t.kind = Term::Kind::MapApp;
  t.name = std::move(map_name);
  t.subs.push_back(std::move(arg));
  return make_term(std::move(t));
}

FormulaPtr mem_f(TermPtr a, TermPtr b) {
  Formula f;
  f.kind = Formula::Kind::Mem;
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return make_formula(std::move(f));
}

FormulaPtr equal_f(TermPtr a, TermPtr b) {
  Formula f;
  f.kind = Formula::Kind::Equal;
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return make_formula(std::move(f));
}

FormulaPtr not_f(FormulaPtr f) { return connective(Formula::Kind::Not, {std::move(f)}); }
FormulaPtr and_f(std::vector<FormulaPtr> fs) { return connective(Formula::Kind::And, std::move(fs)); }
FormulaPtr or_f(std::vector<FormulaPtr> fs) { return connective(Formula::Kind::Or, std::move(fs)); }

FormulaPtr implies_f(FormulaPtr a, FormulaPtr b) {
  return connective(Formula::Kind::Implies, {std::move(a), std::move(b)});
}

FormulaPtr iff_f(FormulaPtr a, FormulaPtr b) {
  return connective(Formula::Kind::Iff, {std::move(a), std::move(b)});
}

FormulaPtr forall_set(std::string var, FormulaPtr body) {
  return quantifier(Formula::Kind::ForallSet, std::move(var), std::move(body));
}
FormulaPtr exists_set(std::string var, FormulaPtr body) {
  return quantifier(Formula::Kind::ExistsSet, std::move(var), std::move(body));
}
FormulaPtr forall_mat(std::string var, FormulaPtr body) {
  return quantifier(Formula::Kind::ForallMat, std::move(var), std::move(body));
}
FormulaPtr exists_mat(std::string var, FormulaPtr body) {
  return quantifier(Formula::Kind::ExistsMat, std::move(var), std::move(body));
}

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::SetVar:
    case Term::Kind::MatVar:
      return t.name;
    case Term::Kind::Empty:
      return "{}";
    case Term::Kind::Matrix: {
      std::string out = "(mat " + t.shape.str();
      for (const TermPtr& s : t.subs) out += " " + to_string(*s);
      return out + ")";
    }
    case Term::Kind::MapApp:
      return "(" + t.name + " " + to_string(*t.subs[0]) + ")";
  }
  return "?";
}

std::string to_string(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Mem:
      return "(in " + to_string(*f.lhs) + " " + to_string(*f.rhs) + ")";
    case Formula::Kind::Equal:
      return "(= " + to_string(*f.lhs) + " " + to_string(*f.rhs) + ")";
    case Formula::Kind::Not:
      return "(not " + to_string(*f.kids[0]) + ")";
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::string out = f.kind == Formula::Kind::And ? "(and" : "(or";
      for (const FormulaPtr& k : f.kids) out += " " + to_string(*k);
      return out + ")";
    }
    case Formula::Kind::Implies:
      return "(=> " + to_string(*f.kids[0]) + " " + to_string(*f.kids[1]) + ")";
    case Formula::Kind::Iff:
      return "(<=> " + to_string(*f.kids[0]) + " " + to_string(*f.kids[1]) + ")";
    case Formula::Kind::ForallSet:
      return "(all-set " + f.var + " " + to_string(*f.body) + ")";
    case Formula::Kind::ExistsSet:
      return "(ex-set " + f.var + " " + to_string(*f.body) + ")";
    case Formula::Kind::ForallMat:
      return "(all-mat " + f.var + " " + to_string(*f.body) + ")";
    case Formula::Kind::ExistsMat:
      return "(ex-mat " + f.var + " " + to_string(*f.body) + ")";
  }
  return "?";
}

}  // namespace smx
