#pragma once

#include <memory>
#include <string>
#include <vector>

#include "smx/value.hpp"

namespace smx {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Terms of the two-sorted language: set-sorted variables, matrix-sorted
// variables, the empty-set constant, matrix-building terms, and named
// total-map applications (used by the replacement schema).
struct Term {
  enum class Kind { SetVar, MatVar, Empty, Matrix, MapApp };
  Kind kind;
  std::string name;          // SetVar, MatVar, MapApp
  Shape shape{1, 1};         // Matrix
  std::vector<TermPtr> subs; // Matrix: row-major cells; MapApp: one argument
};

TermPtr set_var(std::string name);
TermPtr mat_var(std::string name);
TermPtr empty_term();
TermPtr matrix_term(Shape shape, std::vector<TermPtr> subs);
TermPtr map_app(std::string map_name, TermPtr arg);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind {
    Mem,
    Equal,
    Not,
    And,
    Or,
    Implies,
    Iff,
    ForallSet,
    ExistsSet,
    ForallMat,
    ExistsMat
  };
  Kind kind;
  TermPtr lhs, rhs;             // Mem, Equal
  std::vector<FormulaPtr> kids; // connectives
  std::string var;              // quantifiers
  FormulaPtr body;              // quantifiers
};

FormulaPtr mem_f(TermPtr a, TermPtr b);
FormulaPtr equal_f(TermPtr a, TermPtr b);
FormulaPtr not_f(FormulaPtr f);
FormulaPtr and_f(std::vector<FormulaPtr> fs);
FormulaPtr or_f(std::vector<FormulaPtr> fs);
FormulaPtr implies_f(FormulaPtr a, FormulaPtr b);
FormulaPtr iff_f(FormulaPtr a, FormulaPtr b);
FormulaPtr forall_set(std::string var, FormulaPtr body);
FormulaPtr exists_set(std::string var, FormulaPtr body);
FormulaPtr forall_mat(std::string var, FormulaPtr body);
FormulaPtr exists_mat(std::string var, FormulaPtr body);

// Compact s-expression rendering for diagnostics.
std::string to_string(const Term& t);
std::string to_string(const Formula& f);

}  // namespace smx
