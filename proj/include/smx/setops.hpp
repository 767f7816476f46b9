#pragma once

#include <functional>
#include <string>

#include "smx/value.hpp"

namespace smx {

// A named total boolean function on values, e.g. a separation filter.
struct Predicate {
  std::string name;
  std::function<bool(Value)> fn;
};

// A named total function from values to values, e.g. a replacement map.
struct TotalMap {
  std::string name;
  std::function<Value(Value)> fn;
};

Value empty();

// The set of elements of x satisfying p. Throws SortError on matrix x.
Value separation(Value x, const Predicate& p);

// {a, b}; a singleton when a and b are equal. a and b may be matrices.
Value pair_set(Value a, Value b);

// Union of the elements of x. Every element of x must itself be a set;
// a matrix element raises GuardViolation naming the offender.
Value union_of(Value x);

// The set of all subsets of x; cardinality 2^|x|. Matrix elements of x may
// appear inside subsets.
Value powerset(Value x);

// k-stage approximation of the singleton-successor tower:
// {∅, {∅}, {{∅}}, ...} with k elements.
Value infinity_stage(int k);

// { f(a) : a in x }, deduplicated.
Value replacement(Value x, const TotalMap& f);

// All shape-shaped matrices with entries from x; equals x for shape 1x1,
// cardinality |x|^(rows*cols) otherwise.
Value matrices_over(Value x, Shape shape);

// Transitivity in the inherited sense: members of members of x are in x.
// Matrix elements pass vacuously (they have no members).
bool is_transitive_i(Value x);

// Every element of x is a set and a subset of x; a matrix element fails.
bool is_transitive_ii(Value x);

// Every element is empty or has a member, and members of members are in x.
bool is_transitive_iii(Value x);

// Transitive in sense (ii) and strictly totally ordered by membership.
bool is_ordinal(Value x);

}  // namespace smx
