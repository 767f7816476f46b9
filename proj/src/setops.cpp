#include "smx/setops.hpp"

#include <vector>

#include "smx/textio.hpp"

namespace smx {

namespace {

void require_set(Value x, const char* op) {
  if (!x.is_set()) throw SortError(std::string(op) + ": expected a set, got matrix " + print(x));
}

}  // namespace

Value empty() { return empty_set(); }

Value separation(Value x, const Predicate& p) {
  require_set(x, "separation");
  std::vector<Value> kept;
  for (const Value& e : x.elems())
    if (p.fn(e)) kept.push_back(e);
  return mk_set(kept);
}

Value pair_set(Value a, Value b) { return mk_set({a, b}); }

Value union_of(Value x) {
  require_set(x, "union");
  std::vector<Value> out;
  for (const Value& z : x.elems()) {
    if (!z.is_set())
      throw GuardViolation("union: element " + print(z) + " is a matrix, not a set");
    out.insert(out.end(), z.elems().begin(), z.elems().end());
  }
  return mk_set(out);
}

Value powerset(Value x) {
  require_set(x, "powerset");
  const auto elems = x.elems();
  const std::size_t n = elems.size();
  std::vector<Value> subsets;
  subsets.reserve(std::size_t{1} << n);
  std::vector<Value> scratch;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    scratch.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) scratch.push_back(elems[i]);
    subsets.push_back(mk_set(scratch));
  }
  return mk_set(subsets);
}

Value infinity_stage(int k) {
  if (k < 0) throw DomainError("infinity_stage: stage count must be non-negative");
  std::vector<Value> elems;
  Value cur = empty_set();
  for (int i = 0; i < k; ++i) {
    elems.push_back(cur);
    cur = mk_set({cur});
  }
  return mk_set(elems);
}

Value replacement(Value x, const TotalMap& f) {
  require_set(x, "replacement");
  std::vector<Value> image;
  image.reserve(x.size());
  for (const Value& e : x.elems()) image.push_back(f.fn(e));
  return mk_set(image);
}

Value matrices_over(Value x, Shape shape) {
  require_set(x, "matrices_over");
  if (shape.rows < 1 || shape.cols < 1)
    throw ShapeError("matrices_over: shape must have positive rows and columns, got " + shape.str());
  if (shape.cells() == 1) return x;
  const auto elems = x.elems();
  const std::size_t n = elems.size();
  const std::size_t cells = shape.cells();
  if (n == 0) return empty_set();
  std::vector<Value> out;
  std::vector<std::size_t> odo(cells, 0);
  std::vector<Value> entries(cells, elems[0]);
  while (true) {
    for (std::size_t i = 0; i < cells; ++i) entries[i] = elems[odo[i]];
    out.push_back(mk_matrix(shape, entries));
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++odo[i] < n) break;
      odo[i] = 0;
      if (i == 0) return mk_set(out);
    }
  }
}

bool is_transitive_i(Value x) {
  require_set(x, "is_transitive_i");
  for (const Value& a : x.elems()) {
    if (!a.is_set()) continue;  // a matrix has no members
    for (const Value& b : a.elems())
      if (!mem(b, x)) return false;
  }
  return true;
}

bool is_transitive_ii(Value x) {
  require_set(x, "is_transitive_ii");
  for (const Value& a : x.elems()) {
    if (!a.is_set()) return false;  // not a set, hence not a subset
    for (const Value& b : a.elems())
      if (!mem(b, x)) return false;
  }
  return true;
}

bool is_transitive_iii(Value x) {
  require_set(x, "is_transitive_iii");
  for (const Value& a : x.elems()) {
    const bool empty_or_inhabited = a == empty_set() || (a.is_set() && a.size() > 0);
    if (!empty_or_inhabited) return false;
    if (a.is_set())
      for (const Value& b : a.elems())
        if (!mem(b, x)) return false;
  }
  return true;
}

bool is_ordinal(Value x) {
  require_set(x, "is_ordinal");
  if (!is_transitive_ii(x)) return false;
  const auto es = x.elems();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (mem(es[i], es[j]) == mem(es[j], es[i])) return false;  // trichotomy
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j)
      for (std::size_t k = 0; k < es.size(); ++k)
        if (mem(es[i], es[j]) && mem(es[j], es[k]) && !mem(es[i], es[k])) return false;
  return true;
}

}  // namespace smx
