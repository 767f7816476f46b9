#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "smx/setops.hpp"
#include "smx/textio.hpp"
#include "smx/universe.hpp"

using namespace smx;
using test::V;
using test::zoo;

namespace {

const Predicate kIsSet{"is-set", [](Value v) { return v.is_set(); }};
const Predicate kIsEmpty{"is-empty", [](Value v) { return v == empty_set(); }};

// Independent subset enumerator used as the powerset oracle.
std::vector<Value> brute_subsets(Value x) {
  std::vector<Value> out;
  const auto elems = x.elems();
  for (std::uint32_t mask = 0; mask < (1u << elems.size()); ++mask) {
    std::vector<Value> subset;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (mask & (1u << i)) subset.push_back(elems[i]);
    out.push_back(mk_set(subset));
  }
  return out;
}

// Independent tuple enumerator used as the matrices_over oracle.
std::vector<Value> brute_matrices(Value x, Shape s) {
  std::vector<Value> out;
  const auto elems = x.elems();
  if (elems.empty()) return out;
  std::vector<std::size_t> odo(s.cells(), 0);
  while (true) {
    std::vector<Value> entries;
    for (std::size_t i : odo) entries.push_back(elems[i]);
    out.push_back(mk_matrix(s, entries));
    std::size_t i = s.cells();
    while (true) {
      if (i == 0) return out;
      --i;
      if (++odo[i] < elems.size()) break;
      odo[i] = 0;
    }
  }
}

}  // namespace

TEST_CASE("empty set has no members") {
  CHECK(empty() == V("{}"));
  CHECK_FALSE(mem(V("[{},{}]"), empty()));
  CHECK(eq(empty(), mk_set({})));
  for (const Value& v : zoo()) CHECK_FALSE(mem(v, empty()));
}

TEST_CASE("separation filters pointwise") {
  CHECK(separation(V("{{},[{},{}]}"), kIsSet) == V("{{}}"));
  CHECK(separation(V("{}"), kIsSet) == V("{}"));
  CHECK(separation(V("{{},{{}}}"), kIsEmpty) == V("{{}}"));
  CHECK_THROWS_AS(separation(V("[{},{}]"), kIsSet), SortError);
}

TEST_CASE("pair_set realizes the pairing biconditional") {
  CHECK(pair_set(V("{}"), V("[{},{}]")) == V("{{},[{},{}]}"));
  CHECK(pair_set(V("{}"), V("{}")) == V("{{}}"));
  CHECK(pair_set(V("[{},{}]"), V("[{};{}]")).size() == 2);
  for (const Value& a : zoo())
    for (const Value& b : zoo()) {
      Value p = pair_set(a, b);
      for (const Value& g : zoo()) CHECK(mem(g, p) == (eq(g, a) || eq(g, b)));
    }
}

TEST_CASE("union flattens sets and rejects matrix elements") {
  CHECK(union_of(V("{{{}},{{{}}}}")) == V("{{},{{}}}"));
  CHECK(union_of(V("{}")) == V("{}"));
  CHECK(union_of(V("{{[{},{}]}}")) == V("{[{},{}]}"));
  CHECK_THROWS_AS(union_of(V("{[{},{}]}")), GuardViolation);
  CHECK_THROWS_WITH_AS(union_of(V("{[{},{}]}")),
                       doctest::Contains("[{},{}]"), GuardViolation);
  CHECK_THROWS_AS(union_of(V("[{},{}]")), SortError);
}

TEST_CASE("powerset enumerates exactly the subsets") {
  CHECK(powerset(V("{}")) == V("{{}}"));
  CHECK(powerset(V("{[{},{}]}")) == mk_set(brute_subsets(V("{[{},{}]}"))));
  CHECK(powerset(V("{[{},{}]}")) == V("{{},{[{},{}]}}"));
  CHECK(powerset(V("{{},{{}}}")).size() == 4);
  CHECK(powerset(V("{{},{{}}}")) == mk_set(brute_subsets(V("{{},{{}}}"))));
  CHECK_THROWS_AS(powerset(V("[{},{}]")), SortError);
}

TEST_CASE("powerset cardinality is 2^n for small sets") {
  std::vector<Value> xs = {V("{}"), V("{{}}"), V("{{},{{}}}"), V("{{},{{}},[{},{}]}"),
                           V("{{},{{}},{{{}}},[{},{}]}")};
  for (const Value& x : xs) {
    CAPTURE(print(x));
    CHECK(powerset(x).size() == (std::size_t{1} << x.size()));
    CHECK(powerset(x) == mk_set(brute_subsets(x)));
  }
}

TEST_CASE("infinity stages grow by singleton successors") {
  CHECK(infinity_stage(0) == V("{}"));
  CHECK(infinity_stage(1) == V("{{}}"));
  CHECK(infinity_stage(3) == V("{{},{{}},{{{}}}}"));
  for (int k = 0; k < 6; ++k) {
    Value cur = infinity_stage(k);
    Value next = infinity_stage(k + 1);
    CHECK(next.size() == static_cast<std::size_t>(k) + 1);
    for (const Value& y : cur.elems()) {
      CHECK(mem(y, next));
      CHECK(mem(mk_set({y}), next));
    }
  }
}

TEST_CASE("replacement maps pointwise and deduplicates") {
  TotalMap wrap{"wrap-1x2", [](Value v) { return mk_matrix(Shape{1, 2}, {v, v}); }};
  TotalMap constant{"to-empty", [](Value) { return empty_set(); }};
  CHECK(replacement(V("{{},{{}}}"), wrap) == V("{[{},{}],[{{}},{{}}]}"));
  CHECK(replacement(V("{}"), wrap) == V("{}"));
  CHECK(replacement(V("{{},{{}}}"), constant) == V("{{}}"));
  CHECK_THROWS_AS(replacement(V("[{},{}]"), constant), SortError);
}

TEST_CASE("matrices_over enumerates entry tuples") {
  Value x = V("{{},{{}}}");
  CHECK(matrices_over(x, Shape{1, 2}).size() == 4);
  CHECK(matrices_over(x, Shape{1, 2}) == mk_set(brute_matrices(x, Shape{1, 2})));
  CHECK(matrices_over(x, Shape{1, 1}) == x);
  CHECK(matrices_over(V("{}"), Shape{2, 2}) == V("{}"));
  CHECK_THROWS_AS(matrices_over(V("[{},{}]"), Shape{1, 2}), SortError);
}

TEST_CASE("matrices_over cardinality is |x|^(m*n)") {
  std::vector<Value> xs = {V("{}"), V("{{}}"), V("{{},{{}}}"), V("{{},{{}},[{},{}]}")};
  std::vector<Shape> shapes = {{1, 2}, {2, 1}, {2, 2}, {1, 3}};
  for (const Value& x : xs)
    for (const Shape& s : shapes) {
      std::size_t expect = 1;
      for (std::size_t i = 0; i < s.cells(); ++i) expect *= x.size();
      CAPTURE(print(x));
      CAPTURE(s.str());
      CHECK(matrices_over(x, s).size() == expect);
      CHECK(matrices_over(x, s) == mk_set(brute_matrices(x, s)));
    }
}

TEST_CASE("union, powerset and replacement agree with brute force on pure inputs") {
  TotalMap singleton{"singleton", [](Value v) { return mk_set({v}); }};
  for (const Value& x : test::pure_rank2()) {
    // union oracle
    std::vector<Value> flat;
    for (const Value& z : x.elems())
      flat.insert(flat.end(), z.elems().begin(), z.elems().end());
    CHECK(union_of(x) == mk_set(flat));
    CHECK(powerset(x) == mk_set(brute_subsets(x)));
    std::vector<Value> image;
    for (const Value& e : x.elems()) image.push_back(mk_set({e}));
    CHECK(replacement(x, singleton) == mk_set(image));
  }
}

TEST_CASE("a matrix element separates the transitivity definitions") {
  Value x = V("{[{},{}],{[{},{}]}}");
  CHECK(is_transitive_i(x));
  CHECK_FALSE(is_transitive_ii(x));
  CHECK_FALSE(is_transitive_iii(x));
}

TEST_CASE("transitivity examples") {
  CHECK_FALSE(is_transitive_i(V("{{{}}}")));
  CHECK(is_transitive_i(V("{}")));
  CHECK(is_transitive_ii(V("{{},{{}}}")));
  CHECK(is_transitive_ii(V("{}")));
  CHECK(is_transitive_iii(V("{{},{{}}}")));
  CHECK(is_transitive_iii(V("{}")));
  CHECK_THROWS_AS(is_transitive_i(V("[{},{}]")), SortError);
  CHECK_THROWS_AS(is_transitive_ii(V("[{},{}]")), SortError);
  CHECK_THROWS_AS(is_transitive_iii(V("[{},{}]")), SortError);
}

TEST_CASE("definitions (ii) and (iii) agree on every enumerated set") {
  Universe u = enum_universe(2, {Shape{1, 2}}, 1);
  for (const Value& x : u.set_values) {
    CAPTURE(print(x));
    CHECK(is_transitive_ii(x) == is_transitive_iii(x));
  }
}

TEST_CASE("definition (ii) implies definition (i), not conversely") {
  Universe u = enum_universe(2, {Shape{1, 2}, Shape{2, 1}}, 1);
  for (const Value& x : u.set_values)
    if (is_transitive_ii(x)) CHECK(is_transitive_i(x));
  Value counter = V("{[{},{}],{[{},{}]}}");
  CHECK(is_transitive_i(counter));
  CHECK_FALSE(is_transitive_ii(counter));
}

TEST_CASE("ordinals are transitive sets strictly ordered by membership") {
  CHECK(is_ordinal(V("{}")));
  CHECK(is_ordinal(V("{{},{{}}}")));
  CHECK(is_ordinal(V("{{},{{}},{{},{{}}}}")));  // von Neumann 3
  CHECK_FALSE(is_ordinal(V("{{{}}}")));
  CHECK_FALSE(is_ordinal(V("{[{},{}],{[{},{}]}}")));
  CHECK_FALSE(is_ordinal(V("{{},{{}},{{{}}}}")));  // singleton tower is not ordered
  CHECK_THROWS_AS(is_ordinal(V("[{},{}]")), SortError);
}
