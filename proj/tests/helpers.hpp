#pragma once

#include <vector>

#include "smx/setops.hpp"
#include "smx/textio.hpp"
#include "smx/value.hpp"

namespace test {

inline smx::Value V(const char* text) { return smx::parse(text); }

// A small zoo of canonical values of both kinds and mixed nesting, used for
// exhaustive pairwise/triplewise property checks.
inline const std::vector<smx::Value>& zoo() {
  static const std::vector<smx::Value> values = [] {
    using smx::mk_matrix;
    using smx::mk_set;
    using smx::Shape;
    smx::Value e = smx::empty_set();
    smx::Value s1 = mk_set({e});
    smx::Value s2 = mk_set({s1});
    smx::Value s3 = mk_set({e, s1});
    smx::Value m12 = mk_matrix(Shape{1, 2}, {e, e});
    smx::Value m12b = mk_matrix(Shape{1, 2}, {s1, e});
    smx::Value m21 = mk_matrix(Shape{2, 1}, {e, s1});
    smx::Value m22 = mk_matrix(Shape{2, 2}, {e, s1, s2, s3});
    smx::Value sm = mk_set({e, m12});
    smx::Value mm = mk_matrix(Shape{1, 2}, {m12, s1});
    smx::Value deep = mk_set({sm, m21});
    return std::vector<smx::Value>{e, s1, s2, s3, m12, m12b, m21, m22, sm, mm, deep};
  }();
  return values;
}

// All pure sets of von Neumann rank at most 2: {}, {{}}, {{{}}}, {{},{{}}}.
inline const std::vector<smx::Value>& pure_rank2() {
  static const std::vector<smx::Value> values = [] {
    smx::Value e = smx::empty_set();
    smx::Value s1 = smx::mk_set({e});
    return std::vector<smx::Value>{e, s1, smx::mk_set({s1}), smx::mk_set({e, s1})};
  }();
  return values;
}

}  // namespace test
