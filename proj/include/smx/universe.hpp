#pragma once

#include <cstddef>
#include <vector>

#include "smx/value.hpp"

namespace smx {

inline constexpr std::size_t kDefaultUniverseCap = 20000;

// A finite quantification domain: all values reachable from {∅} by `rank`
// rounds of subset formation and `depth` rounds of matrix formation over
// the admitted shapes. Values are duplicate-free, subterm-closed and sorted.
struct Universe {
  int rank = 0;
  std::vector<Shape> shapes;
  int depth = 0;
  std::size_t cap = kDefaultUniverseCap;
  bool zfm_closed = false;
  std::vector<Value> values;
  std::vector<Value> set_values;

  bool contains(Value v) const;
};

// Level 0 is {∅}. Level k then adds all subsets of the values generated so
// far while k <= rank, and all admitted-shape matrices over them while
// k <= depth. Throws LimitError when the result would exceed `cap`.
Universe enum_universe(int rank, std::vector<Shape> shapes, int depth,
                       std::size_t cap = kDefaultUniverseCap);

// The universe extended with the pure-set encoding of every value plus all
// subterms of those encodings. This is the quantification domain used for
// checks in the encoded model: the pure sets that matrices encode to are
// themselves values of that model, so a faithful bounded domain must
// contain them. Closed under encoding and subterm extraction.
Universe zfm_closure(const Universe& u);

}  // namespace smx
