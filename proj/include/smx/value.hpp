#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "smx/errors.hpp"

namespace smx {

// Dimensions of a matrix value. Both components are at least 1; a shape
// stored inside a matrix node additionally has rows*cols >= 2, because
// 1x1 matrices are erased at construction time.
struct Shape {
  int rows = 1;
  int cols = 1;

  std::size_t cells() const { return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols); }
  std::string str() const { return std::to_string(rows) + "x" + std::to_string(cols); }

  friend bool operator==(Shape a, Shape b) { return a.rows == b.rows && a.cols == b.cols; }
  friend bool operator!=(Shape a, Shape b) { return !(a == b); }
  friend bool operator<(Shape a, Shape b) {
    if (a.rows != b.rows) return a.rows < b.rows;
    return a.cols < b.cols;
  }
};

namespace detail {
struct Node;
}

// An immutable canonical value: either a finite set of values or an m x n
// matrix of values with m*n >= 2. Values are interned, so structural
// equality coincides with handle identity and copies are cheap.
class Value {
 public:
  bool is_set() const;
  bool is_matrix() const;

  // Shape of a matrix value; calling this on a set is a logic error.
  Shape shape() const;

  // Set elements, strictly increasing in the value order.
  std::span<const Value> elems() const;

  // Matrix entries in row-major order.
  std::span<const Value> entries() const;

  // Number of direct children (set cardinality or matrix cell count).
  std::size_t size() const;

  const detail::Node* node() const { return n_; }

  friend bool operator==(Value a, Value b) { return a.n_ == b.n_; }
  friend bool operator!=(Value a, Value b) { return a.n_ != b.n_; }

  static Value from_node(const detail::Node* n) { return Value(n); }

 private:
  explicit Value(const detail::Node* n) : n_(n) {}
  const detail::Node* n_;
};

// Builds a set: elements are deduplicated and sorted into canonical order.
Value mk_set(std::span<const Value> elems);
Value mk_set(std::initializer_list<Value> elems);

// Builds a matrix. A 1x1 matrix returns its single entry unchanged, which
// realizes the reduction and omission identities in the representation.
// Throws ShapeError for zero rows/cols and ArityError on length mismatch.
Value mk_matrix(Shape shape, std::span<const Value> entries);
Value mk_matrix(Shape shape, std::initializer_list<Value> entries);

// The empty set.
Value empty_set();

// Structural equality on canonical values.
bool eq(Value a, Value b);

// Membership: false whenever b is a matrix, elementwise otherwise.
bool mem(Value a, Value b);

bool is_set(Value v);

// Total order on values: sets before matrices; sets by cardinality then
// lexicographically; matrices by shape then row-major entries.
// compare(a, b) == 0 exactly when eq(a, b).
int compare(Value a, Value b);

struct ValueLess {
  bool operator()(Value a, Value b) const { return compare(a, b) < 0; }
};

}  // namespace smx
