#include "smx/value.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace smx {
namespace detail {

struct Node {
  bool matrix = false;
  int rows = 0;
  int cols = 0;
  std::uint64_t hash = 0;
  std::vector<Value> kids;
};

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t hash_node(const Node& n) {
  std::uint64_t h = n.matrix ? 0x6d61747269786e6full : 0x7365746e6f646531ull;
  h = mix64(h ^ (static_cast<std::uint64_t>(n.rows) << 32 | static_cast<std::uint32_t>(n.cols)));
  for (const Value& k : n.kids) h = mix64(h ^ reinterpret_cast<std::uintptr_t>(k.node()));
  return h;
}

struct NodeHash {
  std::size_t operator()(const Node* n) const { return static_cast<std::size_t>(n->hash); }
};

struct NodeEq {
  bool operator()(const Node* a, const Node* b) const {
    if (a->matrix != b->matrix || a->rows != b->rows || a->cols != b->cols ||
        a->kids.size() != b->kids.size())
      return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
      if (a->kids[i].node() != b->kids[i].node()) return false;
    return true;
  }
};

// Global hash-consing table. Interned nodes live for the whole process,
// so handle identity is stable and eq() is a pointer comparison.
class Interner {
 public:
  const Node* intern(Node&& probe) {
    probe.hash = hash_node(probe);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = table_.find(&probe);
    if (it != table_.end()) return *it;
    auto owned = std::make_unique<Node>(std::move(probe));
    Node* p = owned.get();
    arena_.push_back(std::move(owned));
    table_.insert(p);
    return p;
  }

  static Interner& instance() {
    static Interner interner;
    return interner;
  }

 private:
  std::mutex mutex_;
  std::unordered_set<Node*, NodeHash, NodeEq> table_;
  std::deque<std::unique_ptr<Node>> arena_;
};

}  // namespace
}  // namespace detail

bool Value::is_set() const { return !n_->matrix; }
bool Value::is_matrix() const { return n_->matrix; }

Shape Value::shape() const { return Shape{n_->rows, n_->cols}; }

std::span<const Value> Value::elems() const { return {n_->kids.data(), n_->kids.size()}; }
std::span<const Value> Value::entries() const { return {n_->kids.data(), n_->kids.size()}; }
std::size_t Value::size() const { return n_->kids.size(); }

Value mk_set(std::span<const Value> elems) {
  detail::Node probe;
  probe.matrix = false;
  probe.kids.assign(elems.begin(), elems.end());
  std::sort(probe.kids.begin(), probe.kids.end(), ValueLess{});
  probe.kids.erase(std::unique(probe.kids.begin(), probe.kids.end()), probe.kids.end());
  return Value::from_node(detail::Interner::instance().intern(std::move(probe)));
}

Value mk_set(std::initializer_list<Value> elems) {
  return mk_set(std::span<const Value>(elems.begin(), elems.size()));
}

Value mk_matrix(Shape shape, std::span<const Value> entries) {
  if (shape.rows < 1 || shape.cols < 1)
    throw ShapeError("matrix shape must have positive rows and columns, got " + shape.str());
  if (entries.size() != shape.cells())
    throw ArityError("matrix of shape " + shape.str() + " needs " + std::to_string(shape.cells()) +
                     " entries, got " + std::to_string(entries.size()));
  if (shape.cells() == 1) return entries[0];
  detail::Node probe;
  probe.matrix = true;
  probe.rows = shape.rows;
  probe.cols = shape.cols;
  probe.kids.assign(entries.begin(), entries.end());
  return Value::from_node(detail::Interner::instance().intern(std::move(probe)));
}

Value mk_matrix(Shape shape, std::initializer_list<Value> entries) {
  return mk_matrix(shape, std::span<const Value>(entries.begin(), entries.size()));
}

Value empty_set() {
  static const Value empty = mk_set(std::span<const Value>{});
  return empty;
}

bool eq(Value a, Value b) { return a == b; }

bool mem(Value a, Value b) {
  if (b.is_matrix()) return false;
  for (const Value& e : b.elems())
    if (e == a) return true;
  return false;
}

bool is_set(Value v) { return v.is_set(); }

int compare(Value a, Value b) {
  if (a == b) return 0;
  const detail::Node* x = a.node();
  const detail::Node* y = b.node();
  if (x->matrix != y->matrix) return x->matrix ? 1 : -1;
  if (x->matrix) {
    if (x->rows != y->rows) return x->rows < y->rows ? -1 : 1;
    if (x->cols != y->cols) return x->cols < y->cols ? -1 : 1;
  } else if (x->kids.size() != y->kids.size()) {
    return x->kids.size() < y->kids.size() ? -1 : 1;
  }
  for (std::size_t i = 0; i < x->kids.size(); ++i) {
    int c = compare(x->kids[i], y->kids[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace smx
