#include "smx/universe.hpp"

#include <algorithm>
#include <unordered_set>

#include "smx/encode.hpp"

namespace smx {

namespace {

class Builder {
 public:
  explicit Builder(std::size_t cap) : cap_(cap) {}

  bool insert(Value v) {
    if (seen_.insert(v.node()).second) {
      if (seen_.size() > cap_)
        throw LimitError("universe cap " + std::to_string(cap_) + " exceeded");
      values_.push_back(v);
      return true;
    }
    return false;
  }

  bool contains(Value v) const { return seen_.count(v.node()) > 0; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Value>& values() const { return values_; }

  std::vector<Value> sorted() && {
    std::sort(values_.begin(), values_.end(), ValueLess{});
    return std::move(values_);
  }

  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
  std::unordered_set<const detail::Node*> seen_;
  std::vector<Value> values_;
};

void add_subsets(Builder& b, const std::vector<Value>& base) {
  const std::size_t n = base.size();
  // P(base) alone contributes 2^n distinct values, so pre-check the cap
  // before materializing anything.
  if (n >= 63 || (std::size_t{1} << n) > b.cap())
    throw LimitError("universe cap " + std::to_string(b.cap()) + " exceeded (subset stage over " +
                     std::to_string(n) + " values)");
  std::vector<Value> scratch;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    scratch.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) scratch.push_back(base[i]);
    b.insert(mk_set(scratch));
  }
}

void add_matrices(Builder& b, const std::vector<Value>& base, Shape shape) {
  const std::size_t n = base.size();
  const std::size_t cells = shape.cells();
  if (n == 0) return;
  std::size_t count = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    if (count > b.cap() / n + 1) {
      count = b.cap() + 1;
      break;
    }
    count *= n;
  }
  if (count > b.cap())
    throw LimitError("universe cap " + std::to_string(b.cap()) + " exceeded (matrix stage " +
                     shape.str() + " over " + std::to_string(n) + " values)");
  std::vector<std::size_t> odo(cells, 0);
  std::vector<Value> entries(cells, base[0]);
  while (true) {
    for (std::size_t i = 0; i < cells; ++i) entries[i] = base[odo[i]];
    b.insert(mk_matrix(shape, entries));
    std::size_t i = cells;
    while (true) {
      if (i == 0) return;
      --i;
      if (++odo[i] < n) break;
      odo[i] = 0;
    }
  }
}

void add_subterms(Builder& b, Value v) {
  if (!b.insert(v)) return;
  for (const Value& k : v.is_set() ? v.elems() : v.entries()) add_subterms(b, k);
}

}  // namespace

bool Universe::contains(Value v) const {
  auto it = std::lower_bound(values.begin(), values.end(), v, ValueLess{});
  return it != values.end() && *it == v;
}

Universe enum_universe(int rank, std::vector<Shape> shapes, int depth, std::size_t cap) {
  if (rank < 0 || depth < 0) throw DomainError("enum_universe: rank and depth must be non-negative");
  if (cap == 0) throw DomainError("enum_universe: cap must be positive");
  for (const Shape& s : shapes)
    if (s.rows < 1 || s.cols < 1)
      throw ShapeError("enum_universe: invalid shape " + s.str());
  std::sort(shapes.begin(), shapes.end());
  shapes.erase(std::unique(shapes.begin(), shapes.end(),
                           [](Shape a, Shape b) { return a == b; }),
               shapes.end());

  Builder b(cap);
  b.insert(empty_set());
  const int levels = std::max(rank, depth);
  for (int level = 1; level <= levels; ++level) {
    std::vector<Value> base = b.values();
    if (level <= rank) add_subsets(b, base);
    if (level <= depth)
      for (const Shape& s : shapes) add_matrices(b, base, s);
  }

  Universe u;
  u.rank = rank;
  u.shapes = std::move(shapes);
  u.depth = depth;
  u.cap = cap;
  u.values = std::move(b).sorted();
  for (const Value& v : u.values)
    if (v.is_set()) u.set_values.push_back(v);
  return u;
}

Universe zfm_closure(const Universe& u) {
  if (u.zfm_closed) return u;
  Builder b(u.cap);
  for (const Value& v : u.values) b.insert(v);
  for (const Value& v : u.values) add_subterms(b, encode_zfm(v));

  Universe out;
  out.rank = u.rank;
  out.shapes = u.shapes;
  out.depth = u.depth;
  out.cap = u.cap;
  out.zfm_closed = true;
  out.values = std::move(b).sorted();
  for (const Value& v : out.values)
    if (v.is_set()) out.set_values.push_back(v);
  return out;
}

}  // namespace smx
