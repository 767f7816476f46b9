#include "smx/encode.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace smx {

namespace {

std::mutex memo_mutex;
std::unordered_map<const detail::Node*, Value> encode_memo;

std::optional<Value> memo_lookup(Value v) {
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto it = encode_memo.find(v.node());
  if (it == encode_memo.end()) return std::nullopt;
  return it->second;
}

void memo_store(Value v, Value enc) {
  std::lock_guard<std::mutex> lock(memo_mutex);
  encode_memo.emplace(v.node(), enc);
}

std::optional<Value> try_decode_matrix(Value s, Shape shape, std::span<const Shape> shapes);

Value decode_rec(Value s, std::span<const Shape> shapes) {
  if (s.is_matrix()) {
    // Not a pure set; decode entries and keep the node as-is.
    std::vector<Value> entries;
    entries.reserve(s.size());
    for (const Value& e : s.entries()) entries.push_back(decode_rec(e, shapes));
    return mk_matrix(s.shape(), entries);
  }
  for (const Shape& shape : shapes) {
    if (auto m = try_decode_matrix(s, shape, shapes)) return *m;
  }
  std::vector<Value> elems;
  elems.reserve(s.size());
  for (const Value& e : s.elems()) elems.push_back(decode_rec(e, shapes));
  return mk_set(elems);
}

std::optional<Value> try_decode_matrix(Value s, Shape shape, std::span<const Shape> shapes) {
  if (shape.cells() < 2 || !s.is_set() || s.size() != shape.cells()) return std::nullopt;
  std::vector<Value> entries(shape.cells(), empty_set());
  std::vector<bool> seen(shape.cells(), false);
  for (const Value& el : s.elems()) {
    auto outer = kpair_split(el);
    if (!outer) return std::nullopt;
    auto idx = kpair_split(outer->first);
    if (!idx) return std::nullopt;
    // Identify the cell by its von Neumann index pair.
    std::size_t cell = shape.cells();
    for (int i = 1; i <= shape.rows && cell == shape.cells(); ++i)
      for (int j = 1; j <= shape.cols; ++j)
        if (idx->first == vn_ordinal(i) && idx->second == vn_ordinal(j)) {
          cell = static_cast<std::size_t>(i - 1) * shape.cols + (j - 1);
          break;
        }
    if (cell == shape.cells() || seen[cell]) return std::nullopt;
    seen[cell] = true;
    entries[cell] = outer->second;
  }
  for (bool b : seen)
    if (!b) return std::nullopt;
  for (Value& e : entries) e = decode_rec(e, shapes);
  return mk_matrix(shape, entries);
}

}  // namespace

bool is_pure(Value v) {
  if (v.is_matrix()) return false;
  for (const Value& e : v.elems())
    if (!is_pure(e)) return false;
  return true;
}

Value vn_ordinal(int k) {
  if (k < 1) throw DomainError("vn_ordinal: index must be at least 1, got " + std::to_string(k));
  static std::mutex vn_mutex;
  static std::vector<Value> cache{empty_set()};  // cache[i] == vn(i)
  std::lock_guard<std::mutex> lock(vn_mutex);
  while (static_cast<int>(cache.size()) <= k) {
    Value prev = cache.back();
    std::vector<Value> elems(prev.elems().begin(), prev.elems().end());
    elems.push_back(prev);
    cache.push_back(mk_set(elems));
  }
  return cache[static_cast<std::size_t>(k)];
}

Value kpair(Value a, Value b) { return mk_set({mk_set({a}), mk_set({a, b})}); }

std::optional<std::pair<Value, Value>> kpair_split(Value s) {
  if (!s.is_set()) return std::nullopt;
  if (s.size() == 1) {
    Value inner = s.elems()[0];
    if (!inner.is_set() || inner.size() != 1) return std::nullopt;
    Value a = inner.elems()[0];
    return std::make_pair(a, a);
  }
  if (s.size() != 2) return std::nullopt;
  Value first = s.elems()[0];
  Value second = s.elems()[1];
  // Canonical order sorts by cardinality, so the singleton comes first.
  if (!first.is_set() || !second.is_set() || first.size() != 1 || second.size() != 2)
    return std::nullopt;
  Value a = first.elems()[0];
  Value e0 = second.elems()[0];
  Value e1 = second.elems()[1];
  if (e0 == a) return std::make_pair(a, e1);
  if (e1 == a) return std::make_pair(a, e0);
  return std::nullopt;
}

Value zfm_matrix_image(Shape shape, std::span<const Value> encoded_entries) {
  if (shape.cells() != encoded_entries.size())
    throw ArityError("zfm_matrix_image: entry count does not match " + shape.str());
  std::vector<Value> graph;
  graph.reserve(encoded_entries.size());
  std::size_t cell = 0;
  for (int i = 1; i <= shape.rows; ++i)
    for (int j = 1; j <= shape.cols; ++j, ++cell)
      graph.push_back(kpair(kpair(vn_ordinal(i), vn_ordinal(j)), encoded_entries[cell]));
  return mk_set(graph);
}

Value encode_zfm(Value v) {
  if (auto hit = memo_lookup(v)) return *hit;
  Value result = v;
  if (v.is_set()) {
    std::vector<Value> elems;
    elems.reserve(v.size());
    for (const Value& e : v.elems()) elems.push_back(encode_zfm(e));
    result = mk_set(elems);
  } else {
    std::vector<Value> entries;
    entries.reserve(v.size());
    for (const Value& e : v.entries()) entries.push_back(encode_zfm(e));
    result = zfm_matrix_image(v.shape(), entries);
  }
  memo_store(v, result);
  return result;
}

Value decode_zfm(Value s, std::span<const Shape> shapes) {
  std::vector<Shape> ordered(shapes.begin(), shapes.end());
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  return decode_rec(s, ordered);
}

}  // namespace smx
