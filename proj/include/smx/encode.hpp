#pragma once

#include <optional>
#include <span>
#include <utility>

#include "smx/value.hpp"

namespace smx {

// True when v contains no matrix node anywhere (a pure hereditarily
// finite set, the universe of the pure-set encoding).
bool is_pure(Value v);

// The von Neumann numeral for k >= 1: vn(1) = {∅}, vn(k+1) = vn(k) ∪ {vn(k)}.
// Throws DomainError for k < 1; index 0 never occurs in the encoding.
Value vn_ordinal(int k);

// Kuratowski ordered pair {{a},{a,b}}.
Value kpair(Value a, Value b);

// Splits a Kuratowski pair back into its components; nullopt when s is not
// of the form {{a},{a,b}}.
std::optional<std::pair<Value, Value>> kpair_split(Value s);

// The function-set a matrix of the given shape encodes to, built from
// already-encoded entries: { ((i,j), e_ij) : 1<=i<=rows, 1<=j<=cols } with
// (i,j) a Kuratowski pair of von Neumann numerals.
Value zfm_matrix_image(Shape shape, std::span<const Value> encoded_entries);

// Pure-set encoding: sets map through elementwise; an m x n matrix becomes
// its index-to-entry function-set. The identity on pure values.
Value encode_zfm(Value v);

// Partial inverse: if s is exactly the function-set image of a matrix whose
// shape lies in `shapes`, rebuild that matrix (decoding entries recursively
// against the same shape set); otherwise decode s as a set elementwise.
// Shapes are tried in ascending order, so the result is deterministic.
Value decode_zfm(Value s, std::span<const Shape> shapes);

}  // namespace smx
