// Copyright 2026 The polarblock Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLARBLOCK_PROJECTIVE_HPP_
#define POLARBLOCK_PROJECTIVE_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "polarblock/field.hpp"

namespace polarblock {

using Vec = std::vector<Elem>;

// Scales v so that its first nonzero coordinate is 1. Returns false for the
// zero vector (left unchanged).
bool NormalizePoint(const Field& f, Vec& v);

// A projective subspace of PG(n, q), stored as its basis in reduced
// row-echelon form. The RREF is the canonical representation: two Subspace
// values are equal iff they describe the same subspace.
class Subspace {
 public:
  Subspace() = default;
  // The empty subspace (projective dimension -1) of a space with vectors of
  // length `len`.
  explicit Subspace(int len) : len_(len) {}

  int length() const { return len_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  int dim() const { return rank() - 1; }
  bool empty() const { return pivots_.empty(); }

  std::span<const Elem> row(int i) const {
    return {rows_.data() + static_cast<std::size_t>(i) * len_, static_cast<std::size_t>(len_)};
  }
  std::vector<Vec> rows() const;
  const std::vector<int>& pivots() const { return pivots_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.len_ == b.len_ && a.rows_ == b.rows_;
  }
  // Row-major lexicographic order of the canonical basis (rank first).
  friend bool operator<(const Subspace& a, const Subspace& b);

  std::string key() const;

 private:
  friend Subspace Canonicalize(const Field&, std::span<const Vec>, int);
  int len_ = 0;
  std::vector<Elem> rows_;
  std::vector<int> pivots_;
};

// Reduced row-echelon form of the row space. `len` is the vector length and
// is required when `rows` is empty. Throws on ragged input.
Subspace Canonicalize(const Field& f, std::span<const Vec> rows, int len);
Subspace PointSubspace(const Field& f, const Vec& v);

Subspace Span(const Field& f, const Subspace& a, const Subspace& b);
Subspace Meet(const Field& f, const Subspace& a, const Subspace& b);
bool Contains(const Field& f, const Subspace& s, std::span<const Elem> v);
bool IsSubspaceOf(const Field& f, const Subspace& inner, const Subspace& outer);

// The annihilator {y : x . y = 0 for all x in s} under the plain dot product.
Subspace Annihilator(const Field& f, const Subspace& s);

// Coordinates of v with respect to the RREF basis of s (v must lie in s).
Vec CoordinatesIn(const Subspace& s, std::span<const Elem> v);
// sum coords[i] * row(i).
Vec FromCoordinates(const Field& f, const Subspace& s, std::span<const Elem> coords);

// All normalized points of s, in lexicographic order.
std::vector<Vec> PointsOf(const Field& f, const Subspace& s);

// All points of PG(n, q) in lexicographic order of normalized coordinates.
std::vector<Vec> EnumeratePgPoints(int n, const Field& f);

// Number of points of PG(n, q); theta(-1) == 0.
std::uint64_t Theta(int n, std::uint64_t q);

// Integer key for a vector with coordinates < q.
std::uint64_t PackVec(std::span<const Elem> v, int q);

}  // namespace polarblock

template <>
struct std::hash<polarblock::Subspace> {
  std::size_t operator()(const polarblock::Subspace& s) const noexcept {
    return std::hash<std::string>()(s.key());
  }
};

#endif  // POLARBLOCK_PROJECTIVE_HPP_
