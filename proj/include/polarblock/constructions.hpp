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

#ifndef POLARBLOCK_CONSTRUCTIONS_HPP_
#define POLARBLOCK_CONSTRUCTIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "polarblock/analysis.hpp"
#include "polarblock/polar_space.hpp"
#include "polarblock/search.hpp"

namespace polarblock {

// Cone examples in rank n, with the vertex dimension each needs.
enum class ConeRow {
  kConicPencil,       // pi_{n-2} Q(2,q) in Q(2n,q)
  kQplusSpread,       // pi_{n-3} Q+(3,q) in Q(2n,q)
  kEllipticPencil,    // pi_{n-2} Q-(3,q) in Q-(2n+1,q)
  kQ4Cover,           // pi_{n-3} Q(4,q) in Q-(2n+1,q)
  kHermitianPencil,   // pi_{n-2} H(2,q^2) in H(2n,q^2)
};

std::string ToString(ConeRow row);  // "conic-pencil", "qplus-spread", ...
std::optional<ConeRow> ParseConeRow(const std::string& name);
SpaceKind RowSpaceKind(ConeRow row);
// n-2 or n-3 for a space of rank n.
int RowVertexDim(ConeRow row, int rank);
ClassKind RowLabel(ConeRow row, int rank);
// Rows available for a space kind, in table order.
std::vector<ConeRow> RowsFor(SpaceKind kind);

// Lex-least subspace of projective dimension `dim` inside the lex-least
// generator.
Subspace DefaultVertex(const PolarSpace& space, int dim);

// All generators through v (dim r-2).
std::vector<int> Pencil(const PolarSpace& space, const Subspace& v);

struct Ruling {
  std::optional<Subspace> hyperplane;  // set when taken from a section
  std::vector<int> lines;              // generator indices of the space
};

// One ruling of a Q+(3,q): the space itself when hyperbolic of rank 2,
// otherwise the lex-least (or given) hyperplane section recognized as
// Q+(3,q). Ruling 0 contains the lex-least line.
Ruling RulingSpread(const PolarSpace& space, int which, const std::optional<Subspace>& hyperplane = std::nullopt);

struct SectionCover {
  Subspace hyperplane;
  std::vector<int> lines;
  SearchResult search;
};

// Minimum cover of a Q(4,q) hyperplane section of a rank-2 elliptic space;
// the lex-least witness of the exact search.
SectionCover MakeSectionCover(const PolarSpace& space, const std::optional<Subspace>& hyperplane,
                              const SearchOptions& opts);

struct ConeExample {
  ConeRow row;
  Subspace vertex;
  std::vector<int> members;
  std::vector<int> base_members;  // in the quotient at the vertex
};

ConeExample MakeConeExample(const SpacePtr& space, ConeRow row, const std::optional<Subspace>& vertex,
                            const SearchOptions& opts);

struct HyperplaneCheck {
  long long bound = 0;
  long long min_outside = 0;  // over all hyperplanes of the cone span
  int hyperplanes = 0;
  std::optional<Subspace> worst;
  bool passed = false;
};

// For every hyperplane T of the span of the members, counts members not
// inside T and compares the minimum with the row's bound.
HyperplaneCheck CheckConeCoverHyperplanes(const PolarSpace& space, ConeRow row, const std::vector<int>& members);

}  // namespace polarblock

#endif  // POLARBLOCK_CONSTRUCTIONS_HPP_
