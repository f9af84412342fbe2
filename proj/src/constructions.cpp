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

#include "polarblock/constructions.hpp"

#include <algorithm>
#include <set>

#include "polarblock/error.hpp"

namespace polarblock {

std::string ToString(ConeRow row) {
  switch (row) {
    case ConeRow::kConicPencil: return "conic-pencil";
    case ConeRow::kQplusSpread: return "qplus-spread";
    case ConeRow::kEllipticPencil: return "elliptic-pencil";
    case ConeRow::kQ4Cover: return "q4-cover";
    case ConeRow::kHermitianPencil: return "hermitian-pencil";
  }
  return "";
}

std::optional<ConeRow> ParseConeRow(const std::string& name) {
  for (ConeRow r : {ConeRow::kConicPencil, ConeRow::kQplusSpread, ConeRow::kEllipticPencil, ConeRow::kQ4Cover,
                    ConeRow::kHermitianPencil})
    if (ToString(r) == name) return r;
  return std::nullopt;
}

SpaceKind RowSpaceKind(ConeRow row) {
  switch (row) {
    case ConeRow::kConicPencil:
    case ConeRow::kQplusSpread: return SpaceKind::kParabolic;
    case ConeRow::kEllipticPencil:
    case ConeRow::kQ4Cover: return SpaceKind::kElliptic;
    case ConeRow::kHermitianPencil: return SpaceKind::kHermitianEven;
  }
  return SpaceKind::kParabolic;
}

int RowVertexDim(ConeRow row, int rank) {
  return (row == ConeRow::kQplusSpread || row == ConeRow::kQ4Cover) ? rank - 3 : rank - 2;
}

ClassKind RowLabel(ConeRow row, int rank) {
  if (rank == 2) {
    if (row == ConeRow::kQplusSpread) return ClassKind::kSubGqSpread;
    if (row == ConeRow::kQ4Cover) return ClassKind::kCoverOfSectionQ4;
    return ClassKind::kPencil;
  }
  switch (row) {
    case ConeRow::kConicPencil: return ClassKind::kConeOverConicPencil;
    case ConeRow::kQplusSpread: return ClassKind::kConeOverQplus3Spread;
    case ConeRow::kEllipticPencil: return ClassKind::kConeOverEllipticPencil;
    case ConeRow::kQ4Cover: return ClassKind::kConeOverQ4Cover;
    case ConeRow::kHermitianPencil: return ClassKind::kConeOverHermitianPencil;
  }
  return ClassKind::kUnknown;
}

std::vector<ConeRow> RowsFor(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::kParabolic: return {ConeRow::kConicPencil, ConeRow::kQplusSpread};
    case SpaceKind::kElliptic: return {ConeRow::kEllipticPencil, ConeRow::kQ4Cover};
    case SpaceKind::kHermitianEven: return {ConeRow::kHermitianPencil};
    default: return {};
  }
}

Subspace DefaultVertex(const PolarSpace& space, int dim) {
  const Field& f = space.field();
  const int len = space.form().length();
  Require(dim >= -1 && dim <= space.rank() - 1, "vertex dimension out of range");
  if (dim < 0) return Subspace(len);
  const Subspace& g0 = space.generator(0);
  const std::vector<Vec> pts = PointsOf(f, g0);
  std::set<Subspace> level;
  for (const Vec& p : pts) level.insert(PointSubspace(f, p));
  for (int d = 1; d <= dim; ++d) {
    std::set<Subspace> next;
    for (const Subspace& s : level)
      for (const Vec& p : pts)
        if (!Contains(f, s, p)) next.insert(Span(f, s, PointSubspace(f, p)));
    level = std::move(next);
  }
  return *level.begin();
}

std::vector<int> Pencil(const PolarSpace& space, const Subspace& v) {
  Require(v.dim() == space.rank() - 2, "pencil vertex must have dimension rank - 2");
  Require(IsTotallySingular(space.form(), v), "pencil vertex is not totally singular");
  return space.generators_through(v);
}

namespace {

bool IsHyperbolicSolidSection(const Section& sec) {
  return sec.type.recognized && !sec.type.hermitian && sec.type.vertex_dim == -1 &&
         sec.type.base_kind == FormKind::kHyperbolic && sec.type.base_dim == 3;
}

bool IsQ4Section(const Section& sec) {
  return sec.type.recognized && !sec.type.hermitian && sec.type.vertex_dim == -1 &&
         sec.type.base_kind == FormKind::kParabolic && sec.type.base_dim == 4;
}

}  // namespace

Ruling RulingSpread(const PolarSpace& space, int which, const std::optional<Subspace>& hyperplane) {
  Require(which == 0 || which == 1, "ruling must be 0 or 1");
  Require(space.rank() == 2, "rulings live in rank-2 spaces");
  Ruling out;
  std::vector<int> lines;
  if (space.spec().kind == SpaceKind::kHyperbolic && space.ambient_dim() == 3 && !hyperplane) {
    for (int g = 0; g < space.num_generators(); ++g) lines.push_back(g);
  } else {
    const Field& f = space.field();
    if (hyperplane) {
      const Section sec = HyperplaneSection(space, *hyperplane);
      Require(IsHyperbolicSolidSection(sec), "hyperplane section is not a Q+(3,q)");
      out.hyperplane = *hyperplane;
      lines = sec.generators;
    } else {
      for (const Subspace& h : AllHyperplanes(f, space.ambient_dim())) {
        const Section sec = HyperplaneSection(space, h);
        if (IsHyperbolicSolidSection(sec)) {
          out.hyperplane = h;
          lines = sec.generators;
          break;
        }
      }
      Require(out.hyperplane.has_value(), "space has no Q+(3,q) hyperplane section", ErrorCode::kUnsupported);
    }
  }
  const auto q1 = static_cast<std::size_t>(space.s()) + 1;
  std::vector<int> a{lines.at(0)};
  std::vector<int> b;
  for (std::size_t i = 1; i < lines.size(); ++i) (space.meets(lines[0], lines[i]) ? b : a).push_back(lines[i]);
  bool grid = a.size() == q1 && b.size() == q1 && IsPartialSpread(space, a) && IsPartialSpread(space, b);
  for (int x : a)
    for (int y : b) grid = grid && space.generator_point_set(x).and_count(space.generator_point_set(y)) == 1;
  Require(grid, "line set has no grid structure");
  out.lines = which == 0 ? a : b;
  return out;
}

SectionCover MakeSectionCover(const PolarSpace& space, const std::optional<Subspace>& hyperplane,
                              const SearchOptions& opts) {
  Require(space.spec().kind == SpaceKind::kElliptic && space.rank() == 2, "section covers need a rank-2 elliptic space");
  const Field& f = space.field();
  std::optional<Section> sec;
  if (hyperplane) {
    sec = HyperplaneSection(space, *hyperplane);
    Require(IsQ4Section(*sec), "hyperplane section is not a nondegenerate Q(4,q)");
  } else {
    for (const Subspace& h : AllHyperplanes(f, space.ambient_dim())) {
      Section s = HyperplaneSection(space, h);
      if (IsQ4Section(s)) {
        sec = std::move(s);
        break;
      }
    }
    Require(sec.has_value(), "space has no Q(4,q) hyperplane section", ErrorCode::kUnsupported);
  }
  std::vector<int> local(space.num_points(), -1);
  for (std::size_t i = 0; i < sec->points.size(); ++i) local[sec->points[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> lines;
  for (int g : sec->generators) {
    std::vector<int> pts;
    for (int p : space.generator_points(g)) pts.push_back(local[p]);
    lines.push_back(std::move(pts));
  }
  SectionCover out;
  out.hyperplane = sec->subspace;
  out.search = MinCover(static_cast<int>(sec->points.size()), lines, opts);
  Require(out.search.complete && !out.search.witnesses.empty(), "no certified minimum cover within budget",
          ErrorCode::kBudgetExceeded);
  for (int l : out.search.witnesses.front()) out.lines.push_back(sec->generators[l]);
  Require(IsBlocking(space, out.lines), "section cover is not blocking", ErrorCode::kCheckFailed);
  return out;
}

ConeExample MakeConeExample(const SpacePtr& space, ConeRow row, const std::optional<Subspace>& vertex,
                            const SearchOptions& opts) {
  const PolarSpace& sp = *space;
  Require(sp.spec().kind == RowSpaceKind(row), "row " + ToString(row) + " does not apply to " + sp.name());
  const int d = RowVertexDim(row, sp.rank());
  Require(d >= -1, "row " + ToString(row) + " needs a larger rank");
  ConeExample ex;
  ex.row = row;
  ex.vertex = vertex ? *vertex : DefaultVertex(sp, d);
  Require(ex.vertex.length() == sp.form().length(), "vertex ambient mismatch");
  Require(ex.vertex.dim() == d, "vertex must have dimension " + std::to_string(d));
  Require(IsTotallySingular(sp.form(), ex.vertex), "vertex is not totally singular");

  const QuotientChain chain = QuotientAtSubspace(space, ex.vertex);
  const PolarSpace& base = *chain.space();
  switch (row) {
    case ConeRow::kConicPencil:
    case ConeRow::kEllipticPencil:
    case ConeRow::kHermitianPencil:
      Require(base.rank() == 1, "pencil base must have rank 1", ErrorCode::kCheckFailed);
      for (int g = 0; g < base.num_generators(); ++g) ex.base_members.push_back(g);
      break;
    case ConeRow::kQplusSpread:
      ex.base_members = RulingSpread(base, 0).lines;
      break;
    case ConeRow::kQ4Cover:
      ex.base_members = MakeSectionCover(base, std::nullopt, opts).lines;
      break;
  }
  for (int b : ex.base_members) ex.members.push_back(chain.LiftGenerator(b));
  std::sort(ex.members.begin(), ex.members.end());
  Require(IsBlocking(sp, ex.members), "cone example is not blocking", ErrorCode::kCheckFailed);
  Require(IsMinimal(sp, ex.members), "cone example is not minimal", ErrorCode::kCheckFailed);
  if (d == sp.rank() - 2)
    Require(ex.members == sp.generators_through(ex.vertex), "pencil row differs from the pencil", ErrorCode::kCheckFailed);
  return ex;
}

HyperplaneCheck CheckConeCoverHyperplanes(const PolarSpace& space, ConeRow row, const std::vector<int>& members) {
  Require(!members.empty(), "empty cover");
  const Field& f = space.field();
  const long long q = space.spec().q;
  HyperplaneCheck hc;
  switch (row) {
    case ConeRow::kConicPencil:
    case ConeRow::kQplusSpread: hc.bound = q - 1; break;
    case ConeRow::kEllipticPencil:
    case ConeRow::kQ4Cover: hc.bound = q * q - q; break;
    case ConeRow::kHermitianPencil: hc.bound = q * q * q - q; break;
  }
  Subspace span(space.form().length());
  for (int m : members) span = Span(f, span, space.generator(m));
  hc.min_outside = static_cast<long long>(members.size());
  for (const Subspace& t : HyperplanesOf(f, span)) {
    ++hc.hyperplanes;
    long long outside = 0;
    for (int m : members)
      if (!IsSubspaceOf(f, space.generator(m), t)) ++outside;
    if (!hc.worst || outside < hc.min_outside) {
      hc.min_outside = outside;
      hc.worst = t;
    }
  }
  hc.passed = hc.min_outside >= hc.bound;
  return hc;
}

}  // namespace polarblock
