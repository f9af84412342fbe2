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

#include "polarblock/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polarblock/error.hpp"

namespace polarblock {

BlockingSet::BlockingSet(SpacePtr space, std::vector<int> members)
    : space_(std::move(space)), members_(std::move(members)) {
  Require(space_ != nullptr, "blocking set needs a space");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    Require(members_[i] >= 0 && members_[i] < space_->num_generators(),
            "generator index " + std::to_string(members_[i]) + " out of range");
    Require(i == 0 || members_[i] != members_[i - 1], "duplicate generator index " + std::to_string(members_[i]));
  }
}

bool BlockingSet::contains(int g) const { return std::binary_search(members_.begin(), members_.end(), g); }

Bitset BlockingSet::member_bits() const {
  Bitset b(static_cast<std::size_t>(space_->num_generators()));
  for (int m : members_) b.set(static_cast<std::size_t>(m));
  return b;
}

long long BlockingSet::delta() const { return static_cast<long long>(size()) - static_cast<long long>(space_->t()) - 1; }

namespace {

Bitset Members(const PolarSpace& space, const std::vector<int>& members) {
  Bitset b(static_cast<std::size_t>(space.num_generators()));
  for (int m : members) {
    Require(m >= 0 && m < space.num_generators(), "generator index out of range");
    b.set(static_cast<std::size_t>(m));
  }
  return b;
}

// Number of members meeting each generator.
std::vector<int> MeetCounts(const PolarSpace& space, const std::vector<int>& members) {
  std::vector<int> cnt(space.num_generators(), 0);
  for (int m : members) space.meets(m).for_each([&](std::size_t g) { ++cnt[g]; });
  return cnt;
}

Bitset CoveredPoints(const PolarSpace& space, const std::vector<int>& members) {
  Bitset c(static_cast<std::size_t>(space.num_points()));
  for (int m : members) c |= space.generator_point_set(m);
  return c;
}

}  // namespace

bool IsBlocking(const PolarSpace& space, const std::vector<int>& members) {
  Bitset hit(static_cast<std::size_t>(space.num_generators()));
  for (int m : members) hit |= space.meets(m);
  return hit.count() == static_cast<std::size_t>(space.num_generators());
}

std::vector<int> EssentialElements(const PolarSpace& space, const std::vector<int>& members) {
  const Bitset in_l = Members(space, members);
  const std::vector<int> cnt = MeetCounts(space, members);
  std::vector<int> out;
  for (int m : members) {
    bool essential = false;
    space.meets(m).for_each([&](std::size_t g) {
      if (!essential && !in_l.test(g) && cnt[g] == 1) essential = true;
    });
    if (essential) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool IsMinimal(const PolarSpace& space, const std::vector<int>& members) {
  return EssentialElements(space, members).size() == members.size();
}

bool IsCover(const PolarSpace& space, const std::vector<int>& members) {
  return CoveredPoints(space, members).count() == static_cast<std::size_t>(space.num_points());
}

bool IsPartialSpread(const PolarSpace& space, const std::vector<int>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (space.meets(members[i], members[j])) return false;
  return true;
}

bool IsSpread(const PolarSpace& space, const std::vector<int>& members) {
  return IsPartialSpread(space, members) && IsCover(space, members);
}

bool IsMaximalPartialSpread(const PolarSpace& space, const std::vector<int>& members) {
  return IsPartialSpread(space, members) && IsBlocking(space, members);
}

std::vector<int> StripInessential(const PolarSpace& space, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  Require(IsBlocking(space, members), "cannot strip a set that is not blocking");
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::vector<int> rest = members;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (IsBlocking(space, rest)) {
        members = std::move(rest);
        changed = true;
        break;
      }
    }
  }
  return members;
}

CoverageProfile ComputeCoverage(const PolarSpace& space, const std::vector<int>& members) {
  CoverageProfile pr;
  pr.size = static_cast<int>(members.size());
  pr.delta = pr.size - static_cast<long long>(space.t()) - 1;
  pr.covered = CoveredPoints(space, members);
  pr.weight.assign(space.num_points(), 0);
  for (int m : members)
    for (int p : space.generator_points(m)) ++pr.weight[p];
  for (int p = 0; p < space.num_points(); ++p) {
    if (pr.weight[p] > 0) pr.excess += pr.weight[p] - 1;
    else pr.holes.push_back(p);
  }
  const long long expect = static_cast<long long>(pr.size) * space.points_per_generator() - pr.excess;
  Require(expect == pr.covered_count(), "covered-point identity failed", ErrorCode::kCheckFailed);

  pr.rank2 = space.rank() == 2;
  if (!pr.rank2) return pr;

  const Bitset in_l = Members(space, members);
  const std::vector<int> cnt = MeetCounts(space, members);
  const auto s = static_cast<std::size_t>(space.s());
  pr.b.assign(members.size() + 1, 0);
  pr.b_tilde.assign(s + 2, 0);
  for (int g = 0; g < space.num_generators(); ++g) {
    if (in_l.test(g)) continue;
    ++pr.b[cnt[g]];
    ++pr.b_tilde[space.generator_point_set(g).and_count(pr.covered)];
  }
  pr.hole_b.reserve(pr.holes.size());
  for (int x : pr.holes) {
    std::vector<long long> hist(members.size() + 1, 0);
    for (int g : space.point_generators(x)) ++hist[cnt[g]];
    pr.hole_b.push_back(std::move(hist));
  }
  return pr;
}

bool Section2Report::all_passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

Section2Report CheckSection2Identities(const PolarSpace& space, const std::vector<int>& members) {
  Section2Report rep;
  if (space.rank() != 2) {
    rep.reason = "rank-2 spaces only";
    return rep;
  }
  if (!IsBlocking(space, members)) {
    rep.reason = "set is not blocking";
    return rep;
  }
  const auto s = static_cast<long long>(space.s());
  const auto t = static_cast<long long>(space.t());
  const CoverageProfile pr = ComputeCoverage(space, members);
  rep.delta = pr.delta;
  if (!(pr.delta < s - 1)) {
    rep.reason = "delta = " + std::to_string(pr.delta) + " is not below s - 1 = " + std::to_string(s - 1);
    return rep;
  }
  rep.applicable = true;
  const long long d = pr.delta;
  auto b_at = [](const std::vector<long long>& v, long long i) -> long long {
    return (i >= 0 && i < static_cast<long long>(v.size())) ? v[static_cast<std::size_t>(i)] : 0;
  };

  {  // (a)
    CheckItem it{"a", true, ""};
    for (std::size_t k = 0; k < pr.holes.size() && it.passed; ++k) {
      long long sum = 0;
      for (std::size_t i = 0; i < pr.hole_b[k].size(); ++i) sum += pr.hole_b[k][i] * (static_cast<long long>(i) - 1);
      long long excess = 0;
      space.collinear(pr.holes[k]).for_each([&](std::size_t p) {
        if (pr.weight[p] > 0) excess += pr.weight[p] - 1;
      });
      if (sum != d || excess > d) {
        it.passed = false;
        it.detail = "hole " + std::to_string(pr.holes[k]) + ": sum b_i(X)(i-1) = " + std::to_string(sum) +
                    ", perp excess = " + std::to_string(excess) + ", delta = " + std::to_string(d);
      }
    }
    if (it.passed && pr.holes.empty()) it.detail = "no holes";
    rep.items.push_back(it);
  }
  {  // (b)
    CheckItem it{"b", true, ""};
    if (b_at(pr.b, 0) != 0 || b_at(pr.b_tilde, 0) != 0) {
      it.passed = false;
      it.detail = "b_0 = " + std::to_string(b_at(pr.b, 0)) + ", b~_0 = " + std::to_string(b_at(pr.b_tilde, 0));
    }
    for (long long i = d + 2; i < s + 1 && it.passed; ++i) {
      if (b_at(pr.b, i) != 0 || b_at(pr.b_tilde, i) != 0) {
        it.passed = false;
        it.detail = "b_" + std::to_string(i) + " = " + std::to_string(b_at(pr.b, i)) + ", b~_" + std::to_string(i) +
                    " = " + std::to_string(b_at(pr.b_tilde, i));
      }
    }
    const Bitset in_l = Members(space, members);
    const std::vector<int> cnt = MeetCounts(space, members);
    for (int g = 0; g < space.num_generators() && it.passed; ++g) {
      if (in_l.test(g)) continue;
      if (space.generator_point_set(g).is_subset_of(pr.covered)) continue;
      if (cnt[g] > d + 1) {
        it.passed = false;
        it.detail = "line " + std::to_string(g) + " leaves M but meets " + std::to_string(cnt[g]) + " members";
      }
    }
    rep.items.push_back(it);
  }
  {  // (c)
    long long lhs = 0;
    long long rhs = 0;
    for (long long i = 2; i <= d + 1; ++i) {
      lhs += b_at(pr.b_tilde, i) * (i - 1);
      rhs += b_at(pr.b, i) * (i - 1);
    }
    CheckItem it{"c", lhs <= rhs, ""};
    it.detail = std::to_string(lhs) + " <= " + std::to_string(rhs);
    rep.items.push_back(it);
  }
  {  // (e)
    long long acc = 0;
    for (long long i = 1; i <= d + 1; ++i) acc += b_at(pr.b, i) * (i - 1);
    const long long lhs = (s - d) * acc;
    const long long rhs = (s * t - t - d) * (s + 1) * d + pr.excess * d;
    CheckItem it{"e", lhs <= rhs, ""};
    it.detail = std::to_string(lhs) + " <= " + std::to_string(rhs);
    rep.items.push_back(it);
  }
  {  // (f)
    CheckItem it{"f", true, ""};
    const Bitset in_l = Members(space, members);
    for (int p = 0; p < space.num_points() && it.passed; ++p) {
      long long on_l = 0;
      long long inside = 0;
      for (int g : space.point_generators(p)) {
        if (in_l.test(g)) ++on_l;
        else if (space.generator_point_set(g).is_subset_of(pr.covered)) ++inside;
      }
      if (on_l == static_cast<long long>(space.point_generators(p).size())) continue;
      if (on_l > d + 1 || inside * s >= t + s) {
        it.passed = false;
        it.detail = "point " + std::to_string(p) + ": " + std::to_string(on_l) + " members, " + std::to_string(inside) +
                    " covered non-member lines";
      }
    }
    rep.items.push_back(it);
  }
  return rep;
}

ProjectedSet ProjectBlockingSet(const SpacePtr& space, const std::vector<int>& members, int hole) {
  Require(hole >= 0 && hole < space->num_points(), "hole index out of range");
  for (int m : members)
    Require(!space->generator_point_set(m).test(static_cast<std::size_t>(hole)),
            "point " + std::to_string(hole) + " is covered, not a hole");
  const Field& f = space->field();
  ProjectedSet out{QuotientAtPoint(space, hole), {}};
  const Subspace x = PointSubspace(f, space->point(hole));
  const Subspace xperp = PolarPerp(space->form(), x);
  for (int m : members) {
    const Subspace u = Span(f, Meet(f, space->generator(m), xperp), x);
    const auto idx = out.quotient.space->generator_index(out.quotient.Project(u));
    Require(idx.has_value(), "projected subspace is not a generator of the quotient", ErrorCode::kCheckFailed);
    out.members.push_back(*idx);
  }
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

GqResult CheckGqAxioms(int num_points, const std::vector<std::vector<int>>& lines) {
  GqResult r;
  if (num_points <= 0 || lines.empty()) {
    r.failure = "empty incidence structure";
    return r;
  }
  const std::size_t ls = lines[0].size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != ls) {
      r.failure = "line sizes not constant: line " + std::to_string(i) + " has " + std::to_string(lines[i].size()) +
                  " points, line 0 has " + std::to_string(ls);
      return r;
    }
  }
  if (ls < 2) {
    r.failure = "lines need at least 2 points";
    return r;
  }
  std::vector<std::vector<int>> on(num_points);
  std::vector<Bitset> line_bits;
  line_bits.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Bitset b(static_cast<std::size_t>(num_points));
    for (int p : lines[i]) {
      Require(p >= 0 && p < num_points, "line point index out of range");
      b.set(static_cast<std::size_t>(p));
      on[p].push_back(static_cast<int>(i));
    }
    line_bits.push_back(std::move(b));
  }
  const std::size_t deg = on[0].size();
  for (int p = 0; p < num_points; ++p) {
    if (on[p].size() != deg) {
      r.failure = "point degrees not constant: point " + std::to_string(p) + " is on " + std::to_string(on[p].size()) +
                  " lines, point 0 on " + std::to_string(deg);
      return r;
    }
  }
  if (deg < 2) {
    r.failure = "points need at least 2 lines";
    return r;
  }
  // Two points on at most one line; collinear[x] collects the neighbours.
  std::vector<Bitset> collinear(num_points, Bitset(static_cast<std::size_t>(num_points)));
  for (std::size_t l = 0; l < lines.size(); ++l) {
    for (int a : lines[l]) {
      for (int b : lines[l]) {
        if (a == b) continue;
        if (collinear[a].test(static_cast<std::size_t>(b))) {
          r.failure = "points " + std::to_string(a) + " and " + std::to_string(b) + " lie on two lines";
          return r;
        }
        collinear[a].set(static_cast<std::size_t>(b));
      }
    }
  }
  // With the above, the pairs (Y, m) for X off l correspond to the points of
  // l collinear with X.
  for (int x = 0; x < num_points; ++x) {
    for (std::size_t l = 0; l < lines.size(); ++l) {
      if (line_bits[l].test(static_cast<std::size_t>(x))) continue;
      const std::size_t pairs = line_bits[l].and_count(collinear[x]);
      if (pairs != 1) {
        r.failure = "point " + std::to_string(x) + " and line " + std::to_string(l) + " have " + std::to_string(pairs) +
                    " connecting pairs";
        return r;
      }
    }
  }
  r.ok = true;
  r.s = static_cast<long long>(ls) - 1;
  r.t = static_cast<long long>(deg) - 1;
  return r;
}

std::string ToString(ClassKind kind) {
  switch (kind) {
    case ClassKind::kPencil: return "Pencil";
    case ClassKind::kSubGqSpread: return "SubGQSpread";
    case ClassKind::kCoverOfSectionQ4: return "CoverOfSectionQ4";
    case ClassKind::kConeOverConicPencil: return "ConeOverConicPencil";
    case ClassKind::kConeOverQplus3Spread: return "ConeOverQplus3Spread";
    case ClassKind::kConeOverEllipticPencil: return "ConeOverEllipticPencil";
    case ClassKind::kConeOverQ4Cover: return "ConeOverQ4Cover";
    case ClassKind::kConeOverHermitianPencil: return "ConeOverHermitianPencil";
    case ClassKind::kUnknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<ClassKind> ParseClassKind(const std::string& name) {
  for (int k = 0; k <= static_cast<int>(ClassKind::kUnknown); ++k)
    if (ToString(static_cast<ClassKind>(k)) == name) return static_cast<ClassKind>(k);
  return std::nullopt;
}

namespace {

Subspace MeetAll(const PolarSpace& space, const std::vector<int>& members) {
  if (members.empty()) return Subspace(space.form().length());
  Subspace v = space.generator(members[0]);
  for (std::size_t i = 1; i < members.size(); ++i) v = Meet(space.field(), v, space.generator(members[i]));
  return v;
}

ClassKind PencilKind(const PolarSpace& space) {
  if (space.rank() == 2) return ClassKind::kPencil;
  switch (space.spec().kind) {
    case SpaceKind::kParabolic: return ClassKind::kConeOverConicPencil;
    case SpaceKind::kElliptic: return ClassKind::kConeOverEllipticPencil;
    case SpaceKind::kHermitianEven: return ClassKind::kConeOverHermitianPencil;
    default: return ClassKind::kPencil;
  }
}

bool IsPencilThrough(const PolarSpace& space, const std::vector<int>& members, const Subspace& v) {
  if (v.dim() != space.rank() - 2 || !IsTotallySingular(space.form(), v)) return false;
  if (static_cast<long long>(members.size()) != static_cast<long long>(space.t()) + 1) return false;
  return space.generators_through(v) == members;
}

// Lines fully inside the covered set, as point-index sets local to M.
struct SubGeometry {
  std::vector<int> points;                // M
  std::vector<std::vector<int>> lines;    // local indices
  std::vector<int> line_ids;              // generator indices
};

SubGeometry CoveredSubGeometry(const PolarSpace& space, const std::vector<int>& members) {
  SubGeometry sg;
  const Bitset m = CoveredPoints(space, members);
  std::vector<int> local(space.num_points(), -1);
  m.for_each([&](std::size_t p) {
    local[p] = static_cast<int>(sg.points.size());
    sg.points.push_back(static_cast<int>(p));
  });
  for (int g = 0; g < space.num_generators(); ++g) {
    if (!space.generator_point_set(g).is_subset_of(m)) continue;
    std::vector<int> pts;
    for (int p : space.generator_points(g)) pts.push_back(local[p]);
    sg.lines.push_back(std::move(pts));
    sg.line_ids.push_back(g);
  }
  return sg;
}

bool SubGqSpreadHolds(const PolarSpace& space, const std::vector<int>& members, long long* sub_s, long long* sub_t) {
  if (!IsPartialSpread(space, members)) return false;
  const SubGeometry sg = CoveredSubGeometry(space, members);
  const GqResult gq = CheckGqAxioms(static_cast<int>(sg.points.size()), sg.lines);
  if (!gq.ok) return false;
  const auto s = static_cast<long long>(space.s());
  const auto t = static_cast<long long>(space.t());
  if (gq.s != s || gq.t * s != t) return false;
  if (sub_s) *sub_s = gq.s;
  if (sub_t) *sub_t = gq.t;
  return true;
}

bool IsQ4Section(const Section& sec) {
  return sec.type.recognized && !sec.type.hermitian && sec.type.vertex_dim == -1 &&
         sec.type.base_kind == FormKind::kParabolic && sec.type.base_dim == 4;
}

bool SectionCoverHolds(const PolarSpace& space, const std::vector<int>& members, const Subspace& h) {
  if (space.spec().kind != SpaceKind::kElliptic || space.rank() != 2) return false;
  if (h.dim() != space.ambient_dim() - 1) return false;
  const Section sec = HyperplaneSection(space, h);
  if (!IsQ4Section(sec)) return false;
  for (int m : members)
    if (!std::binary_search(sec.generators.begin(), sec.generators.end(), m)) return false;
  const Bitset cov = CoveredPoints(space, members);
  for (int p : sec.points)
    if (!cov.test(static_cast<std::size_t>(p))) return false;
  return true;
}

ClassLabel ClassifyCore(const SpacePtr& space, const std::vector<int>& members) {
  ClassLabel lab;
  const PolarSpace& sp = *space;
  const Field& f = sp.field();
  const int r = sp.rank();
  const Subspace v = MeetAll(sp, members);
  lab.vertex = v;

  if (IsPencilThrough(sp, members, v)) {
    lab.kind = PencilKind(sp);
    return lab;
  }

  if (r == 2) {
    if (sp.spec().kind == SpaceKind::kElliptic) {
      Subspace h(sp.form().length());
      for (int m : members) h = Span(f, h, sp.generator(m));
      if (SectionCoverHolds(sp, members, h)) {
        lab.kind = ClassKind::kCoverOfSectionQ4;
        lab.hyperplane = h;
        return lab;
      }
    }
    if (SubGqSpreadHolds(sp, members, &lab.sub_s, &lab.sub_t)) {
      lab.kind = ClassKind::kSubGqSpread;
      return lab;
    }
    lab.note = "no pencil, section cover or subquadrangle spread";
    return lab;
  }

  if (v.dim() != r - 3) {
    lab.note = "common intersection has dimension " + std::to_string(v.dim());
    return lab;
  }
  const QuotientChain chain = QuotientAtSubspace(space, v);
  std::vector<int> image;
  for (int m : members) image.push_back(chain.ProjectGenerator(m));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  if (image.size() != members.size() || !IsBlocking(*chain.space(), image)) {
    lab.note = "image in the quotient at the vertex is not a blocking set of the same size";
    return lab;
  }
  const ClassLabel inner = ClassifyCore(chain.space(), image);
  lab.base = ToString(inner.kind);
  lab.base_members = image;
  if (sp.spec().kind == SpaceKind::kParabolic && inner.kind == ClassKind::kSubGqSpread) {
    lab.kind = ClassKind::kConeOverQplus3Spread;
  } else if (sp.spec().kind == SpaceKind::kElliptic && inner.kind == ClassKind::kCoverOfSectionQ4) {
    lab.kind = ClassKind::kConeOverQ4Cover;
    lab.hyperplane = inner.hyperplane;
  } else {
    lab.note = "quotient image classifies as " + lab.base;
  }
  return lab;
}

}  // namespace

ClassLabel Classify(const SpacePtr& space, const std::vector<int>& members) {
  Require(space != nullptr, "null space");
  std::vector<int> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  Require(IsBlocking(*space, sorted), "classify needs a blocking set");
  Require(IsMinimal(*space, sorted), "classify needs a minimal blocking set");
  return ClassifyCore(space, sorted);
}

bool VerifyLabel(const SpacePtr& space, const std::vector<int>& members_in, const ClassLabel& label) {
  const PolarSpace& sp = *space;
  std::vector<int> members = members_in;
  std::sort(members.begin(), members.end());
  const int r = sp.rank();
  switch (label.kind) {
    case ClassKind::kUnknown:
      return true;
    case ClassKind::kPencil:
    case ClassKind::kConeOverConicPencil:
    case ClassKind::kConeOverEllipticPencil:
    case ClassKind::kConeOverHermitianPencil:
      return label.kind == PencilKind(sp) && IsPencilThrough(sp, members, label.vertex);
    case ClassKind::kSubGqSpread: {
      long long s2 = 0;
      long long t2 = 0;
      return r == 2 && SubGqSpreadHolds(sp, members, &s2, &t2) && s2 == label.sub_s && t2 == label.sub_t;
    }
    case ClassKind::kCoverOfSectionQ4:
      return label.hyperplane.has_value() && SectionCoverHolds(sp, members, *label.hyperplane);
    case ClassKind::kConeOverQplus3Spread:
    case ClassKind::kConeOverQ4Cover: {
      const bool want_q = label.kind == ClassKind::kConeOverQplus3Spread;
      if (sp.spec().kind != (want_q ? SpaceKind::kParabolic : SpaceKind::kElliptic)) return false;
      if (label.vertex.dim() != r - 3 || !IsTotallySingular(sp.form(), label.vertex)) return false;
      for (int m : members)
        if (!IsSubspaceOf(sp.field(), label.vertex, sp.generator(m))) return false;
      const QuotientChain chain = QuotientAtSubspace(space, label.vertex);
      std::vector<int> image;
      for (int m : members) image.push_back(chain.ProjectGenerator(m));
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
      if (image != label.base_members) return false;
      const ClassLabel inner = ClassifyCore(chain.space(), image);
      const ClassKind want = want_q ? ClassKind::kSubGqSpread : ClassKind::kCoverOfSectionQ4;
      return inner.kind == want && VerifyLabel(chain.space(), image, inner);
    }
  }
  return false;
}

bool Threshold::Admits(long long delta) const {
  if (!applicable || delta < 0) return false;
  if (kind == SpaceKind::kElliptic) {
    // 2 delta <= 3q - sqrt(D)  <=>  3q - 2 delta >= 0 and D <= (3q - 2 delta)^2
    const long long lhs = 3LL * q - 2 * delta;
    const long long disc = 5LL * q * q + 2LL * q + 1;
    return lhs >= 0 && disc <= lhs * lhs;
  }
  return strict ? static_cast<double>(delta) < value : static_cast<double>(delta) <= value;
}

Threshold TheoremThreshold(SpaceKind kind, int q, const Epsilon& eps) {
  Require(q >= 2, "q must be >= 2");
  Threshold th;
  th.kind = kind;
  th.q = q;
  switch (kind) {
    case SpaceKind::kElliptic:
      th.applicable = true;
      th.formula = "delta <= (3q - sqrt(5q^2 + 2q + 1)) / 2";
      th.value = (3.0 * q - std::sqrt(5.0 * q * q + 2.0 * q + 1.0)) / 2.0;
      th.strict = false;
      break;
    case SpaceKind::kHermitianEven:
      th.formula = "delta < q - 3 (q > 3)";
      th.value = q - 3.0;
      th.strict = true;
      th.applicable = q > 3;
      if (!th.applicable) th.note = "no classification claim for q in {2, 3}";
      break;
    case SpaceKind::kParabolic:
      th.formula = "delta < min{(q - 1) / 2, epsilon}";
      th.strict = true;
      th.value = (q - 1) / 2.0;
      if (!eps.known) {
        th.note = "epsilon unknown for q = " + std::to_string(q);
        break;
      }
      th.applicable = true;
      if (eps.exists && static_cast<double>(eps.value) < th.value) th.value = static_cast<double>(eps.value);
      th.note = eps.exists ? "epsilon = " + std::to_string(eps.value) : "no non-trivial planar blocking set";
      if (eps.symbolic) th.note += " (prime formula)";
      break;
    default:
      Fail(ErrorCode::kUnsupported, "no theorem threshold for kind " + KindName(kind));
  }
  for (long long d = 0; th.Admits(d); ++d) th.max_delta = static_cast<int>(d);
  return th;
}

std::optional<double> MaximalPartialSpreadBound(SpaceKind kind, int rank, int q, const Epsilon& eps) {
  if (rank < 3) return std::nullopt;
  const double qd = q;
  switch (kind) {
    case SpaceKind::kElliptic:
      return qd * qd + (3.0 * qd - std::sqrt(5.0 * qd * qd + 2.0 * qd + 1.0)) / 2.0;
    case SpaceKind::kParabolic: {
      if (!eps.known) return std::nullopt;
      double d0 = (qd - 1.0) / 2.0;
      if (eps.exists) d0 = std::min(d0, static_cast<double>(eps.value));
      return qd + 1.0 + d0;
    }
    case SpaceKind::kHermitianEven:
      return qd * qd * qd + qd - 2.0;
    default:
      return std::nullopt;
  }
}

}  // namespace polarblock
