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

#include "polarblock/polar_space.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

#include "polarblock/error.hpp"

namespace polarblock {

std::string KindName(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::kParabolic: return "q";
    case SpaceKind::kElliptic: return "qminus";
    case SpaceKind::kHyperbolic: return "qplus";
    case SpaceKind::kHermitianEven: return "h";
    case SpaceKind::kHermitianOdd: return "h-odd";
  }
  return "?";
}

std::optional<SpaceKind> ParseKindName(const std::string& name) {
  if (name == "q") return SpaceKind::kParabolic;
  if (name == "qminus") return SpaceKind::kElliptic;
  if (name == "qplus") return SpaceKind::kHyperbolic;
  if (name == "h") return SpaceKind::kHermitianEven;
  if (name == "h-odd") return SpaceKind::kHermitianOdd;
  return std::nullopt;
}

FormKind FormKindOf(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::kParabolic: return FormKind::kParabolic;
    case SpaceKind::kElliptic: return FormKind::kElliptic;
    case SpaceKind::kHyperbolic: return FormKind::kHyperbolic;
    case SpaceKind::kHermitianEven:
    case SpaceKind::kHermitianOdd: return FormKind::kHermitian;
  }
  return FormKind::kParabolic;
}

int AmbientDim(const SpaceSpec& spec) {
  switch (spec.kind) {
    case SpaceKind::kParabolic: return 2 * spec.rank;
    case SpaceKind::kElliptic: return 2 * spec.rank + 1;
    case SpaceKind::kHyperbolic: return 2 * spec.rank - 1;
    case SpaceKind::kHermitianEven: return 2 * spec.rank;
    case SpaceKind::kHermitianOdd: return 2 * spec.rank - 1;
  }
  return 0;
}

std::string SpaceName(const SpaceSpec& spec) {
  const int n = AmbientDim(spec);
  const std::string nq = std::to_string(n) + "," +
                         std::to_string(FormKindOf(spec.kind) == FormKind::kHermitian ? spec.q * spec.q : spec.q) +
                         ")";
  switch (spec.kind) {
    case SpaceKind::kParabolic: return "Q(" + nq;
    case SpaceKind::kElliptic: return "Q-(" + nq;
    case SpaceKind::kHyperbolic: return "Q+(" + nq;
    case SpaceKind::kHermitianEven:
    case SpaceKind::kHermitianOdd: return "H(" + nq;
  }
  return "?";
}

std::uint64_t ParamS(const SpaceSpec& spec) {
  const auto q = static_cast<std::uint64_t>(spec.q);
  return FormKindOf(spec.kind) == FormKind::kHermitian ? q * q : q;
}

std::uint64_t ParamT(const SpaceSpec& spec) {
  const auto q = static_cast<std::uint64_t>(spec.q);
  switch (spec.kind) {
    case SpaceKind::kParabolic: return q;
    case SpaceKind::kElliptic: return q * q;
    case SpaceKind::kHyperbolic: return 1;
    case SpaceKind::kHermitianEven: return q * q * q;
    case SpaceKind::kHermitianOdd: return q;
  }
  return 0;
}

namespace {

FieldPtr FieldOfOrder(int order) {
  for (int p = 2; p <= order; ++p) {
    if (!IsPrime(p) || order % p != 0) continue;
    int h = 0;
    int m = order;
    while (m % p == 0) {
      m /= p;
      ++h;
    }
    Require(m == 1, "q = " + std::to_string(order) + " is not a prime power");
    return Field::Make(p, h);
  }
  Fail(ErrorCode::kInvalidArgument, "q = " + std::to_string(order) + " is not a prime power");
}

// Coefficients c with B(a, y) = 0 <=> c . y = 0.
Vec ZeroTestFunctional(const Form& form, const Vec& a) {
  const Field& f = form.field();
  Vec c(form.length(), 0);
  Vec e(form.length(), 0);
  for (int j = 0; j < form.length(); ++j) {
    e[j] = 1;
    const Elem b = form.Polarize(a, e);
    c[j] = form.kind() == FormKind::kHermitian ? f.conjugate(b) : b;
    e[j] = 0;
  }
  return c;
}

std::uint64_t Fnv1a(std::uint64_t h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::shared_ptr<const PolarSpace> PolarSpace::Build(const SpaceSpec& spec, const BuildOptions& opts) {
  Require(spec.rank >= 1, "rank must be >= 1", ErrorCode::kUnsupported);
  Require(spec.q >= 2, "q must be >= 2");
  const bool herm = FormKindOf(spec.kind) == FormKind::kHermitian;
  FieldPtr field = FieldOfOrder(herm ? spec.q * spec.q : spec.q);
  return FromForm(spec, Form::Standard(FormKindOf(spec.kind), AmbientDim(spec), std::move(field)), opts);
}

std::shared_ptr<const PolarSpace> PolarSpace::FromForm(const SpaceSpec& spec, Form form, const BuildOptions& opts) {
  Require(spec.rank >= 1, "rank must be >= 1", ErrorCode::kUnsupported);
  Require(form.ambient_dim() == AmbientDim(spec), "form dimension does not match " + SpaceName(spec));
  std::shared_ptr<PolarSpace> s(new PolarSpace(spec, std::move(form)));
  s->Enumerate(opts);
  return s;
}

void PolarSpace::Enumerate(const BuildOptions& opts) {
  const Field& f = field();
  const int q = f.q();

  for (auto& v : EnumeratePgPoints(ambient_dim(), f))
    if (form_.IsSingular(v)) points_.push_back(std::move(v));
  const int np = num_points();
  Require(np > 0, SpaceName(spec_) + " has no singular points", ErrorCode::kUnsupported);
  for (int i = 0; i < np; ++i) point_lookup_.emplace(PackVec(points_[i], q), i);

  std::vector<Vec> fns(np);
  for (int i = 0; i < np; ++i) fns[i] = ZeroTestFunctional(form_, points_[i]);
  collinear_.assign(np, Bitset(np));
  for (int i = 0; i < np; ++i) {
    collinear_[i].set(i);
    for (int j = i + 1; j < np; ++j) {
      Elem acc = 0;
      for (int k = 0; k < form_.length(); ++k) acc = f.add(acc, f.mul(fns[i][k], points_[j][k]));
      if (acc == 0) {
        collinear_[i].set(j);
        collinear_[j].set(i);
      }
    }
  }

  struct Node {
    Subspace sub;
    Bitset pts;
    Bitset cand;
    int max_point;
  };
  std::vector<Node> level;
  level.reserve(np);
  for (int i = 0; i < np; ++i) {
    Bitset pts(np);
    pts.set(i);
    level.push_back({PointSubspace(f, points_[i]), std::move(pts), collinear_[i], i});
  }
  for (int d = 1; d < rank(); ++d) {
    std::vector<Node> next;
    std::unordered_set<std::string> seen;
    for (const Node& u : level) {
      for (std::size_t c = u.cand.next(static_cast<std::size_t>(u.max_point) + 1); c < u.cand.size();
           c = u.cand.next(c + 1)) {
        if (u.pts.test(c)) continue;
        Subspace w = Span(f, u.sub, PointSubspace(f, points_[c]));
        if (!seen.insert(w.key()).second) continue;
        Bitset pts(np);
        int maxp = 0;
        for (const auto& pv : PointsOf(f, w)) {
          const auto idx = point_index(pv);
          Require(idx.has_value(), "extension left the polar space", ErrorCode::kCheckFailed);
          pts.set(static_cast<std::size_t>(*idx));
          maxp = std::max(maxp, *idx);
        }
        next.push_back({std::move(w), std::move(pts), u.cand & collinear_[c], maxp});
        Require(next.size() <= opts.max_generators,
                "enumeration budget exceeded for " + SpaceName(spec_), ErrorCode::kBudgetExceeded);
      }
    }
    level = std::move(next);
  }
  Require(!level.empty(), SpaceName(spec_) + " has no subspaces of the stated rank", ErrorCode::kUnsupported);
  for (const Node& g : level) {
    Bitset ext = g.cand;
    ext.and_not(g.pts);
    Require(ext.none(), "form has rank above " + std::to_string(rank()), ErrorCode::kUnsupported);
  }
  Require(level.size() <= opts.max_generators, "enumeration budget exceeded for " + SpaceName(spec_),
          ErrorCode::kBudgetExceeded);

  std::sort(level.begin(), level.end(), [](const Node& a, const Node& b) { return a.sub < b.sub; });
  const int ng = static_cast<int>(level.size());
  generators_.reserve(ng);
  gen_points_.resize(ng);
  gen_point_bits_.reserve(ng);
  point_gens_.assign(np, {});
  for (int g = 0; g < ng; ++g) {
    generator_lookup_.emplace(level[g].sub.key(), g);
    gen_points_[g] = level[g].pts.to_indices();
    for (int p : gen_points_[g]) point_gens_[p].push_back(g);
    gen_point_bits_.push_back(std::move(level[g].pts));
    generators_.push_back(std::move(level[g].sub));
  }
  meets_.assign(ng, Bitset());
  meets_once_ = std::make_unique<std::once_flag[]>(static_cast<std::size_t>(ng));
  if (ng <= kDenseMeetLimit)
    for (int g = 0; g < ng; ++g) meets(g);

  std::uint64_t h = 1469598103934665603ULL;
  const int header[] = {static_cast<int>(spec_.kind), spec_.rank, spec_.q, ambient_dim(), q};
  h = Fnv1a(h, header, sizeof(header));
  h = Fnv1a(h, form_.matrix().data(), form_.matrix().size() * sizeof(Elem));
  for (const auto& p : points_) h = Fnv1a(h, p.data(), p.size() * sizeof(Elem));
  for (const auto& g : generators_) {
    const std::string k = g.key();
    h = Fnv1a(h, k.data(), k.size());
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  hash_ = buf;
}

const Bitset& PolarSpace::meets(int g) const {
  std::call_once(meets_once_[g], [this, g] {
    Bitset row(generators_.size());
    for (int p : gen_points_[g])
      for (int h : point_gens_[p]) row.set(static_cast<std::size_t>(h));
    meets_[g] = std::move(row);
  });
  return meets_[g];
}

std::optional<int> PolarSpace::point_index(const Vec& v) const {
  if (static_cast<int>(v.size()) != form_.length()) return std::nullopt;
  Vec n = v;
  if (!NormalizePoint(field(), n)) return std::nullopt;
  auto it = point_lookup_.find(PackVec(n, field().q()));
  if (it == point_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> PolarSpace::generator_index(const Subspace& g) const {
  auto it = generator_lookup_.find(g.key());
  if (it == generator_lookup_.end()) return std::nullopt;
  return it->second;
}

bool PolarSpace::is_regular() const {
  if (point_gens_.empty()) return false;
  const std::size_t k = point_gens_[0].size();
  for (const auto& pg : point_gens_)
    if (pg.size() != k) return false;
  return static_cast<std::uint64_t>(num_points()) * k ==
         static_cast<std::uint64_t>(num_generators()) * static_cast<std::uint64_t>(points_per_generator());
}

std::vector<int> PolarSpace::points_in(const Subspace& s) const {
  std::vector<int> out;
  for (int i = 0; i < num_points(); ++i)
    if (Contains(field(), s, points_[i])) out.push_back(i);
  return out;
}

std::vector<int> PolarSpace::generators_through(const Subspace& s) const {
  std::vector<int> out;
  for (int g = 0; g < num_generators(); ++g)
    if (IsSubspaceOf(field(), s, generators_[g])) out.push_back(g);
  return out;
}

std::vector<int> PolarSpace::generators_inside(const Subspace& s) const {
  std::vector<int> out;
  for (int g = 0; g < num_generators(); ++g)
    if (IsSubspaceOf(field(), generators_[g], s)) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// Quotients

Subspace Quotient::Project(const Subspace& u) const {
  const Field& f = parent->field();
  const Vec& p = parent->point(point);
  Require(Contains(f, u, p), "subspace does not contain the quotient point");
  const Subspace pp = PolarPerp(parent->form(), PointSubspace(f, p));
  Require(IsSubspaceOf(f, u, pp), "subspace is not inside the perp of the quotient point");
  const Subspace m = Meet(f, u, complement);
  std::vector<Vec> rows;
  for (int i = 0; i < m.rank(); ++i) rows.push_back(CoordinatesIn(complement, m.row(i)));
  return Canonicalize(f, rows, complement.rank());
}

Subspace Quotient::Lift(const Subspace& b) const {
  const Field& f = parent->field();
  Require(b.length() == complement.rank(), "subspace is not in quotient coordinates");
  std::vector<Vec> rows{parent->point(point)};
  for (int i = 0; i < b.rank(); ++i) rows.push_back(FromCoordinates(f, complement, b.row(i)));
  return Canonicalize(f, rows, parent->form().length());
}

int Quotient::ProjectGenerator(int parent_generator) const {
  const auto idx = space->generator_index(Project(parent->generator(parent_generator)));
  Require(idx.has_value(), "projection is not a generator of the quotient", ErrorCode::kCheckFailed);
  return *idx;
}

int Quotient::LiftGenerator(int quotient_generator) const {
  const auto idx = parent->generator_index(Lift(space->generator(quotient_generator)));
  Require(idx.has_value(), "lift is not a generator of the parent", ErrorCode::kCheckFailed);
  return *idx;
}

Quotient QuotientAtPoint(const SpacePtr& space, int point) {
  Require(space->rank() >= 2, "quotient needs rank >= 2", ErrorCode::kUnsupported);
  Require(point >= 0 && point < space->num_points(), "point index out of range");
  const Field& f = space->field();
  const Vec& p = space->point(point);
  int partner = -1;
  for (int j = 0; j < space->num_points(); ++j) {
    if (!space->collinear(point).test(j)) {
      partner = j;
      break;
    }
  }
  Require(partner >= 0, "no point opposite to the quotient point", ErrorCode::kCheckFailed);
  const std::vector<Vec> hyp = {p, space->point(partner)};
  Quotient qt;
  qt.parent = space;
  qt.point = point;
  qt.complement = PolarPerp(space->form(), Canonicalize(f, hyp, space->form().length()));
  SpaceSpec spec = space->spec();
  spec.rank -= 1;
  qt.space = PolarSpace::FromForm(spec, RestrictForm(space->form(), qt.complement, space->form().kind()));
  return qt;
}

Subspace QuotientChain::Project(const Subspace& u) const {
  Subspace cur = u;
  for (const auto& st : steps) cur = st.Project(cur);
  return cur;
}

Subspace QuotientChain::Lift(const Subspace& b) const {
  Subspace cur = b;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) cur = it->Lift(cur);
  return cur;
}

int QuotientChain::ProjectGenerator(int root_generator) const {
  const auto idx = space()->generator_index(Project(root->generator(root_generator)));
  Require(idx.has_value(), "projection is not a generator of the quotient", ErrorCode::kCheckFailed);
  return *idx;
}

int QuotientChain::LiftGenerator(int final_generator) const {
  const auto idx = root->generator_index(Lift(space()->generator(final_generator)));
  Require(idx.has_value(), "lift is not a generator", ErrorCode::kCheckFailed);
  return *idx;
}

QuotientChain QuotientAtSubspace(const SpacePtr& space, const Subspace& vertex) {
  Require(IsTotallySingular(space->form(), vertex), "vertex is not totally singular");
  Require(vertex.dim() <= space->rank() - 2, "vertex too large for a quotient");
  QuotientChain chain;
  chain.root = space;
  chain.vertex = vertex;
  Subspace v = vertex;
  SpacePtr cur = space;
  while (!v.empty()) {
    Vec p(v.row(0).begin(), v.row(0).end());
    const auto idx = cur->point_index(p);
    Require(idx.has_value(), "vertex point is not singular", ErrorCode::kCheckFailed);
    Quotient st = QuotientAtPoint(cur, *idx);
    v = st.Project(v);
    cur = st.space;
    chain.steps.push_back(std::move(st));
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Sections

namespace {

std::uint64_t IPow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Point count of a nondegenerate quadric of the given kind in PG(m, q).
std::uint64_t QuadricCount(int m, std::uint64_t q, FormKind kind) {
  if (m < 0) return 0;
  if (kind == FormKind::kParabolic) return Theta(m - 1, q);
  const int r = (m + 1) / 2;
  if (kind == FormKind::kHyperbolic) return (IPow(q, r) - 1) * (IPow(q, r - 1) + 1) / (q - 1);
  return (IPow(q, r) + 1) * (IPow(q, r - 1) - 1) / (q - 1);
}

std::uint64_t HermitianCount(int m, std::uint64_t q0) {
  if (m < 0) return 0;
  // (q0^{m+1} - (-1)^{m+1}) (q0^m - (-1)^m) / (q0^2 - 1)
  const auto a = static_cast<long long>(IPow(q0, m + 1)) - ((m + 1) % 2 == 0 ? 1 : -1);
  const auto b = static_cast<long long>(IPow(q0, m)) - (m % 2 == 0 ? 1 : -1);
  return static_cast<std::uint64_t>(a * b / static_cast<long long>(q0 * q0 - 1));
}

SectionType Recognize(const PolarSpace& space, const Subspace& s, std::uint64_t npoints) {
  SectionType t;
  const Field& f = space.field();
  const auto q = static_cast<std::uint64_t>(f.q());
  t.hermitian = !space.form().is_quadratic();
  if (s.empty()) return t;
  const Form restricted = RestrictForm(space.form(), s, space.form().kind());
  const Subspace rad = SingularRadical(restricted);
  t.vertex_dim = rad.dim();
  t.base_dim = s.dim() - rad.rank();
  const std::uint64_t vertex_pts = Theta(t.vertex_dim, q);
  if (npoints < vertex_pts) return t;
  const std::uint64_t scale = IPow(q, rad.rank());
  if ((npoints - vertex_pts) % scale != 0) return t;
  const std::uint64_t base_pts = (npoints - vertex_pts) / scale;

  const std::string fq = std::to_string(f.q());
  std::string base;
  if (t.hermitian) {
    const auto q0 = static_cast<std::uint64_t>(f.subfield_order());
    if (HermitianCount(t.base_dim, q0) != base_pts) return t;
    t.base_kind = FormKind::kHermitian;
    base = "H(" + std::to_string(t.base_dim) + "," + fq + ")";
  } else if (t.base_dim % 2 == 0 || t.base_dim < 0) {
    if (QuadricCount(t.base_dim, q, FormKind::kParabolic) != base_pts) return t;
    t.base_kind = FormKind::kParabolic;
    base = "Q(" + std::to_string(t.base_dim) + "," + fq + ")";
  } else if (QuadricCount(t.base_dim, q, FormKind::kHyperbolic) == base_pts) {
    t.base_kind = FormKind::kHyperbolic;
    base = "Q+(" + std::to_string(t.base_dim) + "," + fq + ")";
  } else if (QuadricCount(t.base_dim, q, FormKind::kElliptic) == base_pts) {
    t.base_kind = FormKind::kElliptic;
    base = "Q-(" + std::to_string(t.base_dim) + "," + fq + ")";
  } else {
    return t;
  }
  t.recognized = true;
  t.label = t.vertex_dim >= 0 ? "pi_" + std::to_string(t.vertex_dim) + " " + base : base;
  return t;
}

}  // namespace

Section SubspaceSection(const PolarSpace& space, const Subspace& s) {
  Require(s.length() == space.form().length(), "ambient mismatch in section");
  const Field& f = space.field();
  Section sec;
  sec.subspace = s;
  sec.points = space.points_in(s);
  sec.generators = space.generators_inside(s);
  if (!s.empty()) {
    const Form restricted = RestrictForm(space.form(), s, space.form().kind());
    const Subspace rad = SingularRadical(restricted);
    std::vector<Vec> rows;
    for (int i = 0; i < rad.rank(); ++i) rows.push_back(FromCoordinates(f, s, rad.row(i)));
    sec.radical = Canonicalize(f, rows, s.length());
  } else {
    sec.radical = Subspace(s.length());
  }
  sec.type = Recognize(space, s, sec.points.size());
  return sec;
}

Section HyperplaneSection(const PolarSpace& space, const Subspace& h) {
  Require(h.dim() == space.ambient_dim() - 1, "hyperplane section needs a subspace of codimension 1");
  return SubspaceSection(space, h);
}

std::vector<Subspace> AllHyperplanes(const Field& f, int ambient_dim) {
  std::vector<Subspace> out;
  for (const auto& fn : EnumeratePgPoints(ambient_dim, f)) out.push_back(Annihilator(f, PointSubspace(f, fn)));
  return out;
}

std::vector<Subspace> HyperplanesOf(const Field& f, const Subspace& s) {
  Require(s.rank() >= 1, "empty subspace has no hyperplanes");
  std::vector<Subspace> out;
  for (const auto& fn : EnumeratePgPoints(s.rank() - 1, f)) {
    const Subspace ker = Annihilator(f, PointSubspace(f, fn));
    std::vector<Vec> rows;
    for (int i = 0; i < ker.rank(); ++i) rows.push_back(FromCoordinates(f, s, ker.row(i)));
    out.push_back(Canonicalize(f, rows, s.length()));
  }
  return out;
}

}  // namespace polarblock
