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

#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "polarblock/error.hpp"
#include "polarblock/polar_space.hpp"

using namespace polarblock;
using oracle::IPow;

namespace {

// Point and generator counts from closed formulas. Exponents are in units of
// the base order q; hermitian spaces use half-integer e, so everything is
// doubled and expressed in powers of q0 = q.
struct Counts {
  std::uint64_t points;
  std::uint64_t generators;
};

Counts ExpectedCounts(SpaceKind kind, int rank, int q) {
  std::uint64_t b;   // q'
  int two_e;         // 2e
  bool herm = kind == SpaceKind::kHermitianEven || kind == SpaceKind::kHermitianOdd;
  switch (kind) {
    case SpaceKind::kHyperbolic: two_e = 0; break;
    case SpaceKind::kParabolic: two_e = 2; break;
    case SpaceKind::kElliptic: two_e = 4; break;
    case SpaceKind::kHermitianOdd: two_e = 1; break;
    default: two_e = 3; break;
  }
  // Work in powers of r0 where q' = r0^2.
  const std::uint64_t r0 = herm ? static_cast<std::uint64_t>(q) : 0;
  auto qpow_half = [&](int twice_exp) -> std::uint64_t {
    if (herm) return IPow(r0, twice_exp);
    return IPow(static_cast<std::uint64_t>(q), twice_exp / 2);
  };
  b = herm ? r0 * r0 : static_cast<std::uint64_t>(q);
  Counts c{};
  c.points = (qpow_half(2 * (rank - 1) + two_e) + 1) * (IPow(b, rank) - 1) / (b - 1);
  c.generators = 1;
  for (int i = 0; i < rank; ++i) c.generators *= qpow_half(2 * i + two_e) + 1;
  return c;
}

}  // namespace

TEST_CASE("generalized quadrangle counts") {
  struct Case {
    SpaceKind kind;
    int q;
    int points;
    int lines;
  };
  for (Case c : {Case{SpaceKind::kParabolic, 2, 15, 15}, Case{SpaceKind::kElliptic, 2, 27, 45},
                 Case{SpaceKind::kHermitianEven, 2, 165, 297}}) {
    const auto sp = PolarSpace::Build({c.kind, 2, c.q});
    CAPTURE(sp->name());
    CHECK(sp->num_points() == c.points);
    CHECK(sp->num_generators() == c.lines);
  }
  for (SpaceKind k : {SpaceKind::kParabolic, SpaceKind::kElliptic, SpaceKind::kHermitianEven}) {
    for (int q : {2, 3}) {
      const auto sp = PolarSpace::Build({k, 2, q});
      const auto s = sp->s(), t = sp->t();
      CAPTURE(sp->name());
      CHECK(static_cast<std::uint64_t>(sp->num_points()) == (s * t + 1) * (s + 1));
      CHECK(static_cast<std::uint64_t>(sp->num_generators()) == (s * t + 1) * (t + 1));
      CHECK(sp->is_regular());
      CHECK(static_cast<std::uint64_t>(sp->points_per_generator()) == s + 1);
      CHECK(static_cast<std::uint64_t>(sp->generators_per_point()) == t + 1);
    }
  }
}

TEST_CASE("counts against closed formulas across kinds and ranks") {
  struct Case {
    SpaceKind kind;
    int rank;
    int q;
  };
  for (Case c : {Case{SpaceKind::kHyperbolic, 2, 2}, Case{SpaceKind::kHyperbolic, 2, 3},
                 Case{SpaceKind::kHyperbolic, 3, 2}, Case{SpaceKind::kParabolic, 2, 4},
                 Case{SpaceKind::kParabolic, 2, 5}, Case{SpaceKind::kParabolic, 3, 2},
                 Case{SpaceKind::kParabolic, 3, 3}, Case{SpaceKind::kElliptic, 2, 4},
                 Case{SpaceKind::kElliptic, 3, 2}, Case{SpaceKind::kHermitianOdd, 2, 2},
                 Case{SpaceKind::kHermitianOdd, 2, 3}, Case{SpaceKind::kHermitianEven, 3, 2},
                 Case{SpaceKind::kParabolic, 4, 2}}) {
    const auto sp = PolarSpace::Build({c.kind, c.rank, c.q});
    CAPTURE(sp->name());
    const Counts want = ExpectedCounts(c.kind, c.rank, c.q);
    CHECK(static_cast<std::uint64_t>(sp->num_points()) == want.points);
    CHECK(static_cast<std::uint64_t>(sp->num_generators()) == want.generators);
    CHECK(sp->is_regular());
    // Double counting of point-generator flags.
    CHECK(static_cast<std::uint64_t>(sp->num_points()) * sp->generators_per_point() ==
          static_cast<std::uint64_t>(sp->num_generators()) * sp->points_per_generator());
  }
  CHECK(PolarSpace::Build({SpaceKind::kParabolic, 3, 2})->num_generators() == 135);
  CHECK(PolarSpace::Build({SpaceKind::kElliptic, 3, 2})->num_generators() == 765);
}

TEST_CASE("hyperbolic lines of PG(3,2) by brute force") {
  const auto f = Field::Make(2, 1);
  const auto pts = EnumeratePgPoints(3, *f);
  auto singular = [](const Vec& v) { return (v[0] * v[1] + v[2] * v[3]) % 2 == 0; };
  std::set<Subspace> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      lines.insert(Span(*f, PointSubspace(*f, pts[i]), PointSubspace(*f, pts[j])));
  REQUIRE(lines.size() == 35);
  std::set<Subspace> singular_lines;
  for (const Subspace& l : lines) {
    bool all = true;
    for (const Vec& v : PointsOf(*f, l)) all = all && singular(v);
    if (all) singular_lines.insert(l);
  }
  CHECK(singular_lines.size() == 6);
  const auto sp = PolarSpace::Build({SpaceKind::kHyperbolic, 2, 2});
  const std::set<Subspace> got(sp->generators().begin(), sp->generators().end());
  CHECK(got == singular_lines);
}

TEST_CASE("generators are totally singular, distinct and sorted") {
  for (SpaceSpec spec : {SpaceSpec{SpaceKind::kParabolic, 2, 3}, SpaceSpec{SpaceKind::kElliptic, 3, 2},
                         SpaceSpec{SpaceKind::kHermitianEven, 2, 2}}) {
    const auto sp = PolarSpace::Build(spec);
    for (int g = 0; g < sp->num_generators(); ++g) {
      const Subspace& gen = sp->generator(g);
      REQUIRE(gen.dim() == spec.rank - 1);
      REQUIRE(IsTotallySingular(sp->form(), gen));
      REQUIRE(sp->generator_index(gen) == g);
      if (g > 0) REQUIRE(sp->generator(g - 1) < gen);
      for (int p : sp->generator_points(g)) REQUIRE(Contains(sp->field(), gen, sp->point(p)));
    }
  }
}

TEST_CASE("build is deterministic") {
  const auto a = PolarSpace::Build({SpaceKind::kElliptic, 2, 3});
  const auto b = PolarSpace::Build({SpaceKind::kElliptic, 2, 3});
  CHECK(a->content_hash() == b->content_hash());
  CHECK(a->generators() == b->generators());
  CHECK(a->content_hash() != PolarSpace::Build({SpaceKind::kParabolic, 2, 3})->content_hash());
}

TEST_CASE("quotients at a point") {
  struct Case {
    SpaceSpec spec;
    int points;
    int generators;
  };
  for (Case c : {Case{{SpaceKind::kElliptic, 2, 2}, 5, 5}, Case{{SpaceKind::kParabolic, 3, 2}, 15, 15},
                 Case{{SpaceKind::kElliptic, 3, 2}, 27, 45}}) {
    const auto sp = PolarSpace::Build(c.spec);
    CAPTURE(sp->name());
    for (int p : {0, sp->num_points() / 2, sp->num_points() - 1}) {
      const Quotient quo = QuotientAtPoint(sp, p);
      CHECK(quo.space->num_points() == c.points);
      CHECK(quo.space->num_generators() == c.generators);
      CHECK(quo.space->rank() == c.spec.rank - 1);
      for (int g : sp->point_generators(p)) {
        const int img = quo.ProjectGenerator(g);
        REQUIRE(img >= 0);
        REQUIRE(quo.LiftGenerator(img) == g);
      }
    }
  }
}

TEST_CASE("quotient chain along a line") {
  const auto sp = PolarSpace::Build({SpaceKind::kElliptic, 3, 2});
  const Subspace& plane = sp->generator(0);
  const Subspace line = Canonicalize(sp->field(), std::vector<Vec>{plane.rows()[0], plane.rows()[1]},
                                     plane.length());
  const QuotientChain chain = QuotientAtSubspace(sp, line);
  CHECK(chain.space()->rank() == 1);
  CHECK(chain.space()->num_generators() == 5);
  const auto through = sp->generators_through(line);
  CHECK(through.size() == 5);
  std::set<int> images;
  for (int g : through) images.insert(chain.ProjectGenerator(g));
  CHECK(images.size() == 5);
}

TEST_CASE("hyperplane sections") {
  const auto sp = PolarSpace::Build({SpaceKind::kElliptic, 2, 2});
  const Field& f = sp->field();
  int nondegenerate = 0;
  int tangent = 0;
  for (const Vec& v : EnumeratePgPoints(5, f)) {
    const Subspace h = Perp(sp->form(), PointSubspace(f, v));
    const Section sec = HyperplaneSection(*sp, h);
    if (sp->form().IsSingular(v)) {
      ++tangent;
      CHECK(sec.radical == PointSubspace(f, v));
      CHECK(sec.type.label == "pi_0 Q-(3,2)");
      CHECK(sec.points.size() == 11);
      CHECK(sec.generators.size() == 5);
    } else {
      ++nondegenerate;
      CHECK(sec.type.recognized);
      CHECK(sec.type.label == "Q(4,2)");
      CHECK(sec.points.size() == 15);
      CHECK(sec.generators.size() == 15);
    }
  }
  CHECK(tangent == 27);
  CHECK(nondegenerate == 36);

  const auto q4 = PolarSpace::Build({SpaceKind::kParabolic, 2, 2});
  const Vec& p = q4->point(0);
  const Section cone = HyperplaneSection(*q4, Perp(q4->form(), PointSubspace(q4->field(), p)));
  CHECK(cone.type.label == "pi_0 Q(2,2)");
  CHECK(cone.generators.size() == 3);
  for (int g : cone.generators) CHECK(Contains(q4->field(), q4->generator(g), p));
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(PolarSpace::Build({SpaceKind::kParabolic, 0, 2}), Error);
  CHECK_THROWS_AS(PolarSpace::Build({SpaceKind::kParabolic, 2, 6}), Error);
}
