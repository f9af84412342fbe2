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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "polarblock/analysis.hpp"
#include "polarblock/constructions.hpp"
#include "polarblock/error.hpp"
#include "polarblock/search.hpp"

using namespace polarblock;

namespace {

std::vector<std::vector<int>> LinesOf(const PolarSpace& sp) {
  std::vector<std::vector<int>> lines;
  for (int g = 0; g < sp.num_generators(); ++g) lines.push_back(sp.generator_points(g));
  return lines;
}

std::vector<int> RandomSubset(int n, int k, std::mt19937& rng) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_CASE("quadrangle axioms") {
  const auto q4 = PolarSpace::Build({SpaceKind::kParabolic, 2, 2});
  const GqResult a = CheckGqAxioms(q4->num_points(), LinesOf(*q4));
  CHECK(a.ok);
  CHECK(a.s == 2);
  CHECK(a.t == 2);
  const auto qp = PolarSpace::Build({SpaceKind::kHyperbolic, 2, 2});
  const GqResult b = CheckGqAxioms(qp->num_points(), LinesOf(*qp));
  CHECK(b.ok);
  CHECK(b.s == 2);
  CHECK(b.t == 1);
  const auto h = PolarSpace::Build({SpaceKind::kHermitianEven, 2, 2});
  const GqResult c = CheckGqAxioms(h->num_points(), LinesOf(*h));
  CHECK(c.ok);
  CHECK(c.s == 4);
  CHECK(c.t == 8);

  // 3x3 grid with one line removed.
  std::vector<std::vector<int>> grid;
  for (int r = 0; r < 3; ++r) grid.push_back({3 * r, 3 * r + 1, 3 * r + 2});
  for (int col = 1; col < 3; ++col) grid.push_back({col, col + 3, col + 6});
  const GqResult d = CheckGqAxioms(9, grid);
  CHECK_FALSE(d.ok);
  CHECK_FALSE(d.failure.empty());

  // A triangle.
  const GqResult e = CheckGqAxioms(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
  CHECK_FALSE(e.ok);
}

TEST_CASE("blocking predicates") {
  const auto q4 = PolarSpace::Build({SpaceKind::kParabolic, 2, 2});
  std::vector<int> all(q4->num_generators());
  std::iota(all.begin(), all.end(), 0);
  CHECK(IsBlocking(*q4, all));
  CHECK_FALSE(IsBlocking(*q4, {}));
  const std::vector<int> pencil = q4->point_generators(0);
  CHECK(IsBlocking(*q4, pencil));
  CHECK(IsMinimal(*q4, pencil));
  CHECK_FALSE(IsPartialSpread(*q4, pencil));

  const auto qp = PolarSpace::Build({SpaceKind::kHyperbolic, 2, 2});
  const Ruling r = RulingSpread(*qp, 0);
  CHECK(r.lines.size() == 3);
  CHECK(IsPartialSpread(*qp, r.lines));
  CHECK(IsMaximalPartialSpread(*qp, r.lines));
  CHECK(IsSpread(*qp, r.lines));
  CHECK(IsCover(*qp, r.lines));
  CHECK(IsBlocking(*qp, r.lines));
}

TEST_CASE("predicates agree with the brute-force oracle on random sets") {
  std::mt19937 rng(99);
  for (SpaceSpec spec : {SpaceSpec{SpaceKind::kParabolic, 2, 3}, SpaceSpec{SpaceKind::kElliptic, 2, 2},
                         SpaceSpec{SpaceKind::kParabolic, 3, 2}}) {
    const auto sp = PolarSpace::Build(spec);
    const auto meet = oracle::MeetMatrix(*sp);
    const int n = sp->num_generators();
    std::uniform_int_distribution<int> size(1, std::min(n, 14));
    for (int trial = 0; trial < 300; ++trial) {
      const auto set = RandomSubset(n, size(rng), rng);
      const bool blocking = IsBlocking(*sp, set);
      REQUIRE(blocking == oracle::Blocks(meet, set));
      const auto ess = EssentialElements(*sp, set);
      REQUIRE(std::includes(set.begin(), set.end(), ess.begin(), ess.end()));
      REQUIRE(IsMinimal(*sp, set) == (ess.size() == set.size()));
      REQUIRE(IsMinimal(*sp, set) == oracle::AllEssential(meet, set));
      if (blocking) {
        // Monotone under adding a generator.
        auto bigger = set;
        bigger.push_back(static_cast<int>(rng() % n));
        std::sort(bigger.begin(), bigger.end());
        bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
        REQUIRE(IsBlocking(*sp, bigger));
        const auto stripped = StripInessential(*sp, set);
        REQUIRE(IsBlocking(*sp, stripped));
        REQUIRE(std::includes(set.begin(), set.end(), stripped.begin(), stripped.end()));
      }
      // Spread implies cover implies blocking.
      if (IsSpread(*sp, set)) REQUIRE(IsCover(*sp, set));
      if (IsCover(*sp, set)) REQUIRE(blocking);
    }
  }
}

TEST_CASE("strip removes added members") {
  const auto q4 = PolarSpace::Build({SpaceKind::kParabolic, 2, 2});
  const std::vector<int> pencil = q4->point_generators(0);
  std::vector<int> padded = pencil;
  for (int g = 0; g < q4->num_generators() && padded.size() < 5; ++g)
    if (std::find(pencil.begin(), pencil.end(), g) == pencil.end()) padded.push_back(g);
  std::sort(padded.begin(), padded.end());
  const auto stripped = StripInessential(*q4, padded);
  CHECK(IsBlocking(*q4, stripped));
  CHECK(stripped.size() <= 4);
}

TEST_CASE("pencil coverage profile") {
  for (SpaceSpec spec : {SpaceSpec{SpaceKind::kParabolic, 2, 2}, SpaceSpec{SpaceKind::kParabolic, 2, 3},
                         SpaceSpec{SpaceKind::kElliptic, 2, 2}, SpaceSpec{SpaceKind::kHermitianEven, 2, 2}}) {
    const auto sp = PolarSpace::Build(spec);
    CAPTURE(sp->name());
    const long long s = static_cast<long long>(sp->s()), t = static_cast<long long>(sp->t());
    const int p = sp->num_points() / 3;
    const CoverageProfile prof = ComputeCoverage(*sp, sp->point_generators(p));
    CHECK(prof.weight[p] == t + 1);
    for (int x = 0; x < sp->num_points(); ++x)
      if (x != p && prof.covered.test(x)) CHECK(prof.weight[x] == 1);
    CHECK(prof.excess == t);
    CHECK(prof.covered_count() == (t + 1) * (s + 1) - t);
    CHECK(prof.delta == 0);
    CHECK(static_cast<long long>(prof.holes.size()) == sp->num_points() - prof.covered_count());
  }
  const auto qm = PolarSpace::Build({SpaceKind::kElliptic, 2, 2});
  const CoverageProfile prof = ComputeCoverage(*qm, qm->point_generators(0));
  CHECK(prof.covered_count() == 11);
  CHECK(prof.holes.size() == 16);
}

TEST_CASE("spread coverage profile") {
  const auto q4 = PolarSpace::Build({SpaceKind::kParabolic, 2, 2});
  const SearchResult cover = MinCover(*q4, DefaultSearchOptions());
  REQUIRE(cover.complete);
  REQUIRE(cover.optimum == 5);
  const auto& spread = cover.witnesses.front();
  CHECK(IsSpread(*q4, spread));
  CHECK(IsMaximalPartialSpread(*q4, spread));
  const CoverageProfile prof = ComputeCoverage(*q4, spread);
  CHECK(prof.excess == 0);
  CHECK(prof.holes.empty());
}

TEST_CASE("rank-2 counting checks on pencils") {
  for (SpaceSpec spec : {SpaceSpec{SpaceKind::kParabolic, 2, 2}, SpaceSpec{SpaceKind::kElliptic, 2, 3},
                         SpaceSpec{SpaceKind::kParabolic, 2, 3}}) {
    const auto sp = PolarSpace::Build(spec);
    CAPTURE(sp->name());
    const Section2Report r = CheckSection2Identities(*sp, sp->point_generators(0));
    REQUIRE(r.applicable);
    CHECK(r.delta == 0);
    for (const CheckItem& it : r.items) {
      CAPTURE(it.id);
      CAPTURE(it.detail);
      CHECK(it.passed);
    }
  }
}

TEST_CASE("projection through a hole stays blocking") {
  const auto q6 = PolarSpace::Build({SpaceKind::kParabolic, 3, 2});
  const ConeExample cone = MakeConeExample(q6, ConeRow::kConicPencil, std::nullopt, DefaultSearchOptions());
  const CoverageProfile prof = ComputeCoverage(*q6, cone.members);
  REQUIRE_FALSE(prof.holes.empty());
  for (int hole : prof.holes) {
    const ProjectedSet proj = ProjectBlockingSet(q6, cone.members, hole);
    REQUIRE(proj.quotient.space->num_generators() == 15);
    REQUIRE(IsBlocking(*proj.quotient.space, proj.members));
    REQUIRE(proj.members.size() <= 3);
  }
  const auto q7 = PolarSpace::Build({SpaceKind::kElliptic, 3, 2});
  const ConeExample cover = MakeConeExample(q7, ConeRow::kQ4Cover, std::nullopt, DefaultSearchOptions());
  const CoverageProfile prof7 = ComputeCoverage(*q7, cover.members);
  for (std::size_t i = 0; i < prof7.holes.size(); i += 7) {
    const ProjectedSet proj = ProjectBlockingSet(q7, cover.members, prof7.holes[i]);
    REQUIRE(proj.quotient.space->num_generators() == 45);
    REQUIRE(IsBlocking(*proj.quotient.space, proj.members));
  }
}

TEST_CASE("classification of the small examples") {
  const auto q4 = PolarSpace::Build({SpaceKind::kParabolic, 2, 2});
  const ClassLabel pencil = Classify(q4, q4->point_generators(4));
  CHECK(pencil.kind == ClassKind::kPencil);
  CHECK(pencil.vertex == PointSubspace(q4->field(), q4->point(4)));
  CHECK(VerifyLabel(q4, q4->point_generators(4), pencil));

  const Ruling ruling = RulingSpread(*q4, 0);
  REQUIRE(IsMinimal(*q4, ruling.lines));
  const ClassLabel reg = Classify(q4, ruling.lines);
  CHECK(reg.kind == ClassKind::kSubGqSpread);
  CHECK(reg.sub_s == 2);
  CHECK(reg.sub_t == 1);
  CHECK(VerifyLabel(q4, ruling.lines, reg));

  const auto qm = PolarSpace::Build({SpaceKind::kElliptic, 2, 2});
  const SectionCover sc = MakeSectionCover(*qm, std::nullopt, DefaultSearchOptions());
  const ClassLabel cov = Classify(qm, sc.lines);
  CHECK(cov.kind == ClassKind::kCoverOfSectionQ4);
  REQUIRE(cov.hyperplane.has_value());
  CHECK(*cov.hyperplane == sc.hyperplane);
  CHECK(VerifyLabel(qm, sc.lines, cov));

  const auto q6 = PolarSpace::Build({SpaceKind::kParabolic, 3, 2});
  const ConeExample cone = MakeConeExample(q6, ConeRow::kConicPencil, std::nullopt, DefaultSearchOptions());
  const ClassLabel cl = Classify(q6, cone.members);
  CHECK(cl.kind == ClassKind::kConeOverConicPencil);
  CHECK(VerifyLabel(q6, cone.members, cl));

  // A wrong label never verifies.
  ClassLabel wrong = reg;
  wrong.kind = ClassKind::kPencil;
  CHECK_FALSE(VerifyLabel(q4, ruling.lines, wrong));
  CHECK_THROWS_AS(Classify(q4, {0}), Error);
}

TEST_CASE("thresholds") {
  const Threshold e2 = TheoremThreshold(SpaceKind::kElliptic, 2);
  CHECK(e2.value == doctest::Approx(0.5));
  CHECK(e2.max_delta == 0);
  CHECK(e2.Admits(0));
  CHECK_FALSE(e2.Admits(1));
  const Threshold e4 = TheoremThreshold(SpaceKind::kElliptic, 4);
  CHECK(e4.value == doctest::Approx((12.0 - std::sqrt(89.0)) / 2));
  CHECK(e4.value == doctest::Approx(1.2835).epsilon(1e-3));
  CHECK(e4.max_delta == 1);
  const Threshold h5 = TheoremThreshold(SpaceKind::kHermitianEven, 5);
  CHECK(h5.value == doctest::Approx(2.0));
  CHECK(h5.strict);
  CHECK(h5.max_delta == 1);
  CHECK_FALSE(TheoremThreshold(SpaceKind::kHermitianEven, 3).applicable);
  Epsilon eps;
  eps.known = eps.exists = true;
  eps.value = 3;
  const Threshold q5 = TheoremThreshold(SpaceKind::kParabolic, 5, eps);
  CHECK(q5.value == doctest::Approx(2.0));
  CHECK(q5.max_delta == 1);
}
