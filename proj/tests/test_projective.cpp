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

#include <random>
#include <set>

#include "oracles.hpp"
#include "polarblock/projective.hpp"

using namespace polarblock;

namespace {

Subspace RandomSubspace(const Field& f, int len, int rows, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, f.q() - 1);
  std::vector<Vec> rs(rows, Vec(len));
  for (auto& r : rs)
    for (auto& e : r) e = static_cast<Elem>(pick(rng));
  return Canonicalize(f, rs, len);
}

}  // namespace

TEST_CASE("canonical form") {
  const auto f = Field::Make(2, 1);
  const Subspace a = Canonicalize(*f, std::vector<Vec>{{0, 1, 0}, {1, 0, 0}}, 3);
  CHECK(a.dim() == 1);
  CHECK(a.rows() == std::vector<Vec>{{1, 0, 0}, {0, 1, 0}});
  const Subspace b = Canonicalize(*f, std::vector<Vec>{{1, 1}, {1, 1}}, 2);
  CHECK(b.dim() == 0);
  CHECK(b.rows() == std::vector<Vec>{{1, 1}});
  const Subspace e = Canonicalize(*f, std::vector<Vec>{}, 4);
  CHECK(e.dim() == -1);
  CHECK(e.empty());
}

TEST_CASE("canonical form does not depend on the spanning rows") {
  const auto f = Field::Make(3, 1);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Subspace s = RandomSubspace(*f, 5, 3, rng);
    // Re-span with random combinations of the canonical rows.
    std::vector<Vec> mixed;
    std::uniform_int_distribution<int> pick(0, 2);
    for (int k = 0; k < 4; ++k) {
      Vec v(5, 0);
      for (int i = 0; i < s.rank(); ++i) {
        const auto c = static_cast<Elem>(pick(rng));
        for (int j = 0; j < 5; ++j) v[j] = f->add(v[j], f->mul(c, s.row(i)[j]));
      }
      mixed.push_back(v);
    }
    for (const Vec& r : s.rows()) mixed.push_back(r);
    REQUIRE(Canonicalize(*f, mixed, 5) == s);
  }
}

TEST_CASE("point counts") {
  CHECK(EnumeratePgPoints(2, *Field::Make(2, 1)).size() == 7);
  CHECK(EnumeratePgPoints(4, *Field::Make(2, 1)).size() == 31);
  CHECK(EnumeratePgPoints(2, *Field::Make(3, 1)).size() == 13);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const int p = q % 2 == 0 ? 2 : (q == 9 ? 3 : q);
    const int h = q == 4 ? 2 : q == 8 ? 3 : q == 9 ? 2 : 1;
    const auto f = Field::Make(p, h);
    for (int n = 0; n <= 3; ++n) {
      const std::uint64_t want = (oracle::IPow(q, n + 1) - 1) / (q - 1);
      CHECK(Theta(n, q) == want);
      const auto pts = EnumeratePgPoints(n, *f);
      CHECK(pts.size() == want);
      std::set<Vec> uniq(pts.begin(), pts.end());
      CHECK(uniq.size() == pts.size());
    }
  }
}

TEST_CASE("span and meet") {
  const auto f = Field::Make(2, 1);
  const Subspace p1 = PointSubspace(*f, {1, 0, 0, 0});
  const Subspace p2 = PointSubspace(*f, {0, 1, 0, 0});
  const Subspace line = Span(*f, p1, p2);
  CHECK(line.dim() == 1);
  CHECK(Meet(*f, p1, p2).dim() == -1);
  CHECK(Meet(*f, line, line) == line);
  const Subspace l2 = Canonicalize(*f, std::vector<Vec>{{0, 0, 1, 0}, {0, 0, 0, 1}}, 4);
  CHECK(Span(*f, line, l2).dim() == 3);
  CHECK(Meet(*f, line, l2).dim() == -1);
  CHECK(PointsOf(*f, line).size() == 3);
}

TEST_CASE("dimension identity and containment on random subspaces") {
  std::mt19937 rng(11);
  for (auto [p, h] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    const auto f = Field::Make(p, h);
    std::uniform_int_distribution<int> rows(0, 4);
    for (int trial = 0; trial < 300; ++trial) {
      const Subspace a = RandomSubspace(*f, 5, rows(rng), rng);
      const Subspace b = RandomSubspace(*f, 5, rows(rng), rng);
      const Subspace s = Span(*f, a, b);
      const Subspace m = Meet(*f, a, b);
      REQUIRE(a.dim() + b.dim() == s.dim() + m.dim());
      REQUIRE(IsSubspaceOf(*f, m, a));
      REQUIRE(IsSubspaceOf(*f, m, b));
      REQUIRE(IsSubspaceOf(*f, a, s));
      // Point-count oracle for the meet.
      std::size_t common = 0;
      for (const Vec& v : PointsOf(*f, a)) common += Contains(*f, b, v);
      REQUIRE(common == Theta(m.dim(), f->q()));
      // Annihilator has complementary rank.
      REQUIRE(Annihilator(*f, a).rank() == 5 - a.rank());
    }
  }
}

TEST_CASE("coordinates round trip") {
  const auto f = Field::Make(3, 1);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Subspace s = RandomSubspace(*f, 4, 3, rng);
    for (const Vec& v : PointsOf(*f, s)) {
      const Vec c = CoordinatesIn(s, v);
      REQUIRE(static_cast<int>(c.size()) == s.rank());
      REQUIRE(FromCoordinates(*f, s, c) == v);
    }
  }
}
