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

#include "polarblock/constructions.hpp"
#include "polarblock/error.hpp"
#include "polarblock/serialize.hpp"

using namespace polarblock;

TEST_CASE("space spec round trip") {
  for (SpaceKind k : {SpaceKind::kParabolic, SpaceKind::kElliptic, SpaceKind::kHyperbolic,
                      SpaceKind::kHermitianEven, SpaceKind::kHermitianOdd}) {
    const SpaceSpec spec{k, 3, 4};
    CHECK(SpaceSpecFromJson(ToJson(spec)) == spec);
  }
  CHECK_THROWS_AS(SpaceSpecFromJson(Json{{"kind", "x"}, {"rank", 2}, {"q", 2}}), Error);
  CHECK_THROWS_AS(SpaceSpecFromJson(Json{{"rank", 2}}), Error);
}

TEST_CASE("subspace round trip") {
  const auto sp = PolarSpace::Build({SpaceKind::kParabolic, 2, 3});
  for (const Subspace& g : sp->generators())
    REQUIRE(SubspaceFromJson(sp->field(), ToJson(g), g.length()) == g);
  CHECK_THROWS_AS(SubspaceFromJson(sp->field(), Json::parse("[[0,1,2]]"), 5), Error);
  CHECK_THROWS_AS(SubspaceFromJson(sp->field(), Json::parse("[[0,1,2,3,4]]"), 5), Error);
}

TEST_CASE("blocking-set files re-read byte-identically") {
  const auto sp = PolarSpace::Build({SpaceKind::kElliptic, 2, 2});
  const std::vector<int> pencil = sp->point_generators(5);
  for (bool matrices : {false, true}) {
    const std::string text = SetToJson(*sp, pencil, matrices).dump(2);
    const SetFile file = SetFromJson(Json::parse(text));
    CHECK(file.members == pencil);
    const SpacePtr rebuilt = BuildSpaceFor(file);
    CHECK(SetToJson(*rebuilt, file.members, matrices).dump(2) == text);
    CHECK(VerifyReport(*rebuilt, file.members).dump() == VerifyReport(*sp, pencil).dump());
  }
}

TEST_CASE("hash mismatch is a parse error") {
  const auto sp = PolarSpace::Build({SpaceKind::kParabolic, 2, 2});
  Json j = SetToJson(*sp, {0, 1, 2}, false);
  j["space_hash"] = "0000000000000000";
  try {
    BuildSpaceFor(SetFromJson(j));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
  }
  Json k = SetToJson(*sp, {0, 1, 99}, false);
  CHECK_THROWS_AS(BuildSpaceFor(SetFromJson(k)), Error);
}

TEST_CASE("verify report fields") {
  const auto sp = PolarSpace::Build({SpaceKind::kParabolic, 2, 2});
  const Json r = VerifyReport(*sp, sp->point_generators(0));
  CHECK(r.at("blocking") == true);
  CHECK(r.at("minimal") == true);
  CHECK(r.at("delta") == 0);
  CHECK(r.at("profile").at("W") == 2);
  CHECK(r.at("section2").at("passed") == true);
  const Json s = SpaceToJson(*sp, true);
  CHECK(s.at("points").size() == 15);
  CHECK(s.at("generators").size() == 15);
  CHECK(s.at("regular") == true);
}
