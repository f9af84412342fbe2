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
#include <json.hpp>

#include <string>
#include <thread>

#include "polarblock/polarblock.h"

namespace {

using Json = nlohmann::json;

std::string Take(char* s) {
  std::string out = s ? s : "";
  pb_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("space handles") {
  pb_space* sp = nullptr;
  REQUIRE(pb_space_build("qminus", 2, 2, &sp) == PB_OK);
  int points = 0, gens = 0;
  CHECK(pb_space_counts(sp, &points, &gens) == PB_OK);
  CHECK(points == 27);
  CHECK(gens == 45);
  char* hash = nullptr;
  CHECK(pb_space_hash(sp, &hash) == PB_OK);
  CHECK(Take(hash).size() == 16);
  char* js = nullptr;
  CHECK(pb_space_to_json(sp, 0, &js) == PB_OK);
  const Json j = Json::parse(Take(js));
  CHECK(j.at("name") == "Q-(5,2)");
  pb_space_free(sp);
  pb_space_free(nullptr);
}

TEST_CASE("error codes and messages") {
  pb_space* sp = nullptr;
  CHECK(pb_space_build("nope", 2, 2, &sp) == PB_ERR_INVALID_ARGUMENT);
  CHECK(sp == nullptr);
  CHECK(std::string(pb_last_error()).find("nope") != std::string::npos);
  CHECK(pb_space_build("q", 2, 6, &sp) == PB_ERR_INVALID_ARGUMENT);
  CHECK(pb_space_build(nullptr, 2, 2, &sp) == PB_ERR_INVALID_ARGUMENT);
  CHECK(pb_space_counts(nullptr, nullptr, nullptr) == PB_ERR_INVALID_ARGUMENT);
  pb_set* set = nullptr;
  CHECK(pb_set_from_json("{not json", &set) == PB_ERR_PARSE);
  CHECK(pb_set_from_json(R"({"space":{"kind":"q","rank":2,"q":2},"space_hash":"x","members":[0]})", &set) ==
        PB_ERR_PARSE);
  REQUIRE(pb_space_build("q", 2, 2, &sp) == PB_OK);
  CHECK(pb_construct(sp, "bogus", nullptr, &set) == PB_ERR_INVALID_ARGUMENT);
  char* out = nullptr;
  CHECK(pb_search_json(sp, "min-blocking", R"({"workers":0})", &out) == PB_ERR_INVALID_ARGUMENT);
  CHECK(pb_thresholds_json(1, &out) == PB_ERR_INVALID_ARGUMENT);
  CHECK(pb_space_hash(sp, &out) == PB_OK);
  CHECK(std::string(pb_last_error()).empty());
  pb_string_free(out);
  pb_space_free(sp);
  CHECK(std::string(pb_status_name(PB_ERR_BUDGET_EXCEEDED)) == "budget exceeded");
}

TEST_CASE("errors are per thread") {
  pb_space* sp = nullptr;
  CHECK(pb_space_build("nope", 2, 2, &sp) == PB_ERR_INVALID_ARGUMENT);
  std::string other;
  std::thread t([&] { other = pb_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(pb_last_error()).empty());
}

TEST_CASE("construct, serialize, verify, classify") {
  pb_space* sp = nullptr;
  REQUIRE(pb_space_build("q", 2, 2, &sp) == PB_OK);
  pb_set* set = nullptr;
  REQUIRE(pb_construct(sp, "pencil", nullptr, &set) == PB_OK);
  int n = 0;
  CHECK(pb_set_size(set, &n) == PB_OK);
  CHECK(n == 3);
  int buf[8] = {};
  int full = 0;
  CHECK(pb_set_members(set, buf, 2, &full) == PB_OK);
  CHECK(full == 3);

  char* text = nullptr;
  REQUIRE(pb_set_to_json(set, 0, &text) == PB_OK);
  const std::string doc = Take(text);
  pb_set* again = nullptr;
  REQUIRE(pb_set_from_json(doc.c_str(), &again) == PB_OK);
  char* text2 = nullptr;
  REQUIRE(pb_set_to_json(again, 0, &text2) == PB_OK);
  CHECK(Take(text2) == doc);

  char* report = nullptr;
  REQUIRE(pb_verify_json(again, &report) == PB_OK);
  const Json v = Json::parse(Take(report));
  CHECK(v.at("blocking") == true);
  CHECK(v.at("minimal") == true);
  CHECK(v.at("delta") == 0);

  REQUIRE(pb_classify_json(again, 0, &report) == PB_OK);
  const Json c = Json::parse(Take(report));
  CHECK(c.at("label") == "Pencil");
  CHECK(c.at("verified") == true);

  // Pencil plus one more line: Unknown without strip, Pencil with it.
  int members[4];
  CHECK(pb_set_members(set, members, 3, &full) == PB_OK);
  members[3] = members[0] == 14 ? 13 : 14;
  pb_set* padded = nullptr;
  REQUIRE(pb_set_from_members(sp, members, 4, &padded) == PB_OK);
  REQUIRE(pb_classify_json(padded, 0, &report) == PB_OK);
  CHECK(Json::parse(Take(report)).at("label") == "Unknown");
  REQUIRE(pb_classify_json(padded, 1, &report) == PB_OK);
  const Json s = Json::parse(Take(report));
  CHECK(s.at("size") == 3);
  CHECK(s.at("removed").size() == 1);

  pb_set* lone = nullptr;
  REQUIRE(pb_set_from_members(sp, members, 1, &lone) == PB_OK);
  CHECK(pb_classify_json(lone, 0, &report) == PB_ERR_CHECK_FAILED);
  CHECK(pb_set_from_members(sp, members, -1, &lone) == PB_ERR_INVALID_ARGUMENT);

  pb_space* shared = nullptr;
  REQUIRE(pb_set_space(set, &shared) == PB_OK);
  int pts = 0;
  CHECK(pb_space_counts(shared, &pts, nullptr) == PB_OK);
  CHECK(pts == 15);

  pb_space_free(shared);
  pb_set_free(lone);
  pb_set_free(padded);
  pb_set_free(again);
  pb_set_free(set);
  pb_space_free(sp);
}

TEST_CASE("other constructions") {
  pb_space* q6 = nullptr;
  REQUIRE(pb_space_build("q", 3, 2, &q6) == PB_OK);
  pb_set* set = nullptr;
  REQUIRE(pb_construct(q6, "cone:qplus-spread", nullptr, &set) == PB_OK);
  char* report = nullptr;
  REQUIRE(pb_classify_json(set, 0, &report) == PB_OK);
  CHECK(Json::parse(Take(report)).at("label") == "ConeOverQplus3Spread");
  pb_set_free(set);
  CHECK(pb_construct(q6, "cone:nope", nullptr, &set) == PB_ERR_INVALID_ARGUMENT);
  pb_space_free(q6);

  pb_space* qm = nullptr;
  REQUIRE(pb_space_build("qminus", 2, 2, &qm) == PB_OK);
  REQUIRE(pb_construct(qm, "section-cover", nullptr, &set) == PB_OK);
  int n = 0;
  pb_set_size(set, &n);
  CHECK(n == 5);
  pb_set_free(set);
  pb_space_free(qm);

  pb_space* q4 = nullptr;
  REQUIRE(pb_space_build("q", 2, 2, &q4) == PB_OK);
  REQUIRE(pb_construct(q4, "pencil", R"({"vertex": [[0,1,0,0,0]]})", &set) == PB_OK);
  pb_set_free(set);
  CHECK(pb_construct(q4, "pencil", R"({"vertex": [[1,0,0,0,0]]})", &set) != PB_OK);
  REQUIRE(pb_construct(q4, "ruling:1", nullptr, &set) == PB_OK);
  pb_set_free(set);
  pb_space_free(q4);
}

TEST_CASE("search and thresholds") {
  pb_space* sp = nullptr;
  REQUIRE(pb_space_build("q", 3, 2, &sp) == PB_OK);
  char* out = nullptr;
  REQUIRE(pb_search_json(sp, "min-blocking", nullptr, &out) == PB_OK);
  const Json r = Json::parse(Take(out));
  CHECK(r.at("optimum") == 3);
  CHECK(r.at("complete") == true);
  REQUIRE(pb_search_json(sp, "min-blocking", R"({"budget_nodes": 5})", &out) == PB_OK);
  CHECK(Json::parse(Take(out)).at("complete") == false);
  CHECK(pb_search_json(sp, "enumerate-minimal", nullptr, &out) == PB_ERR_INVALID_ARGUMENT);
  CHECK(pb_search_json(sp, "sideways", nullptr, &out) == PB_ERR_INVALID_ARGUMENT);
  pb_space_free(sp);

  REQUIRE(pb_thresholds_json(3, &out) == PB_OK);
  const Json t = Json::parse(Take(out));
  CHECK(t.at("epsilon").at("value") == 2);
  CHECK(t.at("thresholds").size() == 3);
}

TEST_CASE("acceptance subset through the C API") {
  char* out = nullptr;
  int passed = 0;
  REQUIRE(pb_accept_json(R"({"only": [1, 3]})", &out, &passed) == PB_OK);
  const Json j = Json::parse(Take(out));
  CHECK(passed == 1);
  CHECK(j.at("criteria").size() == 2);
}
