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

#include "polarblock/serialize.hpp"

#include <cmath>

#include "polarblock/error.hpp"

namespace polarblock {

namespace {

template <typename T>
T Get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) Fail(ErrorCode::kParse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParse, std::string("bad field '") + key + "': " + e.what());
  }
}

Json Finite(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json ToJson(const SpaceSpec& spec) { return {{"kind", KindName(spec.kind)}, {"rank", spec.rank}, {"q", spec.q}}; }

SpaceSpec SpaceSpecFromJson(const Json& j) {
  SpaceSpec spec;
  const auto kind = ParseKindName(Get<std::string>(j, "kind"));
  if (!kind) Fail(ErrorCode::kParse, "unknown space kind '" + Get<std::string>(j, "kind") + "'");
  spec.kind = *kind;
  spec.rank = Get<int>(j, "rank");
  spec.q = Get<int>(j, "q");
  return spec;
}

Json ToJson(const Subspace& s) {
  Json rows = Json::array();
  for (const Vec& r : s.rows()) rows.push_back(r);
  return rows;
}

Subspace SubspaceFromJson(const Field& f, const Json& j, int length) {
  if (!j.is_array()) Fail(ErrorCode::kParse, "subspace must be a list of rows");
  std::vector<Vec> rows;
  for (const Json& r : j) {
    if (!r.is_array() || static_cast<int>(r.size()) != length)
      Fail(ErrorCode::kParse, "subspace row must have " + std::to_string(length) + " entries");
    Vec v;
    for (const Json& e : r) {
      if (!e.is_number_integer() || e.get<int>() < 0 || e.get<int>() >= f.q())
        Fail(ErrorCode::kParse, "field element out of range in subspace row");
      v.push_back(static_cast<Elem>(e.get<int>()));
    }
    rows.push_back(std::move(v));
  }
  return Canonicalize(f, rows, length);
}

Json ToJson(const Form& form) {
  Json j{{"kind", ToString(form.kind())}, {"n", form.ambient_dim()}, {"q", form.field().q()}};
  if (form.kind() == FormKind::kElliptic) {
    const auto g = form.elliptic_g();
    j["g"] = Json::array({g[0], g[1], g[2]});
  }
  return j;
}

Json SpaceToJson(const PolarSpace& space, bool full) {
  Json j = ToJson(space.spec());
  j["name"] = space.name();
  j["hash"] = space.content_hash();
  j["form"] = ToJson(space.form());
  j["params"] = {{"s", space.s()}, {"t", space.t()}};
  j["counts"] = {{"points", space.num_points()},
                 {"generators", space.num_generators()},
                 {"points_per_generator", space.points_per_generator()},
                 {"generators_per_point", space.generators_per_point()}};
  j["regular"] = space.is_regular();
  if (full) {
    j["points"] = space.points();
    Json gens = Json::array();
    for (const Subspace& g : space.generators()) gens.push_back(ToJson(g));
    j["generators"] = std::move(gens);
  }
  return j;
}

Json SetToJson(const PolarSpace& space, const std::vector<int>& members, bool with_matrices) {
  Json j{{"space", ToJson(space.spec())}, {"space_hash", space.content_hash()}, {"members", members}};
  if (with_matrices) {
    Json m = Json::array();
    for (int g : members) m.push_back(ToJson(space.generator(g)));
    j["matrices"] = std::move(m);
  }
  return j;
}

SetFile SetFromJson(const Json& j) {
  SetFile f;
  if (!j.is_object() || !j.contains("space")) Fail(ErrorCode::kParse, "blocking-set file needs a 'space' object");
  f.spec = SpaceSpecFromJson(j.at("space"));
  f.space_hash = Get<std::string>(j, "space_hash");
  f.members = Get<std::vector<int>>(j, "members");
  return f;
}

SpacePtr BuildSpaceFor(const SetFile& file) {
  SpacePtr space = PolarSpace::Build(file.spec);
  if (space->content_hash() != file.space_hash)
    Fail(ErrorCode::kParse, "space hash mismatch: file has " + file.space_hash + ", rebuilt " + space->name() +
                                " has " + space->content_hash());
  for (int m : file.members)
    Require(m >= 0 && m < space->num_generators(), "member index " + std::to_string(m) + " out of range");
  return space;
}

Json ToJson(const CoverageProfile& p) {
  Json j{{"size", p.size},          {"delta", p.delta},
         {"covered", p.covered_count()}, {"W", p.excess},
         {"holes", p.holes.size()}};
  if (p.rank2) {
    j["b"] = p.b;
    j["b_tilde"] = p.b_tilde;
  }
  return j;
}

Json ToJson(const Section2Report& r) {
  Json j{{"applicable", r.applicable}, {"delta", r.delta}};
  if (!r.applicable) {
    j["reason"] = r.reason;
    return j;
  }
  j["passed"] = r.all_passed();
  Json items = Json::array();
  for (const CheckItem& it : r.items) items.push_back({{"id", it.id}, {"passed", it.passed}, {"detail", it.detail}});
  j["items"] = std::move(items);
  return j;
}

Json ToJson(const GqResult& gq) {
  if (!gq.ok) return {{"ok", false}, {"failure", gq.failure}};
  return {{"ok", true}, {"s", gq.s}, {"t", gq.t}};
}

Json ToJson(const ClassLabel& l) {
  Json j{{"label", ToString(l.kind)}, {"vertex", ToJson(l.vertex)}, {"vertex_dim", l.vertex.dim()}};
  if (l.hyperplane) j["hyperplane"] = ToJson(*l.hyperplane);
  if (l.kind == ClassKind::kSubGqSpread) j["suborder"] = {l.sub_s, l.sub_t};
  if (!l.base.empty()) {
    j["base"] = l.base;
    j["base_members"] = l.base_members;
  }
  if (!l.note.empty()) j["note"] = l.note;
  return j;
}

Json ToJson(const SearchResult& r) {
  Json j{{"optimum", r.optimum < 0 ? Json(nullptr) : Json(r.optimum)},
         {"complete", r.complete},
         {"witnesses", r.witnesses},
         {"nodes", r.nodes},
         {"seconds", r.seconds}};
  if (r.witnesses_truncated) j["witnesses_truncated"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json ToJson(const Threshold& t) {
  Json j{{"kind", KindName(t.kind)}, {"q", t.q},          {"applicable", t.applicable}, {"formula", t.formula},
         {"value", Finite(t.value)}, {"strict", t.strict}, {"max_delta", t.max_delta}};
  if (!t.note.empty()) j["note"] = t.note;
  return j;
}

Json ToJson(const Epsilon& e) {
  Json j{{"known", e.known}, {"exists", e.exists}, {"symbolic", e.symbolic}};
  j["value"] = e.known && e.exists ? Json(e.value) : Json(nullptr);
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

Json ToJson(const HyperplaneCheck& c) {
  return {{"bound", c.bound},
          {"min_outside", c.min_outside},
          {"hyperplanes", c.hyperplanes},
          {"passed", c.passed}};
}

Json VerifyReport(const PolarSpace& space, const std::vector<int>& members) {
  const bool blocking = IsBlocking(space, members);
  const std::vector<int> essential = EssentialElements(space, members);
  Json j{{"space", space.name()},
         {"size", members.size()},
         {"delta", static_cast<long long>(members.size()) - static_cast<long long>(space.t()) - 1},
         {"blocking", blocking},
         {"minimal", essential.size() == members.size()},
         {"essential", essential},
         {"partial_spread", IsPartialSpread(space, members)},
         {"maximal_partial_spread", IsMaximalPartialSpread(space, members)},
         {"cover", IsCover(space, members)},
         {"spread", IsSpread(space, members)}};
  j["profile"] = ToJson(ComputeCoverage(space, members));
  if (space.rank() == 2) j["section2"] = ToJson(CheckSection2Identities(space, members));
  return j;
}

}  // namespace polarblock
