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

#include "polarblock/polarblock.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <iterator>
#include <new>
#include <optional>
#include <string>

#include "polarblock/acceptance.hpp"
#include "polarblock/error.hpp"
#include "polarblock/serialize.hpp"

struct pb_space {
  polarblock::SpacePtr space;
};

struct pb_set {
  polarblock::SpacePtr space;
  std::vector<int> members;
};

namespace {

using namespace polarblock;

thread_local std::string g_last_error;

pb_status StatusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return PB_ERR_INVALID_ARGUMENT;
    case ErrorCode::kUnsupported: return PB_ERR_UNSUPPORTED;
    case ErrorCode::kBudgetExceeded: return PB_ERR_BUDGET_EXCEEDED;
    case ErrorCode::kParse: return PB_ERR_PARSE;
    case ErrorCode::kCheckFailed: return PB_ERR_CHECK_FAILED;
  }
  return PB_ERR_INTERNAL;
}

template <typename Fn>
pb_status Guard(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return PB_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return StatusOf(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("json: ") + e.what();
    return PB_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PB_ERR_INTERNAL;
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Emit(const Json& j, char** out) { *out = Dup(j.dump(2)); }

void NotNull(const void* p, const char* what) {
  if (!p) Fail(ErrorCode::kInvalidArgument, std::string(what) + " must not be null");
}

Json ParseOptional(const char* text) {
  if (!text || !*text) return Json::object();
  Json j = Json::parse(text);
  if (!j.is_object()) Fail(ErrorCode::kParse, "options must be a JSON object");
  return j;
}

SearchOptions SearchOptionsFrom(const Json& j) {
  SearchOptions o = DefaultSearchOptions();
  if (j.contains("budget_nodes")) o.max_nodes = j.at("budget_nodes").get<std::uint64_t>();
  if (j.contains("budget_secs")) o.max_seconds = j.at("budget_secs").get<double>();
  if (j.contains("workers")) o.workers = j.at("workers").get<int>();
  if (j.contains("max_witnesses")) o.max_witnesses = j.at("max_witnesses").get<std::size_t>();
  Require(o.max_seconds > 0, "budget_secs must be positive");
  Require(o.workers >= 1, "workers must be >= 1");
  return o;
}

pb_set* NewSet(SpacePtr space, std::vector<int> members) {
  const BlockingSet checked(space, std::move(members));
  return new pb_set{space, checked.members()};
}

}  // namespace

extern "C" {

const char* pb_version(void) { return "0.1.0"; }

const char* pb_last_error(void) { return g_last_error.c_str(); }

const char* pb_status_name(pb_status status) {
  switch (status) {
    case PB_OK: return "ok";
    case PB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PB_ERR_UNSUPPORTED: return "unsupported";
    case PB_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case PB_ERR_PARSE: return "parse error";
    case PB_ERR_CHECK_FAILED: return "check failed";
    case PB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pb_string_free(char* s) { std::free(s); }

pb_status pb_space_build(const char* kind, int rank, int q, pb_space** out) {
  return Guard([&] {
    NotNull(kind, "kind");
    NotNull(out, "out");
    *out = nullptr;
    const auto k = ParseKindName(kind);
    if (!k) Fail(ErrorCode::kInvalidArgument, std::string("unknown space kind '") + kind + "'");
    *out = new pb_space{PolarSpace::Build({*k, rank, q})};
  });
}

void pb_space_free(pb_space* space) { delete space; }

pb_status pb_space_counts(const pb_space* space, int* points, int* generators) {
  return Guard([&] {
    NotNull(space, "space");
    if (points) *points = space->space->num_points();
    if (generators) *generators = space->space->num_generators();
  });
}

pb_status pb_space_hash(const pb_space* space, char** out) {
  return Guard([&] {
    NotNull(space, "space");
    NotNull(out, "out");
    *out = Dup(space->space->content_hash());
  });
}

pb_status pb_space_to_json(const pb_space* space, int full, char** out) {
  return Guard([&] {
    NotNull(space, "space");
    NotNull(out, "out");
    Emit(SpaceToJson(*space->space, full != 0), out);
  });
}

pb_status pb_construct(const pb_space* space, const char* example, const char* seed_json, pb_set** out) {
  return Guard([&] {
    NotNull(space, "space");
    NotNull(example, "example");
    NotNull(out, "out");
    *out = nullptr;
    const SpacePtr& sp = space->space;
    const Json seed = ParseOptional(seed_json);
    const int len = sp->form().length();
    std::optional<Subspace> vertex;
    std::optional<Subspace> hyperplane;
    if (seed.contains("vertex")) vertex = SubspaceFromJson(sp->field(), seed.at("vertex"), len);
    if (seed.contains("hyperplane")) hyperplane = SubspaceFromJson(sp->field(), seed.at("hyperplane"), len);
    const SearchOptions opts = SearchOptionsFrom(seed);
    const std::string ex = example;
    std::vector<int> members;
    if (ex == "pencil") {
      members = Pencil(*sp, vertex ? *vertex : DefaultVertex(*sp, sp->rank() - 2));
    } else if (ex == "ruling" || ex == "ruling:0" || ex == "ruling:1") {
      members = RulingSpread(*sp, ex == "ruling:1" ? 1 : 0, hyperplane).lines;
    } else if (ex == "section-cover") {
      members = MakeSectionCover(*sp, hyperplane, opts).lines;
    } else if (ex.rfind("cone:", 0) == 0) {
      const auto row = ParseConeRow(ex.substr(5));
      if (!row) Fail(ErrorCode::kInvalidArgument, "unknown cone row '" + ex.substr(5) + "'");
      members = MakeConeExample(sp, *row, vertex, opts).members;
    } else {
      Fail(ErrorCode::kInvalidArgument, "unknown example '" + ex + "'");
    }
    *out = NewSet(sp, std::move(members));
  });
}

pb_status pb_set_from_json(const char* json, pb_set** out) {
  return Guard([&] {
    NotNull(json, "json");
    NotNull(out, "out");
    *out = nullptr;
    const SetFile file = SetFromJson(Json::parse(json));
    *out = NewSet(BuildSpaceFor(file), file.members);
  });
}

pb_status pb_set_from_members(const pb_space* space, const int* members, int count, pb_set** out) {
  return Guard([&] {
    NotNull(space, "space");
    NotNull(out, "out");
    Require(count >= 0, "count must be non-negative");
    if (count > 0) NotNull(members, "members");
    *out = nullptr;
    *out = NewSet(space->space, std::vector<int>(members, members + count));
  });
}

void pb_set_free(pb_set* set) { delete set; }

pb_status pb_set_size(const pb_set* set, int* size) {
  return Guard([&] {
    NotNull(set, "set");
    NotNull(size, "size");
    *size = static_cast<int>(set->members.size());
  });
}

pb_status pb_set_members(const pb_set* set, int* buf, int cap, int* size) {
  return Guard([&] {
    NotNull(set, "set");
    const int n = static_cast<int>(set->members.size());
    if (size) *size = n;
    if (cap > 0) NotNull(buf, "buf");
    for (int i = 0; i < n && i < cap; ++i) buf[i] = set->members[i];
  });
}

pb_status pb_set_space(const pb_set* set, pb_space** out) {
  return Guard([&] {
    NotNull(set, "set");
    NotNull(out, "out");
    *out = new pb_space{set->space};
  });
}

pb_status pb_set_to_json(const pb_set* set, int with_matrices, char** out) {
  return Guard([&] {
    NotNull(set, "set");
    NotNull(out, "out");
    Emit(SetToJson(*set->space, set->members, with_matrices != 0), out);
  });
}

pb_status pb_verify_json(const pb_set* set, char** report) {
  return Guard([&] {
    NotNull(set, "set");
    NotNull(report, "report");
    Json j = VerifyReport(*set->space, set->members);
    j["space_hash"] = set->space->content_hash();
    Emit(j, report);
  });
}

pb_status pb_classify_json(const pb_set* set, int strip, char** report) {
  return Guard([&] {
    NotNull(set, "set");
    NotNull(report, "report");
    const PolarSpace& sp = *set->space;
    if (!IsBlocking(sp, set->members)) Fail(ErrorCode::kCheckFailed, "set is not blocking");
    std::vector<int> members = set->members;
    std::vector<int> removed;
    if (strip) {
      members = StripInessential(sp, members);
      std::set_difference(set->members.begin(), set->members.end(), members.begin(), members.end(),
                          std::back_inserter(removed));
    }
    Json j;
    if (IsMinimal(sp, members)) {
      const ClassLabel label = Classify(set->space, members);
      j = ToJson(label);
      j["verified"] = VerifyLabel(set->space, members, label);
    } else {
      ClassLabel unknown;
      j = ToJson(unknown);
      j["note"] = strip ? "stripped set has a member with no private generator" : "set is not minimal (try strip)";
      j["verified"] = true;
    }
    j["size"] = members.size();
    j["profile"] = ToJson(ComputeCoverage(sp, members));
    j["members"] = members;
    if (strip) j["removed"] = removed;
    Emit(j, report);
  });
}

pb_status pb_search_json(const pb_space* space, const char* mode, const char* options_json, char** result) {
  return Guard([&] {
    NotNull(space, "space");
    NotNull(mode, "mode");
    NotNull(result, "result");
    const PolarSpace& sp = *space->space;
    const Json o = ParseOptional(options_json);
    const SearchOptions opts = SearchOptionsFrom(o);
    const int bound = o.contains("bound") ? o.at("bound").get<int>() : 0;
    Require(bound >= 0, "bound must be non-negative");
    const std::string m = mode;
    SearchResult r;
    if (m == "min-blocking") {
      r = MinBlocking(sp, opts, bound);
    } else if (m == "enumerate-minimal") {
      Require(bound > 0, "enumerate-minimal needs a positive bound");
      r = EnumerateMinimal(sp, bound, opts);
    } else if (m == "min-cover") {
      r = MinCover(sp, opts);
    } else if (m == "min-maximal-spread") {
      r = MinMaximalPartialSpread(sp, opts, bound);
    } else {
      Fail(ErrorCode::kInvalidArgument, "unknown search mode '" + m + "'");
    }
    Json j{{"space", sp.name()}, {"space_hash", sp.content_hash()}, {"mode", m}};
    j.update(ToJson(r));
    Emit(j, result);
  });
}

pb_status pb_thresholds_json(int q, char** out) {
  return Guard([&] {
    NotNull(out, "out");
    Require(q >= 2, "q must be >= 2");
    const Epsilon eps = ComputeEpsilon(q, DefaultSearchOptions());
    Json th = Json::array();
    for (SpaceKind k : {SpaceKind::kElliptic, SpaceKind::kHermitianEven, SpaceKind::kParabolic})
      th.push_back(ToJson(TheoremThreshold(k, q, eps)));
    Json bounds = Json::object();
    for (SpaceKind k : {SpaceKind::kElliptic, SpaceKind::kParabolic, SpaceKind::kHermitianEven}) {
      const auto b = MaximalPartialSpreadBound(k, 3, q, eps);
      bounds[KindName(k)] = b ? Json(*b) : Json(nullptr);
    }
    Emit({{"q", q}, {"epsilon", ToJson(eps)}, {"thresholds", th}, {"partial_spread_bounds_rank3", bounds}}, out);
  });
}

pb_status pb_accept_json(const char* options_json, char** out, int* all_passed) {
  return Guard([&] {
    NotNull(out, "out");
    const Json o = ParseOptional(options_json);
    AcceptanceOptions opts;
    if (o.contains("only")) opts.only = o.at("only").get<std::vector<int>>();
    if (o.contains("workers")) opts.workers = o.at("workers").get<int>();
    Require(opts.workers >= 1, "workers must be >= 1");
    const auto results = RunAcceptance(opts);
    Json arr = Json::array();
    bool ok = true;
    for (const auto& r : results) {
      Json j = ToJson(r);
      j["line"] = FormatResult(r);
      arr.push_back(std::move(j));
      ok = ok && r.passed;
    }
    if (all_passed) *all_passed = ok ? 1 : 0;
    Emit({{"passed", ok}, {"criteria", arr}}, out);
  });
}

}  // extern "C"
