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

// JSON views of the library types. Field elements are plain integers.

#ifndef POLARBLOCK_SERIALIZE_HPP_
#define POLARBLOCK_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "polarblock/analysis.hpp"
#include "polarblock/constructions.hpp"
#include "polarblock/polar_space.hpp"
#include "polarblock/search.hpp"

namespace polarblock {

using Json = nlohmann::ordered_json;

Json ToJson(const SpaceSpec& spec);
SpaceSpec SpaceSpecFromJson(const Json& j);

Json ToJson(const Subspace& s);
Subspace SubspaceFromJson(const Field& f, const Json& j, int length);

Json ToJson(const Form& form);

// Counts, parameters and hash; with `full`, also points and generators.
Json SpaceToJson(const PolarSpace& space, bool full);

struct SetFile {
  SpaceSpec spec;
  std::string space_hash;
  std::vector<int> members;
};

Json SetToJson(const PolarSpace& space, const std::vector<int>& members, bool with_matrices = false);
SetFile SetFromJson(const Json& j);
// Rebuilds the space named by the file and checks its hash.
SpacePtr BuildSpaceFor(const SetFile& file);

Json ToJson(const CoverageProfile& profile);
Json ToJson(const Section2Report& report);
Json ToJson(const GqResult& gq);
Json ToJson(const ClassLabel& label);
Json ToJson(const SearchResult& result);
Json ToJson(const Threshold& threshold);
Json ToJson(const Epsilon& eps);
Json ToJson(const HyperplaneCheck& check);

// Blocking, minimality, partial-spread predicates, coverage and the rank-2
// counting checks.
Json VerifyReport(const PolarSpace& space, const std::vector<int>& members);

}  // namespace polarblock

#endif  // POLARBLOCK_SERIALIZE_HPP_
