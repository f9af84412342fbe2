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

#ifndef POLARBLOCK_ACCEPTANCE_HPP_
#define POLARBLOCK_ACCEPTANCE_HPP_

#include <string>
#include <vector>

#include "polarblock/serialize.hpp"

namespace polarblock {

inline constexpr int kNumCriteria = 11;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

struct AcceptanceOptions {
  std::vector<int> only;  // empty = all
  int workers = 1;
};

std::vector<CriterionResult> RunAcceptance(const AcceptanceOptions& opts);

// "PASS  3  title  (1.23 s / 60 s)  detail"
std::string FormatResult(const CriterionResult& r);
Json ToJson(const CriterionResult& r);

}  // namespace polarblock

#endif  // POLARBLOCK_ACCEPTANCE_HPP_
