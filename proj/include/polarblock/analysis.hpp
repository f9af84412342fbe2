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

#ifndef POLARBLOCK_ANALYSIS_HPP_
#define POLARBLOCK_ANALYSIS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polarblock/bitset.hpp"
#include "polarblock/polar_space.hpp"

namespace polarblock {

// A set of generators of a polar space, as sorted distinct indices.
class BlockingSet {
 public:
  BlockingSet() = default;
  // Sorts and validates; throws on duplicates or out-of-range indices.
  BlockingSet(SpacePtr space, std::vector<int> members);

  const SpacePtr& space() const { return space_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(int g) const;
  Bitset member_bits() const;
  // |L| - (t+1), with t the family parameter of the space.
  long long delta() const;

 private:
  SpacePtr space_;
  std::vector<int> members_;
};

bool IsBlocking(const PolarSpace& space, const std::vector<int>& members);
// Members pi for which some generator outside L meets pi and no other member.
std::vector<int> EssentialElements(const PolarSpace& space, const std::vector<int>& members);
bool IsMinimal(const PolarSpace& space, const std::vector<int>& members);
bool IsCover(const PolarSpace& space, const std::vector<int>& members);
bool IsSpread(const PolarSpace& space, const std::vector<int>& members);
bool IsPartialSpread(const PolarSpace& space, const std::vector<int>& members);
bool IsMaximalPartialSpread(const PolarSpace& space, const std::vector<int>& members);

// Repeatedly drops the lexicographically least member whose removal keeps the
// set blocking, until none remains.
std::vector<int> StripInessential(const PolarSpace& space, std::vector<int> members);

struct CoverageProfile {
  int size = 0;
  long long delta = 0;
  Bitset covered;            // M, as point indices
  std::vector<int> weight;   // w(P) for every point; 0 off M
  long long excess = 0;      // W = sum over M of (w(P) - 1)
  std::vector<int> holes;
  bool rank2 = false;
  // Rank 2 only. b[i]: non-member lines meeting exactly i members.
  // b_tilde[i]: non-member lines containing exactly i covered points.
  std::vector<long long> b;
  std::vector<long long> b_tilde;
  // hole_b[k][i]: lines on holes[k] meeting exactly i members.
  std::vector<std::vector<long long>> hole_b;

  int covered_count() const { return static_cast<int>(covered.count()); }
};

CoverageProfile ComputeCoverage(const PolarSpace& space, const std::vector<int>& members);

struct CheckItem {
  std::string id;      // "a", "b", "c", "e", "f"
  bool passed = true;
  std::string detail;  // witness on failure
};

struct Section2Report {
  bool applicable = false;
  std::string reason;  // why not applicable
  long long delta = 0;
  std::vector<CheckItem> items;
  bool all_passed() const;
};

// Counting identities and inequalities for a blocking set of a rank-2 space
// with delta < s - 1.
Section2Report CheckSection2Identities(const PolarSpace& space, const std::vector<int>& members);

struct ProjectedSet {
  Quotient quotient;
  std::vector<int> members;  // generator indices of the quotient space
};

// Each member g maps to span(X, g cap X^perp) seen in the quotient at the
// hole X. Duplicates merge. Throws when X is covered.
ProjectedSet ProjectBlockingSet(const SpacePtr& space, const std::vector<int>& members, int hole);

struct GqResult {
  bool ok = false;
  long long s = 0;
  long long t = 0;
  std::string failure;  // first violated axiom with witness
};

// `lines` are point-index sets over points 0..num_points-1.
GqResult CheckGqAxioms(int num_points, const std::vector<std::vector<int>>& lines);

enum class ClassKind {
  kPencil,
  kSubGqSpread,
  kCoverOfSectionQ4,
  kConeOverConicPencil,
  kConeOverQplus3Spread,
  kConeOverEllipticPencil,
  kConeOverQ4Cover,
  kConeOverHermitianPencil,
  kUnknown,
};

std::string ToString(ClassKind kind);
std::optional<ClassKind> ParseClassKind(const std::string& name);

struct ClassLabel {
  ClassKind kind = ClassKind::kUnknown;
  Subspace vertex;                 // pencil / cone vertex
  std::optional<Subspace> hyperplane;  // CoverOfSectionQ4: the section
  long long sub_s = 0;             // SubGqSpread: order of the subquadrangle
  long long sub_t = 0;
  std::string base;                // cone labels: label of the rank-2 image
  std::vector<int> base_members;   // cone labels: image in the quotient
  std::string note;
};

// Decision procedure for minimal blocking sets. Throws when L is not
// blocking or not minimal.
ClassLabel Classify(const SpacePtr& space, const std::vector<int>& members);
// Independently re-derives the label's claim from its witness data.
bool VerifyLabel(const SpacePtr& space, const std::vector<int>& members, const ClassLabel& label);

// Size of the smallest blocking set of PG(2, q) containing no line, minus
// q+1. `exists == false` means every blocking set contains a line.
struct Epsilon {
  bool known = false;
  bool exists = false;
  long long value = 0;
  bool symbolic = false;  // derived from the prime formula, not searched
  std::string note;
};

struct Threshold {
  SpaceKind kind = SpaceKind::kParabolic;
  int q = 0;
  bool applicable = false;
  std::string formula;
  double value = 0;       // the bound on delta
  bool strict = true;     // delta < value (true) or delta <= value
  int max_delta = -1;     // largest admissible integer delta, -1 if none
  std::string note;

  bool Admits(long long delta) const;
};

// Theorem thresholds for Q-, H and Q families (rank >= 2). The Q family
// needs epsilon.
Threshold TheoremThreshold(SpaceKind kind, int q, const Epsilon& eps = {});

// Lower bound on maximal partial spreads for rank >= 3, or nullopt.
std::optional<double> MaximalPartialSpreadBound(SpaceKind kind, int rank, int q, const Epsilon& eps = {});

}  // namespace polarblock

#endif  // POLARBLOCK_ANALYSIS_HPP_
