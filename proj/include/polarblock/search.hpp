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

#ifndef POLARBLOCK_SEARCH_HPP_
#define POLARBLOCK_SEARCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "polarblock/analysis.hpp"
#include "polarblock/bitset.hpp"
#include "polarblock/polar_space.hpp"

namespace polarblock {

struct SearchOptions {
  std::uint64_t max_nodes = 100000000;
  double max_seconds = 600;
  int workers = 1;
  // Stop collecting witnesses past this many (0 = keep all). The optimum
  // stays certified; `witnesses_truncated` is set.
  std::size_t max_witnesses = 0;
};

// Defaults, with max_seconds taken from POLARBLOCK_BUDGET_SECS when set.
SearchOptions DefaultSearchOptions();

struct SearchResult {
  // Smallest size found; -1 when nothing was found.
  int optimum = -1;
  // True when the search space was exhausted. With `optimum == -1` this
  // certifies that no admissible set exists.
  bool complete = false;
  std::vector<std::vector<int>> witnesses;  // sorted, lexicographic order
  bool witnesses_truncated = false;
  std::uint64_t nodes = 0;
  double seconds = 0;
  std::string note;
};

// Elements to hit and the candidates that hit them.
struct HittingInstance {
  int num_candidates = 0;
  std::vector<Bitset> hitters;  // per element: candidates hitting it
  std::vector<Bitset> hits;     // per candidate: elements it hits

  static HittingInstance FromHitters(int num_candidates, std::vector<Bitset> hitters);
};

enum class LeafFilter {
  kNone,
  // Elements and candidates are the same universe (generators); members
  // must be essential: each hits some element outside the set that no
  // other member hits.
  kEssential,
};

struct HittingConstraints {
  LeafFilter filter = LeafFilter::kNone;
  // Candidates that conflict with each chosen candidate; chosen sets stay
  // pairwise conflict-free.
  const std::vector<Bitset>* conflicts = nullptr;
  // Chosen sets may not contain any of these candidate sets.
  const std::vector<Bitset>* forbidden = nullptr;
};

// All hitting sets of size at most `k` reachable by the branching rule:
// this includes every inclusion-minimal one. Witnesses satisfy the filter.
SearchResult EnumerateHittingSets(const HittingInstance& inst, int k, const HittingConstraints& cons,
                                  const SearchOptions& opts);

// Smallest k admitting a hitting set; all witnesses of that size that pass
// the filter. `max_k` bounds the deepening.
SearchResult MinimumHittingSets(const HittingInstance& inst, int max_k, const HittingConstraints& cons,
                                const SearchOptions& opts);

HittingInstance BlockingInstance(const PolarSpace& space);
HittingInstance CoverInstance(int num_points, const std::vector<std::vector<int>>& lines);

// Minimum blocking size, with all minimum sets that are minimal as witnesses.
SearchResult MinBlocking(const PolarSpace& space, const SearchOptions& opts, int upper_bound = 0);
// Every minimal blocking set of size at most max_size.
SearchResult EnumerateMinimal(const PolarSpace& space, int max_size, const SearchOptions& opts);
// Exact minimum cover of points 0..num_points-1 by the given lines.
SearchResult MinCover(int num_points, const std::vector<std::vector<int>>& lines, const SearchOptions& opts);
SearchResult MinCover(const PolarSpace& space, const SearchOptions& opts);
SearchResult MinMaximalPartialSpread(const PolarSpace& space, const SearchOptions& opts, int upper_bound = 0);

struct PlanarResult {
  int q = 0;
  bool exists = false;
  int size = 0;             // smallest blocking set of PG(2,q) containing no line
  SearchResult search;
};

inline constexpr int kPlanarOracleMaxQ = 9;

// Exhaustive for q <= kPlanarOracleMaxQ.
PlanarResult SmallestNontrivialPg2(int q, const SearchOptions& opts);

// Epsilon from the planar oracle, or from the prime formula (q+1)/2 when q
// is out of oracle range or the search is incomplete.
Epsilon ComputeEpsilon(int q, const SearchOptions& opts);

}  // namespace polarblock

#endif  // POLARBLOCK_SEARCH_HPP_
