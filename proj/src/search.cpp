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

#include "polarblock/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "polarblock/error.hpp"
#include "polarblock/projective.hpp"

namespace polarblock {

SearchOptions DefaultSearchOptions() {
  SearchOptions o;
  if (const char* env = std::getenv("POLARBLOCK_BUDGET_SECS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) o.max_seconds = v;
  }
  return o;
}

HittingInstance HittingInstance::FromHitters(int num_candidates, std::vector<Bitset> hitters) {
  HittingInstance inst;
  inst.num_candidates = num_candidates;
  inst.hits.assign(num_candidates, Bitset(hitters.size()));
  for (std::size_t e = 0; e < hitters.size(); ++e) {
    Require(hitters[e].size() == static_cast<std::size_t>(num_candidates), "hitter row has the wrong width");
    hitters[e].for_each([&](std::size_t c) { inst.hits[c].set(e); });
  }
  inst.hitters = std::move(hitters);
  return inst;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
  const HittingInstance& inst;
  const HittingConstraints& cons;
  const SearchOptions& opts;
  int k;
  Clock::time_point start;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<int> min_leaf{-1};
};

struct State {
  std::vector<int> chosen;
  Bitset chosen_bits;
  Bitset covered;
  Bitset allowed;
  std::vector<int> count;  // members hitting each element (essential filter only)
};

class Worker {
 public:
  explicit Worker(Shared& sh) : sh_(sh) {}

  // Expands one node. Children are pushed to `out` when non-null, searched
  // recursively otherwise.
  void Visit(State& st, std::vector<State>* out) {
    if (sh_.stop.load(std::memory_order_relaxed)) return;
    const std::uint64_t n = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > sh_.opts.max_nodes) {
      sh_.stop = true;
      return;
    }
    if ((++local_ & 1023) == 0) {
      const double secs = std::chrono::duration<double>(Clock::now() - sh_.start).count();
      if (secs > sh_.opts.max_seconds) {
        sh_.stop = true;
        return;
      }
    }
    if (Pruned(st)) return;

    const HittingInstance& inst = sh_.inst;
    const std::size_t ne = inst.hitters.size();
    const std::size_t uncovered_count = ne - st.covered.count();
    if (uncovered_count == 0) {
      Leaf(st);
      return;
    }
    if (static_cast<int>(st.chosen.size()) >= sh_.k) return;

    Bitset uncovered(ne);
    uncovered.set_all();
    uncovered.and_not(st.covered);

    int branch = -1;
    std::size_t best = ~std::size_t{0};
    uncovered.for_each([&](std::size_t e) {
      const std::size_t c = inst.hitters[e].and_count(st.allowed);
      if (c < best) {
        best = c;
        branch = static_cast<int>(e);
      }
    });
    if (best == 0) return;
    if (static_cast<int>(st.chosen.size()) + LowerBound(st, uncovered, uncovered_count) > sh_.k) return;

    Bitset allowed = st.allowed;
    const Bitset cand = inst.hitters[branch] & st.allowed;
    cand.for_each([&](std::size_t c) {
      if (sh_.stop.load(std::memory_order_relaxed)) return;
      allowed.reset(c);
      State child;
      child.chosen = st.chosen;
      child.chosen.push_back(static_cast<int>(c));
      child.chosen_bits = st.chosen_bits;
      child.chosen_bits.set(c);
      child.covered = st.covered | inst.hits[c];
      child.allowed = allowed;
      if (sh_.cons.conflicts) child.allowed.and_not((*sh_.cons.conflicts)[c]);
      if (sh_.cons.filter == LeafFilter::kEssential) {
        child.count = st.count;
        inst.hits[c].for_each([&](std::size_t e) { ++child.count[e]; });
      }
      if (out) out->push_back(std::move(child));
      else Visit(child, nullptr);
    });
  }

  std::vector<std::vector<int>> witnesses;
  bool truncated = false;

 private:
  bool Pruned(const State& st) const {
    if (sh_.cons.forbidden) {
      for (const Bitset& f : *sh_.cons.forbidden)
        if (f.is_subset_of(st.chosen_bits)) return true;
    }
    if (sh_.cons.filter == LeafFilter::kEssential) {
      // A member whose private elements are all members can never become
      // essential again: adding members only shrinks that set.
      for (int m : st.chosen)
        if (!HasOutsidePrivate(st, m)) return true;
    }
    return false;
  }

  bool HasOutsidePrivate(const State& st, int m) const {
    bool found = false;
    const Bitset& row = sh_.inst.hits[m];
    for (std::size_t e = row.next(0); e < row.size() && !found; e = row.next(e + 1))
      if (st.count[e] == 1 && !st.chosen_bits.test(e)) found = true;
    return found;
  }

  int LowerBound(const State& st, const Bitset& uncovered, std::size_t uncovered_count) const {
    const HittingInstance& inst = sh_.inst;
    gains_.clear();
    st.allowed.for_each([&](std::size_t c) {
      const std::size_t g = inst.hits[c].and_count(uncovered);
      if (g) gains_.push_back(g);
    });
    std::sort(gains_.begin(), gains_.end(), std::greater<>());
    int lb1 = 0;
    std::size_t acc = 0;
    for (std::size_t g : gains_) {
      if (acc >= uncovered_count) break;
      acc += g;
      ++lb1;
    }
    if (acc < uncovered_count) return sh_.k + 1;

    // Uncovered elements with pairwise disjoint candidate sets each need
    // their own member.
    order_.clear();
    uncovered.for_each([&](std::size_t e) {
      order_.emplace_back(inst.hitters[e].and_count(st.allowed), static_cast<int>(e));
    });
    std::sort(order_.begin(), order_.end());
    Bitset used(static_cast<std::size_t>(inst.num_candidates));
    int lb2 = 0;
    for (const auto& [cnt, e] : order_) {
      const Bitset c = inst.hitters[e] & st.allowed;
      if (c.intersects(used)) continue;
      used |= c;
      ++lb2;
    }
    return std::max(lb1, lb2);
  }

  void Leaf(const State& st) {
    const int size = static_cast<int>(st.chosen.size());
    if (size > sh_.k) return;
    int cur = sh_.min_leaf.load();
    while ((cur < 0 || size < cur) && !sh_.min_leaf.compare_exchange_weak(cur, size)) {
    }
    if (sh_.cons.filter == LeafFilter::kEssential) {
      for (int m : st.chosen)
        if (!HasOutsidePrivate(st, m)) return;
    }
    if (sh_.opts.max_witnesses && witnesses.size() >= sh_.opts.max_witnesses) {
      truncated = true;
      return;
    }
    std::vector<int> w = st.chosen;
    std::sort(w.begin(), w.end());
    witnesses.push_back(std::move(w));
  }

  Shared& sh_;
  std::uint64_t local_ = 0;
  mutable std::vector<std::size_t> gains_;
  mutable std::vector<std::pair<std::size_t, int>> order_;
};

struct EnumOutput {
  SearchResult result;
  int min_leaf = -1;
};

EnumOutput RunEnumeration(const HittingInstance& inst, int k, const HittingConstraints& cons,
                          const SearchOptions& opts, Clock::time_point start) {
  Require(cons.filter != LeafFilter::kEssential ||
              static_cast<std::size_t>(inst.num_candidates) == inst.hitters.size(),
          "essential filter needs elements and candidates to coincide");
  Shared sh{inst, cons, opts, k, start};
  State root;
  root.chosen_bits = Bitset(static_cast<std::size_t>(inst.num_candidates));
  root.covered = Bitset(inst.hitters.size());
  root.allowed = Bitset(static_cast<std::size_t>(inst.num_candidates));
  root.allowed.set_all();
  if (cons.filter == LeafFilter::kEssential) root.count.assign(inst.hitters.size(), 0);

  std::vector<State> children;
  Worker root_worker(sh);
  root_worker.Visit(root, &children);

  const int nw = std::max(1, std::min<int>(opts.workers, static_cast<int>(children.size())));
  std::vector<std::vector<std::vector<int>>> per_child(children.size());
  std::vector<char> child_truncated(children.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= children.size()) break;
      Worker w(sh);
      w.Visit(children[i], nullptr);
      per_child[i] = std::move(w.witnesses);
      child_truncated[i] = w.truncated;
    }
  };
  if (nw == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nw; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  EnumOutput out;
  SearchResult& r = out.result;
  r.witnesses = std::move(root_worker.witnesses);
  r.witnesses_truncated = root_worker.truncated;
  for (std::size_t i = 0; i < children.size(); ++i) {
    for (auto& w : per_child[i]) r.witnesses.push_back(std::move(w));
    r.witnesses_truncated = r.witnesses_truncated || child_truncated[i];
  }
  std::sort(r.witnesses.begin(), r.witnesses.end());
  r.witnesses.erase(std::unique(r.witnesses.begin(), r.witnesses.end()), r.witnesses.end());
  if (opts.max_witnesses && r.witnesses.size() > opts.max_witnesses) {
    r.witnesses.resize(opts.max_witnesses);
    r.witnesses_truncated = true;
  }
  r.complete = !sh.stop.load();
  r.nodes = std::min<std::uint64_t>(sh.nodes.load(), opts.max_nodes);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  for (const auto& w : r.witnesses)
    if (r.optimum < 0 || static_cast<int>(w.size()) < r.optimum) r.optimum = static_cast<int>(w.size());
  out.min_leaf = sh.min_leaf.load();
  return out;
}

int RootLowerBound(const HittingInstance& inst) {
  // Coverage bound over all candidates.
  std::vector<std::size_t> gains;
  for (const auto& h : inst.hits) gains.push_back(h.count());
  std::sort(gains.begin(), gains.end(), std::greater<>());
  std::size_t acc = 0;
  int lb = 0;
  for (std::size_t g : gains) {
    if (acc >= inst.hitters.size()) break;
    acc += g;
    ++lb;
  }
  return std::max(lb, inst.hitters.empty() ? 0 : 1);
}

// Iterative deepening; `use_min_leaf` makes the optimum the smallest hitting
// set regardless of the filter.
SearchResult Deepen(const HittingInstance& inst, int max_k, const HittingConstraints& cons, const SearchOptions& opts,
                    bool use_min_leaf) {
  const auto start = Clock::now();
  SearchResult total;
  total.complete = true;
  for (int k = RootLowerBound(inst); k <= max_k; ++k) {
    EnumOutput o = RunEnumeration(inst, k, cons, opts, start);
    total.nodes += o.result.nodes;
    total.seconds = o.result.seconds;
    if (!o.result.complete) {
      total.complete = false;
      total.note = "budget exhausted at size " + std::to_string(k);
      if (use_min_leaf ? o.min_leaf >= 0 : o.result.optimum >= 0) {
        total.optimum = use_min_leaf ? o.min_leaf : o.result.optimum;
        total.witnesses = std::move(o.result.witnesses);
        total.note += "; optimum is an upper bound";
      }
      return total;
    }
    const int found = use_min_leaf ? o.min_leaf : o.result.optimum;
    if (found >= 0) {
      total.optimum = found;
      total.witnesses = std::move(o.result.witnesses);
      total.witnesses_truncated = o.result.witnesses_truncated;
      return total;
    }
  }
  total.note = "no admissible set of size <= " + std::to_string(max_k);
  return total;
}

}  // namespace

SearchResult EnumerateHittingSets(const HittingInstance& inst, int k, const HittingConstraints& cons,
                                  const SearchOptions& opts) {
  Require(k >= 0, "size bound must be non-negative");
  return RunEnumeration(inst, k, cons, opts, Clock::now()).result;
}

SearchResult MinimumHittingSets(const HittingInstance& inst, int max_k, const HittingConstraints& cons,
                                const SearchOptions& opts) {
  return Deepen(inst, max_k, cons, opts, false);
}

HittingInstance BlockingInstance(const PolarSpace& space) {
  std::vector<Bitset> rows;
  rows.reserve(space.num_generators());
  for (int g = 0; g < space.num_generators(); ++g) rows.push_back(space.meets(g));
  return HittingInstance::FromHitters(space.num_generators(), std::move(rows));
}

HittingInstance CoverInstance(int num_points, const std::vector<std::vector<int>>& lines) {
  std::vector<Bitset> rows(num_points, Bitset(lines.size()));
  for (std::size_t l = 0; l < lines.size(); ++l) {
    for (int p : lines[l]) {
      Require(p >= 0 && p < num_points, "cover instance point out of range");
      rows[p].set(l);
    }
  }
  return HittingInstance::FromHitters(static_cast<int>(lines.size()), std::move(rows));
}

SearchResult MinBlocking(const PolarSpace& space, const SearchOptions& opts, int upper_bound) {
  const HittingInstance inst = BlockingInstance(space);
  HittingConstraints cons;
  cons.filter = LeafFilter::kEssential;
  const int max_k = upper_bound > 0 ? upper_bound : space.num_generators();
  // The essential filter only selects witnesses here; the optimum counts
  // every blocking set.
  return Deepen(inst, max_k, cons, opts, true);
}

SearchResult EnumerateMinimal(const PolarSpace& space, int max_size, const SearchOptions& opts) {
  const HittingInstance inst = BlockingInstance(space);
  HittingConstraints cons;
  cons.filter = LeafFilter::kEssential;
  SearchResult r = EnumerateHittingSets(inst, max_size, cons, opts);
  if (!r.complete) r.note = "budget exhausted; list is partial";
  return r;
}

SearchResult MinCover(int num_points, const std::vector<std::vector<int>>& lines, const SearchOptions& opts) {
  const HittingInstance inst = CoverInstance(num_points, lines);
  return Deepen(inst, static_cast<int>(lines.size()), {}, opts, false);
}

SearchResult MinCover(const PolarSpace& space, const SearchOptions& opts) {
  std::vector<std::vector<int>> lines;
  for (int g = 0; g < space.num_generators(); ++g) lines.push_back(space.generator_points(g));
  return MinCover(space.num_points(), lines, opts);
}

SearchResult MinMaximalPartialSpread(const PolarSpace& space, const SearchOptions& opts, int upper_bound) {
  const HittingInstance inst = BlockingInstance(space);
  std::vector<Bitset> conflicts;
  conflicts.reserve(space.num_generators());
  for (int g = 0; g < space.num_generators(); ++g) conflicts.push_back(space.meets(g));
  HittingConstraints cons;
  cons.conflicts = &conflicts;
  const int max_k = upper_bound > 0 ? upper_bound : space.num_generators();
  return Deepen(inst, max_k, cons, opts, false);
}

PlanarResult SmallestNontrivialPg2(int q, const SearchOptions& opts) {
  Require(q >= 2 && q <= kPlanarOracleMaxQ, "planar oracle supports 2 <= q <= " + std::to_string(kPlanarOracleMaxQ),
          ErrorCode::kUnsupported);
  int p = 0;
  int h = 0;
  for (int c = 2; c <= q; ++c) {
    if (!IsPrime(c)) continue;
    int e = 0;
    int v = q;
    while (v % c == 0) {
      v /= c;
      ++e;
    }
    if (v == 1) {
      p = c;
      h = e;
      break;
    }
  }
  Require(p > 0, "q must be a prime power");
  const FieldPtr f = Field::Make(p, h);
  const std::vector<Vec> pts = EnumeratePgPoints(2, *f);
  const int np = static_cast<int>(pts.size());
  // Lines are the dual points; element = line, candidate = point.
  std::vector<Bitset> hitters;
  std::vector<Bitset> line_points;
  for (const Vec& dual : pts) {
    Bitset row(static_cast<std::size_t>(np));
    for (int i = 0; i < np; ++i) {
      Elem dot = 0;
      for (int j = 0; j < 3; ++j) dot = f->add(dot, f->mul(dual[j], pts[i][j]));
      if (dot == 0) row.set(static_cast<std::size_t>(i));
    }
    line_points.push_back(row);
    hitters.push_back(std::move(row));
  }
  const HittingInstance inst = HittingInstance::FromHitters(np, std::move(hitters));
  HittingConstraints cons;
  cons.forbidden = &line_points;
  PlanarResult r;
  r.q = q;
  r.search = Deepen(inst, np, cons, opts, false);
  r.exists = r.search.optimum >= 0;
  r.size = r.exists ? r.search.optimum : 0;
  return r;
}

Epsilon ComputeEpsilon(int q, const SearchOptions& opts) {
  Epsilon e;
  if (q <= kPlanarOracleMaxQ) {
    const PlanarResult r = SmallestNontrivialPg2(q, opts);
    if (r.search.complete) {
      e.known = true;
      e.exists = r.exists;
      e.value = r.exists ? r.size - (q + 1) : 0;
      e.note = r.exists ? "planar search: smallest non-trivial blocking set has " + std::to_string(r.size) + " points"
                        : "planar search: every blocking set contains a line";
      return e;
    }
  }
  if (IsPrime(q)) {
    e.known = true;
    e.exists = true;
    e.value = (q + 1) / 2;
    e.symbolic = true;
    e.note = "prime formula (q+1)/2";
    return e;
  }
  e.note = "epsilon unknown for q = " + std::to_string(q);
  return e;
}

}  // namespace polarblock
