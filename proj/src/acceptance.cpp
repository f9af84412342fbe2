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

#include "polarblock/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "polarblock/error.hpp"

namespace polarblock {

namespace {

using Clock = std::chrono::steady_clock;

// Time limits per criterion, in seconds.
constexpr double kLimits[kNumCriteria + 1] = {0, 5, 30, 60, 120, 300, 120, 120, 60, 60, 120, 120};
// Criterion 6 applies its limit per space; criterion 11 gives the search
// this much of its limit.
constexpr double kHermitianSearchSeconds = 60;
constexpr int kHolesPerSpace = 50;
constexpr int kRandomSets = 100;
constexpr std::uint64_t kRandomSeed = 20260101;

class Context {
 public:
  explicit Context(const AcceptanceOptions& opts) : opts_(opts) {}

  SpacePtr Space(SpaceKind kind, int rank, int q) {
    const auto key = std::make_tuple(static_cast<int>(kind), rank, q);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    SpacePtr s = PolarSpace::Build({kind, rank, q});
    cache_.emplace(key, s);
    return s;
  }

  SearchOptions Search() const {
    SearchOptions o = DefaultSearchOptions();
    o.workers = opts_.workers;
    return o;
  }

  // Higher-rank cone examples, built once.
  struct Built {
    SpacePtr space;
    ConeExample example;
  };
  const std::vector<Built>& HigherRankExamples() {
    if (!examples_.empty()) return examples_;
    for (const SpacePtr& s : {Space(SpaceKind::kParabolic, 3, 2), Space(SpaceKind::kElliptic, 3, 2),
                              Space(SpaceKind::kHermitianEven, 3, 2), Space(SpaceKind::kParabolic, 4, 2)}) {
      for (ConeRow row : RowsFor(s->spec().kind)) examples_.push_back({s, MakeConeExample(s, row, std::nullopt, Search())});
    }
    return examples_;
  }

 private:
  const AcceptanceOptions& opts_;
  std::map<std::tuple<int, int, int>, SpacePtr> cache_;
  std::vector<Built> examples_;
};

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void Check(bool cond, const std::string& what) {
    if (!cond) {
      if (!passed) detail << "; ";
      else detail.str("");
      passed = false;
      detail << "FAILED " << what;
    }
  }
  void Note(const std::string& s) {
    if (!passed) return;
    if (detail.tellp() > 0) detail << "; ";
    detail << s;
  }
};

std::string Counts(const std::map<std::string, int>& m) {
  std::string out;
  for (const auto& [k, v] : m) out += (out.empty() ? "" : ", ") + k + " x" + std::to_string(v);
  return out;
}

void CountingIdentities(Context& ctx, Outcome& out) {
  int built = 0;
  for (int q : {2, 3}) {
    for (SpaceKind k : {SpaceKind::kParabolic, SpaceKind::kElliptic, SpaceKind::kHermitianEven}) {
      const SpacePtr s = ctx.Space(k, 2, q);
      const std::uint64_t st = s->s() * s->t();
      const auto np = static_cast<std::uint64_t>(s->num_points());
      const auto ng = static_cast<std::uint64_t>(s->num_generators());
      out.Check(np == (st + 1) * (s->s() + 1), s->name() + " point count " + std::to_string(np));
      out.Check(ng == (st + 1) * (s->t() + 1), s->name() + " generator count " + std::to_string(ng));
      if (q == 2 || k == SpaceKind::kElliptic) out.Note(s->name() + " " + std::to_string(np) + "/" + std::to_string(ng));
      ++built;
    }
  }
  out.Note(std::to_string(built) + " spaces exact");
}

void GqAxiomSuite(Context& ctx, Outcome& out) {
  struct Row {
    SpaceKind kind;
    int q;
    long long s;
    long long t;
  };
  std::vector<Row> rows;
  for (long long q : {2LL, 3LL}) {
    rows.push_back({SpaceKind::kParabolic, static_cast<int>(q), q, q});
    rows.push_back({SpaceKind::kElliptic, static_cast<int>(q), q, q * q});
    rows.push_back({SpaceKind::kHermitianEven, static_cast<int>(q), q * q, q * q * q});
    rows.push_back({SpaceKind::kHyperbolic, static_cast<int>(q), q, 1});
    rows.push_back({SpaceKind::kHermitianOdd, static_cast<int>(q), q * q, q});
  }
  for (const Row& r : rows) {
    const SpacePtr s = ctx.Space(r.kind, 2, r.q);
    std::vector<std::vector<int>> lines;
    for (int g = 0; g < s->num_generators(); ++g) lines.push_back(s->generator_points(g));
    const GqResult gq = CheckGqAxioms(s->num_points(), lines);
    out.Check(gq.ok && gq.s == r.s && gq.t == r.t,
              s->name() + " order (" + std::to_string(gq.s) + "," + std::to_string(gq.t) + ") " + gq.failure);
  }
  out.Note(std::to_string(rows.size()) + " spaces at q=2,3 have the expected order");
}

// Every witness classifies into `allowed`; labels re-verify.
std::map<std::string, int> ClassifyAll(const SpacePtr& s, const std::vector<std::vector<int>>& sets,
                                       const std::set<ClassKind>& allowed, Outcome& out) {
  std::map<std::string, int> hist;
  for (const auto& w : sets) {
    const ClassLabel lab = Classify(s, w);
    ++hist[ToString(lab.kind)];
    out.Check(allowed.count(lab.kind) > 0, s->name() + " set classified " + ToString(lab.kind));
    out.Check(VerifyLabel(s, w, lab), s->name() + " label witness did not re-verify");
  }
  return hist;
}

void RankTwoParabolic(Context& ctx, Outcome& out) {
  for (int q : {2, 3}) {
    const SpacePtr s = ctx.Space(SpaceKind::kParabolic, 2, q);
    const SearchResult r = MinBlocking(*s, ctx.Search());
    const int t1 = static_cast<int>(s->t()) + 1;
    out.Check(r.complete, s->name() + " search incomplete");
    out.Check(r.optimum == t1, s->name() + " optimum " + std::to_string(r.optimum));
    out.Check(!r.witnesses.empty(), s->name() + " no minimal witnesses");
    const SearchResult e = EnumerateMinimal(*s, t1, ctx.Search());
    out.Check(e.complete && e.witnesses == r.witnesses, s->name() + " enumeration disagrees with the minimum search");
    const auto hist = ClassifyAll(s, r.witnesses, {ClassKind::kPencil, ClassKind::kSubGqSpread}, out);
    out.Note(s->name() + " optimum " + std::to_string(r.optimum) + ": " + Counts(hist));
  }
}

void RankTwoElliptic(Context& ctx, Outcome& out) {
  const SpacePtr s = ctx.Space(SpaceKind::kElliptic, 2, 2);
  const Threshold th = TheoremThreshold(SpaceKind::kElliptic, 2);
  out.Check(th.max_delta == 0, "threshold admits delta up to " + std::to_string(th.max_delta));
  const SearchResult m = MinBlocking(*s, ctx.Search());
  out.Check(m.complete && m.optimum == 5, "optimum " + std::to_string(m.optimum));
  const SearchResult e = EnumerateMinimal(*s, 5 + th.max_delta, ctx.Search());
  out.Check(e.complete, "enumeration incomplete");
  const auto hist = ClassifyAll(s, e.witnesses, {ClassKind::kPencil, ClassKind::kCoverOfSectionQ4}, out);
  out.Note("threshold " + th.formula + " admits delta=0; " + std::to_string(e.witnesses.size()) +
           " minimal sets: " + Counts(hist));
}

void RankThreeParabolic(Context& ctx, Outcome& out) {
  const SpacePtr s = ctx.Space(SpaceKind::kParabolic, 3, 2);
  const Epsilon eps = ComputeEpsilon(2, ctx.Search());
  const Threshold th = TheoremThreshold(SpaceKind::kParabolic, 2, eps);
  out.Check(th.applicable && th.max_delta == 0, "threshold admits delta up to " + std::to_string(th.max_delta));
  const int size = 3 + std::max(th.max_delta, 0);
  const SearchResult m = MinBlocking(*s, ctx.Search());
  out.Check(m.complete && m.optimum == 3, "optimum " + std::to_string(m.optimum));
  const SearchResult e = EnumerateMinimal(*s, size, ctx.Search());
  out.Check(e.complete, "enumeration incomplete");
  const auto hist =
      ClassifyAll(s, e.witnesses, {ClassKind::kConeOverConicPencil, ClassKind::kConeOverQplus3Spread}, out);
  out.Note(std::to_string(e.witnesses.size()) + " minimal sets of size 3: " + Counts(hist));
}

std::uint64_t RowSize(ConeRow row, std::uint64_t q) {
  switch (row) {
    case ConeRow::kConicPencil:
    case ConeRow::kQplusSpread: return q + 1;
    case ConeRow::kEllipticPencil:
    case ConeRow::kQ4Cover: return q * q + 1;
    case ConeRow::kHermitianPencil: return q * q * q + 1;
  }
  return 0;
}

void TableRoundTrip(Context& ctx, Outcome& out) {
  std::map<std::string, double> per_space;
  int examples = 0;
  for (const SpacePtr& s : {ctx.Space(SpaceKind::kParabolic, 3, 2), ctx.Space(SpaceKind::kElliptic, 3, 2),
                            ctx.Space(SpaceKind::kHermitianEven, 3, 2), ctx.Space(SpaceKind::kParabolic, 4, 2)}) {
    const auto t0 = Clock::now();
    for (ConeRow row : RowsFor(s->spec().kind)) {
      const ConeExample ex = MakeConeExample(s, row, std::nullopt, ctx.Search());
      const std::string tag = s->name() + " " + ToString(row);
      out.Check(ex.members.size() == RowSize(row, s->spec().q), tag + " size " + std::to_string(ex.members.size()));
      out.Check(IsBlocking(*s, ex.members) && IsMinimal(*s, ex.members), tag + " not a minimal blocking set");
      const ClassLabel lab = Classify(s, ex.members);
      out.Check(lab.kind == RowLabel(row, s->rank()), tag + " classified " + ToString(lab.kind));
      out.Check(VerifyLabel(s, ex.members, lab), tag + " label witness did not re-verify");
      ++examples;
    }
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    out.Check(dt <= kLimits[6], s->name() + " took " + std::to_string(dt) + " s");
  }
  out.Note(std::to_string(examples) + " examples over Q(6,2), Q-(7,2), H(6,4), Q(8,2) round-trip");
}

// Picks uniformly among generators blocking at least half as many new
// generators as the best one, then strips.
std::vector<int> GreedyMinimal(const PolarSpace& s, std::mt19937_64& rng) {
  Bitset blocked(static_cast<std::size_t>(s.num_generators()));
  std::vector<int> chosen;
  std::vector<std::size_t> gain(s.num_generators());
  while (blocked.count() < static_cast<std::size_t>(s.num_generators())) {
    std::size_t best = 0;
    for (int g = 0; g < s.num_generators(); ++g) {
      gain[g] = s.meets(g).count() - s.meets(g).and_count(blocked);
      best = std::max(best, gain[g]);
    }
    std::vector<int> pool;
    for (int g = 0; g < s.num_generators(); ++g)
      if (gain[g] > 0 && 2 * gain[g] >= best) pool.push_back(g);
    const int pick = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    chosen.push_back(pick);
    blocked |= s.meets(pick);
  }
  std::sort(chosen.begin(), chosen.end());
  return StripInessential(s, chosen);
}

std::string SizeHistogram(const std::map<int, int>& m) {
  std::string out;
  for (const auto& [k, v] : m) out += (out.empty() ? "" : ", ") + ("size " + std::to_string(k)) + " x" + std::to_string(v);
  return out;
}

void SectionTwoDiagnostics(Context& ctx, Outcome& out) {
  int applicable = 0;
  int constructed = 0;
  for (int q : {2, 3}) {
    for (SpaceKind k : {SpaceKind::kParabolic, SpaceKind::kElliptic, SpaceKind::kHermitianEven}) {
      const SpacePtr s = ctx.Space(k, 2, q);
      for (ConeRow row : RowsFor(k)) {
        const ConeExample ex = MakeConeExample(s, row, std::nullopt, ctx.Search());
        ++constructed;
        const Section2Report rep = CheckSection2Identities(*s, ex.members);
        if (!rep.applicable) continue;
        ++applicable;
        for (const CheckItem& it : rep.items)
          out.Check(it.passed, s->name() + " " + ToString(row) + " item (" + it.id + "): " + it.detail);
      }
    }
  }
  const SpacePtr s = ctx.Space(SpaceKind::kParabolic, 2, 3);
  std::mt19937_64 rng(kRandomSeed);
  int random_applicable = 0;
  int augmented = 0;
  std::map<int, int> sizes;
  for (int i = 0; i < kRandomSets; ++i) {
    const std::vector<int> l = GreedyMinimal(*s, rng);
    out.Check(IsBlocking(*s, l), "random set not blocking");
    const Section2Report rep = CheckSection2Identities(*s, l);
    if (!rep.applicable) continue;
    ++random_applicable;
    ++sizes[static_cast<int>(l.size())];
    for (const CheckItem& it : rep.items) out.Check(it.passed, "random Q(4,3) set item (" + it.id + "): " + it.detail);
    // The counting checks only need a blocking set, so one extra generator
    // gives a delta = 1 instance.
    std::vector<int> plus = l;
    while (plus.size() == l.size()) {
      const int g = std::uniform_int_distribution<int>(0, s->num_generators() - 1)(rng);
      if (!std::binary_search(l.begin(), l.end(), g)) plus.push_back(g);
    }
    std::sort(plus.begin(), plus.end());
    const Section2Report rep2 = CheckSection2Identities(*s, plus);
    if (!rep2.applicable) continue;
    ++augmented;
    for (const CheckItem& it : rep2.items)
      out.Check(it.passed, "augmented Q(4,3) set item (" + it.id + "): " + it.detail);
  }
  out.Note(std::to_string(applicable) + "/" + std::to_string(constructed) + " constructed examples checked; " +
           std::to_string(random_applicable) + "/" + std::to_string(kRandomSets) + " random Q(4,3) sets applicable (" +
           SizeHistogram(sizes) + "), plus " + std::to_string(augmented) + " with one extra generator");
}

void ConeHyperplanes(Context& ctx, Outcome& out) {
  int hyperplanes = 0;
  std::string mins;
  for (const auto& b : ctx.HigherRankExamples()) {
    if (b.space->rank() != 3) continue;
    const HyperplaneCheck hc = CheckConeCoverHyperplanes(*b.space, b.example.row, b.example.members);
    hyperplanes += hc.hyperplanes;
    out.Check(hc.passed, b.space->name() + " " + ToString(b.example.row) + " min " + std::to_string(hc.min_outside) +
                             " < bound " + std::to_string(hc.bound));
    mins += (mins.empty() ? "" : ", ") + ToString(b.example.row) + " " + std::to_string(hc.min_outside) + ">=" +
            std::to_string(hc.bound);
  }
  out.Note(std::to_string(hyperplanes) + " hyperplanes of the cone spans: " + mins);
}

void EpsilonOracle(Context& ctx, Outcome& out) {
  const PlanarResult p2 = SmallestNontrivialPg2(2, ctx.Search());
  out.Check(p2.search.complete && !p2.exists, "q=2 reported a non-trivial blocking set");
  const PlanarResult p3 = SmallestNontrivialPg2(3, ctx.Search());
  out.Check(p3.search.complete && p3.exists && p3.size == 6, "q=3 size " + std::to_string(p3.size));
  const Epsilon e3 = ComputeEpsilon(3, ctx.Search());
  out.Check(e3.known && e3.exists && e3.value == (3 + 1) / 2, "q=3 epsilon differs from (q+1)/2");
  out.Note("q=2 none exists; q=3 size 6, epsilon 2 = (q+1)/2");
}

void ProjectionOracle(Context& ctx, Outcome& out) {
  int projected = 0;
  for (const auto& b : ctx.HigherRankExamples()) {
    const CoverageProfile prof = ComputeCoverage(*b.space, b.example.members);
    const std::size_t n = prof.holes.size();
    const std::size_t take = std::min<std::size_t>(n, kHolesPerSpace);
    for (std::size_t i = 0; i < take; ++i) {
      const int hole = prof.holes[i * n / take];
      const ProjectedSet pj = ProjectBlockingSet(b.space, b.example.members, hole);
      out.Check(IsBlocking(*pj.quotient.space, pj.members),
                b.space->name() + " " + ToString(b.example.row) + " hole " + std::to_string(hole));
      out.Check(pj.members.size() <= b.example.members.size(), "projection grew the set");
      ++projected;
    }
  }
  out.Note(std::to_string(projected) + " projections blocking in the quotient");
}

void HermitianFacts(Context& ctx, Outcome& out) {
  const SpacePtr s = ctx.Space(SpaceKind::kHermitianEven, 2, 2);
  const std::vector<int> pencil = Pencil(*s, DefaultVertex(*s, 0));
  out.Check(pencil.size() == 9, "pencil size " + std::to_string(pencil.size()));
  out.Check(IsBlocking(*s, pencil) && IsMinimal(*s, pencil), "pencil is not a minimal blocking set");
  SearchOptions o = ctx.Search();
  o.max_seconds = std::min(o.max_seconds, kHermitianSearchSeconds);
  const SearchResult r = MinBlocking(*s, o, 9);
  if (r.complete) {
    out.Check(r.optimum >= 1 && r.optimum <= 9, "optimum " + std::to_string(r.optimum));
    std::map<std::string, int> hist;
    for (const auto& w : r.witnesses) ++hist[ToString(Classify(s, w).kind)];
    out.Note("pencil of 9 verified; min_blocking complete, optimum " + std::to_string(r.optimum) + " (" +
             std::to_string(r.witnesses.size()) + " minimal witnesses: " + Counts(hist) + ")");
  } else {
    out.Note("pencil of 9 verified; min_blocking incomplete within budget (allowed)");
  }
}

struct Criterion {
  int id;
  const char* title;
  void (*run)(Context&, Outcome&);
};

constexpr Criterion kCriteria[] = {
    {1, "counting identities", CountingIdentities},
    {2, "GQ axiom suite", GqAxiomSuite},
    {3, "Q(4,2), Q(4,3) minimum sets are pencils or reguli", RankTwoParabolic},
    {4, "Q-(5,2) minimal sets are pencils or section covers", RankTwoElliptic},
    {5, "Q(6,2) minimal sets are the two cone examples", RankThreeParabolic},
    {6, "cone examples round-trip through classify", TableRoundTrip},
    {7, "counting checks on rank-2 blocking sets", SectionTwoDiagnostics},
    {8, "cone covers against hyperplanes at q=2", ConeHyperplanes},
    {9, "planar epsilon oracle", EpsilonOracle},
    {10, "projection from holes stays blocking", ProjectionOracle},
    {11, "H(4,4) pencil and minimum search", HermitianFacts},
};

}  // namespace

std::vector<CriterionResult> RunAcceptance(const AcceptanceOptions& opts) {
  for (int id : opts.only)
    Require(id >= 1 && id <= kNumCriteria, "criterion id " + std::to_string(id) + " out of range");
  Context ctx(opts);
  std::vector<CriterionResult> results;
  for (const Criterion& c : kCriteria) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), c.id) == opts.only.end()) continue;
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    r.limit_seconds = kLimits[c.id];
    Outcome out;
    const auto t0 = Clock::now();
    try {
      c.run(ctx, out);
    } catch (const std::exception& e) {
      out.Check(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    // Criterion 6 bounds each space separately inside its run.
    if (c.id != 6) out.Check(r.seconds <= r.limit_seconds, "time limit exceeded");
    r.passed = out.passed;
    r.detail = out.detail.str();
    results.push_back(std::move(r));
  }
  return results;
}

std::string FormatResult(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof(head), "%s %2d  %s  (%.2f s / %.0f s%s)", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds, r.limit_seconds, r.id == 6 ? " per space" : "");
  return std::string(head) + (r.detail.empty() ? "" : "  " + r.detail);
}

Json ToJson(const CriterionResult& r) {
  return {{"id", r.id},           {"title", r.title},   {"passed", r.passed},
          {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}, {"detail", r.detail}};
}

}  // namespace polarblock
