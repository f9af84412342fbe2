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

#ifndef POLARBLOCK_POLAR_SPACE_HPP_
#define POLARBLOCK_POLAR_SPACE_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polarblock/bitset.hpp"
#include "polarblock/form.hpp"
#include "polarblock/projective.hpp"

namespace polarblock {

// Polar space families, named by their rank-r ambient:
//   kParabolic      Q(2r, q)
//   kElliptic       Q-(2r+1, q)
//   kHyperbolic     Q+(2r-1, q)
//   kHermitianEven  H(2r, q^2)
//   kHermitianOdd   H(2r-1, q^2)
enum class SpaceKind { kParabolic, kElliptic, kHyperbolic, kHermitianEven, kHermitianOdd };

struct SpaceSpec {
  SpaceKind kind = SpaceKind::kParabolic;
  int rank = 2;
  // Base order; hermitian spaces live over GF(q^2).
  int q = 2;

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

std::string KindName(SpaceKind kind);        // "q", "qminus", "qplus", "h", "h-odd"
std::optional<SpaceKind> ParseKindName(const std::string& name);
// Human-readable, e.g. "Q-(5,2)" or "H(4,4)".
std::string SpaceName(const SpaceSpec& spec);
FormKind FormKindOf(SpaceKind kind);
int AmbientDim(const SpaceSpec& spec);
// s and t of the family: points per line minus one, and the size of the
// rank-1 quotient minus one (the pencil size of a rank-2 member is t+1).
std::uint64_t ParamS(const SpaceSpec& spec);
std::uint64_t ParamT(const SpaceSpec& spec);

inline constexpr int kDenseMeetLimit = 20000;

struct BuildOptions {
  std::size_t max_generators = 1000000;
};

// A fully enumerated polar space. Points are the singular points in
// lexicographic order; generators are sorted by canonical basis. Indices are
// stable across runs. Immutable after Build.
class PolarSpace {
 public:
  static std::shared_ptr<const PolarSpace> Build(const SpaceSpec& spec, const BuildOptions& opts = {});
  // Builds the space of an arbitrary nondegenerate form; `spec` labels it.
  static std::shared_ptr<const PolarSpace> FromForm(const SpaceSpec& spec, Form form, const BuildOptions& opts = {});

  const SpaceSpec& spec() const { return spec_; }
  const Form& form() const { return form_; }
  const Field& field() const { return form_.field(); }
  int rank() const { return spec_.rank; }
  int ambient_dim() const { return form_.ambient_dim(); }
  std::uint64_t s() const { return ParamS(spec_); }
  std::uint64_t t() const { return ParamT(spec_); }
  std::string name() const { return SpaceName(spec_); }

  int num_points() const { return static_cast<int>(points_.size()); }
  int num_generators() const { return static_cast<int>(generators_.size()); }
  const std::vector<Vec>& points() const { return points_; }
  const Vec& point(int i) const { return points_[i]; }
  const std::vector<Subspace>& generators() const { return generators_; }
  const Subspace& generator(int i) const { return generators_[i]; }

  // Index of a (not necessarily normalized) vector, if it is a singular point.
  std::optional<int> point_index(const Vec& v) const;
  std::optional<int> generator_index(const Subspace& g) const;

  const std::vector<int>& generator_points(int g) const { return gen_points_[g]; }
  const std::vector<int>& point_generators(int p) const { return point_gens_[p]; }
  // Generators sharing at least one point with g (g included). Rows are
  // materialized on first use above kDenseMeetLimit generators.
  const Bitset& meets(int g) const;
  bool meets(int a, int b) const { return gen_point_bits_[a].intersects(gen_point_bits_[b]); }
  // Singular points collinear with p in the space (p included).
  const Bitset& collinear(int p) const { return collinear_[p]; }
  const Bitset& generator_point_set(int g) const { return gen_point_bits_[g]; }

  int points_per_generator() const { return gen_points_.empty() ? 0 : static_cast<int>(gen_points_[0].size()); }
  int generators_per_point() const { return point_gens_.empty() ? 0 : static_cast<int>(point_gens_[0].size()); }
  bool is_regular() const;

  // Point indices lying in the subspace s.
  std::vector<int> points_in(const Subspace& s) const;
  // Generators through (containing) s.
  std::vector<int> generators_through(const Subspace& s) const;
  // Generators contained in s.
  std::vector<int> generators_inside(const Subspace& s) const;

  // FNV-1a over the form, points and generators; 16 hex digits.
  const std::string& content_hash() const { return hash_; }

 private:
  PolarSpace(const SpaceSpec& spec, Form form) : spec_(spec), form_(std::move(form)) {}
  void Enumerate(const BuildOptions& opts);

  SpaceSpec spec_;
  Form form_;
  std::vector<Vec> points_;
  std::unordered_map<std::uint64_t, int> point_lookup_;
  std::vector<Bitset> collinear_;
  std::vector<Subspace> generators_;
  std::unordered_map<std::string, int> generator_lookup_;
  std::vector<std::vector<int>> gen_points_;
  std::vector<Bitset> gen_point_bits_;
  std::vector<std::vector<int>> point_gens_;
  mutable std::vector<Bitset> meets_;
  std::unique_ptr<std::once_flag[]> meets_once_;
  std::string hash_;
};

using SpacePtr = std::shared_ptr<const PolarSpace>;

// The quotient geometry P^perp / P, realized on a nondegenerate complement
// W = <P, Y>^perp where Y is the first singular point not perpendicular to P.
// Subspaces through P in P^perp correspond to subspaces of W.
struct Quotient {
  SpacePtr parent;
  int point = -1;
  Subspace complement;  // W, in parent coordinates
  SpacePtr space;       // polar space on W, in W coordinates

  // U must contain the point and lie in its perp.
  Subspace Project(const Subspace& u) const;
  // span(P, B) in parent coordinates.
  Subspace Lift(const Subspace& b) const;
  // Generator index map: parent generator through P -> quotient generator.
  int ProjectGenerator(int parent_generator) const;
  int LiftGenerator(int quotient_generator) const;
};

Quotient QuotientAtPoint(const SpacePtr& space, int point);

// Iterated quotient along a totally singular subspace v (dim >= 0).
struct QuotientChain {
  SpacePtr root;
  Subspace vertex;
  std::vector<Quotient> steps;

  const SpacePtr& space() const { return steps.empty() ? root : steps.back().space; }
  Subspace Project(const Subspace& u) const;
  Subspace Lift(const Subspace& b) const;
  int ProjectGenerator(int root_generator) const;
  int LiftGenerator(int final_generator) const;
};

QuotientChain QuotientAtSubspace(const SpacePtr& space, const Subspace& vertex);

// A section of the polar space by a subspace, recognized as a cone
// pi_k B over a nondegenerate base B via radical plus point counts.
struct SectionType {
  bool recognized = false;
  bool hermitian = false;
  int vertex_dim = -1;
  FormKind base_kind = FormKind::kParabolic;
  int base_dim = -1;
  std::string label;  // e.g. "Q(4,2)" or "pi_0 Q-(3,2)"
};

struct Section {
  Subspace subspace;
  std::vector<int> points;
  std::vector<int> generators;  // generators contained in the subspace
  Subspace radical;             // singular radical, parent coordinates
  SectionType type;
};

Section SubspaceSection(const PolarSpace& space, const Subspace& s);
// Requires codimension 1.
Section HyperplaneSection(const PolarSpace& space, const Subspace& h);

// Hyperplanes of the ambient space in lexicographic order of their
// normalized dual coordinates.
std::vector<Subspace> AllHyperplanes(const Field& f, int ambient_dim);
// Hyperplanes of the subspace s (codimension 1 in s).
std::vector<Subspace> HyperplanesOf(const Field& f, const Subspace& s);

}  // namespace polarblock

#endif  // POLARBLOCK_POLAR_SPACE_HPP_
