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

#include "polarblock/projective.hpp"

#include <algorithm>

#include "polarblock/error.hpp"

namespace polarblock {

bool NormalizePoint(const Field& f, Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      if (v[i] == 1) return true;
      const Elem s = f.inv(v[i]);
      for (std::size_t j = i; j < v.size(); ++j) v[j] = f.mul(v[j], s);
      return true;
    }
  }
  return false;
}

std::vector<Vec> Subspace::rows() const {
  std::vector<Vec> out;
  out.reserve(pivots_.size());
  for (int i = 0; i < rank(); ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.len_ != b.len_) return a.len_ < b.len_;
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return a.rows_ < b.rows_;
}

std::string Subspace::key() const {
  std::string k;
  k.reserve(rows_.size() * 2 + 2);
  k.push_back(static_cast<char>(len_));
  for (Elem e : rows_) {
    k.push_back(static_cast<char>(e & 0xFF));
    k.push_back(static_cast<char>(e >> 8));
  }
  return k;
}

Subspace Canonicalize(const Field& f, std::span<const Vec> rows, int len) {
  if (!rows.empty()) len = static_cast<int>(rows.front().size());
  Require(len >= 0, "negative vector length");
  std::vector<Vec> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    Require(static_cast<int>(r.size()) == len, "dimension mismatch among rows");
    m.push_back(r);
  }

  Subspace s(len);
  int lead = 0;
  for (int col = 0; col < len && lead < static_cast<int>(m.size()); ++col) {
    int sel = -1;
    for (int r = lead; r < static_cast<int>(m.size()); ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[lead], m[sel]);
    const Elem s_inv = f.inv(m[lead][col]);
    for (int j = col; j < len; ++j) m[lead][j] = f.mul(m[lead][j], s_inv);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == lead || m[r][col] == 0) continue;
      const Elem c = m[r][col];
      for (int j = col; j < len; ++j) m[r][j] = f.sub(m[r][j], f.mul(c, m[lead][j]));
    }
    s.pivots_.push_back(col);
    ++lead;
  }
  s.rows_.reserve(static_cast<std::size_t>(lead) * len);
  for (int r = 0; r < lead; ++r) s.rows_.insert(s.rows_.end(), m[r].begin(), m[r].end());
  return s;
}

Subspace PointSubspace(const Field& f, const Vec& v) {
  const Vec rows[] = {v};
  return Canonicalize(f, rows, static_cast<int>(v.size()));
}

Subspace Span(const Field& f, const Subspace& a, const Subspace& b) {
  Require(a.length() == b.length(), "ambient mismatch in span");
  std::vector<Vec> rows = a.rows();
  for (auto& r : b.rows()) rows.push_back(std::move(r));
  return Canonicalize(f, rows, a.length());
}

Subspace Annihilator(const Field& f, const Subspace& s) {
  const int len = s.length();
  const auto& piv = s.pivots();
  std::vector<bool> is_pivot(len, false);
  for (int c : piv) is_pivot[c] = true;
  // For each free column j: y_j = 1, y_{pivot_i} = -row_i[j].
  std::vector<Vec> basis;
  for (int j = 0; j < len; ++j) {
    if (is_pivot[j]) continue;
    Vec y(len, 0);
    y[j] = 1;
    for (int i = 0; i < s.rank(); ++i) y[piv[i]] = f.neg(s.row(i)[j]);
    basis.push_back(std::move(y));
  }
  return Canonicalize(f, basis, len);
}

Subspace Meet(const Field& f, const Subspace& a, const Subspace& b) {
  Require(a.length() == b.length(), "ambient mismatch in meet");
  return Annihilator(f, Span(f, Annihilator(f, a), Annihilator(f, b)));
}

bool Contains(const Field& f, const Subspace& s, std::span<const Elem> v) {
  Require(static_cast<int>(v.size()) == s.length(), "ambient mismatch in membership");
  Vec r(v.begin(), v.end());
  const auto& piv = s.pivots();
  for (int i = 0; i < s.rank(); ++i) {
    const Elem c = r[piv[i]];
    if (c == 0) continue;
    auto row = s.row(i);
    for (int j = 0; j < s.length(); ++j) r[j] = f.sub(r[j], f.mul(c, row[j]));
  }
  return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

bool IsSubspaceOf(const Field& f, const Subspace& inner, const Subspace& outer) {
  for (int i = 0; i < inner.rank(); ++i)
    if (!Contains(f, outer, inner.row(i))) return false;
  return true;
}

Vec CoordinatesIn(const Subspace& s, std::span<const Elem> v) {
  Vec c(s.rank());
  for (int i = 0; i < s.rank(); ++i) c[i] = v[s.pivots()[i]];
  return c;
}

Vec FromCoordinates(const Field& f, const Subspace& s, std::span<const Elem> coords) {
  Require(static_cast<int>(coords.size()) == s.rank(), "coordinate count mismatch");
  Vec v(s.length(), 0);
  for (int i = 0; i < s.rank(); ++i) {
    if (coords[i] == 0) continue;
    auto row = s.row(i);
    for (int j = 0; j < s.length(); ++j) v[j] = f.add(v[j], f.mul(coords[i], row[j]));
  }
  return v;
}

namespace {

// Normalized nonzero vectors of length k in lexicographic order.
std::vector<Vec> NormalizedVectors(int k, int q) {
  std::vector<Vec> out;
  for (int lead = 0; lead < k; ++lead) {
    // Positions lead+1..k-1 free; counts in lexicographic order.
    const int free = k - lead - 1;
    std::uint64_t count = 1;
    for (int i = 0; i < free; ++i) count *= static_cast<std::uint64_t>(q);
    for (std::uint64_t code = 0; code < count; ++code) {
      Vec v(k, 0);
      v[lead] = 1;
      std::uint64_t c = code;
      for (int j = k - 1; j > lead; --j) {
        v[j] = static_cast<Elem>(c % q);
        c /= q;
      }
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Vec> PointsOf(const Field& f, const Subspace& s) {
  std::vector<Vec> out;
  for (const auto& c : NormalizedVectors(s.rank(), f.q())) out.push_back(FromCoordinates(f, s, c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> EnumeratePgPoints(int n, const Field& f) {
  Require(n >= 0, "projective dimension must be >= 0");
  return NormalizedVectors(n + 1, f.q());
}

std::uint64_t Theta(int n, std::uint64_t q) {
  std::uint64_t t = 0;
  std::uint64_t pw = 1;
  for (int i = 0; i <= n; ++i) {
    t += pw;
    pw *= q;
  }
  return t;
}

std::uint64_t PackVec(std::span<const Elem> v, int q) {
  std::uint64_t k = 0;
  for (Elem e : v) k = k * static_cast<std::uint64_t>(q) + e;
  return k;
}

}  // namespace polarblock
