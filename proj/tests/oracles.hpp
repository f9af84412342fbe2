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

// Independent reference computations for the tests. Nothing here calls into
// the code under test except for reading raw coordinates.

#ifndef POLARBLOCK_TESTS_ORACLES_HPP_
#define POLARBLOCK_TESTS_ORACLES_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "polarblock/polar_space.hpp"

namespace oracle {

// GF(p^h) by schoolbook polynomial arithmetic on base-p little-endian digits.
class PolyField {
 public:
  PolyField(int p, std::vector<int> modulus) : p_(p), mod_(std::move(modulus)) {
    h_ = static_cast<int>(mod_.size()) - 1;
    q_ = 1;
    for (int i = 0; i < h_; ++i) q_ *= p_;
  }
  int q() const { return q_; }

  std::vector<int> Digits(int a) const {
    std::vector<int> d(h_);
    for (int i = 0; i < h_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }
  int Pack(const std::vector<int>& d) const {
    int a = 0;
    for (int i = h_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  }
  int Add(int a, int b) const {
    auto x = Digits(a), y = Digits(b);
    for (int i = 0; i < h_; ++i) x[i] = (x[i] + y[i]) % p_;
    return Pack(x);
  }
  int Mul(int a, int b) const {
    const auto x = Digits(a), y = Digits(b);
    std::vector<int> prod(2 * h_, 0);
    for (int i = 0; i < h_; ++i)
      for (int j = 0; j < h_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    // Reduce with the monic modulus from the top degree down.
    for (int d = 2 * h_ - 1; d >= h_; --d) {
      const int c = prod[d];
      if (!c) continue;
      for (int i = 0; i <= h_; ++i) prod[d - h_ + i] = ((prod[d - h_ + i] - c * mod_[i]) % p_ + p_) % p_;
    }
    prod.resize(h_);
    return Pack(prod);
  }
  int Pow(int a, std::uint64_t e) const {
    int r = 1;
    while (e--) r = Mul(r, a);
    return r;
  }

 private:
  int p_;
  int h_;
  int q_;
  std::vector<int> mod_;
};

inline std::uint64_t IPow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Calls fn on every k-subset of {0..n-1}, in lexicographic order. fn returns
// false to stop early.
inline void ForEachSubset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  if (k > n) return;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (!fn(c)) return;
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Generator-vs-generator intersection matrix from raw point lists, with no
// use of the space's cached incidence bitsets.
inline std::vector<std::vector<char>> MeetMatrix(const polarblock::PolarSpace& space) {
  const int n = space.num_generators();
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> on(n, std::vector<char>(space.num_points(), 0));
  for (int g = 0; g < n; ++g)
    for (int p : space.generator_points(g)) on[g][p] = 1;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int p : space.generator_points(a))
        if (on[b][p]) {
          m[a][b] = m[b][a] = 1;
          break;
        }
  return m;
}

inline bool Blocks(const std::vector<std::vector<char>>& meet, const std::vector<int>& set) {
  for (std::size_t g = 0; g < meet.size(); ++g) {
    bool hit = false;
    for (int m : set)
      if (meet[g][m]) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

// Each member has a generator outside the set meeting it and no other member.
inline bool AllEssential(const std::vector<std::vector<char>>& meet, const std::vector<int>& set) {
  std::vector<char> in(meet.size(), 0);
  for (int m : set) in[m] = 1;
  for (int m : set) {
    bool found = false;
    for (std::size_t g = 0; g < meet.size() && !found; ++g) {
      if (in[g] || !meet[g][m]) continue;
      int hits = 0;
      for (int o : set) hits += meet[g][o];
      found = hits == 1;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace oracle

#endif  // POLARBLOCK_TESTS_ORACLES_HPP_
