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

#include "polarblock/field.hpp"

#include <map>
#include <string>
#include <utility>

#include "polarblock/error.hpp"

namespace polarblock {
namespace {

using Poly = std::vector<int>;  // coefficients over GF(p), constant first

// Pinned moduli; every other (p, h) uses the smallest monic irreducible.
const std::map<std::pair<int, int>, Poly>& FixedModuli() {
  static const std::map<std::pair<int, int>, Poly> table = {
      {{2, 2}, {1, 1, 1}},      // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},   // x^3 + x + 1
      {{3, 2}, {1, 0, 1}},      // x^2 + 1
      {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
      {{5, 2}, {1, 1, 1}},      // x^2 + x + 1
      {{3, 3}, {1, 2, 0, 1}},   // x^3 + 2x + 1
  };
  return table;
}

int Degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

int InvModP(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  Fail(ErrorCode::kInvalidArgument, "no inverse mod p");
}

// Remainder of f modulo g over GF(p); g must be nonzero.
Poly PolyMod(Poly f, const Poly& g, int p) {
  const int dg = Degree(g);
  const int lead_inv = InvModP(g[dg], p);
  for (int d = Degree(f); d >= dg; d = Degree(f)) {
    const int c = f[d] * lead_inv % p;
    for (int i = 0; i <= dg; ++i) {
      f[d - dg + i] = ((f[d - dg + i] - c * g[i]) % p + p) % p;
    }
  }
  return f;
}

bool IsIrreducible(const Poly& f, int p) {
  const int n = Degree(f);
  for (int d = 1; d <= n / 2; ++d) {
    // All monic polynomials of degree d.
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      int c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (Degree(PolyMod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

Poly SmallestIrreducible(int p, int h) {
  int count = 1;
  for (int i = 0; i < h; ++i) count *= p;
  for (int code = 0; code < count; ++code) {
    Poly f(h + 1, 0);
    int c = code;
    for (int i = 0; i < h; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[h] = 1;
    if (IsIrreducible(f, p)) return f;
  }
  Fail(ErrorCode::kInvalidArgument, "no irreducible polynomial found");
}

Poly Decode(int a, int p, int h) {
  Poly r(h, 0);
  for (int i = 0; i < h; ++i) {
    r[i] = a % p;
    a /= p;
  }
  return r;
}

int Encode(const Poly& r, int p, int h) {
  int a = 0;
  for (int i = h - 1; i >= 0; --i) a = a * p + (i < static_cast<int>(r.size()) ? r[i] : 0);
  return a;
}

}  // namespace

bool IsPrime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::shared_ptr<const Field> Field::Make(int p, int h) {
  Require(IsPrime(p), "field characteristic must be prime, got " + std::to_string(p));
  Require(h >= 1, "extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < h; ++i) {
    q *= p;
    Require(q <= 1024, "field order exceeds supported maximum 1024");
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->h_ = h;
  f->q_ = static_cast<int>(q);
  if (h == 1) {
    f->modulus_ = {0, 1};
  } else if (auto it = FixedModuli().find({p, h}); it != FixedModuli().end()) {
    f->modulus_ = it->second;
  } else {
    f->modulus_ = SmallestIrreducible(p, h);
  }

  const int n = f->q_;
  f->add_.resize(static_cast<std::size_t>(n) * n);
  f->mul_.resize(static_cast<std::size_t>(n) * n);
  f->neg_.resize(n);
  f->inv_.assign(n, 0);

  std::vector<Poly> dec(n);
  for (int a = 0; a < n; ++a) dec[a] = Decode(a, p, h);

  for (int a = 0; a < n; ++a) {
    Poly ng(h);
    for (int i = 0; i < h; ++i) ng[i] = (p - dec[a][i]) % p;
    f->neg_[a] = static_cast<Elem>(Encode(ng, p, h));
    for (int b = 0; b < n; ++b) {
      Poly s(h);
      for (int i = 0; i < h; ++i) s[i] = (dec[a][i] + dec[b][i]) % p;
      f->add_[f->idx(a, b)] = static_cast<Elem>(Encode(s, p, h));

      Poly prod(2 * h, 0);
      for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) prod[i + j] = (prod[i + j] + dec[a][i] * dec[b][j]) % p;
      const Poly r = (h == 1) ? Poly{prod[0]} : PolyMod(prod, f->modulus_, p);
      f->mul_[f->idx(a, b)] = static_cast<Elem>(Encode(r, p, h));
    }
  }
  for (int a = 1; a < n; ++a) {
    for (int b = 1; b < n; ++b) {
      if (f->mul_[f->idx(a, b)] == 1) {
        f->inv_[a] = static_cast<Elem>(b);
        break;
      }
    }
    Require(f->inv_[a] != 0, "modulus is not irreducible");
  }

  f->square_.assign(n, 0);
  for (int a = 0; a < n; ++a) f->square_[f->mul_[f->idx(a, a)]] = 1;
  if (p == 2) {
    f->sqrt2_.assign(n, 0);
    for (int a = 0; a < n; ++a) f->sqrt2_[f->mul_[f->idx(a, a)]] = static_cast<Elem>(a);
  }
  if (h % 2 == 0) {
    int q0 = 1;
    for (int i = 0; i < h / 2; ++i) q0 *= p;
    f->conj_.resize(n);
    for (int a = 0; a < n; ++a) f->conj_[a] = f->pow(static_cast<Elem>(a), q0);
  }
  return f;
}

Elem Field::inv(Elem a) const {
  Require(a != 0, "division by zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Elem Field::arith(ArithOp op, Elem a, std::uint64_t b) const {
  Require(a < q_, "element out of range");
  if (op != ArithOp::kPow) Require(b < static_cast<std::uint64_t>(q_), "element out of range");
  const auto eb = static_cast<Elem>(b);
  switch (op) {
    case ArithOp::kAdd: return add(a, eb);
    case ArithOp::kSub: return sub(a, eb);
    case ArithOp::kMul: return mul(a, eb);
    case ArithOp::kDiv: return div(a, eb);
    case ArithOp::kPow: return pow(a, b);
  }
  Fail(ErrorCode::kInvalidArgument, "unknown arithmetic op");
}

int Field::subfield_order() const {
  Require(has_conjugation(), "field order " + std::to_string(q_) + " is not a square");
  int q0 = 1;
  for (int i = 0; i < h_ / 2; ++i) q0 *= p_;
  return q0;
}

Elem Field::conjugate(Elem a) const {
  Require(has_conjugation(), "field order " + std::to_string(q_) + " is not a square");
  return conj_[a];
}

Elem Field::sqrt_char2(Elem a) const {
  Require(p_ == 2, "sqrt_char2 needs characteristic 2");
  return sqrt2_[a];
}

}  // namespace polarblock
