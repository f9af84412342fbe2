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

#ifndef POLARBLOCK_FIELD_HPP_
#define POLARBLOCK_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <vector>

namespace polarblock {

// Field elements are encoded as the integer sum a_i p^i of the coset
// representative sum a_i x^i, so 0 encodes zero and 1 encodes one.
using Elem = std::uint16_t;

enum class ArithOp { kAdd, kSub, kMul, kDiv, kPow };

// Table-driven GF(p^h) for p^h <= 1024. Immutable after construction.
class Field {
 public:
  // Throws Error(kInvalidArgument) for non-prime p or unsupported order.
  static std::shared_ptr<const Field> Make(int p, int h);

  int p() const { return p_; }
  int h() const { return h_; }
  int q() const { return q_; }

  // Coefficients of the monic modulus, constant term first (size h+1).
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[a]; }
  // Throws on a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  // Non-negative exponent; pow(0, 0) == 1.
  Elem pow(Elem a, std::uint64_t e) const;
  Elem arith(ArithOp op, Elem a, std::uint64_t b) const;

  // True when q is a square q0^2, i.e. h is even.
  bool has_conjugation() const { return h_ % 2 == 0; }
  // Order of the fixed subfield of conjugation, q0 = sqrt(q).
  int subfield_order() const;
  // a -> a^q0. Throws when q is not a square.
  Elem conjugate(Elem a) const;

  // x -> x^2 inverse in characteristic 2; throws otherwise.
  Elem sqrt_char2(Elem a) const;
  bool is_square(Elem a) const { return square_[a] != 0; }

 private:
  Field() = default;
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  int p_ = 0;
  int h_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> conj_;
  std::vector<Elem> sqrt2_;
  std::vector<std::uint8_t> square_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool IsPrime(int n);

}  // namespace polarblock

#endif  // POLARBLOCK_FIELD_HPP_
