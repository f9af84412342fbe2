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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polarblock/error.hpp"
#include "polarblock/field.hpp"

using namespace polarblock;

namespace {

struct Order {
  int p;
  int h;
};

void CheckAgainstOracle(const Field& f, const oracle::PolyField& ref, int a, int b) {
  const auto x = static_cast<Elem>(a);
  const auto y = static_cast<Elem>(b);
  REQUIRE(f.add(x, y) == ref.Add(a, b));
  REQUIRE(f.mul(x, y) == ref.Mul(a, b));
  REQUIRE(f.add(f.sub(x, y), y) == x);
  REQUIRE(f.add(x, f.neg(x)) == 0);
  if (b != 0) REQUIRE(f.mul(f.div(x, y), y) == x);
}

}  // namespace

TEST_CASE("pinned moduli") {
  CHECK(Field::Make(2, 2)->modulus() == std::vector<int>{1, 1, 1});
  CHECK(Field::Make(2, 3)->modulus() == std::vector<int>{1, 1, 0, 1});
  CHECK(Field::Make(3, 2)->modulus() == std::vector<int>{1, 0, 1});
  CHECK(Field::Make(2, 4)->modulus() == std::vector<int>{1, 1, 0, 0, 1});
  CHECK(Field::Make(5, 2)->modulus() == std::vector<int>{1, 1, 1});
  CHECK(Field::Make(3, 3)->modulus() == std::vector<int>{1, 2, 0, 1});
}

TEST_CASE("small worked values") {
  const auto f2 = Field::Make(2, 1);
  CHECK(f2->add(1, 1) == 0);
  const auto f3 = Field::Make(3, 1);
  CHECK(f3->add(2, 2) == 1);
  const auto f4 = Field::Make(2, 2);
  const Elem w = 2;  // class of x
  CHECK(f4->mul(w, w) == 3);
  CHECK(f4->mul(w, 3) == 1);
  CHECK(f4->conjugate(w) == 3);
  CHECK(f4->conjugate(1) == 1);
  const auto f9 = Field::Make(3, 2);
  CHECK(f9->mul(3, 3) == 2);
  CHECK(f9->pow(3, 8) == 1);
  for (int a = 0; a < 9; ++a) CHECK(f9->conjugate(f9->conjugate(static_cast<Elem>(a))) == a);
  CHECK(f9->arith(ArithOp::kPow, 3, 4) == f9->pow(3, 4));
  CHECK(f9->arith(ArithOp::kAdd, 5, 7) == f9->add(5, 7));
}

TEST_CASE("field axioms exhaustively for q <= 9") {
  for (Order o : {Order{2, 1}, Order{3, 1}, Order{2, 2}, Order{5, 1}, Order{7, 1}, Order{2, 3}, Order{3, 2}}) {
    const auto f = Field::Make(o.p, o.h);
    CAPTURE(f->q());
    const oracle::PolyField ref(o.p, f->modulus());
    const int q = f->q();
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CheckAgainstOracle(*f, ref, a, b);
        for (int c = 0; c < q; ++c) {
          const auto x = static_cast<Elem>(a), y = static_cast<Elem>(b), z = static_cast<Elem>(c);
          REQUIRE(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
          REQUIRE(f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z)));
          REQUIRE(f->add(f->add(x, y), z) == f->add(x, f->add(y, z)));
        }
      }
    for (int a = 1; a < q; ++a) {
      REQUIRE(f->mul(static_cast<Elem>(a), f->inv(static_cast<Elem>(a))) == 1);
      REQUIRE(f->pow(static_cast<Elem>(a), q - 1) == 1);
    }
  }
}

TEST_CASE("field axioms on random samples for larger q") {
  std::mt19937 rng(7);
  for (Order o : {Order{2, 4}, Order{5, 2}, Order{3, 3}, Order{2, 5}, Order{7, 2}, Order{2, 6}, Order{3, 4},
                  Order{11, 2}, Order{5, 3}, Order{2, 8}, Order{31, 1}, Order{2, 10}}) {
    const auto f = Field::Make(o.p, o.h);
    CAPTURE(f->q());
    const oracle::PolyField ref(o.p, f->modulus());
    const int q = f->q();
    std::uniform_int_distribution<int> pick(0, q - 1);
    for (int i = 0; i < 4000; ++i) {
      const int a = pick(rng), b = pick(rng), c = pick(rng);
      CheckAgainstOracle(*f, ref, a, b);
      const auto x = static_cast<Elem>(a), y = static_cast<Elem>(b), z = static_cast<Elem>(c);
      REQUIRE(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
    }
    // Every nonzero element is invertible only when the modulus is irreducible.
    for (int a = 1; a < q; ++a) REQUIRE(f->mul(static_cast<Elem>(a), f->inv(static_cast<Elem>(a))) == 1);
  }
}

TEST_CASE("conjugation is the order-2 Frobenius power") {
  for (Order o : {Order{2, 2}, Order{3, 2}, Order{2, 4}, Order{5, 2}, Order{7, 2}}) {
    const auto f = Field::Make(o.p, o.h);
    const oracle::PolyField ref(o.p, f->modulus());
    const int q0 = f->subfield_order();
    CHECK(q0 * q0 == f->q());
    for (int a = 0; a < f->q(); ++a) {
      const auto x = static_cast<Elem>(a);
      REQUIRE(f->conjugate(x) == ref.Pow(a, q0));
      REQUIRE(f->conjugate(f->conjugate(x)) == x);
    }
  }
  CHECK_THROWS_AS(Field::Make(2, 3)->conjugate(1), Error);
}

TEST_CASE("squares and square roots in characteristic 2") {
  const auto f = Field::Make(2, 3);
  for (int a = 0; a < 8; ++a) {
    const auto x = static_cast<Elem>(a);
    CHECK(f->mul(f->sqrt_char2(x), f->sqrt_char2(x)) == x);
    CHECK(f->is_square(x));
  }
  const auto f5 = Field::Make(5, 1);
  int squares = 0;
  for (int a = 1; a < 5; ++a) squares += f5->is_square(static_cast<Elem>(a));
  CHECK(squares == 2);
}

TEST_CASE("bad arguments") {
  CHECK_THROWS_AS(Field::Make(4, 1), Error);
  CHECK_THROWS_AS(Field::Make(2, 0), Error);
  CHECK_THROWS_AS(Field::Make(2, 11), Error);
  CHECK_THROWS_AS(Field::Make(3, 1)->inv(0), Error);
}
