// Copyright 2026 The qconv Authors
//
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


#include "qconv/pauli.h"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oracle.h"

using namespace qconv;

namespace {

std::string random_pauli_string(std::mt19937_64& rng, size_t n) {
  std::string s(n, 'I');
  for (auto& c : s) c = "IXYZ"[rng() % 4];
  return s;
}

}  // namespace

TEST(Pauli, ParsesGeneratorRows) {
  Pauli xz = Pauli::from_string("XZ");
  EXPECT_EQ(xz.x_bits().str(), "10");
  EXPECT_EQ(xz.z_bits().str(), "01");

  Pauli id = Pauli::from_string("II");
  EXPECT_TRUE(id.is_identity());

  Pauli m = Pauli::from_string("ZXXZ");
  EXPECT_EQ(m.x_bits().str(), "0110");
  EXPECT_EQ(m.z_bits().str(), "1001");
}

TEST(Pauli, ParseErrorNamesPosition) {
  try {
    Pauli::from_string("XZQI");
    FAIL() << "expected a parse error";
  } catch (const PauliParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(Pauli::from_string(""), PauliParseError);
  EXPECT_THROW(Pauli::from_string("xz"), PauliParseError);
}

TEST(Pauli, SingleQubitEncoding) {
  EXPECT_EQ(Pauli::from_string("I").at(1), SingleQubitPauli::I);
  EXPECT_EQ(Pauli::from_string("X").at(1), SingleQubitPauli::X);
  EXPECT_EQ(Pauli::from_string("Y").at(1), SingleQubitPauli::Y);
  EXPECT_EQ(Pauli::from_string("Z").at(1), SingleQubitPauli::Z);
  EXPECT_TRUE(x_bit(SingleQubitPauli::Y) && z_bit(SingleQubitPauli::Y));
  EXPECT_TRUE(x_bit(SingleQubitPauli::X) && !z_bit(SingleQubitPauli::X));
}

TEST(Pauli, StringRoundTrip) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; t++) {
    std::string s = random_pauli_string(rng, 1 + rng() % 150);
    EXPECT_EQ(Pauli::from_string(s).str(), s);
  }
}

TEST(Pauli, SymplecticProductExamples) {
  EXPECT_TRUE(symplectic_product(Pauli::from_string("X"), Pauli::from_string("Z")));
  EXPECT_FALSE(symplectic_product(Pauli::identity(5), Pauli::from_string("XYZXY")));
  EXPECT_FALSE(symplectic_product(Pauli::from_string("ZXXZ"), Pauli::from_string("IZXX")));
  EXPECT_EQ(symplectic_product(Pauli::from_string("ZXXZ"), Pauli::from_string("IZXX")),
            oracle::anticommute("ZXXZ", "IZXX"));
}

TEST(Pauli, SymplecticProductMatchesMatrixCommutator) {
  const std::string letters = "IXYZ";
  for (char a : letters) {
    for (char b : letters) {
      bool expected = oracle::anticommute_by_matrix(a, b);
      EXPECT_EQ(symplectic_product(Pauli::from_string(std::string(1, a)),
                                   Pauli::from_string(std::string(1, b))),
                expected)
          << a << " " << b;
      EXPECT_EQ(anticommutes(static_cast<uint8_t>(Pauli::from_string(std::string(1, a)).at(1)),
                             static_cast<uint8_t>(Pauli::from_string(std::string(1, b)).at(1))),
                expected);
    }
  }
}

TEST(Pauli, DimensionMismatchThrows) {
  EXPECT_THROW(symplectic_product(Pauli::identity(3), Pauli::identity(4)), DimensionError);
  EXPECT_THROW(multiply(Pauli::identity(3), Pauli::identity(4)), DimensionError);
}

TEST(Pauli, MultiplyExamples) {
  EXPECT_EQ(multiply(Pauli::from_string("Z"), Pauli::from_string("X")).str(), "Y");
  EXPECT_EQ(multiply(Pauli::from_string("XZ"), Pauli::from_string("YZ")).str(), "ZI");
  Pauli p = Pauli::from_string("XYZIZYX");
  EXPECT_TRUE(multiply(p, p).is_identity());
}

TEST(Pauli, WeightExamples) {
  EXPECT_EQ(weight(Pauli::identity(9)), 0u);
  EXPECT_EQ(weight(Pauli::from_string("ZXXZIII")), 4u);
  EXPECT_EQ(weight(Pauli::from_string("IZIXIZ")), 3u);
}

TEST(Pauli, ShiftExamples) {
  EXPECT_EQ(shift(Pauli::from_string("ZXXZ"), 5, 12).str(), "IIIIIZXXZIII");
  Pauli p = Pauli::from_string("XYZ");
  EXPECT_EQ(shift(p, 0, 3), p);
  EXPECT_EQ(shift(Pauli::from_string("X"), 6, 7).str(), "IIIIIIX");
  EXPECT_THROW(shift(p, 5, 7), DimensionError);
}

TEST(Pauli, SetAndSingle) {
  Pauli p = Pauli::single(5, 3, SingleQubitPauli::Y);
  EXPECT_EQ(p.str(), "IIYII");
  p.set(3, SingleQubitPauli::I);
  p.set(5, SingleQubitPauli::Z);
  EXPECT_EQ(p.str(), "IIIIZ");
}

TEST(PauliProperty, BilinearAndSymmetric) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; t++) {
    size_t n = 1 + rng() % 130;
    auto sa = random_pauli_string(rng, n);
    auto sb = random_pauli_string(rng, n);
    auto sc = random_pauli_string(rng, n);
    Pauli a = Pauli::from_string(sa), b = Pauli::from_string(sb), c = Pauli::from_string(sc);
    EXPECT_EQ(symplectic_product(a, b), symplectic_product(b, a));
    EXPECT_EQ(symplectic_product(multiply(a, b), c),
              symplectic_product(a, c) != symplectic_product(b, c));
    EXPECT_EQ(symplectic_product(a, b), oracle::anticommute(sa, sb));
  }
}

TEST(PauliProperty, ProductIsCommutativeAssociativeInvolutive) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; t++) {
    size_t n = 1 + rng() % 100;
    auto sa = random_pauli_string(rng, n);
    auto sb = random_pauli_string(rng, n);
    auto sc = random_pauli_string(rng, n);
    Pauli a = Pauli::from_string(sa), b = Pauli::from_string(sb), c = Pauli::from_string(sc);
    EXPECT_EQ(multiply(a, b), multiply(b, a));
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    EXPECT_TRUE(multiply(a, a).is_identity());
    EXPECT_EQ(multiply(a, b).str(), oracle::product(sa, sb));
  }
}

TEST(PauliProperty, ShiftPreservesWeight) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; t++) {
    size_t n = 1 + rng() % 40;
    Pauli p = Pauli::from_string(random_pauli_string(rng, n));
    size_t k = rng() % 30;
    Pauli s = shift(p, k, n + k + rng() % 10);
    EXPECT_EQ(weight(s), weight(p));
    for (size_t q = 1; q <= n; q++) EXPECT_EQ(s.at(q + k), p.at(q));
  }
}
