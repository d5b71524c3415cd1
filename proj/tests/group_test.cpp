// Copyright 2026 The PhaseLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phaselab/group.hpp"

#include <gtest/gtest.h>

namespace phaselab {
namespace {

TEST(GroupTest, TrivialGroup) {
  GroupTable t{{0}};
  auto g = classify_group(t);
  EXPECT_EQ(g.order, 1u);
  EXPECT_TRUE(g.invariant_factors.empty());
  EXPECT_EQ(g.name(), "trivial");
}

TEST(GroupTest, OrderFourClasses) {
  EXPECT_EQ(classify_group(AbelianGroupSpec::cyclic(4).table).name(), "Z4");
  EXPECT_EQ(classify_group(AbelianGroupSpec::klein().table).name(), "Z2xZ2");
}

TEST(GroupTest, InvariantFactorsOfProducts) {
  // Z2 x Z4 and Z2 x Z2 x Z2 have order 8 but differ.
  EXPECT_EQ(classify_group(AbelianGroupSpec::from_invariant_factors({2, 4}).table).name(), "Z2xZ4");
  EXPECT_EQ(classify_group(AbelianGroupSpec::from_invariant_factors({2, 2, 2}).table).name(), "Z2xZ2xZ2");
  EXPECT_THROW(AbelianGroupSpec::from_invariant_factors({2, 3}), std::invalid_argument);
  // Z2 x Z3 given as an explicit product table is cyclic of order 6.
  GroupTable z2z3(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) z2z3[a][b] = ((a / 3 + b / 3) % 2) * 3 + (a % 3 + b % 3) % 3;
  }
  EXPECT_EQ(classify_group(z2z3).invariant_factors, std::vector<std::size_t>{6});
  auto h = classify_group(AbelianGroupSpec::from_invariant_factors({2, 6}).table);
  EXPECT_EQ(h.invariant_factors, (std::vector<std::size_t>{2, 6}));
  EXPECT_EQ(h.order, 12u);
}

TEST(GroupTest, ElementOrders) {
  auto z4 = AbelianGroupSpec::cyclic(4);
  EXPECT_EQ(element_order(z4.table, 0), 1u);
  EXPECT_EQ(element_order(z4.table, 1), 4u);
  EXPECT_EQ(element_order(z4.table, 2), 2u);
  auto k = AbelianGroupSpec::klein();
  for (std::size_t g = 1; g < 4; ++g) EXPECT_EQ(element_order(k.table, g), 2u);
}

TEST(GroupTest, InvalidTablesRejected) {
  EXPECT_THROW(classify_group(GroupTable{{0, 1}, {1, 1}}), InvalidGroupTable);          // no inverse
  EXPECT_THROW(classify_group(GroupTable{{0, 2}, {1, 0}}), InvalidGroupTable);          // not closed
  EXPECT_THROW(classify_group(GroupTable{{1, 0}, {0, 0}}), InvalidGroupTable);          // no identity
  EXPECT_THROW(classify_group(GroupTable{{0, 1, 2}, {1, 0, 1}, {2, 2, 0}}), InvalidGroupTable);
  EXPECT_THROW(classify_group(GroupTable{{0, 1}}), InvalidGroupTable);                  // not square
  // Latin square with identity 0 that is not associative.
  GroupTable loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(validate_abelian_group(loop), InvalidGroupTable);
}

TEST(GroupTest, AutomorphismCounts) {
  auto z4 = AbelianGroupSpec::cyclic(4).table;
  auto k = AbelianGroupSpec::klein().table;
  EXPECT_EQ(group_isomorphisms(z4, z4).size(), 2u);
  EXPECT_EQ(group_isomorphisms(k, k).size(), 6u);
  EXPECT_TRUE(group_isomorphisms(z4, k).empty());
}

TEST(GroupTest, SpecElementNames) {
  auto z4 = AbelianGroupSpec::cyclic(4);
  EXPECT_EQ(z4.elements, (std::vector<std::string>{"0", "1", "2", "3"}));
  EXPECT_EQ(z4.identity(), 0u);
  auto k = AbelianGroupSpec::klein();
  EXPECT_EQ(k.order(), 4u);
  EXPECT_EQ(k.invariant_factors, (std::vector<std::size_t>{2, 2}));
}

}  // namespace
}  // namespace phaselab
