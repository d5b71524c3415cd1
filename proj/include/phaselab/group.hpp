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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace phaselab {

using GroupTable = std::vector<std::vector<std::size_t>>;

class InvalidGroupTable : public std::invalid_argument {
 public:
  explicit InvalidGroupTable(const std::string& message) : std::invalid_argument(message) {}
};

/// Isomorphism class of a finite abelian group.
struct GroupClass {
  std::size_t order = 1;
  /// d_1 | d_2 | ... | d_r, all > 1. Empty for the trivial group.
  std::vector<std::size_t> invariant_factors;

  /// "trivial", "Z4", "Z2xZ2", "Z2xZ4", ...
  std::string name() const;

  friend bool operator==(const GroupClass&, const GroupClass&) = default;
};

/// Index of the identity element. Throws InvalidGroupTable if there is none.
std::size_t group_identity(const GroupTable& table);

/// Checks closure, identity, inverses, associativity and commutativity.
/// Throws InvalidGroupTable naming the first violated law.
void validate_abelian_group(const GroupTable& table);

/// Order of element g.
std::size_t element_order(const GroupTable& table, std::size_t g);

/// Invariant-factor decomposition of a finite abelian group given by its table.
GroupClass classify_group(const GroupTable& table);

/// A named finite abelian group Z_{d1} x ... x Z_{dr}.
struct AbelianGroupSpec {
  std::vector<std::string> elements;
  GroupTable table;
  std::vector<std::size_t> invariant_factors;

  std::size_t order() const { return elements.size(); }
  std::size_t identity() const { return group_identity(table); }

  static AbelianGroupSpec cyclic(std::size_t n);
  static AbelianGroupSpec klein();
  /// Elements are the tuples (a_1, ..., a_r) with 0 <= a_i < d_i, in
  /// lexicographic order; the identity is element 0.
  static AbelianGroupSpec from_invariant_factors(std::vector<std::size_t> factors);
};

/// All isomorphisms from table a to table b, each as an index map. Brute force
/// over bijections; intended for small orders.
std::vector<std::vector<std::size_t>> group_isomorphisms(const GroupTable& a, const GroupTable& b);

}  // namespace phaselab
