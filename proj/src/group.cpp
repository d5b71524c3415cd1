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

#include <algorithm>
#include <map>
#include <numeric>

namespace phaselab {

std::string GroupClass::name() const {
  if (invariant_factors.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i > 0) s += "x";
    s += "Z" + std::to_string(invariant_factors[i]);
  }
  return s;
}

std::size_t group_identity(const GroupTable& table) {
  const std::size_t n = table.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = table[e].size() == n;
    for (std::size_t g = 0; ok && g < n; ++g) ok = table[e][g] == g && table[g].size() == n && table[g][e] == g;
    if (ok) return e;
  }
  throw InvalidGroupTable("no identity element");
}

void validate_abelian_group(const GroupTable& table) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidGroupTable("empty table");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidGroupTable("table is not square");
    for (auto v : row) {
      if (v >= n) throw InvalidGroupTable("closure: entry out of range");
    }
  }
  const std::size_t e = group_identity(table);
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] != table[b][a]) throw InvalidGroupTable("commutativity fails");
      if (table[a][b] == e) has_inverse = true;
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw InvalidGroupTable("associativity fails");
      }
    }
    if (!has_inverse) throw InvalidGroupTable("element " + std::to_string(a) + " has no inverse");
  }
}

std::size_t element_order(const GroupTable& table, std::size_t g) {
  const std::size_t e = group_identity(table);
  std::size_t x = g;
  for (std::size_t k = 1; k <= table.size(); ++k) {
    if (x == e) return k;
    x = table[x][g];
  }
  throw InvalidGroupTable("element of infinite order");
}

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::size_t ilog(std::size_t value, std::size_t p) {
  std::size_t k = 0;
  while (value > 1) {
    value /= p;
    ++k;
  }
  return k;
}

}  // namespace

GroupClass classify_group(const GroupTable& table) {
  validate_abelian_group(table);
  const std::size_t n = table.size();
  std::vector<std::size_t> orders(n);
  for (std::size_t g = 0; g < n; ++g) orders[g] = element_order(table, g);

  // For each prime p, |{g : g^(p^k) = 1 and ord(g) a power of p}| = p^(sum_i min(l_i, k))
  // where p^l_i are the elementary divisors. Differences give the partition.
  std::map<std::size_t, std::vector<std::size_t>> elementary;  // p -> exponents, descending
  for (std::size_t p : prime_factors(n)) {
    std::vector<std::size_t> at_most;  // at_most[k] = sum_i min(l_i, k)
    at_most.push_back(0);
    std::size_t pk = 1;
    while (true) {
      pk *= p;
      std::size_t count = 0;
      for (std::size_t g = 0; g < n; ++g) {
        if (pk % orders[g] == 0) ++count;
      }
      at_most.push_back(ilog(count, p));
      if (at_most.back() == at_most[at_most.size() - 2]) break;
    }
    // number of l_i >= k is at_most[k] - at_most[k-1]
    std::vector<std::size_t> exps;
    for (std::size_t k = 1; k < at_most.size(); ++k) {
      std::size_t ge_k = at_most[k] - at_most[k - 1];
      std::size_t ge_next = k + 1 < at_most.size() ? at_most[k + 1] - at_most[k] : 0;
      for (std::size_t c = ge_next; c < ge_k; ++c) exps.push_back(k);
    }
    std::sort(exps.rbegin(), exps.rend());
    elementary[p] = exps;
  }
  // Invariant factors: the largest takes the top power of every prime, and so on.
  std::size_t rank = 0;
  for (const auto& [p, exps] : elementary) rank = std::max(rank, exps.size());
  std::vector<std::size_t> factors(rank, 1);
  for (const auto& [p, exps] : elementary) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      std::size_t v = 1;
      for (std::size_t k = 0; k < exps[i]; ++k) v *= p;
      factors[rank - 1 - i] *= v;
    }
  }
  return GroupClass{n, factors};
}

AbelianGroupSpec AbelianGroupSpec::cyclic(std::size_t n) { return from_invariant_factors({n}); }

AbelianGroupSpec AbelianGroupSpec::klein() { return from_invariant_factors({2, 2}); }

AbelianGroupSpec AbelianGroupSpec::from_invariant_factors(std::vector<std::size_t> factors) {
  factors.erase(std::remove(factors.begin(), factors.end(), std::size_t{1}), factors.end());
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    if (factors[i] == 0 || factors[i + 1] % factors[i] != 0) {
      throw InvalidGroupTable("invariant factors must satisfy d1 | d2 | ...");
    }
  }
  std::size_t n = 1;
  for (auto d : factors) n *= d;
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> t(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      t[i] = idx % factors[i];
      idx /= factors[i];
    }
    return t;
  };
  auto index_of = [&](const std::vector<std::size_t>& t) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + t[i];
    return idx;
  };
  AbelianGroupSpec spec;
  spec.invariant_factors = factors;
  spec.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    auto ta = digits(a);
    std::string name;
    if (factors.size() == 1) {
      name = std::to_string(ta[0]);
    } else {
      name = "(";
      for (std::size_t i = 0; i < ta.size(); ++i) name += (i ? "," : "") + std::to_string(ta[i]);
      name += ")";
    }
    if (factors.empty()) name = "e";
    spec.elements.push_back(name);
    for (std::size_t b = 0; b < n; ++b) {
      auto tb = digits(b);
      for (std::size_t i = 0; i < ta.size(); ++i) tb[i] = (ta[i] + tb[i]) % factors[i];
      spec.table[a][b] = index_of(tb);
    }
  }
  return spec;
}

std::vector<std::vector<std::size_t>> group_isomorphisms(const GroupTable& a, const GroupTable& b) {
  std::vector<std::vector<std::size_t>> result;
  if (a.size() != b.size()) return result;
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; ok && x < n; ++x) {
      for (std::size_t y = 0; ok && y < n; ++y) ok = perm[a[x][y]] == b[perm[x]][perm[y]];
    }
    if (ok) result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

}  // namespace phaselab
