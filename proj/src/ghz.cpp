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

#include "phaselab/ghz.hpp"

#include <algorithm>
#include <numeric>

namespace phaselab {

std::optional<std::size_t> CorrelationTable::partner(std::size_t i) const {
  if (i >= states.size() || states[i].observable < 0) return std::nullopt;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (k != i && states[k].observable == states[i].observable) return k;
  }
  return std::nullopt;
}

namespace detail {

void finish_table(CorrelationTable& t) {
  std::vector<std::size_t> order(t.triples.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return t.triples[a] < t.triples[b]; });
  std::vector<IndexTriple> triples;
  std::vector<std::string> weights;
  for (std::size_t i : order) {
    triples.push_back(t.triples[i]);
    if (!t.weights.empty()) weights.push_back(t.weights[i]);
  }
  t.triples = std::move(triples);
  t.weights = std::move(weights);

  t.forbidden.clear();
  for (const auto& [i, j, k] : t.triples) {
    if (auto p = t.partner(k)) t.forbidden.push_back({i, j, *p});
  }
  std::sort(t.forbidden.begin(), t.forbidden.end());
  std::sort(t.null.begin(), t.null.end());
}

}  // namespace detail

CorrelationTable correlations_from_group(const AbelianGroupSpec& spec) {
  validate_abelian_group(spec.table);
  if (spec.order() != 4) throw std::invalid_argument("symbolic correlations need a phase group of order 4");
  const std::size_t id = spec.identity();
  std::vector<std::size_t> rest;
  std::optional<std::size_t> involution;
  for (std::size_t g = 0; g < spec.order(); ++g) {
    if (g == id) continue;
    if (!involution && element_order(spec.table, g) == 2) {
      involution = g;
    } else {
      rest.push_back(g);
    }
  }
  if (!involution) throw std::invalid_argument("phase group has no involution");

  CorrelationTable t;
  t.group = spec.table;
  t.states = {{"Z0", 0, 0, -1},
              {"Z1", 0, 1, -1},
              {"X0", 1, 0, static_cast<int>(id)},
              {"X1", 1, 1, static_cast<int>(*involution)},
              {"Y0", 2, 0, static_cast<int>(rest[0])},
              {"Y1", 2, 1, static_cast<int>(rest[1])},
              {"zero", -1, -1, -1}};
  const std::size_t zero = 6;
  auto state_of_element = [&](std::size_t g) {
    for (std::size_t i = 2; i < 6; ++i) {
      if (t.states[i].group_element == static_cast<int>(g)) return i;
    }
    throw std::logic_error("group element without a state");
  };
  auto inverse = [&](std::size_t g) {
    for (std::size_t h = 0; h < spec.order(); ++h) {
      if (spec.table[g][h] == id) return h;
    }
    throw std::logic_error("element without inverse");
  };
  // Product followed by conjugation; zero when the product vanishes.
  auto correlate = [&](std::size_t i, std::size_t j) -> std::size_t {
    const bool ei = i < 2;
    const bool ej = j < 2;
    if (ei && ej) return i == j ? i : zero;
    if (ei) return i;
    if (ej) return j;
    const auto gi = static_cast<std::size_t>(t.states[i].group_element);
    const auto gj = static_cast<std::size_t>(t.states[j].group_element);
    return state_of_element(inverse(spec.table[gi][gj]));
  };
  for (std::size_t i = 0; i < zero; ++i) {
    for (std::size_t j = 0; j < zero; ++j) {
      const std::size_t k = correlate(i, j);
      if (k == zero) {
        t.null.push_back({i, j, zero});
      } else {
        t.triples.push_back({i, j, k});
      }
    }
  }
  detail::finish_table(t);
  return t;
}

namespace {

std::vector<IndexTriple> mapped(const std::vector<IndexTriple>& in, const std::vector<std::size_t>& m) {
  std::vector<IndexTriple> out;
  for (const auto& [i, j, k] : in) out.push_back({m[i], m[j], m[k]});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> eigen_only(const CorrelationTable& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    if (t.states[i].observable >= 0 && t.states[i].group_element < 0) out.push_back(i);
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> match_tables(const CorrelationTable& a, const CorrelationTable& b) {
  if (a.states.size() != b.states.size() || a.triples.size() != b.triples.size() ||
      a.forbidden.size() != b.forbidden.size() || a.null.size() != b.null.size()) {
    return std::nullopt;
  }
  const auto ea = eigen_only(a);
  const auto eb = eigen_only(b);
  if (ea.size() != 2 || eb.size() != 2) return std::nullopt;
  std::vector<std::vector<std::size_t>> isos;
  try {
    isos = group_isomorphisms(a.group, b.group);
  } catch (const InvalidGroupTable&) {
    return std::nullopt;
  }
  for (const auto& phi : isos) {
    for (int swap = 0; swap < 2; ++swap) {
      std::vector<std::size_t> m(a.states.size(), a.states.size());
      m[a.zero_index()] = b.zero_index();
      m[ea[0]] = eb[swap];
      m[ea[1]] = eb[1 - swap];
      bool ok = true;
      for (std::size_t i = 0; i < a.states.size() && ok; ++i) {
        if (a.states[i].group_element < 0) continue;
        const auto target = static_cast<int>(phi[static_cast<std::size_t>(a.states[i].group_element)]);
        ok = false;
        for (std::size_t k = 0; k < b.states.size(); ++k) {
          if (b.states[k].group_element == target) {
            m[i] = k;
            ok = true;
          }
        }
      }
      if (!ok || std::count(m.begin(), m.end(), a.states.size()) != 0) continue;
      if (mapped(a.triples, m) == b.triples && mapped(a.forbidden, m) == b.forbidden && mapped(a.null, m) == b.null) {
        return m;
      }
    }
  }
  return std::nullopt;
}

bool permutation_closed(const CorrelationTable& t) {
  auto in_group = [&](std::size_t i) { return t.states[i].group_element >= 0; };
  for (const auto& tr : t.triples) {
    if (!in_group(tr[0]) || !in_group(tr[1]) || !in_group(tr[2])) continue;
    IndexTriple p = tr;
    std::sort(p.begin(), p.end());
    do {
      if (!t.has_triple(p)) return false;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return true;
}

}  // namespace phaselab
