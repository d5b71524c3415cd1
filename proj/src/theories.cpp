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

#include "phaselab/theories.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace phaselab {

namespace {

using C = CycloScalar;
using B = BoolScalar;

template <Scalar S>
DiagramModel<S> cnot_model(const TheoryBinding<S>& t) {
  return DiagramModel<S>{t.q, t.delta, t.epsilon, {{"H", t.hadamard}}};
}

// Evaluates the CNOT composite and rescales it to a unitary.
template <Scalar S>
void attach_cnot(TheoryBinding<S>& t) {
  Morphism<S> raw = evaluate(cnot_term(), cnot_model(t));
  Morphism<S> gram = compose(dagger(raw), raw);
  const S c = gram(0, 0);
  if (!(gram == Morphism<S>::identity(gram.dom()).scaled(c))) {
    throw TheoryConstructionError(t.name + ": CNOT composite is not a multiple of a unitary");
  }
  auto inv = S::one().divide(c);
  auto scale = inv ? S::sqrt_of(*inv) : std::nullopt;
  if (!scale) throw TheoryConstructionError(t.name + ": CNOT composite cannot be rescaled in the ring");
  t.cnot_scale = *scale;
  t.cnot = raw.scaled(*scale);
  if (!is_unitary(t.cnot)) throw TheoryConstructionError(t.name + ": rescaled CNOT is not unitary");
}

template <Scalar S>
void check_observable_or_throw(const TheoryBinding<S>& t) {
  if (!check_observable(t.delta, t.epsilon).passed()) {
    throw TheoryConstructionError(t.name + ": (delta, epsilon) is not an observable");
  }
}

// Obs list ordered [Z, X, Y] and labelled.
template <Scalar S>
std::vector<Observable<S>> order_observables(const TheoryBinding<S>& t, std::vector<Observable<S>> found,
                                             const std::vector<Morphism<S>>& states) {
  if (found.size() != 3) {
    throw TheoryConstructionError(t.name + ": expected 3 observables, found " + std::to_string(found.size()));
  }
  auto z = std::find_if(found.begin(), found.end(),
                        [&](const Observable<S>& o) { return o.delta == t.delta && o.epsilon == t.epsilon; });
  if (z == found.end()) throw TheoryConstructionError(t.name + ": own observable not among those found");
  std::vector<Observable<S>> out{*z};
  found.erase(z);
  const Morphism<S> unit = dagger(t.epsilon);
  auto x = std::find_if(found.begin(), found.end(), [&](const Observable<S>& o) {
    for (const auto& e : eigenstates(o, states)) {
      if (proportionality(e, unit)) return true;
    }
    return false;
  });
  if (x == found.end()) throw TheoryConstructionError(t.name + ": no observable has eps+ as an eigenstate");
  out.push_back(*x);
  found.erase(x);
  out.push_back(found.front());
  out[0].label = "Z";
  out[1].label = "X";
  out[2].label = "Y";
  return out;
}

Morphism<B> relation(TheoryObject dom, TheoryObject cod, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Morphism<B> m(dom, cod);
  for (auto [in, out] : pairs) m(out, in) = B::one();
  return m;
}

// The unique eps with (eps (x) 1) o delta = 1, searched over all subsets.
Morphism<B> derive_counit(const Morphism<B>& delta) {
  const TheoryObject x = delta.dom();
  const auto id = Morphism<B>::identity(x);
  std::vector<Morphism<B>> found;
  for (std::size_t mask = 0; mask < (std::size_t{1} << x.dim()); ++mask) {
    Morphism<B> e(x, TheoryObject::unit(x.base_dim));
    for (std::size_t i = 0; i < x.dim(); ++i) e(0, i) = B((mask >> i) & 1);
    if (compose(tensor(e, id), delta) == id && compose(tensor(id, e), delta) == id) found.push_back(e);
  }
  if (found.size() != 1) throw TheoryConstructionError("Spek: counit of delta is not unique");
  return found.front();
}

}  // namespace

DiagramTerm cnot_term() {
  using T = DiagramTerm;
  T h = T::gen("H", 1, 1);
  T target = T::compose(h, T::compose(T::delta_dag(), T::tensor(h, h)));
  return T::compose(T::tensor(T::id(1), target), T::tensor(T::delta(), T::id(1)));
}

StabTheory build_stab() {
  StabTheory t;
  t.name = "Stab";
  t.q = TheoryObject{1, 2};
  const TheoryObject unit = TheoryObject::unit(2);
  t.delta = Morphism<C>(t.q, TheoryObject{2, 2});
  t.delta(0, 0) = C::one();
  t.delta(3, 1) = C::one();
  t.epsilon = Morphism<C>(t.q, unit, {C::one(), C::one()});
  const C h = C::root2_power(-1);
  t.hadamard = Morphism<C>(t.q, t.q, {h, h, h, -h});
  const Morphism<C> s(t.q, t.q, {C::one(), C::zero(), C::zero(), C::omega(2)});
  t.generators = {{"H", t.hadamard}, {"S", s}, {"delta", t.delta}, {"epsilon", t.epsilon}};

  // Closure of {H, S} under composition, up to phase; words read right to left.
  const std::vector<std::pair<std::string, Morphism<C>>> gens{{"H", t.hadamard}, {"S", s}};
  std::set<std::string> seen{phase_key(Morphism<C>::identity(t.q))};
  t.single_system.emplace_back("I", Morphism<C>::identity(t.q));
  for (std::size_t i = 0; i < t.single_system.size(); ++i) {
    for (const auto& [gname, g] : gens) {
      auto [name, m] = t.single_system[i];
      Morphism<C> next = compose(g, m);
      if (seen.insert(phase_key(next)).second) {
        t.single_system.emplace_back(name == "I" ? gname : gname + name, next);
      }
    }
    if (t.single_system.size() > 1000) break;
  }
  if (t.single_system.size() != 24) {
    throw TheoryConstructionError("Stab: Clifford closure has " + std::to_string(t.single_system.size()) +
                                  " elements, expected 24");
  }
  check_observable_or_throw(t);
  attach_cnot(t);
  t.generators.emplace("CNOT", t.cnot);
  return t;
}

SpekTheory build_spek() {
  SpekTheory t;
  t.name = "Spek";
  t.q = TheoryObject{1, 4};
  // 1 -> {(1,1),(2,2)}, 2 -> {(1,2),(2,1)}, 3 -> {(3,3),(4,4)}, 4 -> {(3,4),(4,3)}; indices are labels - 1.
  auto pair = [](std::size_t a, std::size_t b) { return a * 4 + b; };
  t.delta = relation(t.q, TheoryObject{2, 4},
                     {{0, pair(0, 0)}, {0, pair(1, 1)}, {1, pair(0, 1)}, {1, pair(1, 0)},
                      {2, pair(2, 2)}, {2, pair(3, 3)}, {3, pair(2, 3)}, {3, pair(3, 2)}});
  t.epsilon = derive_counit(t.delta);

  std::vector<unsigned> perm{0, 1, 2, 3};
  do {
    std::string name;
    Morphism<B> m(t.q, t.q);
    for (unsigned i = 0; i < 4; ++i) {
      name += std::to_string(perm[i] + 1);
      m(perm[i], i) = B::one();
    }
    t.single_system.emplace_back(name, m);
    t.generators.emplace(name, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // The transposition (2 3) exchanges the eigenstates of Z with those of X.
  t.hadamard = t.generators.at("1324");
  t.generators.emplace("delta", t.delta);
  t.generators.emplace("epsilon", t.epsilon);
  check_observable_or_throw(t);
  attach_cnot(t);
  t.generators.emplace("CNOT", t.cnot);
  return t;
}

// ---------------------------------------------------------------------------
// Observables

std::vector<Observable<C>> enumerate_observables(const StabTheory& t, const std::vector<Morphism<C>>& states) {
  std::vector<Observable<C>> found;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const auto& a = states[i];
      const auto& b = states[j];
      if (!(a.cod() == t.q) || !(b.cod() == t.q)) continue;
      if (!compose(dagger(a), b).is_zero()) continue;
      Observable<C> o{t.q, Morphism<C>(t.q, TheoryObject{2, 2}), Morphism<C>(t.q, TheoryObject::unit(2)), ""};
      for (const auto* x : {&a, &b}) {
        o.delta = add(o.delta, compose(tensor(*x, *x), dagger(*x)));
        o.epsilon = add(o.epsilon, dagger(*x));
      }
      if (check_observable(o).passed()) found.push_back(o);
    }
  }
  return order_observables(t, found, states);
}

namespace {

// All lists d1 | d2 | ... of integers > 1 with product n.
void invariant_factor_lists(std::size_t n, std::size_t min_factor, std::vector<std::size_t>& cur,
                            std::vector<std::vector<std::size_t>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (std::size_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    if (!cur.empty() && d % cur.back() != 0) continue;
    if (d < min_factor) continue;
    cur.push_back(d);
    invariant_factor_lists(n / d, d, cur, out);
    cur.pop_back();
  }
}

// Set partitions of {0..n-1} as block lists.
void set_partitions(unsigned n, unsigned i, std::vector<std::vector<unsigned>>& cur,
                    std::vector<std::vector<std::vector<unsigned>>>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t b = 0; b < cur.size(); ++b) {
    cur[b].push_back(i);
    set_partitions(n, i + 1, cur, out);
    cur[b].pop_back();
  }
  cur.push_back({i});
  set_partitions(n, i + 1, cur, out);
  cur.pop_back();
}

// Labelled group structures on one block: for each abstract group of the block's
// order and each bijection, (product[a][b], identity) over block-local positions.
struct BlockGroup {
  std::vector<std::vector<unsigned>> product;
  unsigned identity;
};

std::vector<BlockGroup> block_groups(std::size_t size) {
  std::vector<std::vector<std::size_t>> lists;
  std::vector<std::size_t> cur;
  invariant_factor_lists(size, 2, cur, lists);
  std::vector<BlockGroup> out;
  std::set<std::vector<std::vector<unsigned>>> seen;
  for (const auto& factors : lists) {
    AbelianGroupSpec g = AbelianGroupSpec::from_invariant_factors(factors);
    std::vector<unsigned> label(size);  // label[element] = block position
    std::iota(label.begin(), label.end(), 0u);
    do {
      BlockGroup bg;
      bg.product.assign(size, std::vector<unsigned>(size));
      for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) bg.product[label[a]][label[b]] = label[g.table[a][b]];
      }
      bg.identity = label[g.identity()];
      if (seen.insert(bg.product).second) out.push_back(bg);
    } while (std::next_permutation(label.begin(), label.end()));
  }
  return out;
}

}  // namespace

std::vector<Observable<B>> group_block_candidates(unsigned n) {
  const TheoryObject x{1, n};
  std::vector<std::vector<std::vector<unsigned>>> partitions;
  std::vector<std::vector<unsigned>> cur;
  set_partitions(n, 0, cur, partitions);
  std::vector<Observable<B>> out;
  for (const auto& blocks : partitions) {
    std::vector<std::vector<BlockGroup>> options;
    for (const auto& b : blocks) options.push_back(block_groups(b.size()));
    std::vector<std::size_t> choice(blocks.size(), 0);
    while (true) {
      Observable<B> o{x, Morphism<B>(x, x.tensor(x)), Morphism<B>(x, TheoryObject::unit(n)), ""};
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto& bg = options[k][choice[k]];
        const auto& block = blocks[k];
        for (std::size_t a = 0; a < block.size(); ++a) {
          for (std::size_t b = 0; b < block.size(); ++b) {
            unsigned c = block[bg.product[a][b]];
            o.delta(block[a] * n + block[b], c) = B::one();
          }
        }
        o.epsilon(0, block[bg.identity]) = B::one();
      }
      bool dup = std::any_of(out.begin(), out.end(),
                             [&](const Observable<B>& p) { return p.delta == o.delta && p.epsilon == o.epsilon; });
      if (!dup) out.push_back(o);
      std::size_t k = 0;
      while (k < blocks.size() && ++choice[k] == options[k].size()) choice[k++] = 0;
      if (k == blocks.size()) break;
    }
  }
  return out;
}

std::vector<Observable<B>> brute_force_relational_observables(unsigned n) {
  if (n == 0 || n > 2) throw std::invalid_argument("brute force is limited to sets of size 1 or 2");
  const TheoryObject x{1, n};
  const std::size_t delta_bits = n * n * n;
  std::vector<Observable<B>> out;
  for (std::size_t dm = 0; dm < (std::size_t{1} << delta_bits); ++dm) {
    Morphism<B> d(x, x.tensor(x));
    for (std::size_t r = 0; r < n * n; ++r) {
      for (std::size_t c = 0; c < n; ++c) d(r, c) = B((dm >> (r * n + c)) & 1);
    }
    for (std::size_t em = 0; em < (std::size_t{1} << n); ++em) {
      Morphism<B> e(x, TheoryObject::unit(n));
      for (std::size_t c = 0; c < n; ++c) e(0, c) = B((em >> c) & 1);
      if (check_observable(d, e).passed()) out.push_back(Observable<B>{x, d, e, ""});
    }
  }
  return out;
}

std::vector<Observable<B>> enumerate_observables(const SpekTheory& t, const std::vector<Morphism<B>>& states) {
  // Keep candidates whose two eigenstates are theory states; one per eigenstate pair,
  // choosing the candidate whose identities come first.
  std::vector<std::pair<std::vector<Morphism<B>>, Observable<B>>> chosen;
  auto support = [](const Morphism<B>& e) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < e.cols(); ++i) {
      if (e(0, i).value()) s.push_back(i);
    }
    return s;
  };
  for (auto& o : group_block_candidates(t.q.base_dim)) {
    if (!check_observable(o).passed()) continue;
    auto eig = eigenstates(o, states);
    if (eig.size() != 2) continue;
    bool in_theory = std::all_of(eig.begin(), eig.end(), [&](const Morphism<B>& e) {
      return std::find(states.begin(), states.end(), e) != states.end();
    });
    if (!in_theory) continue;
    auto it = std::find_if(chosen.begin(), chosen.end(), [&](const auto& p) { return p.first == eig; });
    if (it == chosen.end()) {
      chosen.emplace_back(eig, o);
    } else if (support(o.epsilon) < support(it->second.epsilon)) {
      it->second = o;
    }
  }
  std::vector<Observable<B>> found;
  for (auto& [eig, o] : chosen) found.push_back(o);
  return order_observables(t, found, states);
}

}  // namespace phaselab
