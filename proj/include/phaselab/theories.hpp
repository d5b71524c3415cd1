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

// The two concrete theories: stabiliser qubits over Z[w][1/sqrt2] and the toy
// theory over relations on the four-element set {1,2,3,4}.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "phaselab/diagram.hpp"
#include "phaselab/frobenius.hpp"

namespace phaselab {

class TheoryConstructionError : public std::runtime_error {
 public:
  explicit TheoryConstructionError(const std::string& message) : std::runtime_error(message) {}
};

template <Scalar S>
struct TheoryBinding {
  std::string name;  // "Stab" or "Spek"
  TheoryObject q;
  /// The 24 single-system operations (Cliffords mod phase, or permutations), named.
  std::vector<std::pair<std::string, Morphism<S>>> single_system;
  /// Named generators: the single-system generators plus "delta", "epsilon".
  std::map<std::string, Morphism<S>> generators;
  Morphism<S> delta;
  Morphism<S> epsilon;
  /// The single-system operation playing the role of the Hadamard gate.
  Morphism<S> hadamard;
  /// (1 (x) (H o delta+ o (H (x) H))) o (delta (x) 1), rescaled to a unitary.
  Morphism<S> cnot;
  /// cnot = cnot_scale * (value of the composite).
  S cnot_scale;

  Observable<S> observable() const { return Observable<S>{q, delta, epsilon, "Z"}; }
  unsigned base_dim() const { return q.base_dim; }
};

using StabTheory = TheoryBinding<CycloScalar>;
using SpekTheory = TheoryBinding<BoolScalar>;

StabTheory build_stab();
SpekTheory build_spek();

/// The CNOT composite as a diagram term over generators "H", delta and delta+.
DiagramTerm cnot_term();

/// Every product of two single-system operations is again one of them (up to
/// phase), and there are `expected` of them.
template <Scalar S>
bool single_system_is_group(const TheoryBinding<S>& t, std::size_t expected = 24) {
  if (t.single_system.size() != expected) return false;
  std::set<std::string> keys;
  for (const auto& [n, g] : t.single_system) keys.insert(phase_key(g));
  if (keys.size() != expected) return false;
  for (const auto& [na, a] : t.single_system) {
    for (const auto& [nb, b] : t.single_system) {
      if (!keys.count(phase_key(compose(a, b)))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// State enumeration

template <Scalar S>
struct StateSpace {
  unsigned arity = 0;
  /// Phase-canonical, unit-length representatives sorted by their dedup key.
  std::vector<Morphism<S>> states;
  /// Circuit that first produced each state.
  std::vector<std::string> provenance;
  bool fixpoint_reached = false;
  unsigned depth = 0;
};

/// The normalized eps+ (x) ... (x) eps+ on n wires.
template <Scalar S>
Morphism<S> uniform_product_state(const TheoryBinding<S>& t, unsigned n) {
  auto one = rescale_to(dagger(t.epsilon), S::one());
  if (!one) throw TheoryConstructionError("eps+ cannot be normalized in the ring");
  Morphism<S> s = Morphism<S>::scalar(t.base_dim(), S::one());
  for (unsigned i = 0; i < n; ++i) s = tensor(s, *one);
  return s;
}

/// Breadth-first closure from the uniform product state under every
/// single-system operation on every wire and the CNOT on every ordered pair of
/// wires, deduplicated up to phase.
template <Scalar S>
StateSpace<S> enumerate_states(const TheoryBinding<S>& t, unsigned n, unsigned depth_bound = 12) {
  if (n < 1 || n > 3) throw std::invalid_argument("arity must be 1, 2 or 3");
  struct Entry {
    Morphism<S> state;
    std::string provenance;
  };
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<Entry> all;
  auto start = phase_canonical(uniform_product_state(t, n));
  seen.emplace(phase_key(start), 0);
  all.push_back({start, "init"});
  std::vector<std::size_t> frontier{0};
  StateSpace<S> space;
  space.arity = n;

  auto visit = [&](const Morphism<S>& s, const std::string& prov, std::vector<std::size_t>& next) {
    auto c = phase_canonical(s);
    auto key = phase_key(c);
    if (seen.emplace(key, all.size()).second) {
      next.push_back(all.size());
      all.push_back({std::move(c), prov});
    }
  };

  unsigned depth = 0;
  while (!frontier.empty()) {
    if (depth == depth_bound) break;
    ++depth;
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const Morphism<S> s = all[idx].state;
      const std::string prov = all[idx].provenance;
      for (unsigned w = 0; w < n; ++w) {
        const unsigned wire[] = {w};
        for (const auto& [name, g] : t.single_system) {
          visit(apply_to_wires(g, s, wire), prov + "; " + name + "@" + std::to_string(w), next);
        }
      }
      for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
          if (a == b) continue;
          const unsigned wires[] = {a, b};
          visit(apply_to_wires(t.cnot, s, wires),
                prov + "; CNOT@" + std::to_string(a) + "," + std::to_string(b), next);
        }
      }
    }
    frontier = std::move(next);
  }
  space.fixpoint_reached = frontier.empty();
  space.depth = depth;
  std::vector<std::pair<std::string, std::size_t>> order;
  for (const auto& [k, i] : seen) order.emplace_back(k, i);
  std::sort(order.begin(), order.end());
  for (const auto& [k, i] : order) {
    space.states.push_back(all[i].state);
    space.provenance.push_back(all[i].provenance);
  }
  return space;
}

/// A two-wire state factors as a (x) b. Works over any commutative semiring:
/// all 2x2 minors through the first nonzero entry must vanish.
template <Scalar S>
bool is_product_state(const Morphism<S>& s) {
  if (!s.is_state() || s.cod().power != 2) throw TypeMismatch("is_product_state expects a two-wire state");
  const std::size_t d = s.cod().base_dim;
  auto p = s.first_nonzero();
  if (!p) return false;
  const std::size_t r0 = *p / d;
  const std::size_t c0 = *p % d;
  auto at = [&](std::size_t r, std::size_t c) { return s(r * d + c, 0); };
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if (!(at(r, c) * at(r0, c0) == at(r, c0) * at(r0, c))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Observables

/// Stab: one observable per orthonormal pair of single-qubit states, copying
/// that pair. Spek: group-block candidates that pass the axioms and have
/// exactly two eigenstates, both theory states, one per eigenstate pair.
/// Both are returned as [Z, X, Y]: Z is the theory's own observable, X the one
/// with an eigenstate proportional to eps_Z+.
std::vector<Observable<CycloScalar>> enumerate_observables(const StabTheory& t,
                                                           const std::vector<Morphism<CycloScalar>>& states);
std::vector<Observable<BoolScalar>> enumerate_observables(const SpekTheory& t,
                                                          const std::vector<Morphism<BoolScalar>>& states);

/// One comultiplication per partition of {0..n-1} into blocks with a labelled
/// abelian group on each block: delta is the converse of the multiplication and
/// eps marks the block identities. Duplicates removed.
std::vector<Observable<BoolScalar>> group_block_candidates(unsigned n);

/// Every (delta, eps) pair of relations on an n-element set (n <= 2) passing
/// the observable axioms.
std::vector<Observable<BoolScalar>> brute_force_relational_observables(unsigned n);

// ---------------------------------------------------------------------------
// Catalog and MUQT conditions

template <Scalar S>
struct StateCatalog {
  std::vector<Observable<S>> observables;
  std::vector<Morphism<S>> all_states;
  /// eigen[o] and unbiased[o] for observables[o].
  std::vector<std::vector<Morphism<S>>> eigen;
  std::vector<std::vector<Morphism<S>>> unbiased;
  /// eigen_for[s][o]: all_states[s] is proportional to an eigenstate of o.
  std::vector<std::vector<bool>> eigen_for;
  std::vector<std::vector<bool>> unbiased_for;
};

template <Scalar S>
StateCatalog<S> build_catalog(const std::vector<Observable<S>>& observables, const std::vector<Morphism<S>>& states) {
  StateCatalog<S> c;
  c.observables = observables;
  c.all_states = states;
  for (const auto& o : observables) {
    c.eigen.push_back(eigenstates(o, states));
    c.unbiased.push_back(unbiased_states(o, states));
  }
  for (const auto& s : states) {
    std::vector<bool> ef;
    std::vector<bool> uf;
    for (std::size_t o = 0; o < observables.size(); ++o) {
      bool e = false;
      for (const auto& x : c.eigen[o]) e = e || proportionality(x, s).has_value();
      bool u = false;
      for (const auto& x : c.unbiased[o]) u = u || proportionality(x, s).has_value();
      ef.push_back(e);
      uf.push_back(u);
    }
    c.eigen_for.push_back(ef);
    c.unbiased_for.push_back(uf);
  }
  return c;
}

/// The MUQT conditions on the generating object: objects, alike, mutually
/// unbiased, states are eigenstates, three observables with two eigenstates.
template <Scalar S>
AxiomReport verify_muqt(const TheoryBinding<S>& t, const StateCatalog<S>& c) {
  AxiomReport r;
  bool objects = true;
  for (const auto& s : c.all_states) objects = objects && s.cod().base_dim == t.q.base_dim && s.is_state();
  for (const auto& o : c.observables) objects = objects && o.object == t.q;
  r.add("objects", objects);

  bool alike = !c.observables.empty();
  std::optional<GroupClass> iso;
  for (std::size_t o = 0; alike && o < c.observables.size(); ++o) {
    alike = c.eigen[o].size() == c.eigen[0].size();
    try {
      auto pg = phase_group(c.observables[o], c.all_states);
      if (!iso) iso = pg.iso;
      alike = alike && pg.iso == *iso;
    } catch (const PhaseGroupError&) {
      alike = false;
    }
  }
  r.add("alike", alike);

  bool mu = true;
  for (std::size_t a = 0; a < c.observables.size(); ++a) {
    for (std::size_t b = 0; b < c.observables.size(); ++b) {
      if (a != b) mu = mu && eigenstates_unbiased_for(c.observables[a], c.eigen[a], c.observables[b]);
    }
  }
  r.add("mutually_unbiased", mu);

  bool covered = true;
  for (const auto& flags : c.eigen_for) covered = covered && std::find(flags.begin(), flags.end(), true) != flags.end();
  r.add("states_are_eigenstates", covered);

  bool counts = c.observables.size() == 3;
  for (const auto& e : c.eigen) counts = counts && e.size() == 2;
  r.add("three_observables_two_eigenstates", counts);
  return r;
}

}  // namespace phaselab
