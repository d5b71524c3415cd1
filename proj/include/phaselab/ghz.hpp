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

// GHZ structures, their correspondence with observables, and the tables of
// GHZ correlation triples, both computed from a state and generated
// symbolically from a phase group.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "phaselab/frobenius.hpp"
#include "phaselab/group.hpp"

namespace phaselab {

class InvalidGHZStructure : public std::runtime_error {
 public:
  explicit InvalidGHZStructure(const std::string& message) : std::runtime_error(message) {}
};

template <Scalar S>
struct GHZStructure {
  TheoryObject object;
  /// I -> X (x) X (x) X.
  Morphism<S> psi;
  Morphism<S> epsilon;
  std::string label;
};

/// Psi = (delta (x) 1) o delta o eps+.
template <Scalar S>
GHZStructure<S> ghz_from_observable(const Observable<S>& obs) {
  const auto id = Morphism<S>::identity(obs.object);
  return {obs.object, compose(tensor(obs.delta, id), compose(obs.delta, dagger(obs.epsilon))), obs.epsilon, obs.label};
}

/// (eps (x) 1 (x) 1) o Psi, which a GHZ structure requires to be a Bell state.
template <Scalar S>
Morphism<S> bell_marginal(const GHZStructure<S>& g) {
  const auto id = Morphism<S>::identity(g.object);
  return compose(tensor(g.epsilon, id, id), g.psi);
}

namespace detail {

template <Scalar S>
void check_ghz_shape(const GHZStructure<S>& g) {
  const TheoryObject x = g.object;
  if (!g.psi.is_state() || !(g.psi.cod() == x.tensor(x).tensor(x))) throw TypeMismatch("Psi must be a state on X^3");
  if (!(g.epsilon.dom() == x) || g.epsilon.cod().power != 0) throw TypeMismatch("epsilon must have type X -> I");
}

template <Scalar S>
bool is_positive_scalar(const S& s) {
  if constexpr (std::is_same_v<S, CycloScalar>) {
    return s.is_positive();
  } else {
    return s == S::one();
  }
}

/// eta on X^3 (x) X^3 pairing leg i with leg 3 + i.
template <Scalar S>
Morphism<S> triple_eta(const Morphism<S>& eta) {
  const unsigned perm[] = {0, 2, 4, 1, 3, 5};
  return compose(Morphism<S>::permutation(eta.cod().base_dim, perm), tensor(eta, eta, eta));
}

}  // namespace detail

/// delta = (eta+ (x) 1 (x) 1) o (1 (x) Psi), bending the first leg of Psi into
/// an input with the Bell marginal as cap. Throws InvalidGHZStructure if the
/// result is not an observable or does not give Psi back.
template <Scalar S>
Observable<S> observable_from_ghz(const GHZStructure<S>& g) {
  detail::check_ghz_shape(g);
  const auto id = Morphism<S>::identity(g.object);
  const auto eta = bell_marginal(g);
  Observable<S> obs{g.object, compose(tensor(dagger(eta), id, id), tensor(id, g.psi)), g.epsilon, g.label};
  auto r = check_observable(obs);
  for (const auto& [name, ok] : r.results) {
    if (!ok) throw InvalidGHZStructure("recovered comultiplication fails " + name);
  }
  if (!(ghz_from_observable(obs).psi == g.psi)) {
    throw InvalidGHZStructure("recovered observable does not reproduce Psi");
  }
  return obs;
}

struct GHZReport {
  AxiomReport axioms;

  bool passed() const { return axioms.passed(); }
  /// The first three axioms hold and only the trace-out axiom fails.
  bool needs_review() const {
    return axioms.passed("symmetry") && axioms.passed("bell_marginal") && axioms.passed("self_conjugate") &&
           !axioms.passed("trace_out");
  }
};

/// The four GHZ axioms: symmetry, Bell marginal, self-conjugacy of Psi and
/// eps, and trace-out. Trace-out asks that contracting Psi Psi+ over any two
/// legs leaves a positive multiple of the identity.
template <Scalar S>
GHZReport verify_ghz(const GHZStructure<S>& g) {
  detail::check_ghz_shape(g);
  GHZReport out;
  const unsigned d = g.object.base_dim;
  const TheoryObject x = g.object;

  bool symmetric = true;
  std::array<unsigned, 3> perm{0, 1, 2};
  do {
    symmetric = symmetric && compose(Morphism<S>::permutation(d, perm), g.psi) == g.psi;
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.axioms.add("symmetry", symmetric);

  const auto eta = bell_marginal(g);
  const bool bell = check_compact(eta).passed();
  out.axioms.add("bell_marginal", bell);

  bool self_conj = false;
  if (bell) {
    const auto unit = unit_eta<S>(d);
    self_conj = conjugate(g.psi, unit, detail::triple_eta(eta)) == g.psi &&
                conjugate(g.epsilon, eta, unit) == g.epsilon;
  }
  out.axioms.add("self_conjugate", self_conj);

  // rho_k[a][b] = sum over the other legs r of Psi(a, r) Psi(b, r)+.
  const std::size_t n = x.dim();
  bool mixed = true;
  for (unsigned keep = 0; keep < 3 && mixed; ++keep) {
    const std::size_t stride = keep == 0 ? n * n : (keep == 1 ? n : 1);
    std::vector<S> rho(n * n, S::zero());
    for (std::size_t idx = 0; idx < n * n * n; ++idx) {
      const std::size_t a = (idx / stride) % n;
      const std::size_t rest = idx - a * stride;
      for (std::size_t b = 0; b < n; ++b) {
        rho[a * n + b] += g.psi(idx, 0) * g.psi(rest + b * stride, 0).dagger();
      }
    }
    const S c = rho[0];
    mixed = detail::is_positive_scalar(c);
    for (std::size_t a = 0; a < n && mixed; ++a) {
      for (std::size_t b = 0; b < n && mixed; ++b) mixed = rho[a * n + b] == (a == b ? c : S::zero());
    }
  }
  out.axioms.add("trace_out", mixed);
  return out;
}

// ---------------------------------------------------------------------------
// Correlation tables

/// What a state in a correlation table is: the eigenstate with this bit of
/// the observable with this index, and its position in the phase group of the
/// GHZ structure's observable (-1 for its eigenstates and the zero state).
struct StateLabel {
  std::string name;
  int observable = -1;
  int bit = -1;
  int group_element = -1;
};

using IndexTriple = std::array<std::size_t, 3>;

struct CorrelationTable {
  /// Six eigenstates ordered Z0, Z1, X0, X1, Y0, Y1, then the zero state.
  std::vector<StateLabel> states;
  /// Phase-group table indexed by group_element.
  GroupTable group;
  /// (i, j, k) with (x_i (x) x_j (x) 1)+ o Psi proportional to x_k, sorted.
  std::vector<IndexTriple> triples;
  /// weights[t]: that scalar, as text; empty for symbolic tables.
  std::vector<std::string> weights;
  /// (i, j, k) where x_k and the state correlated with (x_i, x_j) are distinct
  /// eigenstates of the same observable.
  std::vector<IndexTriple> forbidden;
  /// (i, j, zero) where (x_i (x) x_j (x) 1)+ o Psi vanishes.
  std::vector<IndexTriple> null;

  std::size_t zero_index() const { return states.size() - 1; }
  bool has_triple(const IndexTriple& t) const { return std::binary_search(triples.begin(), triples.end(), t); }
  bool is_forbidden(const IndexTriple& t) const { return std::binary_search(forbidden.begin(), forbidden.end(), t); }
  /// Index of the other eigenstate of the same observable, if state i is one.
  std::optional<std::size_t> partner(std::size_t i) const;
};

/// The labelled six states of a MUQT, ordered for a correlation table.
template <Scalar S>
struct CanonicalStates {
  std::vector<Morphism<S>> states;  // unit eigenstates, then zero
  std::vector<StateLabel> labels;
  PhaseGroup<S> group;
};

/// Orders the eigenstates of observables [Z, X, Y] so that bit 0 of Z is its
/// first eigenstate, bit 0 of X is the one proportional to eps_Z+ (the phase
/// group identity) and bit 0 of Y is its first eigenstate. `eigen[o]` are the
/// eigenstates of observables[o]; `catalog` supplies the phase group of Z.
template <Scalar S>
CanonicalStates<S> canonical_states(const std::vector<Observable<S>>& observables,
                                    const std::vector<std::vector<Morphism<S>>>& eigen,
                                    const std::vector<Morphism<S>>& catalog) {
  if (observables.size() != 3 || eigen.size() != 3) throw std::invalid_argument("need three observables");
  CanonicalStates<S> out;
  out.group = phase_group(observables[0], catalog);
  static const char* kNames[] = {"Z", "X", "Y"};
  for (int o = 0; o < 3; ++o) {
    if (eigen[o].size() != 2) throw std::invalid_argument("each observable needs exactly two eigenstates");
    std::vector<Morphism<S>> pair = eigen[o];
    if (o == 1 && equal_up_to_phase(pair[1], dagger(observables[0].epsilon))) std::swap(pair[0], pair[1]);
    for (int b = 0; b < 2; ++b) {
      StateLabel label{std::string(kNames[o]) + std::to_string(b), o, b, -1};
      if (o > 0) {
        auto scaled = rescale_to(pair[b], dimension_scalar(observables[0].epsilon));
        auto k = scaled ? find_up_to_phase(out.group.elements, *scaled) : std::nullopt;
        if (!k) throw PhaseGroupError(label.name + " is not an element of the phase group");
        label.group_element = static_cast<int>(*k);
      }
      out.states.push_back(pair[b]);
      out.labels.push_back(label);
    }
  }
  out.states.push_back(Morphism<S>(TheoryObject::unit(observables[0].object.base_dim), observables[0].object));
  out.labels.push_back({"zero", -1, -1, -1});
  return out;
}

namespace detail {

void finish_table(CorrelationTable& t);

}  // namespace detail

/// All correlation triples of g over the canonical states. Inputs that are
/// unbiased for the observable are rescaled to length sqrt(dim) first.
template <Scalar S>
CorrelationTable correlation_triples(const GHZStructure<S>& g, const CanonicalStates<S>& cs) {
  detail::check_ghz_shape(g);
  const Observable<S> obs{g.object, Morphism<S>(), g.epsilon, g.label};
  const S dim = dimension_scalar(g.epsilon);
  const auto id = Morphism<S>::identity(g.object);
  CorrelationTable t;
  t.states = cs.labels;
  t.group = cs.group.table;
  const std::size_t zero = cs.states.size() - 1;
  std::vector<Morphism<S>> inputs;
  for (std::size_t i = 0; i < zero; ++i) {
    const bool unbiased = cs.labels[i].group_element >= 0;
    inputs.push_back(unbiased ? *rescale_to(cs.states[i], dim) : cs.states[i]);
  }
  for (std::size_t i = 0; i < zero; ++i) {
    for (std::size_t j = 0; j < zero; ++j) {
      const auto v = compose(dagger(tensor(inputs[i], inputs[j], id)), g.psi);
      if (v.is_zero()) {
        t.null.push_back({i, j, zero});
        continue;
      }
      std::optional<std::size_t> hit;
      S weight;
      for (std::size_t k = 0; k < zero && !hit; ++k) {
        if (auto w = proportionality(cs.states[k], v)) {
          hit = k;
          weight = *w;
        }
      }
      if (!hit) throw InvalidGHZStructure("correlated state of " + cs.labels[i].name + ", " + cs.labels[j].name +
                                          " is not in the catalog");
      t.triples.push_back({i, j, *hit});
      t.weights.push_back(weight.str());
    }
  }
  detail::finish_table(t);
  return t;
}

/// The table generated by the phase group alone: eigenstates e0, e1 and the
/// group elements, with e (.) e = e, e (.) e' = 0, e (.) g = e, g (.) h from
/// the group table and conjugation acting as the group inverse. The X
/// observable consists of the identity and the first involution.
CorrelationTable correlations_from_group(const AbelianGroupSpec& spec);

/// A bijection of state indices carrying table a onto table b (triples,
/// forbidden and null sets), built from a group isomorphism and a matching of
/// eigenstates. Returns nullopt if there is none.
std::optional<std::vector<std::size_t>> match_tables(const CorrelationTable& a, const CorrelationTable& b);

/// For every triple of phase-group elements in the table, all six
/// permutations are triples too.
bool permutation_closed(const CorrelationTable& t);

/// (x_i (x) x_j (x) x_k)+ o Psi = 0 for every forbidden triple.
template <Scalar S>
bool forbidden_amplitudes_vanish(const GHZStructure<S>& g, const CanonicalStates<S>& cs, const CorrelationTable& t) {
  for (const auto& f : t.forbidden) {
    const auto amp = compose(dagger(tensor(cs.states[f[0]], cs.states[f[1]], cs.states[f[2]])), g.psi);
    if (!amp.is_zero()) return false;
  }
  return true;
}

}  // namespace phaselab
