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

// Observables (commutative isometric dagger Frobenius comonoids) and what they
// induce: eigenstates, unbiased states, the dot product, the phase group, the
// compact structure, transposes and conjugates, and spiders.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "phaselab/diagram.hpp"
#include "phaselab/group.hpp"
#include "phaselab/morphism.hpp"

namespace phaselab {

template <Scalar S>
struct Observable {
  TheoryObject object;
  Morphism<S> delta;
  Morphism<S> epsilon;
  std::string label;
};

class InvalidCompactStructure : public std::invalid_argument {
 public:
  explicit InvalidCompactStructure(const std::string& message) : std::invalid_argument(message) {}
};

class PhaseGroupError : public std::runtime_error {
 public:
  explicit PhaseGroupError(const std::string& message) : std::runtime_error(message) {}
};

/// Named pass/fail flags, in the order they were checked.
struct AxiomReport {
  std::vector<std::pair<std::string, bool>> results;

  void add(std::string name, bool ok) { results.emplace_back(std::move(name), ok); }
  bool passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.second; });
  }
  /// Throws std::out_of_range for an unknown name.
  bool passed(std::string_view name) const {
    for (const auto& [n, ok] : results) {
      if (n == name) return ok;
    }
    throw std::out_of_range("no check named '" + std::string(name) + "'");
  }
};

// ---------------------------------------------------------------------------
// Small helpers

/// The scalar eps o eps+, i.e. dim(X) in the theory's numbers.
template <Scalar S>
S dimension_scalar(const Morphism<S>& epsilon) {
  return compose(epsilon, dagger(epsilon)).entries()[0];
}

template <Scalar S>
bool is_unitary(const Morphism<S>& u) {
  if (!(u.dom() == u.cod())) return false;
  auto id = Morphism<S>::identity(u.dom());
  return compose(dagger(u), u) == id && compose(u, dagger(u)) == id;
}

/// The scalar <x|x> of a state.
template <Scalar S>
S norm_squared(const Morphism<S>& x) {
  return compose(dagger(x), x).entries()[0];
}

/// x * factor where factor^2 = target / <x|x>; nullopt if that root is not in
/// the ring.
template <Scalar S>
std::optional<Morphism<S>> rescale_to(const Morphism<S>& x, const S& target_norm_squared) {
  auto ratio = target_norm_squared.divide(norm_squared(x));
  if (!ratio) return std::nullopt;
  auto root = S::sqrt_of(*ratio);
  if (!root) return std::nullopt;
  return x.scaled(*root);
}

/// Deterministic order on states: earlier first nonzero index first, then
/// larger entries first.
template <Scalar S>
bool state_precedes(const Morphism<S>& a, const Morphism<S>& b) {
  auto pa = a.first_nonzero();
  auto pb = b.first_nonzero();
  std::size_t ia = pa ? *pa : a.entries().size();
  std::size_t ib = pb ? *pb : b.entries().size();
  if (ia != ib) return ia < ib;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i] != eb[i]) return eb[i] < ea[i];
  }
  return false;
}

// ---------------------------------------------------------------------------
// Axioms

template <Scalar S>
void check_observable_shape(const Morphism<S>& delta, const Morphism<S>& epsilon) {
  const TheoryObject x = delta.dom();
  if (!(delta.cod() == x.tensor(x))) throw TypeMismatch("delta must have type X -> X (x) X");
  if (!(epsilon.dom() == x) || epsilon.cod().power != 0) throw TypeMismatch("epsilon must have type X -> I");
}

/// n-fold multiplication X^n -> X: eps+ for n = 0, the identity for n = 1, and
/// delta+ o (mu_{n-1} (x) 1) above that.
template <Scalar S>
Morphism<S> multiplication_power(const Observable<S>& obs, unsigned n) {
  if (n == 0) return dagger(obs.epsilon);
  Morphism<S> mu = Morphism<S>::identity(obs.object);
  const Morphism<S> mu2 = dagger(obs.delta);
  const Morphism<S> id = Morphism<S>::identity(obs.object);
  for (unsigned k = 2; k <= n; ++k) mu = compose(mu2, tensor(mu, id));
  return mu;
}

/// The canonical (m, n) spider: (n-fold comultiplication) o (m-fold multiplication).
template <Scalar S>
Morphism<S> spider(const Observable<S>& obs, unsigned m, unsigned n) {
  return compose(dagger(multiplication_power(obs, n)), multiplication_power(obs, m));
}

template <Scalar S>
DiagramModel<S> diagram_model(const Observable<S>& obs) {
  return DiagramModel<S>{obs.object, obs.delta, obs.epsilon, {}};
}

struct SpiderShapeResult {
  unsigned inputs = 0;
  unsigned outputs = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t rejected_draws = 0;
};

struct SpiderReport {
  std::uint64_t seed = 0;
  std::vector<SpiderShapeResult> shapes;
  /// Terms that evaluated differently from the canonical spider.
  std::vector<std::string> counterexamples;

  bool passed() const {
    return std::all_of(shapes.begin(), shapes.end(), [](const auto& s) { return s.failures == 0; });
  }
  std::size_t total_trials() const {
    std::size_t t = 0;
    for (const auto& s : shapes) t += s.trials;
    return t;
  }
};

/// Largest wire count whose dense state space stays within 256 entries, at most 4.
inline unsigned max_spider_wires(const TheoryObject& x) {
  unsigned w = 0;
  std::size_t d = 1;
  while (w < 4 && d * x.dim() <= 256) {
    d *= x.dim();
    ++w;
  }
  return w;
}

/// Evaluates random connected diagrams of every boundary shape (m, n) with
/// m, n <= max_arity and compares each with the canonical spider. Trial t of
/// shape (m, n) uses its own generator seeded from (seed, t, m, n), so results
/// do not depend on the thread count.
template <Scalar S>
SpiderReport spider_property_test(const Observable<S>& obs, std::size_t trials, std::uint64_t seed,
                                  unsigned max_arity = 3, unsigned threads = 1) {
  const DiagramModel<S> model = diagram_model(obs);
  RandomDiagramOptions options;
  options.max_wires = max_spider_wires(obs.object);
  max_arity = std::min(max_arity, options.max_wires);

  struct Outcome {
    bool ok = true;
    std::size_t rejected = 0;
    std::string term;
  };

  SpiderReport report;
  report.seed = seed;
  for (unsigned m = 0; m <= max_arity; ++m) {
    for (unsigned n = 0; n <= max_arity; ++n) {
      const Morphism<S> expected = spider(obs, m, n);
      std::vector<Outcome> outcomes(trials);
      auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
          std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                            static_cast<std::uint32_t>(t), m, n};
          std::mt19937_64 rng(seq);
          std::optional<DiagramTerm> term;
          std::size_t attempts = 0;
          while (!(term = random_spider_diagram(m, n, rng, options))) {
            if (++attempts > 100000) throw std::runtime_error("spider test: no connected diagram drawn");
          }
          outcomes[t].rejected = attempts;
          if (!(evaluate(*term, model) == expected)) {
            outcomes[t].ok = false;
            outcomes[t].term = term->str();
          }
        }
      };
      const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
      if (workers == 1) {
        run(0, trials);
      } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (trials + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
          std::size_t b = w * chunk;
          std::size_t e = std::min(trials, b + chunk);
          if (b < e) pool.emplace_back(run, b, e);
        }
        for (auto& th : pool) th.join();
      }
      SpiderShapeResult shape{m, n, trials, 0, 0};
      for (const auto& o : outcomes) {
        shape.rejected_draws += o.rejected;
        if (!o.ok) {
          ++shape.failures;
          report.counterexamples.push_back(o.term);
        }
      }
      report.shapes.push_back(shape);
    }
  }
  return report;
}

/// Checks the axioms one by one: coassociativity, cocommutativity, both counit
/// laws, isometry, both Frobenius laws; with spider_trials > 0 also a small
/// randomized spider check on shapes up to (2, 2).
template <Scalar S>
AxiomReport check_observable(const Morphism<S>& delta, const Morphism<S>& epsilon, std::size_t spider_trials = 0,
                             std::uint64_t seed = 1) {
  check_observable_shape(delta, epsilon);
  const TheoryObject x = delta.dom();
  const auto id = Morphism<S>::identity(x);
  const auto dd = dagger(delta);
  AxiomReport r;
  r.add("coassociativity", compose(tensor(delta, id), delta) == compose(tensor(id, delta), delta));
  r.add("cocommutativity", compose(Morphism<S>::swap(x, x), delta) == delta);
  r.add("counit_left", compose(tensor(epsilon, id), delta) == id);
  r.add("counit_right", compose(tensor(id, epsilon), delta) == id);
  r.add("isometry", compose(dd, delta) == id);
  const auto middle = compose(delta, dd);
  r.add("frobenius_left", compose(tensor(dd, id), tensor(id, delta)) == middle);
  r.add("frobenius_right", compose(tensor(id, dd), tensor(delta, id)) == middle);
  if (spider_trials > 0 && r.passed()) {
    Observable<S> obs{x, delta, epsilon, ""};
    r.add("spider", spider_property_test(obs, spider_trials, seed, 2).passed());
  }
  return r;
}

template <Scalar S>
AxiomReport check_observable(const Observable<S>& obs, std::size_t spider_trials = 0, std::uint64_t seed = 1) {
  return check_observable(obs.delta, obs.epsilon, spider_trials, seed);
}

// ---------------------------------------------------------------------------
// Compact structure, transpose, conjugate

/// eta = delta o eps+, the induced Bell state.
template <Scalar S>
Morphism<S> induced_eta(const Observable<S>& obs) {
  return compose(obs.delta, dagger(obs.epsilon));
}

/// The trivial compact structure on I.
template <Scalar S>
Morphism<S> unit_eta(unsigned base_dim) {
  return Morphism<S>::scalar(base_dim, S::one());
}

/// Snake equation and symmetry for eta : I -> A (x) A.
template <Scalar S>
AxiomReport check_compact(const Morphism<S>& eta) {
  if (!eta.is_state() || eta.cod().power % 2 != 0) throw TypeMismatch("eta must be a state on A (x) A");
  const TheoryObject a{eta.cod().power / 2, eta.cod().base_dim};
  const auto id = Morphism<S>::identity(a);
  AxiomReport r;
  r.add("snake", compose(tensor(dagger(eta), id), tensor(id, eta)) == id);
  r.add("symmetry", compose(Morphism<S>::swap(a, a), eta) == eta);
  return r;
}

namespace detail {

template <Scalar S>
TheoryObject half_of(const Morphism<S>& eta) {
  if (!check_compact(eta).passed()) throw InvalidCompactStructure("compact structure fails the snake or symmetry law");
  return {eta.cod().power / 2, eta.cod().base_dim};
}

}  // namespace detail

/// f^* : B -> A for f : A -> B, as (eta_B+ (x) 1_A) o (1_B (x) f (x) 1_A) o (1_B (x) eta_A).
template <Scalar S>
Morphism<S> transpose(const Morphism<S>& f, const Morphism<S>& eta_dom, const Morphism<S>& eta_cod) {
  const TheoryObject a = detail::half_of(eta_dom);
  const TheoryObject b = detail::half_of(eta_cod);
  if (!(f.dom() == a) || !(f.cod() == b)) throw TypeMismatch("transpose: compact structures do not match f");
  const auto ia = Morphism<S>::identity(a);
  const auto ib = Morphism<S>::identity(b);
  return compose(tensor(dagger(eta_cod), ia), compose(tensor(ib, f, ia), tensor(ib, eta_dom)));
}

/// f_* : A -> B, the dagger of the transpose.
template <Scalar S>
Morphism<S> conjugate(const Morphism<S>& f, const Morphism<S>& eta_dom, const Morphism<S>& eta_cod) {
  return dagger(transpose(f, eta_dom, eta_cod));
}

/// x_* for a state x on the observable's object, relative to its induced eta.
template <Scalar S>
Morphism<S> state_conjugate(const Observable<S>& obs, const Morphism<S>& x) {
  return conjugate(x, unit_eta<S>(obs.object.base_dim), induced_eta(obs));
}

// ---------------------------------------------------------------------------
// Eigenstates, dot product, unbiased states

/// x (.) y = delta+ o (x (x) y).
template <Scalar S>
Morphism<S> multiply(const Observable<S>& obs, const Morphism<S>& x, const Morphism<S>& y) {
  return compose(dagger(obs.delta), tensor(x, y));
}

template <Scalar S>
bool is_eigenstate(const Observable<S>& obs, const Morphism<S>& x) {
  if (!x.is_state() || !(x.cod() == obs.object)) return false;
  if (!(compose(obs.delta, x) == tensor(x, x))) return false;
  if (!(compose(obs.epsilon, x) == Morphism<S>::scalar(obs.object.base_dim, S::one()))) return false;
  return state_conjugate(obs, x) == x;
}

namespace detail {

template <Scalar S>
void insert_unique(std::vector<Morphism<S>>& out, const Morphism<S>& x) {
  if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
}

template <Scalar S>
std::vector<S> amplitude_alphabet() {
  if constexpr (std::is_same_v<S, CycloScalar>) {
    // 0 and w^j / sqrt2^m for m <= 2.
    std::vector<S> a{S::zero()};
    for (int m = 0; m <= 2; ++m) {
      for (const auto& u : S::unit_phases()) a.push_back(u * S::root2_power(-m));
    }
    return a;
  } else {
    return {S::zero(), S::one()};
  }
}

}  // namespace detail

/// Eigenstates found among the catalog: each catalog state c with eps o c
/// invertible is rescaled to c / (eps o c) and tested.
template <Scalar S>
std::vector<Morphism<S>> eigenstates_from_catalog(const Observable<S>& obs, const std::vector<Morphism<S>>& catalog) {
  std::vector<Morphism<S>> out;
  for (const auto& c : catalog) {
    if (!(c.cod() == obs.object)) continue;
    const S e = compose(obs.epsilon, c).entries()[0];
    auto inv = S::one().divide(e);
    if (!inv) continue;
    Morphism<S> x = c.scaled(*inv);
    if (is_eigenstate(obs, x)) detail::insert_unique(out, x);
  }
  std::sort(out.begin(), out.end(), state_precedes<S>);
  return out;
}

/// Eigenstates found by exhausting all states whose amplitudes lie in a bounded
/// alphabet (0 and w^j / sqrt2^m, m <= 2 for cyclotomic scalars; {0, 1} for
/// Booleans). Returns nullopt when the search space exceeds max_candidates.
template <Scalar S>
std::optional<std::vector<Morphism<S>>> eigenstates_exhaustive(const Observable<S>& obs,
                                                               std::size_t max_candidates = 1 << 20) {
  const auto alphabet = detail::amplitude_alphabet<S>();
  const std::size_t dim = obs.object.dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > max_candidates / alphabet.size()) return std::nullopt;
    total *= alphabet.size();
  }
  std::vector<Morphism<S>> out;
  std::vector<S> amps(dim);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t i = 0; i < dim; ++i) {
      amps[i] = alphabet[rest % alphabet.size()];
      rest /= alphabet.size();
    }
    auto x = Morphism<S>::state(obs.object, amps);
    if (is_eigenstate(obs, x)) detail::insert_unique(out, x);
  }
  std::sort(out.begin(), out.end(), state_precedes<S>);
  return out;
}

/// Union of the catalog search and, where small enough, the exhaustive search.
template <Scalar S>
std::vector<Morphism<S>> eigenstates(const Observable<S>& obs, const std::vector<Morphism<S>>& catalog) {
  auto out = eigenstates_from_catalog(obs, catalog);
  if (auto extra = eigenstates_exhaustive(obs, 4096)) {
    for (const auto& x : *extra) detail::insert_unique(out, x);
  }
  std::sort(out.begin(), out.end(), state_precedes<S>);
  return out;
}

/// psi is unbiased: psi_* (.) psi = eps+ and <psi|psi> = dim.
template <Scalar S>
bool is_unbiased(const Observable<S>& obs, const Morphism<S>& psi) {
  if (!psi.is_state() || !(psi.cod() == obs.object)) return false;
  if (!(norm_squared(psi) == dimension_scalar(obs.epsilon))) return false;
  return multiply(obs, state_conjugate(obs, psi), psi) == dagger(obs.epsilon);
}

/// Catalog states rescaled to length sqrt(dim) that are unbiased, in catalog order.
template <Scalar S>
std::vector<Morphism<S>> unbiased_states(const Observable<S>& obs, const std::vector<Morphism<S>>& catalog) {
  const S dim = dimension_scalar(obs.epsilon);
  std::vector<Morphism<S>> out;
  for (const auto& c : catalog) {
    if (!(c.cod() == obs.object) || c.is_zero()) continue;
    auto psi = rescale_to(c, dim);
    if (psi && is_unbiased(obs, *psi)) detail::insert_unique(out, *psi);
  }
  return out;
}

/// The action U_psi = delta+ o (psi (x) 1).
template <Scalar S>
Morphism<S> unbiased_action(const Observable<S>& obs, const Morphism<S>& psi) {
  return compose(dagger(obs.delta), tensor(psi, Morphism<S>::identity(obs.object)));
}

/// Every eigenstate of `a`, rescaled to length sqrt(dim), is unbiased for `b`.
template <Scalar S>
bool eigenstates_unbiased_for(const Observable<S>& a, const std::vector<Morphism<S>>& eigen_a, const Observable<S>& b) {
  const S dim = dimension_scalar(b.epsilon);
  for (const auto& x : eigen_a) {
    auto psi = rescale_to(x, dim);
    if (!psi || !is_unbiased(b, *psi)) return false;
  }
  (void)a;
  return !eigen_a.empty();
}

// ---------------------------------------------------------------------------
// Phase group

template <Scalar S>
struct PhaseGroup {
  std::vector<Morphism<S>> elements;
  GroupTable table;
  std::size_t identity_index = 0;
  /// inverse[i] is the element equal (up to phase) to elements[i]_*.
  std::vector<std::size_t> inverse;
  GroupClass iso;
};

/// Index of the element equal to x up to phase, if any.
template <Scalar S>
std::optional<std::size_t> find_up_to_phase(const std::vector<Morphism<S>>& list, const Morphism<S>& x) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (equal_up_to_phase(list[i], x)) return i;
  }
  return std::nullopt;
}

/// The unbiased states under (.), with the element equal to eps+ placed first.
/// Products are matched to elements up to phase. Throws PhaseGroupError when
/// the product leaves the set or there is no identity.
template <Scalar S>
PhaseGroup<S> phase_group(const Observable<S>& obs, const std::vector<Morphism<S>>& catalog) {
  PhaseGroup<S> pg;
  auto elems = unbiased_states(obs, catalog);
  auto unit = find_up_to_phase(elems, dagger(obs.epsilon));
  if (!unit) throw PhaseGroupError("no unbiased state equals eps+ up to phase");
  pg.elements.push_back(elems[*unit]);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i != *unit) pg.elements.push_back(elems[i]);
  }
  const std::size_t n = pg.elements.size();
  pg.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto k = find_up_to_phase(pg.elements, multiply(obs, pg.elements[i], pg.elements[j]));
      if (!k) throw PhaseGroupError("product of unbiased states " + std::to_string(i) + " and " + std::to_string(j) +
                                    " is not unbiased");
      pg.table[i][j] = *k;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto k = find_up_to_phase(pg.elements, state_conjugate(obs, pg.elements[i]));
    if (!k) throw PhaseGroupError("conjugate of an unbiased state is not unbiased");
    pg.inverse.push_back(*k);
  }
  pg.identity_index = 0;
  try {
    pg.iso = classify_group(pg.table);
  } catch (const InvalidGroupTable& e) {
    throw PhaseGroupError(std::string("unbiased states do not form an abelian group: ") + e.what());
  }
  return pg;
}

/// Group laws on a computed table, with the identity equal to eps+ up to phase
/// and inverses given by conjugation.
template <Scalar S>
AxiomReport check_phase_group(const Observable<S>& obs, const PhaseGroup<S>& pg) {
  AxiomReport r;
  bool abelian = true;
  try {
    validate_abelian_group(pg.table);
  } catch (const InvalidGroupTable&) {
    abelian = false;
  }
  r.add("abelian_group", abelian);
  r.add("identity_is_unit", abelian && group_identity(pg.table) == pg.identity_index &&
                                equal_up_to_phase(pg.elements[pg.identity_index], dagger(obs.epsilon)));
  bool inverses = pg.inverse.size() == pg.elements.size();
  for (std::size_t i = 0; inverses && i < pg.elements.size(); ++i) {
    inverses = pg.table[i][pg.inverse[i]] == pg.identity_index;
  }
  r.add("inverse_by_adjoint", inverses);
  bool unitary = true;
  for (const auto& psi : pg.elements) unitary = unitary && is_unitary(unbiased_action(obs, psi));
  r.add("unitary_actions", unitary);
  return r;
}

// ---------------------------------------------------------------------------
// Tensor lifting

/// delta = (1 (x) sigma (x) 1) o (delta1 (x) delta2), eps = eps1 (x) eps2.
template <Scalar S>
Observable<S> lift_tensor(const Observable<S>& a, const Observable<S>& b) {
  const auto mid = tensor(Morphism<S>::identity(a.object), Morphism<S>::swap(a.object, b.object),
                          Morphism<S>::identity(b.object));
  Observable<S> out;
  out.object = a.object.tensor(b.object);
  out.delta = compose(mid, tensor(a.delta, b.delta));
  out.epsilon = tensor(a.epsilon, b.epsilon);
  out.label = a.label + "(x)" + b.label;
  return out;
}

}  // namespace phaselab
