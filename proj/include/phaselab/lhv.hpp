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

// Local hidden-variable models for multipartite states: the Born table of a
// state, exact LP feasibility of a probabilistic model, the possibilistic
// version for Boolean theories, and GF(2) parity certificates read off a
// correlation table.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "phaselab/ghz.hpp"
#include "phaselab/simplex.hpp"

namespace phaselab {

class InvalidBornTable : public std::invalid_argument {
 public:
  explicit InvalidBornTable(const std::string& message) : std::invalid_argument(message) {}
};

/// Outcome statistics of one state for every choice of observable per site.
/// Contexts and outcomes are indexed with site 0 most significant.
struct BornTable {
  unsigned sites = 0;
  std::vector<std::string> observable_names;
  bool possibilistic = false;
  /// contexts[c][s]: observable measured at site s.
  std::vector<std::vector<unsigned>> contexts;
  /// weights[c][outcome]: probability, or 0/1 possibility.
  std::vector<std::vector<Rational>> weights;

  unsigned observables() const { return static_cast<unsigned>(observable_names.size()); }
  std::size_t outcomes() const { return std::size_t{1} << sites; }
  /// Bit of site s in an outcome index.
  unsigned outcome_bit(std::size_t outcome, unsigned s) const { return (outcome >> (sites - 1 - s)) & 1u; }
  std::string context_name(std::size_t c) const;
};

namespace detail {

std::vector<std::vector<unsigned>> all_contexts(unsigned sites, unsigned observables);

inline Rational born_weight(const CycloScalar& amp) { return amp.squared_modulus(); }
inline Rational born_weight(const BoolScalar& amp) { return Rational(amp == BoolScalar::one() ? 1 : 0); }

}  // namespace detail

/// eigen[o] = {bit 0, bit 1} eigenstates of observable o. Weight of outcome
/// (b_1..b_n) in a context is |(x_1 (x) ... (x) x_n)+ o state|^2 renormalized
/// over the context (Stab), or the Boolean amplitude itself (Spek).
template <Scalar S>
BornTable born_table(const Morphism<S>& state, const std::vector<std::vector<Morphism<S>>>& eigen,
                     const std::vector<std::string>& names) {
  if (!state.is_state() || state.cod().power == 0) throw TypeMismatch("born_table expects a state on X^n");
  if (eigen.size() != names.size() || eigen.empty()) throw std::invalid_argument("one name per observable");
  for (const auto& e : eigen) {
    if (e.size() != 2) throw std::invalid_argument("each observable needs exactly two eigenstates");
  }
  BornTable t;
  t.sites = state.cod().power;
  t.observable_names = names;
  t.possibilistic = std::is_same_v<S, BoolScalar>;
  t.contexts = detail::all_contexts(t.sites, t.observables());
  for (const auto& ctx : t.contexts) {
    std::vector<Rational> row;
    Rational total(0);
    for (std::size_t out = 0; out < t.outcomes(); ++out) {
      Morphism<S> effect = Morphism<S>::scalar(state.cod().base_dim, S::one());
      for (unsigned s = 0; s < t.sites; ++s) effect = tensor(effect, eigen[ctx[s]][t.outcome_bit(out, s)]);
      const Rational w = detail::born_weight(compose(dagger(effect), state).entries()[0]);
      row.push_back(w);
      total += w;
    }
    if (total.is_zero()) throw InvalidBornTable("context " + std::to_string(t.weights.size()) + " has no outcome");
    if (!t.possibilistic) {
      for (auto& w : row) w /= total;
    }
    t.weights.push_back(std::move(row));
  }
  return t;
}

/// Probabilistic table with the uniform distribution over each context's
/// possible outcomes.
BornTable uniform_over_possible(const BornTable& t);

/// Possibilistic table: weight > 0 becomes 1.
BornTable coarsen_to_possibilities(const BornTable& t);

/// The constraint system of a local model: one variable per deterministic
/// assignment of an outcome bit to every (site, observable), one row per
/// (context, outcome) and a final normalization row.
struct LHVInstance {
  RationalMatrix a;
  std::vector<Rational> b;
  std::vector<std::string> row_names;
  std::size_t hidden_states = 0;
};

/// Hidden state xi assigns bit (xi >> (s * observables + o)) & 1 to observable o at site s.
LHVInstance lhv_instance(const BornTable& t);

struct LHVCertificate {
  bool feasible = false;
  /// Nonzero weights of the model, by hidden state.
  std::vector<std::pair<std::size_t, Rational>> measure;
  /// Row multipliers proving infeasibility.
  std::vector<Rational> farkas;
  std::vector<std::string> row_names;
  std::size_t pivots = 0;
  /// The certificate was re-checked against the instance by exact arithmetic.
  bool verified = false;
};

/// Exact LP: is there a probability measure on hidden states reproducing the table?
LHVCertificate lhv_feasibility(const BornTable& t);

/// Re-checks a certificate against the table's instance.
bool verify_certificate(const BornTable& t, const LHVCertificate& cert);

struct PossibilisticCertificate {
  bool feasible = false;
  /// Hidden states whose outcome is possible in every context.
  std::vector<std::size_t> consistent;
  /// When infeasible, a possible (context, outcome) no consistent state yields.
  std::optional<std::pair<std::size_t, std::size_t>> uncovered;
};

/// A possibilistic model exists iff every possible outcome of every context is
/// produced by some hidden state that only ever produces possible outcomes.
PossibilisticCertificate possibilistic_lhv(const BornTable& t);

// ---------------------------------------------------------------------------
// Parity certificates

/// sum over sites s of bit(s, context[s]) = parity (mod 2).
struct ParityEquation {
  std::vector<unsigned> context;
  unsigned parity = 0;
};

struct ParityCertificate {
  /// Every equation implied by the forbidden triples.
  std::vector<ParityEquation> system;
  /// A minimal subset of the system whose sum is 0 = 1.
  std::vector<ParityEquation> contradiction;
};

/// Builds the GF(2) system over outcome bits per (site, observable) from the
/// contexts whose non-forbidden outcomes all share one parity, and returns a
/// minimal inconsistent subset if the system is inconsistent. Throws
/// std::invalid_argument on a table without three observables of two
/// eigenstates each or a phase group of order other than 4.
std::optional<ParityCertificate> mermin_certificate(const CorrelationTable& ct);

/// The extracted system alone.
std::vector<ParityEquation> parity_system(const CorrelationTable& ct);

/// Each variable occurs an even number of times and the parities sum to 1.
bool verify_parity_certificate(const ParityCertificate& cert);

}  // namespace phaselab
