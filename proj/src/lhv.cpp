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

#include "phaselab/lhv.hpp"

#include <bitset>

namespace phaselab {

std::string BornTable::context_name(std::size_t c) const {
  std::string s;
  for (unsigned o : contexts.at(c)) s += observable_names.at(o);
  return s;
}

namespace detail {

std::vector<std::vector<unsigned>> all_contexts(unsigned sites, unsigned observables) {
  std::size_t count = 1;
  for (unsigned s = 0; s < sites; ++s) count *= observables;
  std::vector<std::vector<unsigned>> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<unsigned> ctx(sites);
    std::size_t rest = c;
    for (unsigned s = sites; s-- > 0;) {
      ctx[s] = static_cast<unsigned>(rest % observables);
      rest /= observables;
    }
    out.push_back(ctx);
  }
  return out;
}

}  // namespace detail

BornTable uniform_over_possible(const BornTable& t) {
  BornTable out = t;
  out.possibilistic = false;
  for (auto& row : out.weights) {
    long possible = 0;
    for (const auto& w : row) possible += w.sign() > 0;
    if (possible == 0) throw InvalidBornTable("context without a possible outcome");
    for (auto& w : row) w = w.sign() > 0 ? Rational(1, possible) : Rational(0);
  }
  return out;
}

BornTable coarsen_to_possibilities(const BornTable& t) {
  BornTable out = t;
  out.possibilistic = true;
  for (auto& row : out.weights) {
    for (auto& w : row) w = Rational(w.sign() > 0 ? 1 : 0);
  }
  return out;
}

namespace {

unsigned assigned_bit(const BornTable& t, std::size_t xi, unsigned site, unsigned obs) {
  return static_cast<unsigned>((xi >> (site * t.observables() + obs)) & 1u);
}

/// Outcome index a hidden state produces in a context.
std::size_t induced_outcome(const BornTable& t, std::size_t xi, const std::vector<unsigned>& ctx) {
  std::size_t out = 0;
  for (unsigned s = 0; s < t.sites; ++s) out = (out << 1) | assigned_bit(t, xi, s, ctx[s]);
  return out;
}

std::size_t hidden_state_count(const BornTable& t) {
  const unsigned bits = t.sites * t.observables();
  if (bits > 20) throw InvalidBornTable("too many hidden states");
  return std::size_t{1} << bits;
}

std::string outcome_name(const BornTable& t, std::size_t out) {
  std::string s;
  for (unsigned site = 0; site < t.sites; ++site) s += static_cast<char>('0' + t.outcome_bit(out, site));
  return s;
}

}  // namespace

LHVInstance lhv_instance(const BornTable& t) {
  LHVInstance inst;
  inst.hidden_states = hidden_state_count(t);
  for (std::size_t c = 0; c < t.contexts.size(); ++c) {
    for (std::size_t out = 0; out < t.outcomes(); ++out) {
      std::vector<Rational> row(inst.hidden_states, Rational(0));
      for (std::size_t xi = 0; xi < inst.hidden_states; ++xi) {
        if (induced_outcome(t, xi, t.contexts[c]) == out) row[xi] = Rational(1);
      }
      inst.a.push_back(std::move(row));
      inst.b.push_back(t.weights[c][out]);
      inst.row_names.push_back(t.context_name(c) + ":" + outcome_name(t, out));
    }
  }
  inst.a.emplace_back(inst.hidden_states, Rational(1));
  inst.b.emplace_back(1);
  inst.row_names.emplace_back("normalization");
  return inst;
}

LHVCertificate lhv_feasibility(const BornTable& t) {
  if (t.possibilistic) throw InvalidBornTable("lhv_feasibility needs probabilities; lift the table first");
  const LHVInstance inst = lhv_instance(t);
  const FeasibilityResult r = solve_feasibility(inst.a, inst.b);
  LHVCertificate cert;
  cert.feasible = r.feasible;
  cert.pivots = r.pivots;
  cert.row_names = inst.row_names;
  if (r.feasible) {
    for (std::size_t xi = 0; xi < r.x.size(); ++xi) {
      if (!r.x[xi].is_zero()) cert.measure.emplace_back(xi, r.x[xi]);
    }
  } else {
    cert.farkas = r.farkas;
  }
  cert.verified = verify_certificate(t, cert);
  return cert;
}

bool verify_certificate(const BornTable& t, const LHVCertificate& cert) {
  const LHVInstance inst = lhv_instance(t);
  if (cert.feasible) {
    std::vector<Rational> x(inst.hidden_states, Rational(0));
    for (const auto& [xi, w] : cert.measure) {
      if (xi >= x.size()) return false;
      x[xi] = w;
    }
    return verify_solution(inst.a, inst.b, x);
  }
  return verify_farkas(inst.a, inst.b, cert.farkas);
}

PossibilisticCertificate possibilistic_lhv(const BornTable& t) {
  const std::size_t hidden = hidden_state_count(t);
  PossibilisticCertificate cert;
  for (std::size_t xi = 0; xi < hidden; ++xi) {
    bool ok = true;
    for (std::size_t c = 0; c < t.contexts.size() && ok; ++c) {
      ok = t.weights[c][induced_outcome(t, xi, t.contexts[c])].sign() > 0;
    }
    if (ok) cert.consistent.push_back(xi);
  }
  for (std::size_t c = 0; c < t.contexts.size() && !cert.uncovered; ++c) {
    std::vector<bool> covered(t.outcomes(), false);
    for (std::size_t xi : cert.consistent) covered[induced_outcome(t, xi, t.contexts[c])] = true;
    for (std::size_t out = 0; out < t.outcomes(); ++out) {
      if (t.weights[c][out].sign() > 0 && !covered[out]) {
        cert.uncovered = std::make_pair(c, out);
        break;
      }
    }
  }
  cert.feasible = !cert.uncovered.has_value();
  return cert;
}

// ---------------------------------------------------------------------------
// Parity certificates

namespace {

constexpr unsigned kSites = 3;
constexpr unsigned kObservables = 3;
using Row = std::bitset<kSites * kObservables + 1>;  // variables, then the constant
constexpr std::size_t kConstant = kSites * kObservables;

Row to_row(const ParityEquation& e) {
  Row r;
  for (unsigned s = 0; s < kSites; ++s) r.flip(s * kObservables + e.context[s]);
  if (e.parity) r.set(kConstant);
  return r;
}

bool inconsistent(const std::vector<ParityEquation>& eqs) {
  std::vector<Row> rows;
  for (const auto& e : eqs) rows.push_back(to_row(e));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < kConstant; ++col) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p].test(col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i].test(col)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i) {
    if (rows[i].test(kConstant)) return true;
  }
  return false;
}

void check_table(const CorrelationTable& ct) {
  if (ct.states.size() != 7) throw std::invalid_argument("correlation table must list six states and zero");
  for (std::size_t i = 0; i < 6; ++i) {
    if (ct.states[i].observable != static_cast<int>(i / 2) || ct.states[i].bit != static_cast<int>(i % 2)) {
      throw std::invalid_argument("correlation table states are not ordered Z0, Z1, X0, X1, Y0, Y1");
    }
  }
  if (ct.group.size() != 4) throw std::invalid_argument("parity certificates need a phase group of order 4");
}

}  // namespace

std::vector<ParityEquation> parity_system(const CorrelationTable& ct) {
  check_table(ct);
  std::vector<ParityEquation> out;
  for (const auto& ctx : detail::all_contexts(kSites, kObservables)) {
    int parity = -1;
    bool uniform = true;
    for (unsigned out_bits = 0; out_bits < 8 && uniform; ++out_bits) {
      const unsigned b0 = (out_bits >> 2) & 1u;
      const unsigned b1 = (out_bits >> 1) & 1u;
      const unsigned b2 = out_bits & 1u;
      const IndexTriple tr{2 * ctx[0] + b0, 2 * ctx[1] + b1, 2 * ctx[2] + b2};
      if (ct.is_forbidden(tr)) continue;
      const int p = static_cast<int>((b0 + b1 + b2) % 2);
      if (parity < 0) parity = p;
      uniform = parity == p;
    }
    if (uniform && parity >= 0) out.push_back({ctx, static_cast<unsigned>(parity)});
  }
  return out;
}

std::optional<ParityCertificate> mermin_certificate(const CorrelationTable& ct) {
  ParityCertificate cert;
  cert.system = parity_system(ct);
  if (!inconsistent(cert.system)) return std::nullopt;
  // Drop equations greedily while the rest stays inconsistent.
  std::vector<ParityEquation> keep = cert.system;
  for (std::size_t i = 0; i < keep.size();) {
    auto trial = keep;
    trial.erase(trial.begin() + static_cast<long>(i));
    if (inconsistent(trial)) {
      keep = std::move(trial);
    } else {
      ++i;
    }
  }
  cert.contradiction = std::move(keep);
  return cert;
}

bool verify_parity_certificate(const ParityCertificate& cert) {
  if (cert.contradiction.empty()) return false;
  Row sum;
  for (const auto& e : cert.contradiction) {
    if (e.context.size() != kSites) return false;
    sum ^= to_row(e);
  }
  Row contradiction;
  contradiction.set(kConstant);
  return sum == contradiction;
}

}  // namespace phaselab
