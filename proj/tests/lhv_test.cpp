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

#include <chrono>

#include <gtest/gtest.h>

#include "phaselab/theories.hpp"

namespace phaselab {
namespace {

using C = CycloScalar;
using B = BoolScalar;

const std::vector<std::string> kNames{"Z", "X", "Y"};

template <Scalar S>
struct Pipeline {
  TheoryBinding<S> theory;
  std::vector<Morphism<S>> states;
  std::vector<Observable<S>> observables;
  CanonicalStates<S> canonical;
  GHZStructure<S> ghz;
  CorrelationTable table;
  std::vector<std::vector<Morphism<S>>> eigen;  // [observable][bit]
  BornTable born;
};

template <Scalar S>
Pipeline<S>* make_pipeline(TheoryBinding<S> t) {
  auto* p = new Pipeline<S>{std::move(t)};
  p->states = enumerate_states(p->theory, 1).states;
  p->observables = enumerate_observables(p->theory, p->states);
  auto catalog = build_catalog(p->observables, p->states);
  p->canonical = canonical_states(p->observables, catalog.eigen, p->states);
  p->ghz = ghz_from_observable(p->observables[0]);
  p->table = correlation_triples(p->ghz, p->canonical);
  for (std::size_t o = 0; o < 3; ++o) p->eigen.push_back({p->canonical.states[2 * o], p->canonical.states[2 * o + 1]});
  p->born = born_table(p->ghz.psi, p->eigen, kNames);
  return p;
}

std::size_t context_index(const BornTable& t, const std::string& name) {
  for (std::size_t c = 0; c < t.contexts.size(); ++c) {
    if (t.context_name(c) == name) return c;
  }
  throw std::out_of_range(name);
}

class LHVTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    stab_ = make_pipeline(build_stab());
    spek_ = make_pipeline(build_spek());
  }
  static void TearDownTestSuite() {
    delete stab_;
    delete spek_;
  }
  static Pipeline<C>* stab_;
  static Pipeline<B>* spek_;
};

Pipeline<C>* LHVTest::stab_ = nullptr;
Pipeline<B>* LHVTest::spek_ = nullptr;

TEST_F(LHVTest, BornTableShape) {
  const auto& t = stab_->born;
  EXPECT_EQ(t.contexts.size(), 27u);
  EXPECT_EQ(t.outcomes(), 8u);
  EXPECT_EQ(t.context_name(0), "ZZZ");
  EXPECT_EQ(t.context_name(26), "YYY");
  for (const auto& row : t.weights) {
    Rational sum(0);
    for (const auto& w : row) sum += w;
    EXPECT_EQ(sum, Rational(1));
  }
  EXPECT_EQ(lhv_instance(t).a.size(), 217u);
  EXPECT_EQ(lhv_instance(t).hidden_states, 512u);
}

TEST_F(LHVTest, MerminContextProbabilities) {
  const auto& t = stab_->born;
  auto parity = [](std::size_t out) { return (out ^ (out >> 1) ^ (out >> 2)) & 1u; };
  const auto& xxx = t.weights[context_index(t, "XXX")];
  for (std::size_t out = 0; out < 8; ++out) EXPECT_EQ(xxx[out], parity(out) == 0 ? Rational(1, 4) : Rational(0));
  for (const char* name : {"XYY", "YXY", "YYX"}) {
    const auto& row = t.weights[context_index(t, name)];
    for (std::size_t out = 0; out < 8; ++out) EXPECT_EQ(row[out], parity(out) == 1 ? Rational(1, 4) : Rational(0));
  }
  // Z measurements see only 000 and 111.
  const auto& zzz = t.weights[context_index(t, "ZZZ")];
  EXPECT_EQ(zzz[0], Rational(1, 2));
  EXPECT_EQ(zzz[7], Rational(1, 2));
}

TEST_F(LHVTest, SpekPossibleOutcomesAvoidForbiddenTriples) {
  const auto& t = spek_->born;
  EXPECT_TRUE(t.possibilistic);
  for (std::size_t c = 0; c < t.contexts.size(); ++c) {
    for (std::size_t out = 0; out < 8; ++out) {
      const IndexTriple tr{2 * t.contexts[c][0] + t.outcome_bit(out, 0), 2 * t.contexts[c][1] + t.outcome_bit(out, 1),
                           2 * t.contexts[c][2] + t.outcome_bit(out, 2)};
      const bool possible = t.weights[c][out].sign() > 0;
      const bool null_pair =
          std::binary_search(spek_->table.null.begin(), spek_->table.null.end(), IndexTriple{tr[0], tr[1], 6});
      if (spek_->table.is_forbidden(tr)) EXPECT_FALSE(possible);
      if (!null_pair) EXPECT_EQ(possible, !spek_->table.is_forbidden(tr)) << t.context_name(c) << " " << out;
    }
  }
}

TEST_F(LHVTest, StabGHZHasNoLocalModel) {
  const auto start = std::chrono::steady_clock::now();
  auto cert = lhv_feasibility(stab_->born);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_FALSE(cert.feasible);
  EXPECT_TRUE(cert.verified);
  EXPECT_TRUE(verify_certificate(stab_->born, cert));
  EXPECT_LT(seconds, 10.0);
}

TEST_F(LHVTest, SpekGHZHasLocalModel) {
  auto lifted = uniform_over_possible(spek_->born);
  auto cert = lhv_feasibility(lifted);
  EXPECT_TRUE(cert.feasible);
  EXPECT_TRUE(cert.verified);
  Rational total(0);
  for (const auto& [xi, w] : cert.measure) total += w;
  EXPECT_EQ(total, Rational(1));
  EXPECT_THROW(lhv_feasibility(spek_->born), InvalidBornTable);
}

TEST_F(LHVTest, ProductStateHasLocalModel) {
  auto plus = uniform_product_state(stab_->theory, 3);
  auto t = born_table(plus, stab_->eigen, kNames);
  auto cert = lhv_feasibility(t);
  EXPECT_TRUE(cert.feasible);
  EXPECT_TRUE(cert.verified);
  EXPECT_TRUE(possibilistic_lhv(coarsen_to_possibilities(t)).feasible);
}

TEST_F(LHVTest, SingleSiteTablesAreLocal) {
  auto t = born_table(stab_->eigen[1][0], stab_->eigen, kNames);
  EXPECT_EQ(t.contexts.size(), 3u);
  EXPECT_TRUE(lhv_feasibility(t).feasible);
  auto s = born_table(spek_->eigen[2][1], spek_->eigen, kNames);
  EXPECT_TRUE(possibilistic_lhv(s).feasible);
}

TEST_F(LHVTest, PossibilisticVerdicts) {
  auto spek = possibilistic_lhv(spek_->born);
  EXPECT_TRUE(spek.feasible);
  EXPECT_FALSE(spek.consistent.empty());
  auto stab = possibilistic_lhv(coarsen_to_possibilities(stab_->born));
  EXPECT_FALSE(stab.feasible);
  EXPECT_TRUE(stab.consistent.empty());
  ASSERT_TRUE(stab.uncovered.has_value());
}

TEST_F(LHVTest, DroppingContextsKeepsFeasibleInstancesFeasible) {
  auto inst = lhv_instance(uniform_over_possible(spek_->born));
  for (std::size_t dropped : {4u, 13u}) {
    RationalMatrix a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < inst.a.size(); ++i) {
      if (i / 8 != dropped) {
        a.push_back(inst.a[i]);
        b.push_back(inst.b[i]);
      }
    }
    EXPECT_TRUE(solve_feasibility(a, b).feasible);
  }
}

TEST_F(LHVTest, MerminCertificateForZ4Only) {
  auto cert = mermin_certificate(stab_->table);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_parity_certificate(*cert));
  std::vector<std::string> names;
  for (const auto& e : cert->contradiction) {
    std::string n;
    for (unsigned o : e.context) n += kNames[o];
    names.push_back(n + (e.parity ? " odd" : " even"));
  }
  EXPECT_EQ(names, (std::vector<std::string>{"XXX even", "XYY odd", "YXY odd", "YYX odd"}));
  EXPECT_FALSE(mermin_certificate(spek_->table).has_value());
  EXPECT_FALSE(parity_system(spek_->table).empty());
}

TEST_F(LHVTest, MerminAgreesWithSymbolicTablesAndLP) {
  EXPECT_TRUE(mermin_certificate(correlations_from_group(AbelianGroupSpec::cyclic(4))).has_value());
  EXPECT_FALSE(mermin_certificate(correlations_from_group(AbelianGroupSpec::klein())).has_value());
  auto no_forbidden = stab_->table;
  no_forbidden.forbidden.clear();
  EXPECT_TRUE(parity_system(no_forbidden).empty());
  EXPECT_FALSE(mermin_certificate(no_forbidden).has_value());
  // Both proofs of nonlocality agree.
  EXPECT_EQ(!lhv_feasibility(stab_->born).feasible, mermin_certificate(stab_->table).has_value());
}

TEST_F(LHVTest, MalformedTablesRejected) {
  auto bad = stab_->table;
  bad.states.pop_back();
  EXPECT_THROW(mermin_certificate(bad), std::invalid_argument);
  ParityCertificate empty;
  EXPECT_FALSE(verify_parity_certificate(empty));
}

}  // namespace
}  // namespace phaselab
