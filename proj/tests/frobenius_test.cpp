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

#include "phaselab/frobenius.hpp"

#include <set>

#include <gtest/gtest.h>

#include "phaselab/theories.hpp"
#include "test_support.hpp"

namespace phaselab {
namespace {

using C = CycloScalar;
using B = BoolScalar;
using testing::numeric;

const TheoryObject kQ{1, 2};
const TheoryObject kV{1, 4};

Morphism<B> subset(std::initializer_list<unsigned> labels) {
  Morphism<B> s(TheoryObject::unit(4), kV);
  for (unsigned l : labels) s(l - 1, 0) = B::one();
  return s;
}

Morphism<C> ket(C a, C b) { return Morphism<C>::state(kQ, {a, b}); }

class FrobeniusTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    stab_ = new StabTheory(build_stab());
    spek_ = new SpekTheory(build_spek());
    stab_states_ = new std::vector<Morphism<C>>(enumerate_states(*stab_, 1).states);
    spek_states_ = new std::vector<Morphism<B>>(enumerate_states(*spek_, 1).states);
    stab_obs_ = new std::vector<Observable<C>>(enumerate_observables(*stab_, *stab_states_));
    spek_obs_ = new std::vector<Observable<B>>(enumerate_observables(*spek_, *spek_states_));
  }
  static void TearDownTestSuite() {
    delete stab_;
    delete spek_;
    delete stab_states_;
    delete spek_states_;
    delete stab_obs_;
    delete spek_obs_;
  }
  static StabTheory* stab_;
  static SpekTheory* spek_;
  static std::vector<Morphism<C>>* stab_states_;
  static std::vector<Morphism<B>>* spek_states_;
  static std::vector<Observable<C>>* stab_obs_;
  static std::vector<Observable<B>>* spek_obs_;
};

StabTheory* FrobeniusTest::stab_ = nullptr;
SpekTheory* FrobeniusTest::spek_ = nullptr;
std::vector<Morphism<C>>* FrobeniusTest::stab_states_ = nullptr;
std::vector<Morphism<B>>* FrobeniusTest::spek_states_ = nullptr;
std::vector<Observable<C>>* FrobeniusTest::stab_obs_ = nullptr;
std::vector<Observable<B>>* FrobeniusTest::spek_obs_ = nullptr;

TEST_F(FrobeniusTest, AxiomsHoldForAllSixObservables) {
  ASSERT_EQ(stab_obs_->size(), 3u);
  ASSERT_EQ(spek_obs_->size(), 3u);
  for (const auto& o : *stab_obs_) {
    auto r = check_observable(o, 20, 7);
    EXPECT_TRUE(r.passed()) << o.label;
    EXPECT_EQ(r.results.size(), 8u);
  }
  for (const auto& o : *spek_obs_) EXPECT_TRUE(check_observable(o, 20, 7).passed()) << o.label;
}

TEST_F(FrobeniusTest, NonBasisUnitaryOnOutputLegsBreaksAxioms) {
  const auto& h = stab_->hadamard;
  const auto bent = compose(tensor(h, h), stab_->delta);
  auto r = check_observable(bent, stab_->epsilon);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.passed("frobenius_left") && r.passed("frobenius_right") && r.passed("isometry") &&
               r.passed("counit_left"));
  const auto one_leg = compose(tensor(Morphism<C>::identity(kQ), h), stab_->delta);
  EXPECT_FALSE(check_observable(one_leg, stab_->epsilon).passed());
}

TEST_F(FrobeniusTest, ShapeMismatchThrows) {
  EXPECT_THROW(check_observable(stab_->epsilon, stab_->epsilon), TypeMismatch);
  EXPECT_THROW(check_observable(stab_->delta, stab_->delta), TypeMismatch);
  AxiomReport r;
  r.add("a", true);
  EXPECT_THROW(r.passed("b"), std::out_of_range);
}

TEST_F(FrobeniusTest, StabEigenstatesAreComputationalBasis) {
  auto e = eigenstates(stab_->observable(), *stab_states_);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0], ket(C::one(), C::zero()));
  EXPECT_EQ(e[1], ket(C::zero(), C::one()));
  for (const auto& x : e) EXPECT_EQ(norm_squared(x), C::one());
  // The exhaustive search alone finds the same pair.
  auto direct = eigenstates_exhaustive(stab_->observable());
  ASSERT_TRUE(direct.has_value());
  EXPECT_EQ(*direct, e);
}

TEST_F(FrobeniusTest, SpekEigenstatesOverAllNonemptySubsets) {
  std::vector<Morphism<B>> all;
  for (unsigned mask = 1; mask < 16; ++mask) {
    Morphism<B> s(TheoryObject::unit(4), kV);
    for (unsigned i = 0; i < 4; ++i) s(i, 0) = B((mask >> i) & 1u);
    all.push_back(s);
  }
  std::vector<Morphism<B>> found;
  for (const auto& s : all) {
    if (is_eigenstate(spek_->observable(), s)) found.push_back(s);
  }
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(found[0], subset({1, 2}));
  EXPECT_EQ(found[1], subset({3, 4}));
  EXPECT_EQ(eigenstates(spek_->observable(), *spek_states_), found);
}

TEST_F(FrobeniusTest, TensorLiftedObservablesHaveProductEigenstates) {
  auto stab_lift = lift_tensor(stab_->observable(), stab_->observable());
  EXPECT_TRUE(check_observable(stab_lift).passed());
  const TheoryObject qq = kQ.tensor(kQ);
  for (std::size_t i = 0; i < 4; ++i) {
    auto b = Morphism<C>::basis_state(qq, i);
    EXPECT_EQ(compose(stab_lift.delta, b), tensor(b, b));
  }

  auto spek_lift = lift_tensor(spek_->observable(), spek_->observable());
  EXPECT_TRUE(check_observable(spek_lift).passed());
  std::vector<Morphism<B>> products;
  for (const auto& a : *spek_states_) {
    for (const auto& b : *spek_states_) products.push_back(tensor(a, b));
  }
  auto e = eigenstates(spek_lift, products);
  ASSERT_EQ(e.size(), 4u);
  std::set<std::string> want;
  for (const auto& a : {subset({1, 2}), subset({3, 4})}) {
    for (const auto& b : {subset({1, 2}), subset({3, 4})}) want.insert(phase_key(tensor(a, b)));
  }
  std::set<std::string> got;
  for (const auto& x : e) got.insert(phase_key(x));
  EXPECT_EQ(got, want);

  for (std::size_t o = 0; o < 3; ++o) {
    auto lifted = lift_tensor((*stab_obs_)[o], (*stab_obs_)[o]);
    std::vector<Morphism<C>> prod;
    for (const auto& a : *stab_states_) {
      for (const auto& b : *stab_states_) prod.push_back(tensor(a, b));
    }
    EXPECT_EQ(eigenstates(lifted, prod).size(), 4u) << (*stab_obs_)[o].label;
  }
}

TEST_F(FrobeniusTest, DotProductRules) {
  auto check = [](const auto& obs, const auto& eigen, const auto& unbiased) {
    const auto unit = dagger(obs.epsilon);
    ASSERT_EQ(eigen.size(), 2u);
    for (const auto& x : eigen) EXPECT_EQ(multiply(obs, x, x), x);
    EXPECT_TRUE(multiply(obs, eigen[0], eigen[1]).is_zero());
    for (const auto& psi : unbiased) {
      EXPECT_EQ(multiply(obs, unit, psi), psi);
      EXPECT_EQ(multiply(obs, psi, unit), psi);
      // x (.) psi is x up to a phase.
      for (const auto& x : eigen) EXPECT_TRUE(equal_up_to_phase(multiply(obs, x, psi), x));
      for (const auto& phi : unbiased) EXPECT_EQ(multiply(obs, psi, phi), multiply(obs, phi, psi));
    }
  };
  for (const auto& o : *stab_obs_) check(o, eigenstates(o, *stab_states_), unbiased_states(o, *stab_states_));
  for (const auto& o : *spek_obs_) check(o, eigenstates(o, *spek_states_), unbiased_states(o, *spek_states_));
}

TEST_F(FrobeniusTest, StabUnbiasedStatesForZ) {
  auto u = unbiased_states(stab_->observable(), *stab_states_);
  ASSERT_EQ(u.size(), 4u);
  std::set<std::string> got;
  for (const auto& psi : u) {
    EXPECT_EQ(norm_squared(psi), C::integer(2));
    got.insert(phase_key(psi));
  }
  std::set<std::string> want;
  for (int j : {0, 2, 4, 6}) want.insert(phase_key(ket(C::one(), C::omega(j))));
  EXPECT_EQ(got, want);
  for (const auto& x : eigenstates(stab_->observable(), *stab_states_)) {
    EXPECT_FALSE(is_unbiased(stab_->observable(), x.scaled(C::root2_power(1))));
  }
}

TEST_F(FrobeniusTest, SpekUnbiasedStatesForZ) {
  auto u = unbiased_states(spek_->observable(), *spek_states_);
  std::set<std::string> got;
  for (const auto& psi : u) got.insert(phase_key(psi));
  std::set<std::string> want;
  for (const auto& s : {subset({1, 3}), subset({1, 4}), subset({2, 3}), subset({2, 4})}) want.insert(phase_key(s));
  EXPECT_EQ(got, want);
  EXPECT_FALSE(is_unbiased(spek_->observable(), subset({1, 2})));
}

TEST_F(FrobeniusTest, InducedCompactStructure) {
  auto eta = induced_eta(stab_->observable());
  EXPECT_EQ(eta, Morphism<C>::state(kQ.tensor(kQ), {C::one(), C::zero(), C::zero(), C::one()}));
  EXPECT_TRUE(check_compact(eta).passed());
  for (const auto& o : *spek_obs_) EXPECT_TRUE(check_compact(induced_eta(o)).passed());
  for (const auto& o : *stab_obs_) EXPECT_TRUE(check_compact(induced_eta(o)).passed());
}

TEST_F(FrobeniusTest, TransposeAndConjugateAgainstMatrixOracle) {
  std::mt19937_64 rng(11);
  auto eta = induced_eta(stab_->observable());
  for (int t = 0; t < 50; ++t) {
    auto f = testing::random_cyclo_morphism(rng, kQ, kQ);
    auto ft = transpose(f, eta, eta);
    auto fc = conjugate(f, eta, eta);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        EXPECT_EQ(ft(r, c), f(c, r));
        EXPECT_TRUE(testing::close(numeric(fc(r, c)), std::conj(numeric(f(r, c)))));
      }
    }
    EXPECT_EQ(transpose(ft, eta, eta), f);
  }
  for (const auto& o : *stab_obs_) {
    auto e = induced_eta(o);
    std::mt19937_64 r2(3);
    auto f = testing::random_cyclo_morphism(r2, kQ, kQ);
    EXPECT_EQ(transpose(transpose(f, e, e), e, e), f) << o.label;
  }
}

TEST_F(FrobeniusTest, EigenstatesAreSelfConjugate) {
  for (const auto& o : *stab_obs_) {
    for (const auto& x : eigenstates(o, *stab_states_)) EXPECT_EQ(state_conjugate(o, x), x);
  }
  for (const auto& o : *spek_obs_) {
    for (const auto& x : eigenstates(o, *spek_states_)) EXPECT_EQ(state_conjugate(o, x), x);
  }
}

TEST_F(FrobeniusTest, InvalidCompactStructureThrows) {
  auto bad = Morphism<C>::state(kQ.tensor(kQ), {C::one(), C::one(), C::zero(), C::one()});
  EXPECT_FALSE(check_compact(bad).passed());
  EXPECT_THROW(transpose(stab_->hadamard, bad, bad), InvalidCompactStructure);
  auto eta = induced_eta(stab_->observable());
  auto wrong = Morphism<C>::identity(kQ.tensor(kQ));
  EXPECT_THROW(transpose(wrong, eta, eta), TypeMismatch);
}

TEST_F(FrobeniusTest, SmallSpiders) {
  auto zs = stab_->observable();
  EXPECT_EQ(spider(zs, 1, 1), Morphism<C>::identity(kQ));
  EXPECT_EQ(spider(zs, 0, 0), Morphism<C>::scalar(2, C::integer(2)));
  EXPECT_EQ(spider(zs, 2, 1), dagger(zs.delta));
  EXPECT_EQ(spider(zs, 1, 2), zs.delta);
  EXPECT_EQ(spider(zs, 0, 3), compose(tensor(zs.delta, Morphism<C>::identity(kQ)), induced_eta(zs)));
  auto zp = spek_->observable();
  EXPECT_EQ(spider(zp, 1, 1), Morphism<B>::identity(kV));
  EXPECT_EQ(spider(zp, 0, 0), Morphism<B>::scalar(4, B::one()));
  EXPECT_EQ(max_spider_wires(kQ), 4u);
  EXPECT_EQ(max_spider_wires(kV), 4u);
}

TEST_F(FrobeniusTest, SpiderPropertyBothTheories) {
  const std::uint64_t seed = 20260101;
  for (const auto& o : *stab_obs_) {
    auto r = spider_property_test(o, o.label == "Z" ? 200 : 40, seed, 3, 4);
    EXPECT_TRUE(r.passed()) << o.label << ": " << (r.counterexamples.empty() ? "" : r.counterexamples[0]);
    EXPECT_EQ(r.shapes.size(), 16u);
  }
  for (const auto& o : *spek_obs_) {
    auto r = spider_property_test(o, o.label == "Z" ? 200 : 40, seed, 3, 4);
    EXPECT_TRUE(r.passed()) << o.label << ": " << (r.counterexamples.empty() ? "" : r.counterexamples[0]);
  }
}

TEST_F(FrobeniusTest, SpiderReportIndependentOfThreadCount) {
  auto a = spider_property_test(stab_->observable(), 30, 5, 2, 1);
  auto b = spider_property_test(stab_->observable(), 30, 5, 2, 3);
  ASSERT_EQ(a.shapes.size(), b.shapes.size());
  for (std::size_t i = 0; i < a.shapes.size(); ++i) {
    EXPECT_EQ(a.shapes[i].failures, b.shapes[i].failures);
    EXPECT_EQ(a.shapes[i].rejected_draws, b.shapes[i].rejected_draws);
  }
}

TEST_F(FrobeniusTest, SpiderTestCatchesBrokenObservable) {
  // Counit scaled by 2: every spider law involving eps breaks.
  Observable<C> broken = stab_->observable();
  broken.epsilon = broken.epsilon.scaled(C::integer(2));
  EXPECT_FALSE(spider_property_test(broken, 20, 9, 2).passed());
}

TEST_F(FrobeniusTest, PhaseGroupLaws) {
  for (const auto& o : *stab_obs_) {
    auto pg = phase_group(o, *stab_states_);
    EXPECT_TRUE(check_phase_group(o, pg).passed()) << o.label;
    EXPECT_EQ(pg.iso.name(), "Z4");
  }
  for (const auto& o : *spek_obs_) {
    auto pg = phase_group(o, *spek_states_);
    EXPECT_TRUE(check_phase_group(o, pg).passed()) << o.label;
    EXPECT_EQ(pg.iso.name(), "Z2xZ2");
  }
}

TEST_F(FrobeniusTest, PhaseGroupFailsOnIncompleteCatalog) {
  // |i> (.) |i> is |-> up to phase, which is missing here.
  const C h = C::root2_power(-1);
  std::vector<Morphism<C>> partial{ket(h, h), ket(h, C::omega(2) * h)};
  EXPECT_THROW(phase_group(stab_->observable(), partial), PhaseGroupError);
  std::vector<Morphism<C>> no_unit{ket(h, -h)};
  EXPECT_THROW(phase_group(stab_->observable(), no_unit), PhaseGroupError);
}

TEST_F(FrobeniusTest, EigenstateInnerProductsIdempotentAndOrthogonal) {
  auto check = [](const auto& obs, const auto& states) {
    auto e = eigenstates(obs, states);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = 0; j < e.size(); ++j) {
        auto s = compose(dagger(e[i]), e[j]).entries()[0];
        EXPECT_EQ(s * s, s);
        if (i != j) EXPECT_TRUE(s.is_zero());
      }
    }
  };
  for (const auto& o : *stab_obs_) check(o, *stab_states_);
  for (const auto& o : *spek_obs_) check(o, *spek_states_);
}

TEST_F(FrobeniusTest, UnbiasedActionsUnitaryExactlyForUnbiasedStates) {
  for (const auto& o : *stab_obs_) {
    for (const auto& s : *stab_states_) {
      auto psi = rescale_to(s, dimension_scalar(o.epsilon));
      ASSERT_TRUE(psi.has_value());
      EXPECT_EQ(is_unitary(unbiased_action(o, *psi)), is_unbiased(o, *psi));
    }
  }
  for (const auto& o : *spek_obs_) {
    for (const auto& s : *spek_states_) {
      EXPECT_EQ(is_unitary(unbiased_action(o, s)), is_unbiased(o, s));
    }
  }
}

}  // namespace
}  // namespace phaselab
