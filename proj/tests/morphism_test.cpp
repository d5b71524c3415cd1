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

#include "phaselab/morphism.hpp"

#include <random>

#include <gtest/gtest.h>

#include "phaselab/diagram.hpp"
#include "test_support.hpp"

namespace phaselab {
namespace {

using C = CycloScalar;
using M = Morphism<C>;
using B = Morphism<BoolScalar>;

const TheoryObject kI{0, 2};
const TheoryObject kQ{1, 2};
const TheoryObject kQQ{2, 2};

M delta_stab() {
  M d(kQ, kQQ);
  d(0, 0) = C::one();
  d(3, 1) = C::one();
  return d;
}

M epsilon_stab() { return M(kQ, kI, {C::one(), C::one()}); }

M hadamard() {
  C h = C::root2_power(-1);
  return M(kQ, kQ, {h, h, h, -h});
}

TEST(MorphismTest, IsometricCopy) {
  EXPECT_EQ(compose(dagger(delta_stab()), delta_stab()), M::identity(kQ));
}

TEST(MorphismTest, HadamardIsInvolution) { EXPECT_EQ(compose(hadamard(), hadamard()), M::identity(kQ)); }

TEST(MorphismTest, SwapIsInvolution) {
  M s = M::swap(kQ, kQ);
  EXPECT_EQ(compose(s, s), M::identity(kQQ));
}

TEST(MorphismTest, ComposeTypeMismatch) { EXPECT_THROW(compose(delta_stab(), delta_stab()), TypeMismatch); }

TEST(MorphismTest, EntryCountChecked) { EXPECT_THROW(M(kQ, kQ, {C::one()}), TypeMismatch); }

TEST(MorphismTest, TensorIndexConvention) {
  M t = tensor(M::basis_state(kQ, 0), M::basis_state(kQ, 1));
  EXPECT_EQ(t, M::basis_state(kQQ, 1));
  EXPECT_EQ(tensor(M::identity(kQ), M::identity(kQ)), M::identity(kQQ));
}

TEST(MorphismTest, DaggerOfPlusIsRowOfOnes) {
  M plus = M::state(kQ, {C::one(), C::one()});
  M row = dagger(plus);
  EXPECT_EQ(row.dom(), kQ);
  EXPECT_EQ(row.cod(), kI);
  EXPECT_EQ(row, epsilon_stab());
}

TEST(MorphismTest, PermutationMovesLegs) {
  // |011> with legs rotated so output leg i carries input leg perm[i].
  const unsigned perm[] = {2, 0, 1};
  M p = M::permutation(2, perm);
  M in = M::basis_state({3, 2}, 0b011);
  EXPECT_EQ(compose(p, in), M::basis_state({3, 2}, 0b101));
}

TEST(MorphismTest, ApplyToWiresMatchesTensorEmbedding) {
  std::mt19937_64 rng(21);
  TheoryObject q3{3, 2};
  M state = testing::random_cyclo_morphism(rng, TheoryObject::unit(2), q3);
  M gate = testing::random_cyclo_morphism(rng, kQ, kQ);
  const unsigned wire1[] = {1};
  EXPECT_EQ(apply_to_wires(gate, state, wire1), compose(tensor(M::identity(kQ), gate, M::identity(kQ)), state));
  M g2 = testing::random_cyclo_morphism(rng, kQQ, kQQ);
  const unsigned wires02[] = {0, 2};
  const unsigned swap12[] = {0, 2, 1};
  M p = M::permutation(2, swap12);
  M expected = compose(p, compose(tensor(g2, M::identity(kQ)), compose(p, state)));
  EXPECT_EQ(apply_to_wires(g2, state, wires02), expected);
}

TEST(MorphismTest, EqualUpToPhase) {
  std::mt19937_64 rng(22);
  M f = testing::random_cyclo_morphism(rng, kQ, kQQ);
  f(0, 0) = C::one();
  EXPECT_TRUE(equal_up_to_phase(f, f.scaled(C::omega(3))));
  EXPECT_FALSE(equal_up_to_phase(M::basis_state(kQ, 0), M::basis_state(kQ, 1)));
  M psi = M::state(kQ, {C::one(), C::one()});
  EXPECT_FALSE(equal_up_to_phase(psi, psi.scaled(C::root2_power(1))));
}

TEST(MorphismTest, PhaseCanonicalPicksPositiveLeadingEntry) {
  M psi = M::state(kQ, {C::omega(5), C::omega(2)});
  M c = phase_canonical(psi);
  EXPECT_EQ(c(0, 0), C::one());
  EXPECT_EQ(phase_key(psi), phase_key(psi.scaled(C::omega(6))));
  EXPECT_NE(phase_key(psi), phase_key(M::state(kQ, {C::one(), C::one()})));
}

TEST(MorphismTest, ProportionalityFindsScale) {
  M psi = M::state(kQ, {C::one(), C::omega(2)});
  auto lambda = proportionality(psi, psi.scaled(C::root2_power(1)));
  ASSERT_TRUE(lambda.has_value());
  EXPECT_EQ(*lambda, C::root2_power(1));
  EXPECT_FALSE(proportionality(psi, M::basis_state(kQ, 0)).has_value());
}

TEST(MorphismTest, BooleanDaggerIsConverse) {
  TheoryObject x{1, 4};
  B r(x, x);
  r(1, 0) = BoolScalar::one();
  r(3, 2) = BoolScalar::one();
  B rc = dagger(r);
  EXPECT_EQ(rc(0, 1), BoolScalar::one());
  EXPECT_EQ(rc(2, 3), BoolScalar::one());
  EXPECT_EQ(rc(1, 0), BoolScalar::zero());
  // Phase equality coincides with equality for relations.
  EXPECT_TRUE(equal_up_to_phase(r, r));
  EXPECT_FALSE(equal_up_to_phase(r, rc));
}

TEST(MorphismTest, DaggerSmcLawsStab) {
  EXPECT_EQ(testing::smc_law_failures<M>(testing::random_cyclo_morphism, 2, 500, 25), 0u);
}

TEST(MorphismTest, DaggerSmcLawsSpek) {
  EXPECT_EQ(testing::smc_law_failures<B>(testing::random_bool_morphism, 4, 500, 27), 0u);
}

TEST(MorphismTest, PhaseEqualityIsCongruence) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 200; ++t) {
    M f = testing::random_cyclo_morphism(rng, kQ, kQ);
    M g = testing::random_cyclo_morphism(rng, kQ, kQ);
    M f2 = f.scaled(C::omega(static_cast<int>(rng() % 8)));
    M g2 = g.scaled(C::omega(static_cast<int>(rng() % 8)));
    ASSERT_TRUE(equal_up_to_phase(f, f2));
    ASSERT_TRUE(equal_up_to_phase(f2, f));
    ASSERT_TRUE(equal_up_to_phase(compose(f, g), compose(f2, g2)));
    ASSERT_TRUE(equal_up_to_phase(tensor(f, g), tensor(f2, g2)));
  }
}

DiagramModel<C> stab_model() { return {kQ, delta_stab(), epsilon_stab(), {{"H", hadamard()}}}; }

TEST(DiagramTest, EpsilonAfterUnitIsDimension) {
  auto t = DiagramTerm::compose(DiagramTerm::epsilon(), DiagramTerm::epsilon_dag());
  EXPECT_EQ(evaluate(t, stab_model()), M::scalar(2, C::integer(2)));
  TheoryObject x{1, 4};
  B d(x, TheoryObject{2, 4});
  B e(x, TheoryObject{0, 4}, {BoolScalar::one(), BoolScalar::zero(), BoolScalar::one(), BoolScalar::zero()});
  DiagramModel<BoolScalar> bm{x, d, e, {}};
  EXPECT_EQ(evaluate(t, bm), B::scalar(4, BoolScalar::one()));
}

TEST(DiagramTest, CnotTermIsCnotUpToScale) {
  using T = DiagramTerm;
  // (1 (x) (H . delta+ . (H (x) H))) . (delta (x) 1)
  T hh = T::tensor(T::gen("H", 1, 1), T::gen("H", 1, 1));
  T xor_part = T::compose(T::gen("H", 1, 1), T::compose(T::delta_dag(), hh));
  T term = T::compose(T::tensor(T::id(1), xor_part), T::tensor(T::delta(), T::id(1)));
  M v = evaluate(term, stab_model());
  M cnot(kQQ, kQQ);
  cnot(0, 0) = C::one();
  cnot(1, 1) = C::one();
  cnot(3, 2) = C::one();
  cnot(2, 3) = C::one();
  // The composite carries a factor 1/sqrt2 relative to the unitary CNOT.
  EXPECT_EQ(v.scaled(C::root2_power(1)), cnot);
}

TEST(DiagramTest, IdTermIsIdentity) { EXPECT_EQ(evaluate(DiagramTerm::id(2), stab_model()), M::identity(kQQ)); }

TEST(DiagramTest, IllTypedComposeThrows) {
  auto t = DiagramTerm::compose(DiagramTerm::delta(), DiagramTerm::delta());
  EXPECT_THROW(t.arity(), TypeMismatch);
  EXPECT_THROW(evaluate(t, stab_model()), TypeMismatch);
  EXPECT_THROW(evaluate(DiagramTerm::gen("S", 1, 1), stab_model()), TypeMismatch);
}

TEST(DiagramTest, Connectivity) {
  using T = DiagramTerm;
  EXPECT_TRUE(T::delta().is_connected());
  EXPECT_TRUE(T::id(1).is_connected());
  EXPECT_FALSE(T::id(2).is_connected());
  EXPECT_FALSE(T::id(0).is_connected());
  EXPECT_FALSE(T::tensor(T::epsilon_dag(), T::epsilon_dag()).is_connected());
  EXPECT_TRUE(T::compose(T::delta_dag(), T::tensor(T::epsilon_dag(), T::epsilon_dag())).is_connected());
  // A bare scalar loop eps . eps+ is connected.
  EXPECT_TRUE(T::compose(T::epsilon(), T::epsilon_dag()).is_connected());
}

TEST(DiagramTest, RandomDiagramsHaveRequestedBoundary) {
  std::mt19937_64 rng(25);
  int accepted = 0;
  for (int i = 0; i < 300; ++i) {
    auto t = random_spider_diagram(static_cast<unsigned>(i % 4), static_cast<unsigned>((i / 4) % 4), rng);
    if (!t) continue;
    ++accepted;
    EXPECT_EQ(t->arity(), std::make_pair(static_cast<unsigned>(i % 4), static_cast<unsigned>((i / 4) % 4)));
    EXPECT_TRUE(t->is_connected());
    EXPECT_LE(t->generator_count(), 8u);
  }
  EXPECT_GT(accepted, 100);
}

}  // namespace
}  // namespace phaselab
