/*
 * Copyright 2026 The hiddenalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "hiddenalg/susy.hpp"

using namespace hiddenalg;

namespace {
const Scalar I = Scalar::i();
}

TEST(Susy, SuperchargeShapes) {
  const Generators g = build_generators(SigmaConvention::standard);
  // -i d/dtheta^1 plus sigma^mu_{1 adot} thetabar^adot d_mu: sigma^0 and sigma^3
  // contribute to thetabar^1, sigma^1 and sigma^2 to thetabar^2.
  EXPECT_EQ(g.Q[0].terms().size(), 5u);
  EXPECT_EQ(g.Q[0].parity(), 1);
  EXPECT_EQ(g.Qbar[1].parity(), 1);
  EXPECT_EQ(g.P_lower[0], Scalar(-1) * I * SuperOp::d(0));
  EXPECT_EQ(g.P_upper[1], I * SuperOp::d(1));
}

TEST(Poincare, AlgebraHolds) {
  for (MomentumSign s : {MomentumSign::minus_i, MomentumSign::plus_i}) {
    const PoincareReport r = verify_poincare(s);
    EXPECT_TRUE(r.pp.holds()) << r.pp.first_failure;
    EXPECT_EQ(r.mp.cases, 96u);
    EXPECT_EQ(r.mm.cases, 256u);
    // Only one sign of P makes the printed Lorentz relations hold.
    if (s == MomentumSign::plus_i) EXPECT_TRUE(r.holds()) << r.mp.first_failure << r.mm.first_failure;
  }
}

TEST(Poincare, WorkedBrackets) {
  const Generators g = build_generators(SigmaConvention::standard, MomentumSign::plus_i);
  EXPECT_EQ(graded_bracket(g.M[0][1], g.P_upper[1]), Scalar(-1) * I * g.P_upper[0]);
  EXPECT_EQ(graded_bracket(g.M[0][1], g.M[1][2]), Scalar(-1) * I * g.M[0][2]);
  EXPECT_EQ(g.M[1][0], -g.M[0][1]);
  EXPECT_TRUE(g.M[2][2].is_zero());
}

TEST(Susy, AnticommutatorConstants) {
  const SusyReport std_r = verify_susy(SigmaConvention::standard);
  EXPECT_TRUE(std_r.qq.holds());
  EXPECT_TRUE(std_r.qbqb.holds());
  ASSERT_TRUE(std_r.c1);
  EXPECT_EQ(*std_r.c1, Scalar(2));
  ASSERT_TRUE(std_r.c2);
  EXPECT_EQ(*std_r.c2, Scalar(4));
  EXPECT_TRUE(std_r.plane_wave_agrees);
  EXPECT_TRUE(std_r.p_q_zero());
  EXPECT_TRUE(std_r.p_qbar_zero());
  EXPECT_EQ(std_r.m_q.size(), 12u);

  const SusyReport paper = verify_susy(SigmaConvention::paper);
  ASSERT_TRUE(paper.c1);
  EXPECT_EQ(*paper.c1, Scalar(2));
  ASSERT_TRUE(paper.c2);
  EXPECT_EQ(*paper.c2, Scalar::ratio(1, 4));

  const SusyReport flipped = verify_susy(SigmaConvention::standard, MomentumSign::plus_i);
  ASSERT_TRUE(flipped.c1);
  EXPECT_EQ(*flipped.c1, Scalar(-2));
}

TEST(Susy, Nilpotency) {
  const SusyReport r = verify_susy(SigmaConvention::standard);
  EXPECT_EQ(r.nilpotency.cases, 256u);
  EXPECT_TRUE(r.nilpotency.holds()) << r.nilpotency.first_failure;
  const Generators g = build_generators(SigmaConvention::standard);
  EXPECT_TRUE(compose(g.Q[0], g.Q[0]).is_zero());
  EXPECT_TRUE(compose(g.Qbar[1], g.Qbar[1]).is_zero());
}

TEST(Susy, GrassmannCoordinates) {
  const IdentityCheck c = verify_grassmann();
  EXPECT_EQ(c.cases, 16u);
  EXPECT_TRUE(c.holds());
}

TEST(Spinor, Epsilon) {
  const EpsilonReport r = verify_epsilon();
  // The displayed matrices are i sigma^2 and -i sigma^2 with opposite signs.
  EXPECT_FALSE(r.upper_matrix.holds());
  EXPECT_FALSE(r.lower_dotted_matrix.holds());
  EXPECT_TRUE(r.dotted_equal.holds());
  EXPECT_TRUE(r.lower_equal.holds());
  EXPECT_TRUE(r.inverse.holds());
  EXPECT_EQ(EpsilonSpinor::upper()(0, 1), Scalar(-1));
  EXPECT_EQ(EpsilonSpinor::lower_dotted()(0, 1), Scalar(1));
  EXPECT_EQ(EpsilonSpinor::upper() * EpsilonSpinor::lower(), Matrix2::identity());
}

TEST(Spinor, RaiseLower) {
  const std::array<Scalar, 2> e1{Scalar(1), Scalar(0)};
  EXPECT_EQ(raise_lower(e1, SpinorIndexMode::raise_undotted), (std::array<Scalar, 2>{Scalar(0), Scalar(1)}));
  const std::array<Scalar, 2> psi{Scalar(3), Scalar::ratio(-1, 2) + I};
  EXPECT_EQ(raise_lower(raise_lower(psi, SpinorIndexMode::raise_undotted), SpinorIndexMode::lower_undotted), psi);
  EXPECT_EQ(raise_lower(raise_lower(psi, SpinorIndexMode::raise_dotted), SpinorIndexMode::lower_dotted), psi);
}

TEST(Susy, Proportionality) {
  const SuperOp d0 = SuperOp::d(0);
  EXPECT_EQ(proportionality(Scalar(3) * I * d0, d0), Scalar(3) * I);
  EXPECT_EQ(proportionality(d0 + SuperOp::d(1), d0), std::nullopt);
  EXPECT_EQ(proportionality(d0, SuperOp()), std::nullopt);
  EXPECT_EQ(proportionality(SuperOp(), d0), Scalar(0));
}

TEST(Sigma, LoweredRaisedMatchesDefinition) {
  const SigmaMatrices s = SigmaMatrices::make(SigmaConvention::standard);
  for (int mu = 0; mu < 4; ++mu) {
    const Matrix2 expect = Scalar(metric(mu, mu)) * (EpsilonSpinor::upper() * s.sigma[mu] * EpsilonSpinor::upper_dotted().transpose());
    EXPECT_EQ(s.sigma_lowered_raised(mu), expect) << mu;
  }
}
