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

#include <random>

#include "hiddenalg/superop.hpp"
#include "oracles.hpp"

using namespace hiddenalg;

namespace {

Monomial mono(std::array<std::uint8_t, 4> x, std::array<std::uint8_t, 4> d, std::uint8_t coords, std::uint8_t derivs) {
  Monomial m;
  m.x = x;
  m.d = d;
  m.coords = coords;
  m.derivs = derivs;
  return m;
}

oracle::Function to_function(const SuperOp& f) {
  oracle::Function out;
  for (const auto& [m, c] : f.terms()) {
    EXPECT_FALSE(m.has_derivatives());
    out[{{m.x[0], m.x[1], m.x[2], m.x[3]}, m.coords}] = c;
  }
  return out;
}

SuperOp from_function(const oracle::Function& f) {
  SuperOp out;
  for (const auto& [key, c] : f) {
    const auto& [x, mask] = key;
    Monomial m;
    for (int mu = 0; mu < 4; ++mu) m.x[mu] = static_cast<std::uint8_t>(x[mu]);
    m.coords = mask;
    out += SuperOp::monomial(m, c);
  }
  return out;
}

/// A short random operator built from products of generators.
SuperOp random_op(std::mt19937_64& rng, bool even_only = false) {
  std::uniform_int_distribution<int> pick(0, 11), coef(-3, 3), len(1, 3);
  SuperOp out;
  for (int t = 0; t < 3; ++t) {
    SuperOp term = SuperOp::constant(Scalar(coef(rng)) + Scalar(coef(rng)) * Scalar::i());
    int odd = 0;
    for (int n = len(rng); n > 0; --n) {
      const int g = pick(rng);
      SuperOp f;
      if (g < 4) f = SuperOp::x(g);
      else if (g < 8) f = SuperOp::d(g - 4);
      else if (g < 10) { f = SuperOp::theta(g - 7); ++odd; }
      else { f = SuperOp::dthetabar(g - 9); ++odd; }
      term = term * f;
    }
    if (even_only && odd % 2 == 1) term = term * SuperOp::theta(1);
    out += term;
  }
  return out;
}

SuperOp homogeneous(std::mt19937_64& rng, int parity) {
  SuperOp op = random_op(rng, true);
  return parity == 0 ? op : op * SuperOp::thetabar(2);
}

}  // namespace

TEST(SuperOp, CanonicalCommutators) {
  const SuperOp one = SuperOp::constant(Scalar(1));
  EXPECT_EQ(compose(SuperOp::d(0), SuperOp::x(0)), SuperOp::monomial(mono({1, 0, 0, 0}, {1, 0, 0, 0}, 0, 0), 1) + one);
  EXPECT_EQ(graded_bracket(SuperOp::d(2), SuperOp::x(2)), one);
  EXPECT_TRUE(graded_bracket(SuperOp::d(1), SuperOp::x(2)).is_zero());
  EXPECT_EQ(graded_bracket(SuperOp::dtheta(1), SuperOp::theta(1)), one);
  EXPECT_EQ(graded_bracket(SuperOp::dthetabar(2), SuperOp::thetabar(2)), one);
  EXPECT_TRUE(graded_bracket(SuperOp::dtheta(1), SuperOp::theta(2)).is_zero());
  EXPECT_TRUE(compose(SuperOp::theta(1), SuperOp::theta(1)).is_zero());
}

TEST(SuperOp, OddDerivativeOnProduct) {
  const SuperOp t12 = SuperOp::theta(1) * SuperOp::theta(2);
  EXPECT_EQ(apply(SuperOp::dtheta(1), t12), SuperOp::theta(2));
  EXPECT_EQ(apply(SuperOp::dtheta(2), t12), -SuperOp::theta(1));
  EXPECT_EQ(SuperOp::theta(2) * SuperOp::theta(1), -t12);
  EXPECT_THROW(apply(SuperOp::dtheta(1), SuperOp::d(0)), UsageError);
}

TEST(SuperOp, ToString) {
  EXPECT_EQ(SuperOp().to_string(), "0");
  const SuperOp op = Scalar(-1) * Scalar::i() * SuperOp::d(0) - Scalar::ratio(1, 4) * SuperOp::thetabar(1) * SuperOp::d(3);
  EXPECT_EQ(op.to_string(), "-1/4*thb1*d3 - i*d0");
}

TEST(SuperOp, Parity) {
  EXPECT_EQ(SuperOp::x(0).parity(), 0);
  EXPECT_EQ(SuperOp::theta(1).parity(), 1);
  EXPECT_EQ(SuperOp().parity(), 0);
  EXPECT_EQ((SuperOp::x(0) + SuperOp::theta(1)).parity(), std::nullopt);
  EXPECT_THROW(graded_bracket(SuperOp::x(0) + SuperOp::theta(1), SuperOp::x(1)), UsageError);
}

TEST(SuperOp, ComposeMatchesActionOracle) {
  std::mt19937_64 rng(3);
  const auto fs = oracle::test_functions(2);
  for (int n = 0; n < 30; ++n) {
    const SuperOp a = random_op(rng), b = random_op(rng);
    const SuperOp ab = compose(a, b);
    for (std::size_t k = 0; k < fs.size(); k += 7) {
      const auto& f = fs[k];
      EXPECT_EQ(oracle::act(ab, f), oracle::act(a, oracle::act(b, f)));
      EXPECT_EQ(to_function(apply(a, from_function(f))), oracle::act(a, f));
    }
  }
}

TEST(SuperOp, ComposeIsAssociative) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 30; ++n) {
    const SuperOp a = random_op(rng), b = random_op(rng), c = random_op(rng);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(SuperOp, ParityIsMultiplicative) {
  std::mt19937_64 rng(9);
  for (int n = 0; n < 30; ++n) {
    const int pa = n % 2, pb = (n / 2) % 2;
    const SuperOp a = homogeneous(rng, pa), b = homogeneous(rng, pb);
    ASSERT_EQ(a.parity(), pa);
    ASSERT_EQ(b.parity(), pb);
    const SuperOp ab = compose(a, b);
    if (!ab.is_zero()) EXPECT_EQ(ab.parity(), (pa + pb) % 2);
  }
}

TEST(SuperOp, GradedAntisymmetry) {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 30; ++n) {
    const int pa = n % 2, pb = (n / 2) % 2;
    const SuperOp a = homogeneous(rng, pa), b = homogeneous(rng, pb);
    const Scalar sign = (pa * pb) % 2 == 1 ? Scalar(1) : Scalar(-1);
    EXPECT_EQ(graded_bracket(a, b), sign * graded_bracket(b, a));
  }
}

TEST(SuperOp, PlaneWave) {
  const SuperOp p = to_plane_wave(SuperOp::d(1));
  const Monomial m = mono({0, 0, 0, 0}, {0, 1, 0, 0}, 0, 0);
  EXPECT_EQ(p.coefficient(m), Scalar::i());
  EXPECT_THROW(to_plane_wave(SuperOp::x(0)), UsageError);
  // Momentum symbols commute, odd generators still anticommute.
  const SuperOp a = SuperOp::theta(1) * SuperOp::d(0), b = SuperOp::dtheta(1) * SuperOp::d(2);
  EXPECT_EQ(graded_bracket_plane_wave(to_plane_wave(a), to_plane_wave(b)), to_plane_wave(graded_bracket(a, b)));
}
