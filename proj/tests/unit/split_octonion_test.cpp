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

#include "hiddenalg/algebra_io.hpp"
#include "hiddenalg/split_octonion.hpp"

using namespace hiddenalg;

namespace {

Vec3 vec(long a, long b, long c) { return Vec3{{Scalar(a), Scalar(b), Scalar(c)}}; }

ZornMatrix random_zorn(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  return {Scalar(d(rng)), vec(d(rng), d(rng), d(rng)), vec(d(rng), d(rng), d(rng)), Scalar(d(rng))};
}

}  // namespace

TEST(SplitOctonion, FixtureMatchesBuiltInTable) {
  const AlgebraFile f = read_algebra_file(HIDDENALG_FIXTURE_DIR "/splitO.alg");
  const AlgebraPtr& so = split_octonions();
  ASSERT_EQ(f.algebra->dim(), 7u);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      const Element a = Element::basis(f.algebra, i) * Element::basis(f.algebra, j);
      const Element b = Element::basis(so, i) * Element::basis(so, j);
      EXPECT_EQ(a.unit_part(), b.unit_part());
      for (std::size_t k = 0; k < 7; ++k) EXPECT_EQ(a[k], b[k]) << i << "," << j;
    }
}

TEST(SplitOctonion, TableSpotChecks) {
  EXPECT_EQ(q(1) * q(2), q(3));
  EXPECT_EQ(q(7) * q(7), q(0));
  EXPECT_EQ(q(1) * q(1), -q(0));
  EXPECT_EQ(q(4) * q(4), q(0));
}

TEST(Zorn, BasisImages) {
  EXPECT_EQ(to_zorn(q(0)), ZornMatrix::identity());
  EXPECT_EQ(to_zorn(q(1)), (ZornMatrix{Scalar(0), vec(-1, 0, 0), vec(1, 0, 0), Scalar(0)}));
  EXPECT_EQ(to_zorn(q(5)), (ZornMatrix{Scalar(0), vec(0, 1, 0), vec(0, 1, 0), Scalar(0)}));
  EXPECT_EQ(to_zorn(q(7)), (ZornMatrix{Scalar(-1), {}, {}, Scalar(1)}));
  EXPECT_EQ(from_zorn(ZornMatrix{Scalar(0), vec(0, 1, 0), vec(0, -1, 0), Scalar(0)}), -q(2));
}

TEST(Zorn, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 20; ++n) {
    const ZornMatrix z = random_zorn(rng);
    EXPECT_EQ(to_zorn(from_zorn(z)), z);
  }
  for (std::size_t i = 0; i <= 7; ++i) EXPECT_EQ(from_zorn(to_zorn(q(i))), q(i));
}

TEST(Zorn, ProductIsAlternative) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 25; ++n) {
    const ZornMatrix x = random_zorn(rng), y = random_zorn(rng);
    const ZornMatrix xx = zorn_multiply(x, x);
    EXPECT_EQ(zorn_multiply(xx, y), zorn_multiply(x, zorn_multiply(x, y)));
    EXPECT_EQ(zorn_multiply(y, xx), zorn_multiply(zorn_multiply(y, x), x));
  }
}

TEST(Zorn, PrintedTableIsNotTheZornImage) {
  const ZornIsomorphismReport r = verify_zorn_isomorphism();
  EXPECT_EQ(r.pairs_checked, 64u);
  EXPECT_EQ(r.mismatches.size(), 36u);
  ASSERT_FALSE(r.mismatches.empty());
  for (const ZornMismatch& m : r.mismatches) {
    EXPECT_NE(m.left, 0u);
    EXPECT_NE(m.right, 0u);
    EXPECT_NE(to_zorn(m.table_product), m.zorn_product);
  }
}

TEST(SplitOctonion, CommutatorsAndAssociators) {
  EXPECT_TRUE(verify_quaternion_commutators().holds());
  EXPECT_EQ(verify_quaternion_commutators().cases, 27u);
  EXPECT_TRUE(verify_split_commutators().holds());
  EXPECT_TRUE(verify_split_associators().holds());
}

TEST(SplitOctonion, SpinAlgebra) {
  const SpinCommutatorReport r = verify_spin_commutators();
  // Without the factor i on the right the octonion form only holds on the diagonal.
  EXPECT_EQ(r.octonion.cases, 9u);
  EXPECT_EQ(r.octonion.failures, 6u);
  EXPECT_TRUE(r.pauli.holds());
  EXPECT_TRUE(r.octonion_pauli_form.holds());
}

TEST(SplitOctonion, SpinDecompositionLambda) {
  const SpinDecompositionReport r = verify_spin_decomposition();
  EXPECT_TRUE(r.product_form.holds()) << r.product_form.first_failure;
  ASSERT_TRUE(r.lambda);
  EXPECT_EQ(*r.lambda, Scalar(1));
  for (int i = 0; i < 3; ++i) EXPECT_EQ(r.bracket_form[i], q(i + 1));
}

TEST(SplitOctonion, LeviCivita3) {
  EXPECT_EQ(levi_civita3(1, 2, 3), 1);
  EXPECT_EQ(levi_civita3(2, 1, 3), -1);
  EXPECT_EQ(levi_civita3(3, 1, 2), 1);
  EXPECT_EQ(levi_civita3(1, 1, 2), 0);
}
