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

#include "hiddenalg/search.hpp"

using namespace hiddenalg;

namespace {

SearchConfig small(InitMode init = InitMode::random) {
  SearchConfig cfg;
  cfg.restarts = 3;
  cfg.max_iters = 300;
  cfg.rng_seed = 17;
  cfg.init = init;
  return cfg;
}

}  // namespace

TEST(Search, ZeroIterationsKeepsInitialCandidate) {
  SearchConfig cfg = small(InitMode::zero);
  cfg.max_iters = 0;
  const SearchResult r = search(cfg);
  ASSERT_EQ(r.restarts.size(), 3u);
  for (const RestartResult& rr : r.restarts) {
    EXPECT_EQ(rr.best.constants(), CandidateAlgebra::zero(false).constants());
    EXPECT_EQ(rr.trace.size(), 1u);
    EXPECT_DOUBLE_EQ(rr.residual.total(), 264.0);
  }
}

TEST(Search, Deterministic) {
  const SearchResult a = search(small()), b = search(small());
  ASSERT_EQ(a.restarts.size(), b.restarts.size());
  for (std::size_t r = 0; r < a.restarts.size(); ++r) {
    EXPECT_EQ(a.restarts[r].best, b.restarts[r].best);
    EXPECT_EQ(a.restarts[r].trace, b.restarts[r].trace);
  }
  SearchConfig other = small();
  other.rng_seed = 18;
  EXPECT_NE(search(other).best().trace, a.best().trace);
}

TEST(Search, ParallelMatchesSerial) {
  SearchConfig serial = small();
  serial.parallel = false;
  const SearchResult a = search(small()), b = search(serial);
  for (std::size_t r = 0; r < a.restarts.size(); ++r) EXPECT_EQ(a.restarts[r].trace, b.restarts[r].trace);
  EXPECT_EQ(a.best_restart, b.best_restart);
}

TEST(Search, TracesNeverIncrease) {
  const SearchResult r = search(small());
  for (const RestartResult& rr : r.restarts) {
    ASSERT_EQ(rr.trace.size(), 301u);
    for (std::size_t i = 1; i < rr.trace.size(); ++i) EXPECT_LE(rr.trace[i], rr.trace[i - 1]);
    EXPECT_DOUBLE_EQ(rr.trace.back(), rr.residual.total());
  }
  for (const RestartResult& rr : r.restarts) EXPECT_LE(r.best().residual.total(), rr.residual.total());
}

TEST(Search, FrozenLorentzSector) {
  SearchConfig cfg = small(InitMode::so31);
  cfg.freeze = FreezeSector::lorentz;
  const SearchResult r = search(cfg);
  const CandidateAlgebra start = CandidateAlgebra::so31(false);
  for (const RestartResult& rr : r.restarts) {
    for (std::size_t a = 8; a < kRoleCount; ++a)
      for (std::size_t b = 8; b < kRoleCount; ++b)
        for (std::size_t k = 0; k < rr.best.dim(); ++k) EXPECT_EQ(rr.best.at(a, b, k), start.at(a, b, k));
    EXPECT_LE(rr.residual.r_lorentz, 1e-12);
  }
}

TEST(Search, WithUnit) {
  SearchConfig cfg = small();
  cfg.with_unit = true;
  const SearchResult r = search(cfg);
  EXPECT_EQ(r.best().best.dim(), kRoleCount + 1);
  EXPECT_TRUE(r.best().best.has_unit());
}

TEST(Search, Validation) {
  SearchConfig cfg;
  cfg.restarts = 0;
  EXPECT_THROW(search(cfg), UsageError);
  cfg = SearchConfig{};
  cfg.max_iters = -1;
  EXPECT_THROW(cfg.validate(), UsageError);
  cfg = SearchConfig{};
  cfg.step_scale = 0;
  EXPECT_THROW(cfg.validate(), UsageError);
  EXPECT_EQ(parse_init_mode("so31"), InitMode::so31);
  EXPECT_EQ(parse_freeze("M"), FreezeSector::lorentz);
  EXPECT_THROW(parse_init_mode("bogus"), UsageError);
}
