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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hiddenalg/candidate.hpp"

namespace hiddenalg {

enum class InitMode { zero, random, so31 };
/// Coordinates held fixed during descent. `lorentz` freezes c(M, M, *).
enum class FreezeSector { none, lorentz };

struct SearchConfig {
  int restarts = 1;
  int max_iters = 1000;
  double step_scale = 0.1;
  std::uint64_t rng_seed = 0;
  double tolerance = 1e-10;
  InitMode init = InitMode::random;
  FreezeSector freeze = FreezeSector::none;
  bool with_unit = false;
  bool parallel = true;

  /// Throws UsageError on non-positive restarts/step/tolerance or negative iterations.
  void validate() const;
};

struct RestartResult {
  CandidateAlgebra best;
  ResidualBreakdown residual;
  std::vector<double> trace;  ///< total residual before the first and after every iteration
};

struct SearchResult {
  std::vector<RestartResult> restarts;  ///< ordered by restart index
  std::size_t best_restart = 0;

  const RestartResult& best() const { return restarts[best_restart]; }
  bool converged(double tolerance) const { return best().residual.total() <= tolerance; }
};

/// Perturb-one-coordinate descent with restarts. Restart r draws from an
/// mt19937_64 seeded with (rng_seed, r), so results do not depend on scheduling.
SearchResult search(const SearchConfig& cfg);

InitMode parse_init_mode(const std::string& s);
FreezeSector parse_freeze(const std::string& s);

}  // namespace hiddenalg
