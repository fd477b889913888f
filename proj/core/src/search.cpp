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

#include "hiddenalg/search.hpp"

#include <array>
#include <future>
#include <random>

namespace hiddenalg {

namespace {

bool is_lorentz(std::size_t role) { return role >= 8 && role < kRoleCount; }

/// Flat offsets of the coordinates the search may move.
std::vector<std::size_t> free_coordinates(const CandidateAlgebra& c, FreezeSector freeze) {
  const std::size_t n = c.dim();
  const std::vector<std::size_t> role = c.roles();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == c.unit_index()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == c.unit_index()) continue;
      if (freeze == FreezeSector::lorentz && is_lorentz(role[i]) && is_lorentz(role[j])) continue;
      for (std::size_t k = 0; k < n; ++k) out.push_back((i * n + j) * n + k);
    }
  }
  return out;
}

double& coordinate(CandidateAlgebra& c, std::size_t flat) {
  const std::size_t n = c.dim();
  return c.at(flat / (n * n), (flat / n) % n, flat % n);
}

RestartResult run_restart(const SearchConfig& cfg, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.rng_seed), static_cast<std::uint32_t>(cfg.rng_seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);

  CandidateAlgebra cand = cfg.init == InitMode::so31 ? CandidateAlgebra::so31(cfg.with_unit)
                                                     : CandidateAlgebra::zero(cfg.with_unit);
  cand.set_seed(cfg.rng_seed);
  const std::vector<std::size_t> coords = free_coordinates(cand, cfg.freeze);
  if (cfg.init == InitMode::random) {
    const std::vector<std::size_t> all = free_coordinates(cand, FreezeSector::none);
    std::uniform_real_distribution<double> init(-1.0, 1.0);
    for (std::size_t flat : all) coordinate(cand, flat) = init(rng);
  }

  RestartResult out{cand, residual(cand), {}};
  out.trace.reserve(static_cast<std::size_t>(cfg.max_iters) + 1);
  out.trace.push_back(out.residual.total());
  if (coords.empty()) {
    out.trace.resize(static_cast<std::size_t>(cfg.max_iters) + 1, out.residual.total());
    return out;
  }

  std::uniform_int_distribution<std::size_t> pick(0, coords.size() - 1);
  std::normal_distribution<double> step(0.0, cfg.step_scale);
  for (int it = 0; it < cfg.max_iters; ++it) {
    if (out.residual.total() > cfg.tolerance) {
      double& x = coordinate(out.best, coords[pick(rng)]);
      const double old = x;
      x += step(rng);
      const ResidualBreakdown r = residual(out.best);
      if (r.total() < out.residual.total()) {
        out.residual = r;
      } else {
        x = old;
      }
    }
    out.trace.push_back(out.residual.total());
  }
  return out;
}

}  // namespace

void SearchConfig::validate() const {
  if (restarts <= 0) throw UsageError("restarts must be positive");
  if (max_iters < 0) throw UsageError("iterations must be nonnegative");
  if (!(step_scale > 0)) throw UsageError("step scale must be positive");
  if (!(tolerance > 0)) throw UsageError("tolerance must be positive");
}

SearchResult search(const SearchConfig& cfg) {
  cfg.validate();
  SearchResult result;
  if (cfg.parallel && cfg.restarts > 1) {
    std::vector<std::future<RestartResult>> jobs;
    for (int r = 0; r < cfg.restarts; ++r) jobs.push_back(std::async(std::launch::async, run_restart, cfg, r));
    for (auto& j : jobs) result.restarts.push_back(j.get());
  } else {
    for (int r = 0; r < cfg.restarts; ++r) result.restarts.push_back(run_restart(cfg, r));
  }
  for (std::size_t r = 1; r < result.restarts.size(); ++r)
    if (result.restarts[r].residual.total() < result.best().residual.total()) result.best_restart = r;
  return result;
}

InitMode parse_init_mode(const std::string& s) {
  if (s == "zero") return InitMode::zero;
  if (s == "random") return InitMode::random;
  if (s == "so31") return InitMode::so31;
  throw UsageError("unknown init mode '" + s + "' (expected zero, random or so31)");
}

FreezeSector parse_freeze(const std::string& s) {
  if (s == "none") return FreezeSector::none;
  if (s == "M") return FreezeSector::lorentz;
  throw UsageError("unknown freeze sector '" + s + "' (expected none or M)");
}

}  // namespace hiddenalg
