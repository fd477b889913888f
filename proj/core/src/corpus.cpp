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

#include "hiddenalg/corpus.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <tuple>

#include "hiddenalg/split_octonion.hpp"

namespace hiddenalg {

namespace {

constexpr std::array<std::array<int, 2>, 6> kLorentzPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int eta(int m, int n) {
  if (m != n) return 0;
  return m == 0 ? 1 : -1;
}

}  // namespace

AlgebraPtr quaternion_algebra() {
  static const AlgebraPtr alg = [] {
    const std::array<std::size_t, 3> idx{0, 1, 2};
    return subalgebra(split_octonions(), idx, "quaternion");
  }();
  return alg;
}

AlgebraPtr su2_algebra() {
  static const AlgebraPtr alg = [] {
    AlgebraDef::Builder b("su2", 3, false);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) {
          const int e = levi_civita3(i, j, k);
          if (e != 0) b.add(i - 1, j - 1, k - 1, Scalar(e));
        }
    return b.build();
  }();
  return alg;
}

AlgebraPtr so31_algebra() {
  static const AlgebraPtr alg = [] {
    AlgebraDef::Builder b("so31", 6, false);
    std::vector<std::string> names;
    for (const auto& p : kLorentzPairs) names.push_back("M" + std::to_string(p[0]) + std::to_string(p[1]));
    b.basis_names(names);
    // Index of M^{ab} with sign: M^{ba} = -M^{ab}, M^{aa} = 0.
    auto slot = [](int a, int c) -> std::pair<std::size_t, int> {
      if (a == c) return {0, 0};
      const int sign = a < c ? 1 : -1;
      const int lo = std::min(a, c), hi = std::max(a, c);
      for (std::size_t s = 0; s < kLorentzPairs.size(); ++s) {
        if (kLorentzPairs[s][0] == lo && kLorentzPairs[s][1] == hi) return {s, sign};
      }
      return {0, 0};
    };
    for (std::size_t A = 0; A < 6; ++A) {
      for (std::size_t B = 0; B < 6; ++B) {
        const int m = kLorentzPairs[A][0], n = kLorentzPairs[A][1];
        const int r = kLorentzPairs[B][0], s = kLorentzPairs[B][1];
        const std::array<std::tuple<int, int, int>, 4> terms{{
            {eta(n, r), m, s},
            {eta(m, s), n, r},
            {-eta(m, r), n, s},
            {-eta(n, s), m, r},
        }};
        for (const auto& [coef, a, c] : terms) {
          if (coef == 0) continue;
          const auto [k, sign] = slot(a, c);
          if (sign == 0) continue;
          b.add(A, B, k, Scalar::i() * Scalar(coef * sign));
        }
      }
    }
    return b.build();
  }();
  return alg;
}

AlgebraPtr complex_algebra() {
  static const AlgebraPtr alg = [] {
    AlgebraDef::Builder b("complex", 1, true);
    b.add_unit(0, 0, Scalar(-1));
    return b.build();
  }();
  return alg;
}

AlgebraPtr random_commutative_algebra(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-2, 2);
  AlgebraDef::Builder b("commutative" + std::to_string(seed), dim, false);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar v(coef(rng));
        if (v.is_zero()) continue;
        b.add(i, j, k, v);
        if (i != j) b.add(j, i, k, v);
      }
    }
  }
  return b.build();
}

std::vector<AlgebraPtr> myung_corpus() {
  return {split_octonions(), quaternion_algebra(), su2_algebra(), so31_algebra(), complex_algebra(),
          random_commutative_algebra(4, kCommutativeCorpusSeed)};
}

}  // namespace hiddenalg
