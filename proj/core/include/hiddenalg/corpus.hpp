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
#include <vector>

#include "hiddenalg/algebra.hpp"

namespace hiddenalg {

/// Reference algebras used by the property checks and the bundled fixtures.

/// Quaternions q1, q2, q3 (unital), obtained as the subalgebra of the
/// split-octonions spanned by 1, q1, q2, q3.
AlgebraPtr quaternion_algebra();

/// su(2) as a (non-unital) algebra whose product is the bracket:
/// e_i e_j = eps_ijk e_k.
AlgebraPtr su2_algebra();

/// so(3,1) with basis M01, M02, M03, M12, M13, M23 and product
/// M^{mn} M^{rs} = i (eta^{nr} M^{ms} + eta^{ms} M^{nr} - eta^{mr} M^{ns} - eta^{ns} M^{mr}),
/// eta = diag(+,-,-,-). Non-unital.
AlgebraPtr so31_algebra();

/// The complex numbers as the 1-dimensional unital algebra e1 e1 = -1.
AlgebraPtr complex_algebra();

/// Non-unital commutative algebra with symmetric integer structure
/// constants in [-2, 2], reproducible from `seed`.
AlgebraPtr random_commutative_algebra(std::size_t dim, std::uint64_t seed);

/// Seed of the commutative member of myung_corpus().
inline constexpr std::uint64_t kCommutativeCorpusSeed = 20260314;

/// Split-octonions, quaternions, su(2), so(3,1), complex numbers and one
/// seeded commutative algebra, in that order.
std::vector<AlgebraPtr> myung_corpus();

}  // namespace hiddenalg
