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

#include <array>
#include <cstdint>
#include <map>
#include <utility>

#include "hiddenalg/candidate.hpp"
#include "hiddenalg/superop.hpp"

namespace oracle {

/// Residual of a candidate recomputed from full vector products,
/// sharing no code with hiddenalg::residual.
hiddenalg::ResidualBreakdown brute_force_residual(const hiddenalg::CandidateAlgebra& c);

/// Superspace function: (x exponents, odd mask) -> coefficient.
using Function = std::map<std::pair<std::array<int, 4>, std::uint8_t>, hiddenalg::Scalar>;

/// Action of an operator on a superspace function, term by term from the
/// definition: d/dtheta^k, theta^k act on the Grassmann monomial, d_mu and
/// x^mu on the polynomial.
Function act(const hiddenalg::SuperOp& op, const Function& f);

/// Every x-monomial of total degree <= max_degree times every odd monomial.
std::vector<Function> test_functions(int max_degree);

}  // namespace oracle
