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
#include <optional>
#include <string>
#include <vector>

#include "hiddenalg/algebra.hpp"
#include "hiddenalg/identity_check.hpp"
#include "hiddenalg/properties.hpp"
#include "hiddenalg/zorn.hpp"

namespace hiddenalg {

/// The split-octonion multiplication table, row * column, as printed.
/// Entry [r][c] is q_{r+1} q_{c+1}: "1", "-1", "q3", "-q7", ...
extern const std::array<std::array<const char*, 7>, 7> kSplitOctonionTable;

/// Split-octonions: dim 7, basis q1..q7, unital with an external unit,
/// structure read from kSplitOctonionTable.
const AlgebraPtr& split_octonions();

/// An element over split_octonions().
using SplitOctonion = Element;

/// q_index for index 1..7; 0 gives the unit.
SplitOctonion q(std::size_t index);

/// Linear map 1 -> (1,0;0,1), q7 -> -(1,0;0,-1), q_i -> (0,-e_i;e_i,0),
/// q_{i+3} -> (0,e_i;e_i,0).
ZornMatrix to_zorn(const SplitOctonion& s);

/// Inverse of to_zorn, obtained by solving the 8x8 basis system exactly.
SplitOctonion from_zorn(const ZornMatrix& z);

/// One ordered pair (u, v) over {1, q1..q7} where the two products differ.
struct ZornMismatch {
  std::size_t left;   ///< 0 = unit, 1..7 = q_i
  std::size_t right;
  SplitOctonion table_product;
  ZornMatrix zorn_product;
};

struct ZornIsomorphismReport {
  std::size_t pairs_checked = 0;
  /// All disagreeing pairs, in (left, right) lexicographic order.
  std::vector<ZornMismatch> mismatches;
  bool holds() const { return mismatches.empty(); }
};

/// to_zorn(u v) == zorn_multiply(to_zorn(u), to_zorn(v)) for all 64 pairs.
ZornIsomorphismReport verify_zorn_isomorphism();

/// [q_{i+3}, q_{j+3}] = -2 eps_ijk q_k. One case per (i, j, k): the q_k
/// component of both sides; case (i, j, 1) also requires the commutator to
/// have no component outside span{q1, q2, q3}. 27 cases.
IdentityCheck verify_split_commutators();
/// [q_i, q_j] = 2 eps_ijk q_k, 27 cases.
IdentityCheck verify_quaternion_commutators();
/// (q_{i+3}, q_{j+3}, q_{k+3}) = 2 eps_ijk q7, 27 cases.
IdentityCheck verify_split_associators();

struct SpinCommutatorReport {
  IdentityCheck octonion;  ///< [(i/2)q_i, (i/2)q_j] = eps_ijk (i/2) q_k
  IdentityCheck pauli;     ///< [s_i/2, s_j/2] = i eps_ijk s_k/2 on exact 2x2 matrices
  /// Pauli form carried over to s_i = (i/2) q_i: [s_i, s_j] = i eps_ijk s_k.
  IdentityCheck octonion_pauli_form;
  bool holds() const { return octonion.holds() && pauli.holds(); }
};

SpinCommutatorReport verify_spin_commutators();

struct SpinDecompositionReport {
  /// (i/2) q_i = -(i/4) eps_ijk q_{j+3} q_{k+3} for i = 1, 2, 3.
  IdentityCheck product_form;
  /// R_i = -(1/4) eps_ijk [q_{j+3}, q_{k+3}]; lambda with R_i = lambda q_i,
  /// when one common constant exists.
  std::array<SplitOctonion, 3> bracket_form;
  std::optional<Scalar> lambda;
};

SpinDecompositionReport verify_spin_decomposition();

/// Levi-Civita symbol on {1,2,3}; eps_123 = +1.
int levi_civita3(int i, int j, int k);

}  // namespace hiddenalg
