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
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hiddenalg/algebra.hpp"

namespace hiddenalg {

/// Roles R^0..R^3, Rt^0..Rt^3, M^{01}, M^{02}, M^{03}, M^{12}, M^{13}, M^{23}.
inline constexpr std::size_t kRoleCount = 14;
/// Role slot of the optional unit.
inline constexpr std::size_t kUnitRole = kRoleCount;

/// "R0".."R3", "Rt0".."Rt3", "M01".."M23", and "unit" for kUnitRole.
const std::string& role_name(std::size_t role);
/// Inverse of role_name; throws UsageError for an unknown label.
std::size_t role_from_name(const std::string& name);

std::size_t role_R(int mu);
std::size_t role_Rt(int mu);
/// Role of M^{mu nu} and the sign with which it enters: M^{nu mu} = -M^{mu nu}.
/// Returns sign 0 for mu == nu.
std::pair<std::size_t, int> role_M(int mu, int nu);
/// Pair (mu, nu), mu < nu, of M-role index 0..5.
std::array<int, 2> lorentz_pair(std::size_t m);

/// Real algebra on the fixed role layout. Structure constants are dense:
/// e_i e_j = sum_k c(i, j, k) e_k over the storage basis. `role_index[r]` is the
/// storage index of role r; the identity layout is used unless the basis was
/// permuted. With a unit, its rows and columns are the identity and are not
/// free parameters.
class CandidateAlgebra {
public:
  static CandidateAlgebra zero(bool with_unit);
  /// M-sector carries the real Lorentz bracket; everything else zero.
  static CandidateAlgebra so31(bool with_unit);

  bool has_unit() const { return has_unit_; }
  std::size_t dim() const { return dim_; }
  std::uint64_t seed() const { return seed_; }
  void set_seed(std::uint64_t s) { seed_ = s; }

  double& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  double at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<double>& constants() const { return c_; }

  std::size_t index_of(std::size_t role) const { return role_index_[role]; }
  /// Storage index of the unit, or dim() when there is none.
  std::size_t unit_index() const { return has_unit_ ? role_index_[kUnitRole] : dim_; }
  /// Role of each storage index.
  std::vector<std::size_t> roles() const;

  /// Same algebra with storage index i moved to perm[i].
  CandidateAlgebra permuted(const std::vector<std::size_t>& perm) const;

  /// Exact conversion (every double is a dyadic rational). With a unit the
  /// result is unital over the 14 role elements.
  AlgebraPtr to_algebra(const std::string& name = "candidate") const;
  /// Inverse of to_algebra; `roles` names the role of each basis element.
  /// Throws UsageError for complex constants or an incomplete role list.
  static CandidateAlgebra from_algebra(const AlgebraDef& alg, const std::vector<std::size_t>& roles);

  friend bool operator==(const CandidateAlgebra&, const CandidateAlgebra&) = default;

private:
  CandidateAlgebra(bool with_unit);

  bool has_unit_ = false;
  std::size_t dim_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<double> c_;
  std::vector<std::size_t> role_index_;
};

struct ResidualBreakdown {
  double r_comm = 0;     ///< [R^mu, Rt^nu] = 2 M^{mu nu}
  double r_lorentz = 0;  ///< real Lorentz bracket on the M-sector
  double r_assoc = 0;    ///< (P^mu, P^nu, P^rho) = 2 eps^{mu nu rho sigma} P_sigma, P = R and P = Rt
  double total() const { return r_comm + r_lorentz + r_assoc; }
};

/// Sum of squared coefficient defects for each constraint family.
ResidualBreakdown residual(const CandidateAlgebra& cand);

/// eps^{mu nu rho sigma} with eps^{0123} = +1.
int levi_civita4(int mu, int nu, int rho, int sigma);

}  // namespace hiddenalg
