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

#include "hiddenalg/identity_check.hpp"
#include "hiddenalg/matrix2.hpp"
#include "hiddenalg/superop.hpp"

namespace hiddenalg {

/// Normalization of the sigma matrices: paper = (1/4)(I, sigma), standard = (I, sigma).
enum class SigmaConvention { paper, standard };

/// P_mu = -i d_mu (minus_i) or P_mu = +i d_mu (plus_i).
enum class MomentumSign { minus_i, plus_i };

std::string convention_name(SigmaConvention conv);
std::string momentum_name(MomentumSign sign);

/// eta_{mu nu} = diag(+, -, -, -); the inverse metric has the same entries.
int metric(int mu, int nu);

/// sigma^mu_{a adot} (lower spinor indices) and sigmabar^{mu, adot a}.
struct SigmaMatrices {
  SigmaConvention convention;
  std::array<Matrix2, 4> sigma;
  std::array<Matrix2, 4> sigmabar;

  static SigmaMatrices make(SigmaConvention conv);
  /// sigma_mu^{a adot} = eta_{mu nu} eps^{ab} eps^{adot bdot} sigma^nu_{b bdot}.
  Matrix2 sigma_lowered_raised(int mu) const;
};

/// Spinor metrics. eps_upper = eps^{ab}, eps_lower_dotted = eps_{adot bdot}.
/// eps_upper_dotted and eps_lower are the inverse matrices of those two.
struct EpsilonSpinor {
  static Matrix2 upper();
  static Matrix2 lower_dotted();
  static Matrix2 upper_dotted();
  static Matrix2 lower();
};

enum class SpinorIndexMode { raise_undotted, lower_dotted, raise_dotted, lower_undotted };

/// Contracts psi with the matching epsilon: out^a = eps^{ab} psi_b etc.
std::array<Scalar, 2> raise_lower(const std::array<Scalar, 2>& psi, SpinorIndexMode mode);

struct Generators {
  SigmaConvention sigma_convention;
  MomentumSign momentum;
  std::array<SuperOp, 4> P_lower;                 ///< P_mu
  std::array<SuperOp, 4> P_upper;                 ///< P^mu
  std::array<std::array<SuperOp, 4>, 4> M;        ///< M^{mu nu}
  std::array<SuperOp, 2> Q;                       ///< Q_a
  std::array<SuperOp, 2> Qbar;                    ///< Qbar_adot
  std::array<SuperOp, 2> Qbar_upper;              ///< Qbar^adot = eps^{adot bdot} Qbar_bdot
};

Generators build_generators(SigmaConvention conv, MomentumSign sign = MomentumSign::minus_i);

struct PoincareReport {
  MomentumSign momentum;
  IdentityCheck pp;  ///< [P^mu, P^nu] = 0
  /// [M^{mu nu}, P^l] = i(eta^{nu l} P^mu - eta^{mu l} P^nu), and the same
  /// relation with l lowered: [M^{mu nu}, P_l] = i(delta^nu_l P^mu - delta^mu_l P^nu).
  IdentityCheck mp;
  IdentityCheck mm;  ///< Lorentz bracket for all mu nu rho sigma
  bool holds() const { return pp.holds() && mp.holds() && mm.holds(); }
};

PoincareReport verify_poincare(MomentumSign sign);

struct SusyReport {
  SigmaConvention sigma_convention;
  MomentumSign momentum;
  IdentityCheck qq;        ///< {Q_a, Q_b} = 0
  IdentityCheck qbqb;      ///< {Qbar_adot, Qbar_bdot} = 0
  /// c1 with {Q_a, Qbar_bdot} = c1 sigma^mu_{a bdot} P_mu for all a, bdot,
  /// or nullopt when no single constant fits.
  std::optional<Scalar> c1;
  std::array<std::array<SuperOp, 2>, 2> q_qbar;
  /// c2[mu] with sigma_mu^{a adot}{Q_a, Qbar_adot} = c2 P_mu.
  std::array<std::optional<Scalar>, 4> c2_per_mu;
  std::optional<Scalar> c2;  ///< common value of c2_per_mu
  /// P_i = (1/4) sigma_i^{a adot}{Q_a, Qbar_adot}, i = 1..3.
  IdentityCheck spatial_inversion;
  std::array<std::array<SuperOp, 2>, 4> p_q;        ///< [P^mu, Q_a]
  std::array<std::array<SuperOp, 2>, 4> p_qbar;     ///< [P^mu, Qbar^adot]
  std::vector<std::string> m_q;                     ///< nonzero [M^{mu nu}, Q_a], "M^{01},a=1: ..."
  std::vector<std::string> m_qbar;                  ///< nonzero [M^{mu nu}, Qbar^adot]
  /// Plane-wave backend reproduces every Q, Qbar anticommutator.
  bool plane_wave_agrees = false;
  /// Q_a Q_a f = 0 on the superspace monomial sample.
  IdentityCheck nilpotency;

  bool p_q_zero() const;
  bool p_qbar_zero() const;
};

SusyReport verify_susy(SigmaConvention conv, MomentumSign sign = MomentumSign::minus_i);

/// Graded brackets of all odd coordinates vanish (16 pairs).
IdentityCheck verify_grassmann();

struct EpsilonReport {
  IdentityCheck upper_matrix;         ///< eps^{ab} = i sigma^2 = ((0,-1),(1,0))
  IdentityCheck lower_dotted_matrix;  ///< eps_{adot bdot} = -i sigma^2 = ((0,1),(-1,0))
  IdentityCheck dotted_equal;         ///< eps^{ab} = eps^{adot bdot}
  IdentityCheck lower_equal;          ///< eps_{ab} = eps_{adot bdot}
  IdentityCheck inverse;              ///< eps^{ab} eps_{bc} = delta^a_c
};

EpsilonReport verify_epsilon();

/// s such that value == s * target; nullopt when none exists or target is zero.
std::optional<Scalar> proportionality(const SuperOp& value, const SuperOp& target);

}  // namespace hiddenalg
