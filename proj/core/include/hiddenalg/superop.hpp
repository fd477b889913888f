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
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hiddenalg/scalar.hpp"

namespace hiddenalg {

/// Odd superspace coordinates, in normal-order position.
enum class OddIndex : std::uint8_t { theta1 = 0, theta2 = 1, thetabar1 = 2, thetabar2 = 3 };

/// Normal-ordered monomial
///
///     x^a  theta^S  d^b  (d/dtheta)^T
///
/// x exponents `x`, d_mu exponents `d`; odd coordinates `coords` and odd
/// derivatives `derivs` as bit sets over OddIndex, each written in
/// increasing index order. Even and odd factors commute, so only the order
/// inside each family carries a sign.
struct Monomial {
  std::array<std::uint8_t, 4> x{};
  std::array<std::uint8_t, 4> d{};
  std::uint8_t coords = 0;
  std::uint8_t derivs = 0;

  int parity() const;
  bool has_derivatives() const;
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

/// Differential operator on superspace (x^mu, theta^a, thetabar^adot) with
/// coefficients in Q(i), stored as a normal-ordered polynomial in the
/// generators
///
///   [d_mu, x^nu] = delta_mu^nu,
///   {d/dtheta^k, theta^l} = delta_kl   (k, l over the four odd coordinates),
///
/// every other pair commuting or anticommuting by parity. Zero coefficients
/// are never stored, so structural equality is operator equality.
class SuperOp {
public:
  SuperOp() = default;

  static SuperOp constant(const Scalar& c);
  static SuperOp x(int mu);        ///< x^mu, mu = 0..3
  static SuperOp d(int mu);        ///< d_mu = d/dx^mu
  static SuperOp theta(int a);     ///< theta^a, a = 1, 2
  static SuperOp thetabar(int a);  ///< thetabar^adot, a = 1, 2
  static SuperOp dtheta(int a);    ///< d/dtheta^a
  static SuperOp dthetabar(int a); ///< d/dthetabar^adot
  static SuperOp odd_coord(OddIndex k);
  static SuperOp odd_deriv(OddIndex k);
  static SuperOp monomial(const Monomial& m, const Scalar& c);

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a normal-ordered monomial (zero when absent).
  Scalar coefficient(const Monomial& m) const;

  /// 0 or 1 when every term has that parity (the zero operator is even);
  /// nullopt for mixed parity.
  std::optional<int> parity() const;

  SuperOp& operator+=(const SuperOp& o);
  SuperOp& operator-=(const SuperOp& o);
  SuperOp& operator*=(const Scalar& s);
  friend SuperOp operator+(SuperOp a, const SuperOp& b) { return a += b; }
  friend SuperOp operator-(SuperOp a, const SuperOp& b) { return a -= b; }
  friend SuperOp operator*(const Scalar& s, SuperOp a) { return a *= s; }
  SuperOp operator-() const { return Scalar(-1) * *this; }
  /// Operator product, see compose().
  friend SuperOp operator*(const SuperOp& a, const SuperOp& b);
  friend bool operator==(const SuperOp&, const SuperOp&) = default;

  /// "-1/4*thb1*d3 - i*d0", terms in monomial order; "0" for zero.
  std::string to_string() const;

private:
  void add_term(const Monomial& m, const Scalar& c);

  std::map<Monomial, Scalar> terms_;
};

/// Operator product A B, re-normal-ordered.
SuperOp compose(const SuperOp& a, const SuperOp& b);

/// A B - (-1)^{|A||B|} B A. Throws UsageError for an operand of mixed parity.
SuperOp graded_bracket(const SuperOp& a, const SuperOp& b);

/// Action on a superspace function f (a derivative-free SuperOp):
/// the derivative-free part of compose(op, f). Throws UsageError when f
/// contains derivatives.
SuperOp apply(const SuperOp& op, const SuperOp& f);

/// Plane-wave backend: for x-independent operators, d_mu acts as the
/// commuting symbol i p_mu. The result stores p_mu in the `d` exponent slots.
/// Throws UsageError when `op` depends on x.
SuperOp to_plane_wave(const SuperOp& op);
/// Product in the plane-wave picture: bosonic symbols commute.
SuperOp compose_plane_wave(const SuperOp& a, const SuperOp& b);
SuperOp graded_bracket_plane_wave(const SuperOp& a, const SuperOp& b);

}  // namespace hiddenalg
