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
#include <string>

#include "hiddenalg/scalar.hpp"

namespace hiddenalg {

/// 3-vector over the orthonormal basis e_1, e_2, e_3 (e_i x e_j = eps_ijk e_k).
struct Vec3 {
  std::array<Scalar, 3> v{};

  static Vec3 unit(int i);  ///< e_i for i = 1, 2, 3

  const Scalar& operator[](std::size_t k) const { return v[k]; }
  Scalar& operator[](std::size_t k) { return v[k]; }

  Vec3& operator+=(const Vec3& o);
  Vec3& operator-=(const Vec3& o);
  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator*(const Scalar& s, Vec3 a);
  Vec3 operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const Vec3&, const Vec3&) = default;

  bool is_zero() const;
};

Scalar dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

/// Zorn vector matrix
///
///     ( a  x )
///     ( y  b )
///
/// with scalar diagonal and vector off-diagonal entries.
struct ZornMatrix {
  Scalar a;
  Vec3 x;
  Vec3 y;
  Scalar b;

  static ZornMatrix identity() { return {Scalar(1), {}, {}, Scalar(1)}; }

  ZornMatrix& operator+=(const ZornMatrix& o);
  ZornMatrix& operator-=(const ZornMatrix& o);
  friend ZornMatrix operator+(ZornMatrix l, const ZornMatrix& r) { return l += r; }
  friend ZornMatrix operator-(ZornMatrix l, const ZornMatrix& r) { return l -= r; }
  friend ZornMatrix operator*(const Scalar& s, ZornMatrix m);
  friend bool operator==(const ZornMatrix&, const ZornMatrix&) = default;

  bool is_zero() const;
  /// "(a, [x1, x2, x3]; [y1, y2, y3], b)"
  std::string to_string() const;
};

/// (a, x; y, b)(c, u; v, d) =
///   (ac + x.v,  a u + d x - y cross v;  c y + b v + x cross u,  bd + y.u)
ZornMatrix zorn_multiply(const ZornMatrix& l, const ZornMatrix& r);

}  // namespace hiddenalg
