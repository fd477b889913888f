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

#include "hiddenalg/zorn.hpp"

namespace hiddenalg {

Vec3 Vec3::unit(int i) {
  if (i < 1 || i > 3) throw UsageError("Vec3::unit: index must be 1, 2 or 3");
  Vec3 e;
  e.v[static_cast<std::size_t>(i - 1)] = Scalar(1);
  return e;
}

Vec3& Vec3::operator+=(const Vec3& o) {
  for (std::size_t k = 0; k < 3; ++k) v[k] += o.v[k];
  return *this;
}

Vec3& Vec3::operator-=(const Vec3& o) {
  for (std::size_t k = 0; k < 3; ++k) v[k] -= o.v[k];
  return *this;
}

Vec3 operator*(const Scalar& s, Vec3 a) {
  for (auto& c : a.v) c *= s;
  return a;
}

bool Vec3::is_zero() const { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Scalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  Vec3 r;
  r[0] = a[1] * b[2] - a[2] * b[1];
  r[1] = a[2] * b[0] - a[0] * b[2];
  r[2] = a[0] * b[1] - a[1] * b[0];
  return r;
}

ZornMatrix& ZornMatrix::operator+=(const ZornMatrix& o) {
  a += o.a;
  x += o.x;
  y += o.y;
  b += o.b;
  return *this;
}

ZornMatrix& ZornMatrix::operator-=(const ZornMatrix& o) {
  a -= o.a;
  x -= o.x;
  y -= o.y;
  b -= o.b;
  return *this;
}

ZornMatrix operator*(const Scalar& s, ZornMatrix m) {
  m.a *= s;
  m.x = s * m.x;
  m.y = s * m.y;
  m.b *= s;
  return m;
}

bool ZornMatrix::is_zero() const { return a.is_zero() && b.is_zero() && x.is_zero() && y.is_zero(); }

std::string ZornMatrix::to_string() const {
  auto vec = [](const Vec3& v) {
    return "[" + v[0].to_string() + ", " + v[1].to_string() + ", " + v[2].to_string() + "]";
  };
  return "(" + a.to_string() + ", " + vec(x) + "; " + vec(y) + ", " + b.to_string() + ")";
}

ZornMatrix zorn_multiply(const ZornMatrix& l, const ZornMatrix& r) {
  ZornMatrix out;
  out.a = l.a * r.a + dot(l.x, r.y);
  out.x = l.a * r.x + r.b * l.x - cross(l.y, r.y);
  out.y = r.a * l.y + l.b * r.y + cross(l.x, r.x);
  out.b = l.b * r.b + dot(l.y, r.x);
  return out;
}

}  // namespace hiddenalg
