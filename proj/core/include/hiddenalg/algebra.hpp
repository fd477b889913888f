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

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hiddenalg/scalar.hpp"

namespace hiddenalg {

/// Result of a basis product: sum_k coeffs[k] e_k + unit * 1.
struct BasisProduct {
  std::vector<Scalar> coeffs;
  Scalar unit;

  bool is_zero() const;
  friend bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

/// Finite-dimensional algebra over Q(i) given by structure constants
///
///     e_i e_j = sum_k c[i][j][k] e_k + u[i][j] * 1
///
/// where 1 is an external unit adjoined to the basis when `unital()` holds.
/// Immutable once built; share it through AlgebraPtr.
class AlgebraDef {
public:
  class Builder;

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  bool unital() const { return unital_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  /// Free-form tag carried through the file format ("qi" for exact data).
  const std::string& scalar_tag() const { return scalar_tag_; }

  const Scalar& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  const Scalar& unit_coeff(std::size_t i, std::size_t j) const { return u_[i * dim_ + j]; }
  BasisProduct product(std::size_t i, std::size_t j) const;

  /// Index of a basis name, or dim() when absent.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const AlgebraDef&, const AlgebraDef&) = default;

private:
  AlgebraDef() = default;

  std::size_t dim_ = 0;
  std::string name_;
  bool unital_ = true;
  std::string scalar_tag_ = "qi";
  std::vector<std::string> names_;
  std::vector<Scalar> c_;
  std::vector<Scalar> u_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraDef>;

/// Incremental construction of an AlgebraDef; validates indices and the
/// unital / unit-coefficient invariant in build().
class AlgebraDef::Builder {
public:
  Builder(std::string name, std::size_t dim, bool unital);

  Builder& basis_names(std::vector<std::string> names);
  Builder& scalar_tag(std::string tag);
  /// Adds `value` to c[i][j][k]. Indices are 0-based.
  Builder& add(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
  /// Adds `value` to the unit coefficient u[i][j].
  Builder& add_unit(std::size_t i, std::size_t j, const Scalar& value);
  /// Overwrites the full product e_i e_j.
  Builder& set_product(std::size_t i, std::size_t j, const BasisProduct& p);

  /// Throws UsageError if a unit coefficient is set on a non-unital algebra
  /// or basis_names has the wrong length.
  AlgebraPtr build() const;

private:
  void check(std::size_t i) const;

  std::string name_;
  std::size_t dim_;
  bool unital_;
  std::string scalar_tag_ = "qi";
  std::vector<std::string> names_;
  std::vector<Scalar> c_;
  std::vector<Scalar> u_;
};

/// Vector in an algebra: unit_part * 1 + sum_k coeffs[k] e_k.
class Element {
public:
  Element() = default;
  /// The zero element of `alg`.
  explicit Element(AlgebraPtr alg);
  Element(AlgebraPtr alg, Scalar unit_part, std::vector<Scalar> coeffs);

  /// The basis vector e_index.
  static Element basis(AlgebraPtr alg, std::size_t index);
  /// The external unit; throws UsageError on a non-unital algebra.
  static Element unit(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const Scalar& unit_part() const { return unit_; }
  std::span<const Scalar> coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }

  bool is_zero() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  Element operator-() const { return Scalar(-1) * *this; }

  /// Algebra product; see multiply().
  friend Element operator*(const Element& a, const Element& b);

  /// Same algebra and same coefficients.
  friend bool operator==(const Element& a, const Element& b);

  /// Human-readable sum using basis names: "2*q3 - q1 + 1/2i".
  std::string to_string() const;

private:
  void require_same(const Element& o) const;

  AlgebraPtr alg_;
  Scalar unit_;
  std::vector<Scalar> coeffs_;
};

/// Bilinear product. Throws UsageError when x and y live in different algebras.
Element multiply(const Element& x, const Element& y);
/// x y - y x
Element commutator(const Element& x, const Element& y);
/// (x y) z - x (y z)
Element associator(const Element& x, const Element& y, const Element& z);
/// [[x,y],z] + [[z,x],y] + [[y,z],x]
Element jacobiator(const Element& x, const Element& y, const Element& z);

/// Restriction of `alg` to the span of the given basis indices (plus the
/// unit, if any). Throws UsageError when the span is not closed.
AlgebraPtr subalgebra(const AlgebraPtr& alg, std::span<const std::size_t> indices,
                      std::string name);

}  // namespace hiddenalg
