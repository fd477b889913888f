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

#include "hiddenalg/algebra.hpp"

#include <algorithm>

namespace hiddenalg {

bool BasisProduct::is_zero() const {
  return unit.is_zero() &&
         std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return s.is_zero(); });
}

BasisProduct AlgebraDef::product(std::size_t i, std::size_t j) const {
  BasisProduct p;
  p.coeffs.reserve(dim_);
  for (std::size_t k = 0; k < dim_; ++k) p.coeffs.push_back(structure(i, j, k));
  p.unit = unit_coeff(i, j);
  return p;
}

std::size_t AlgebraDef::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

// ---------------------------------------------------------------------------

AlgebraDef::Builder::Builder(std::string name, std::size_t dim, bool unital)
    : name_(std::move(name)), dim_(dim), unital_(unital), c_(dim * dim * dim), u_(dim * dim) {
  if (dim == 0) throw UsageError("AlgebraDef: dimension must be positive");
  for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
}

void AlgebraDef::Builder::check(std::size_t i) const {
  if (i >= dim_) {
    throw UsageError("AlgebraDef: basis index " + std::to_string(i) + " out of range [0, " +
                     std::to_string(dim_) + ")");
  }
}

AlgebraDef::Builder& AlgebraDef::Builder::basis_names(std::vector<std::string> names) {
  names_ = std::move(names);
  return *this;
}

AlgebraDef::Builder& AlgebraDef::Builder::scalar_tag(std::string tag) {
  scalar_tag_ = std::move(tag);
  return *this;
}

AlgebraDef::Builder& AlgebraDef::Builder::add(std::size_t i, std::size_t j, std::size_t k,
                                              const Scalar& value) {
  check(i);
  check(j);
  check(k);
  c_[(i * dim_ + j) * dim_ + k] += value;
  return *this;
}

AlgebraDef::Builder& AlgebraDef::Builder::add_unit(std::size_t i, std::size_t j,
                                                   const Scalar& value) {
  check(i);
  check(j);
  u_[i * dim_ + j] += value;
  return *this;
}

AlgebraDef::Builder& AlgebraDef::Builder::set_product(std::size_t i, std::size_t j,
                                                      const BasisProduct& p) {
  check(i);
  check(j);
  if (p.coeffs.size() != dim_) throw UsageError("AlgebraDef: product has wrong length");
  for (std::size_t k = 0; k < dim_; ++k) c_[(i * dim_ + j) * dim_ + k] = p.coeffs[k];
  u_[i * dim_ + j] = p.unit;
  return *this;
}

AlgebraPtr AlgebraDef::Builder::build() const {
  if (names_.size() != dim_) {
    throw UsageError("AlgebraDef: expected " + std::to_string(dim_) + " basis names, got " +
                     std::to_string(names_.size()));
  }
  if (!unital_) {
    for (const Scalar& s : u_) {
      if (!s.is_zero()) throw UsageError("AlgebraDef: unit coefficient in a non-unital algebra");
    }
  }
  auto def = std::shared_ptr<AlgebraDef>(new AlgebraDef());
  def->dim_ = dim_;
  def->name_ = name_;
  def->unital_ = unital_;
  def->scalar_tag_ = scalar_tag_;
  def->names_ = names_;
  def->c_ = c_;
  def->u_ = u_;
  return def;
}

// ---------------------------------------------------------------------------

Element::Element(AlgebraPtr alg) : alg_(std::move(alg)) {
  if (!alg_) throw UsageError("Element: null algebra");
  coeffs_.assign(alg_->dim(), Scalar());
}

Element::Element(AlgebraPtr alg, Scalar unit_part, std::vector<Scalar> coeffs)
    : alg_(std::move(alg)), unit_(std::move(unit_part)), coeffs_(std::move(coeffs)) {
  if (!alg_) throw UsageError("Element: null algebra");
  if (coeffs_.size() != alg_->dim()) throw UsageError("Element: coefficient count != dim");
  if (!alg_->unital() && !unit_.is_zero()) {
    throw UsageError("Element: unit part in non-unital algebra '" + alg_->name() + "'");
  }
}

Element Element::basis(AlgebraPtr alg, std::size_t index) {
  Element e(std::move(alg));
  if (index >= e.coeffs_.size()) throw UsageError("Element::basis: index out of range");
  e.coeffs_[index] = Scalar(1);
  return e;
}

Element Element::unit(AlgebraPtr alg) {
  if (!alg || !alg->unital()) throw UsageError("Element::unit: algebra has no unit");
  Element e(std::move(alg));
  e.unit_ = Scalar(1);
  return e;
}

bool Element::is_zero() const {
  return unit_.is_zero() &&
         std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

void Element::require_same(const Element& o) const {
  if (!alg_ || !o.alg_) throw UsageError("Element: operation on a default-constructed element");
  if (alg_ != o.alg_ && !(*alg_ == *o.alg_)) {
    throw UsageError("Element: mismatched algebras '" + alg_->name() + "' and '" +
                     o.alg_->name() + "'");
  }
}

Element& Element::operator+=(const Element& o) {
  require_same(o);
  unit_ += o.unit_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(o);
  unit_ -= o.unit_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  unit_ *= s;
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

bool operator==(const Element& a, const Element& b) {
  if (!a.alg_ || !b.alg_) return a.alg_ == b.alg_;
  if (a.alg_ != b.alg_ && !(*a.alg_ == *b.alg_)) return false;
  return a.unit_ == b.unit_ && a.coeffs_ == b.coeffs_;
}

namespace {

void append_term(std::string& out, const Scalar& c, const std::string& name) {
  if (c.is_zero()) return;
  std::string coef = c.to_string();
  bool negative = false;
  // Real or pure-imaginary negatives print as " - |c|"; mixed ones keep their sign inside.
  if ((c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
    negative = true;
    coef = (-c).to_string();
  }
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const bool complex = !c.is_real() && sgn(c.re()) != 0;
  if (name.empty()) {
    out += complex ? "(" + coef + ")" : coef;
  } else if (coef == "1") {
    out += name;
  } else {
    out += (complex ? "(" + coef + ")" : coef) + "*" + name;
  }
}

}  // namespace

std::string Element::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) append_term(out, coeffs_[k], alg_->basis_names()[k]);
  append_term(out, unit_, "");
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

Element multiply(const Element& x, const Element& y) {
  if (!x.algebra() || !y.algebra()) throw UsageError("multiply: default-constructed element");
  if (x.algebra() != y.algebra() && !(*x.algebra() == *y.algebra())) {
    throw UsageError("multiply: mismatched algebras '" + x.algebra()->name() + "' and '" +
                     y.algebra()->name() + "'");
  }
  const AlgebraDef& alg = *x.algebra();
  const std::size_t n = alg.dim();
  std::vector<Scalar> out(n);
  Scalar unit = x.unit_part() * y.unit_part();
  for (std::size_t k = 0; k < n; ++k) {
    if (!y.unit_part().is_zero()) out[k] += x[k] * y.unit_part();
    if (!x.unit_part().is_zero()) out[k] += x.unit_part() * y[k];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = alg.structure(i, j, k);
        if (!c.is_zero()) out[k] += w * c;
      }
      const Scalar& u = alg.unit_coeff(i, j);
      if (!u.is_zero()) unit += w * u;
    }
  }
  return Element(x.algebra(), std::move(unit), std::move(out));
}

Element commutator(const Element& x, const Element& y) { return multiply(x, y) - multiply(y, x); }

Element associator(const Element& x, const Element& y, const Element& z) {
  return multiply(multiply(x, y), z) - multiply(x, multiply(y, z));
}

Element jacobiator(const Element& x, const Element& y, const Element& z) {
  return commutator(commutator(x, y), z) + commutator(commutator(z, x), y) +
         commutator(commutator(y, z), x);
}

AlgebraPtr subalgebra(const AlgebraPtr& alg, std::span<const std::size_t> indices,
                      std::string name) {
  const std::size_t m = indices.size();
  std::vector<std::size_t> position(alg->dim(), alg->dim());
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    if (indices[a] >= alg->dim()) throw UsageError("subalgebra: index out of range");
    position[indices[a]] = a;
    names.push_back(alg->basis_names()[indices[a]]);
  }
  AlgebraDef::Builder b(std::move(name), m, alg->unital());
  b.basis_names(std::move(names)).scalar_tag(alg->scalar_tag());
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t bb = 0; bb < m; ++bb) {
      const BasisProduct p = alg->product(indices[a], indices[bb]);
      for (std::size_t k = 0; k < alg->dim(); ++k) {
        if (p.coeffs[k].is_zero()) continue;
        if (position[k] == alg->dim()) {
          throw UsageError("subalgebra: product " + alg->basis_names()[indices[a]] + "*" +
                           alg->basis_names()[indices[bb]] + " leaves the span (component " +
                           alg->basis_names()[k] + ")");
        }
        b.add(a, bb, position[k], p.coeffs[k]);
      }
      if (!p.unit.is_zero()) b.add_unit(a, bb, p.unit);
    }
  }
  return b.build();
}

}  // namespace hiddenalg
