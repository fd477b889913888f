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

#include "hiddenalg/properties.hpp"

#include <array>
#include <functional>
#include <random>
#include <sstream>

#include "hiddenalg/linear_solve.hpp"

namespace hiddenalg {

namespace {

constexpr std::array<std::pair<PropertyKind, std::string_view>, 8> kNames{{
    {PropertyKind::associative, "associative"},
    {PropertyKind::alternative, "alternative"},
    {PropertyKind::flexible, "flexible"},
    {PropertyKind::lie_admissible, "lie-admissible"},
    {PropertyKind::power_associative, "power-associative"},
    {PropertyKind::jordan, "jordan"},
    {PropertyKind::unital, "unital"},
    {PropertyKind::derivation_property, "derivation"},
}};

/// Cached basis elements and their pairwise products.
class BasisCache {
public:
  explicit BasisCache(const AlgebraPtr& alg) : n_(alg->dim()) {
    for (std::size_t i = 0; i < n_; ++i) basis_.push_back(Element::basis(alg, i));
    products_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) products_.push_back(multiply(basis_[i], basis_[j]));
    }
  }

  std::size_t dim() const { return n_; }
  const Element& e(std::size_t i) const { return basis_[i]; }
  const Element& prod(std::size_t i, std::size_t j) const { return products_[i * n_ + j]; }

  /// (e_i e_j) e_k - e_i (e_j e_k)
  Element assoc(std::size_t i, std::size_t j, std::size_t k) const {
    return multiply(prod(i, j), e(k)) - multiply(e(i), prod(j, k));
  }
  Element comm(std::size_t i, std::size_t j) const { return prod(i, j) - prod(j, i); }

private:
  std::size_t n_;
  std::vector<Element> basis_;
  std::vector<Element> products_;
};

using TripleDefect = std::function<Element(std::size_t, std::size_t, std::size_t)>;

/// Scans all basis triples in lexicographic order; stops at the first failure.
PropertyReport scan_triples(Property property, const BasisCache& cache, const TripleDefect& defect) {
  PropertyReport report{property, true, std::nullopt, 0};
  const std::size_t n = cache.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++report.cases;
        Element d = defect(i, j, k);
        if (!d.is_zero()) {
          report.holds = false;
          report.witness = Witness{{i, j, k}, {cache.e(i), cache.e(j), cache.e(k)}, std::move(d)};
          return report;
        }
      }
    }
  }
  return report;
}

/// All distinct values of x^n over every bracketing, for n = 1..max_degree.
std::vector<std::vector<Element>> bracketings(const Element& x, int max_degree) {
  std::vector<std::vector<Element>> by_degree(static_cast<std::size_t>(max_degree) + 1);
  by_degree[1].push_back(x);
  for (int n = 2; n <= max_degree; ++n) {
    auto& out = by_degree[static_cast<std::size_t>(n)];
    for (int k = 1; k < n; ++k) {
      for (const Element& a : by_degree[static_cast<std::size_t>(k)]) {
        for (const Element& b : by_degree[static_cast<std::size_t>(n - k)]) {
          Element p = multiply(a, b);
          bool seen = false;
          for (const Element& q : out) {
            if (q == p) {
              seen = true;
              break;
            }
          }
          if (!seen) out.push_back(std::move(p));
        }
      }
    }
  }
  return by_degree;
}

PropertyReport check_power_associative(const AlgebraPtr& alg, const BasisCache& cache, int degree) {
  if (degree < 3) throw UsageError("power-associative: degree must be at least 3");
  PropertyReport report{Property::power_associative(degree), true, std::nullopt, 0};
  std::vector<std::pair<std::optional<std::size_t>, Element>> inputs;
  for (std::size_t i = 0; i < cache.dim(); ++i) inputs.emplace_back(i, cache.e(i));
  for (Element& x : sample_elements(alg, kPropertySampleSize, kPropertySampleSeed)) {
    inputs.emplace_back(std::nullopt, std::move(x));
  }
  for (const auto& [index, x] : inputs) {
    ++report.cases;
    const auto powers = bracketings(x, degree);
    for (int n = 3; n <= degree; ++n) {
      const auto& values = powers[static_cast<std::size_t>(n)];
      if (values.size() > 1) {
        report.holds = false;
        Witness w{{}, {x}, values[1] - values[0]};
        if (index) w.indices.push_back(*index);
        report.witness = std::move(w);
        return report;
      }
    }
  }
  return report;
}

PropertyReport check_jordan(const AlgebraPtr& alg, const BasisCache& cache) {
  PropertyReport report{{PropertyKind::jordan}, true, std::nullopt, 0};
  const std::size_t n = cache.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++report.cases;
      Element d = cache.comm(i, j);
      if (!d.is_zero()) {
        report.holds = false;
        report.witness = Witness{{i, j}, {cache.e(i), cache.e(j)}, std::move(d)};
        return report;
      }
    }
  }
  // (xy)(xx) = x(y(xx)) is linear in y, so y ranges over the basis only.
  std::vector<std::pair<std::optional<std::size_t>, Element>> xs;
  for (std::size_t i = 0; i < n; ++i) xs.emplace_back(i, cache.e(i));
  for (Element& x : sample_elements(alg, kPropertySampleSize, kPropertySampleSeed)) {
    xs.emplace_back(std::nullopt, std::move(x));
  }
  for (const auto& [index, x] : xs) {
    const Element xx = multiply(x, x);
    for (std::size_t j = 0; j < n; ++j) {
      ++report.cases;
      const Element& y = cache.e(j);
      Element d = multiply(multiply(x, y), xx) - multiply(x, multiply(y, xx));
      if (!d.is_zero()) {
        report.holds = false;
        Witness w{{}, {x, y}, std::move(d)};
        if (index) w.indices.push_back(*index);
        w.indices.push_back(j);
        report.witness = std::move(w);
        return report;
      }
    }
  }
  return report;
}

/// Searches the span of the basis for an identity element.
PropertyReport check_unital(const AlgebraPtr& alg, const BasisCache& cache) {
  PropertyReport report{{PropertyKind::unital}, true, std::nullopt, 0};
  report.cases = 1;
  if (alg->unital()) return report;
  // Unknowns a_m with (sum a_m e_m) e_j = e_j and e_j (sum a_m e_m) = e_j.
  const std::size_t n = cache.dim();
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (std::size_t j = 0; j < n; ++j) {
    for (int side = 0; side < 2; ++side) {
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Scalar> row(n);
        for (std::size_t m = 0; m < n; ++m) {
          row[m] = side == 0 ? cache.prod(m, j)[k] : cache.prod(j, m)[k];
        }
        rows.push_back(std::move(row));
        rhs.emplace_back(j == k ? 1 : 0);
      }
      // The left/right equations for e_0..e_j alone already have no solution:
      // e_j is the first basis vector no candidate identity can fix.
      if (!solve_linear(rows, rhs, n)) {
        report.holds = false;
        report.witness = Witness{{j}, {cache.e(j)}, cache.e(j)};
        return report;
      }
    }
  }
  return report;
}

}  // namespace

std::string_view property_name(PropertyKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<PropertyKind> parse_property_name(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  if (name == "lie_admissible") return PropertyKind::lie_admissible;
  if (name == "power_associative") return PropertyKind::power_associative;
  if (name == "derivation_property" || name == "derivation-property") {
    return PropertyKind::derivation_property;
  }
  return std::nullopt;
}

std::string PropertyReport::summary() const {
  std::ostringstream os;
  os << property_name(property.kind);
  if (property.kind == PropertyKind::power_associative) os << "(" << property.degree << ")";
  os << ": " << (holds ? "PASS" : "FAIL");
  if (witness) {
    const auto& names = witness->defect.algebra()->basis_names();
    os << " at (";
    if (witness->indices.size() == witness->arguments.size()) {
      for (std::size_t a = 0; a < witness->indices.size(); ++a) {
        os << (a ? ", " : "") << names[witness->indices[a]];
      }
    } else {
      for (std::size_t a = 0; a < witness->arguments.size(); ++a) {
        os << (a ? ", " : "") << witness->arguments[a].to_string();
      }
    }
    os << "): defect " << witness->defect.to_string();
  }
  os << " [" << cases << " cases]";
  return os.str();
}

std::vector<Element> sample_elements(const AlgebraPtr& alg, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::vector<Element> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<Scalar> c(alg->dim());
    for (auto& v : c) v = Scalar(coef(rng));
    Scalar unit = alg->unital() ? Scalar(coef(rng)) : Scalar();
    out.emplace_back(alg, std::move(unit), std::move(c));
  }
  return out;
}

PropertyReport check_property(const AlgebraPtr& alg, Property property) {
  if (!alg) throw UsageError("check_property: null algebra");
  const BasisCache cache(alg);
  switch (property.kind) {
    case PropertyKind::associative:
      return scan_triples(property, cache, [&](auto i, auto j, auto k) { return cache.assoc(i, j, k); });
    case PropertyKind::alternative:
      // Linearized form of (xx)y = x(xy) and y(xx) = (yx)x: the associator
      // is antisymmetric in its first two and in its last two slots.
      return scan_triples(property, cache, [&](auto i, auto j, auto k) {
        const Element a = cache.assoc(i, j, k);
        Element left = a + cache.assoc(j, i, k);
        if (!left.is_zero()) return left;
        return a + cache.assoc(i, k, j);
      });
    case PropertyKind::flexible:
      return scan_triples(property, cache,
                          [&](auto i, auto j, auto k) { return cache.assoc(i, j, k) + cache.assoc(k, j, i); });
    case PropertyKind::lie_admissible:
      return scan_triples(property, cache, [&](auto i, auto j, auto k) {
        return commutator(cache.comm(i, j), cache.e(k)) + commutator(cache.comm(k, i), cache.e(j)) +
               commutator(cache.comm(j, k), cache.e(i));
      });
    case PropertyKind::power_associative:
      return check_power_associative(alg, cache, property.degree);
    case PropertyKind::jordan:
      return check_jordan(alg, cache);
    case PropertyKind::unital:
      return check_unital(alg, cache);
    case PropertyKind::derivation_property:
      return scan_triples(property, cache, [&](auto x, auto y, auto z) {
        return commutator(cache.e(z), cache.prod(x, y)) - multiply(cache.e(x), cache.comm(z, y)) -
               multiply(cache.comm(z, x), cache.e(y));
      });
  }
  throw UsageError("check_property: unknown property");
}

PropertyReport check_derivation_property(const AlgebraPtr& alg) {
  return check_property(alg, {PropertyKind::derivation_property});
}

std::vector<MyungVerdict> myung_equivalence(std::span<const AlgebraPtr> corpus) {
  if (corpus.empty()) throw UsageError("myung_equivalence: empty corpus");
  std::vector<MyungVerdict> out;
  for (const AlgebraPtr& alg : corpus) {
    MyungVerdict v;
    v.algebra = alg;
    v.derivation = check_derivation_property(alg).holds;
    v.flexible = check_property(alg, {PropertyKind::flexible}).holds;
    v.lie_admissible = check_property(alg, {PropertyKind::lie_admissible}).holds;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hiddenalg
