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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hiddenalg/algebra.hpp"

namespace hiddenalg {

enum class PropertyKind {
  associative,
  alternative,
  flexible,
  lie_admissible,
  power_associative,
  jordan,
  unital,
  derivation_property,
};

/// A property to check. `degree` is only read for power_associative.
struct Property {
  PropertyKind kind;
  int degree = 4;

  static Property power_associative(int n) { return {PropertyKind::power_associative, n}; }
};

/// Command-line spelling: "lie-admissible", "power-associative", "derivation", ...
std::string_view property_name(PropertyKind kind);
std::optional<PropertyKind> parse_property_name(std::string_view name);

/// The failing arguments of an identity and the nonzero defect they produce.
/// For multilinear laws `indices` holds basis indices (0-based) and
/// `arguments` the matching basis elements; for the non-multilinear laws a
/// pseudorandom argument may appear with `indices` left empty.
struct Witness {
  std::vector<std::size_t> indices;
  std::vector<Element> arguments;
  Element defect;
};

struct PropertyReport {
  Property property;
  bool holds = true;
  std::optional<Witness> witness;
  /// Number of argument tuples examined.
  std::size_t cases = 0;

  /// One-line summary, e.g. "lie-admissible: FAIL at (q1, q2, q4): defect -4*q5".
  std::string summary() const;
};

/// Seed for the pseudorandom sample used by the non-multilinear laws.
inline constexpr std::uint64_t kPropertySampleSeed = 0x6a6f7264616e3031ULL;
/// Size of that sample.
inline constexpr std::size_t kPropertySampleSize = 100;

/// Deterministic sample of `count` elements with integer coefficients in
/// [-3, 3]; the unit part is filled only for unital algebras.
std::vector<Element> sample_elements(const AlgebraPtr& alg, std::size_t count, std::uint64_t seed);

/// Exhaustive check of one law.
///
/// Multilinear laws (associative, alternative, flexible, Lie-admissible,
/// derivation) run over every basis tuple in lexicographic order and report
/// the first failing tuple. Power-associativity and the Jordan identity are
/// not multilinear in x: they are evaluated on every basis element and on
/// sample_elements(alg, kPropertySampleSize, kPropertySampleSeed).
PropertyReport check_property(const AlgebraPtr& alg, Property property);

/// [z, xy] = x[z, y] + [z, x]y over all basis triples, reported as (x, y, z).
PropertyReport check_derivation_property(const AlgebraPtr& alg);

/// Outcome of Myung's criterion on a single algebra.
struct MyungVerdict {
  AlgebraPtr algebra;
  bool derivation = false;
  bool flexible = false;
  bool lie_admissible = false;

  /// derivation <=> (flexible and Lie-admissible)
  bool equivalent() const { return derivation == (flexible && lie_admissible); }
};

/// Throws UsageError on an empty corpus.
std::vector<MyungVerdict> myung_equivalence(std::span<const AlgebraPtr> corpus);

}  // namespace hiddenalg
