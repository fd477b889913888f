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
#include <string>
#include <utility>

namespace hiddenalg {

/// Outcome of one family of exact identities checked case by case.
struct IdentityCheck {
  IdentityCheck() = default;
  IdentityCheck(std::string l) : label(std::move(l)) {}

  std::string label;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  ///< empty when failures == 0

  bool holds() const { return failures == 0; }

  /// Counts one case; keeps the detail of the first failure only.
  void record(bool ok, const std::string& where, const std::string& detail) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = where + ": " + detail;
  }
};

}  // namespace hiddenalg
