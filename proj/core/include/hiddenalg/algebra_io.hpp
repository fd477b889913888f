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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hiddenalg/algebra.hpp"

namespace hiddenalg {

/// Malformed algebra text. what() reads "line N: message".
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

private:
  std::size_t line_;
  std::string message_;
};

/// Parsed algebra file: the algebra and the optional `roles` line
/// (role index of each basis element, see candidate.hpp).
struct AlgebraFile {
  AlgebraPtr algebra;
  std::optional<std::vector<std::size_t>> roles;
};

/// Line-oriented format:
///
///     # comment
///     name splitO
///     dimension 7
///     unital true
///     basis q1 q2 q3 q4 q5 q6 q7
///     e1 e2 -> e3
///     e1 e1 -> -1
///     e2 e3 -> 1/2*e1 - 3i*e2 + (1+2i)*e3
///
/// `dimension` is required and precedes every line that depends on it;
/// `unital` defaults to true. Unlisted products are zero. A bare number is a
/// multiple of the unit.
AlgebraFile parse_algebra_file(std::string_view text);
AlgebraPtr parse_algebra(std::string_view text);
AlgebraFile read_algebra_file(const std::string& path);

/// Canonical text. Zero products are omitted, so parse(serialize(A)) == A.
std::string serialize(const AlgebraDef& alg, const std::optional<std::vector<std::size_t>>& roles = std::nullopt);

/// Coefficient in the file grammar: "3", "-1/2", "2i", "(1-2i)".
std::string format_coefficient(const Scalar& s);

}  // namespace hiddenalg
