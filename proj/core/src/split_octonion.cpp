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

#include "hiddenalg/split_octonion.hpp"

#include <string_view>

#include "hiddenalg/linear_solve.hpp"
#include "hiddenalg/matrix2.hpp"

namespace hiddenalg {

// Row q_r, column q_c holds q_r q_c.
const std::array<std::array<const char*, 7>, 7> kSplitOctonionTable{{
    {"-1", "q3", "-q2", "-q7", "q6", "-q5", "q4"},
    {"-q3", "-1", "q1", "-q6", "-q7", "q4", "q5"},
    {"q2", "-q1", "-1", "q5", "-q4", "-q7", "q6"},
    {"q7", "q6", "-q5", "1", "-q3", "q2", "q1"},
    {"-q6", "q7", "q4", "q3", "1", "-q1", "q2"},
    {"q5", "-q4", "q7", "-q2", "q1", "1", "q3"},
    {"-q4", "-q5", "-q6", "-q1", "-q2", "-q3", "1"},
}};

int levi_civita3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (1, 2, 3).
  if ((i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1)) return 1;
  return -1;
}

namespace {

AlgebraPtr build_split_octonions() {
  AlgebraDef::Builder b("splitO", 7, true);
  b.basis_names({"q1", "q2", "q3", "q4", "q5", "q6", "q7"});
  for (std::size_t r = 0; r < 7; ++r) {
    for (std::size_t c = 0; c < 7; ++c) {
      std::string_view cell = kSplitOctonionTable[r][c];
      Scalar sign(1);
      if (cell.front() == '-') {
        sign = Scalar(-1);
        cell.remove_prefix(1);
      }
      if (cell == "1") {
        b.add_unit(r, c, sign);
      } else {
        b.add(r, c, static_cast<std::size_t>(cell[1] - '1'), sign);
      }
    }
  }
  return b.build();
}

ZornMatrix basis_image(std::size_t index) {
  if (index == 0) return ZornMatrix::identity();
  if (index <= 3) {
    const Vec3 e = Vec3::unit(static_cast<int>(index));
    return {Scalar(), -e, e, Scalar()};
  }
  if (index <= 6) {
    const Vec3 e = Vec3::unit(static_cast<int>(index - 3));
    return {Scalar(), e, e, Scalar()};
  }
  return {Scalar(-1), {}, {}, Scalar(1)};
}

/// Zorn matrix flattened as (a, x1, x2, x3, y1, y2, y3, b).
std::array<Scalar, 8> flatten(const ZornMatrix& z) {
  return {z.a, z.x[0], z.x[1], z.x[2], z.y[0], z.y[1], z.y[2], z.b};
}

SplitOctonion scaled_q(const Scalar& s, std::size_t index) { return s * q(index); }

std::string case_label(std::initializer_list<int> idx) {
  std::string out = "(";
  bool first = true;
  for (int v : idx) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + ")";
}

/// Shared driver for the two commutator families on (q_{i+off}, q_{j+off}).
IdentityCheck commutator_family(std::string label, std::size_t offset, long factor) {
  IdentityCheck check{std::move(label)};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const SplitOctonion lhs = commutator(q(static_cast<std::size_t>(i) + offset),
                                           q(static_cast<std::size_t>(j) + offset));
      SplitOctonion rhs(split_octonions());
      for (int k = 1; k <= 3; ++k) rhs += scaled_q(Scalar(factor * levi_civita3(i, j, k)), static_cast<std::size_t>(k));
      const SplitOctonion diff = lhs - rhs;
      bool outside_zero = diff.unit_part().is_zero();
      for (std::size_t m = 3; m < 7; ++m) outside_zero = outside_zero && diff[m].is_zero();
      for (int k = 1; k <= 3; ++k) {
        bool ok = diff[static_cast<std::size_t>(k - 1)].is_zero();
        if (k == 1) ok = ok && outside_zero;
        check.record(ok, case_label({i, j, k}), "lhs " + lhs.to_string() + ", expected " + rhs.to_string());
      }
    }
  }
  return check;
}

}  // namespace

const AlgebraPtr& split_octonions() {
  static const AlgebraPtr alg = build_split_octonions();
  return alg;
}

SplitOctonion q(std::size_t index) {
  if (index == 0) return Element::unit(split_octonions());
  if (index > 7) throw UsageError("q: index must be 0..7");
  return Element::basis(split_octonions(), index - 1);
}

ZornMatrix to_zorn(const SplitOctonion& s) {
  if (s.algebra() != split_octonions() && !(*s.algebra() == *split_octonions())) {
    throw UsageError("to_zorn: element is not a split-octonion");
  }
  ZornMatrix z = s.unit_part() * basis_image(0);
  for (std::size_t k = 0; k < 7; ++k) {
    if (!s[k].is_zero()) z += s[k] * basis_image(k + 1);
  }
  return z;
}

SplitOctonion from_zorn(const ZornMatrix& z) {
  std::vector<std::vector<Scalar>> rows(8, std::vector<Scalar>(8));
  for (std::size_t col = 0; col < 8; ++col) {
    const auto image = flatten(basis_image(col));
    for (std::size_t row = 0; row < 8; ++row) rows[row][col] = image[row];
  }
  const auto target = flatten(z);
  auto sol = solve_linear(std::move(rows), std::vector<Scalar>(target.begin(), target.end()), 8);
  if (!sol) throw UsageError("from_zorn: basis images are not independent");
  std::vector<Scalar> coeffs(sol->begin() + 1, sol->end());
  return SplitOctonion(split_octonions(), (*sol)[0], std::move(coeffs));
}

ZornIsomorphismReport verify_zorn_isomorphism() {
  ZornIsomorphismReport report;
  for (std::size_t u = 0; u < 8; ++u) {
    for (std::size_t v = 0; v < 8; ++v) {
      ++report.pairs_checked;
      SplitOctonion table = q(u) * q(v);
      ZornMatrix zorn = zorn_multiply(basis_image(u), basis_image(v));
      if (to_zorn(table) != zorn) report.mismatches.push_back({u, v, std::move(table), std::move(zorn)});
    }
  }
  return report;
}

IdentityCheck verify_split_commutators() {
  return commutator_family("[q_{i+3}, q_{j+3}] = -2 eps_ijk q_k", 3, -2);
}

IdentityCheck verify_quaternion_commutators() {
  return commutator_family("[q_i, q_j] = 2 eps_ijk q_k", 0, 2);
}

IdentityCheck verify_split_associators() {
  IdentityCheck check{"(q_{i+3}, q_{j+3}, q_{k+3}) = 2 eps_ijk q7"};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        const SplitOctonion lhs = associator(q(static_cast<std::size_t>(i) + 3),
                                             q(static_cast<std::size_t>(j) + 3),
                                             q(static_cast<std::size_t>(k) + 3));
        const SplitOctonion rhs = scaled_q(Scalar(2L * levi_civita3(i, j, k)), 7);
        check.record(lhs == rhs, case_label({i, j, k}), "lhs " + lhs.to_string() + ", expected " + rhs.to_string());
      }
    }
  }
  return check;
}

SpinCommutatorReport verify_spin_commutators() {
  SpinCommutatorReport report{{"[(i/2)q_i, (i/2)q_j] = eps_ijk (i/2)q_k"},
                              {"[s_i/2, s_j/2] = i eps_ijk s_k/2"},
                              {"[(i/2)q_i, (i/2)q_j] = i eps_ijk (i/2)q_k"}};
  const Scalar half_i = Scalar::i() * Scalar::ratio(1, 2);
  const Scalar half = Scalar::ratio(1, 2);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      const SplitOctonion lhs = commutator(half_i * q(ui), half_i * q(uj));
      SplitOctonion rhs(split_octonions());
      Matrix2 pauli_rhs;
      for (int k = 1; k <= 3; ++k) {
        rhs += Scalar(levi_civita3(i, j, k)) * (half_i * q(static_cast<std::size_t>(k)));
        pauli_rhs += (Scalar::i() * Scalar(levi_civita3(i, j, k))) * (half * Matrix2::pauli(k));
      }
      report.octonion.record(lhs == rhs, case_label({i, j}), "lhs " + lhs.to_string() + ", expected " + rhs.to_string());
      const SplitOctonion rhs_i = Scalar::i() * rhs;
      report.octonion_pauli_form.record(lhs == rhs_i, case_label({i, j}),
                                        "lhs " + lhs.to_string() + ", expected " + rhs_i.to_string());

      const Matrix2 si = half * Matrix2::pauli(i);
      const Matrix2 sj = half * Matrix2::pauli(j);
      const Matrix2 pauli_lhs = si * sj - sj * si;
      report.pauli.record(pauli_lhs == pauli_rhs, case_label({i, j}),
             "lhs " + pauli_lhs.to_string() + ", expected " + pauli_rhs.to_string());
    }
  }
  return report;
}

SpinDecompositionReport verify_spin_decomposition() {
  SpinDecompositionReport report{{"(i/2) q_i = -(i/4) eps_ijk q_{j+3} q_{k+3}"}, {}, std::nullopt};
  const Scalar half_i = Scalar::i() * Scalar::ratio(1, 2);
  const Scalar quarter_i = Scalar::i() * Scalar::ratio(1, 4);
  std::optional<Scalar> common;
  bool proportional = true;
  for (int i = 1; i <= 3; ++i) {
    SplitOctonion product_sum(split_octonions());
    SplitOctonion bracket_sum(split_octonions());
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        const int eps = levi_civita3(i, j, k);
        if (eps == 0) continue;
        const SplitOctonion a = q(static_cast<std::size_t>(j) + 3);
        const SplitOctonion b = q(static_cast<std::size_t>(k) + 3);
        product_sum += Scalar(eps) * (a * b);
        bracket_sum += Scalar(eps) * commutator(a, b);
      }
    }
    const SplitOctonion lhs = half_i * q(static_cast<std::size_t>(i));
    const SplitOctonion rhs = -quarter_i * product_sum;
    report.product_form.record(lhs == rhs, case_label({i}), "lhs " + lhs.to_string() + ", rhs " + rhs.to_string());

    SplitOctonion r = Scalar::ratio(-1, 4) * bracket_sum;
    const Scalar coeff = r[static_cast<std::size_t>(i - 1)];
    if (!(r - coeff * q(static_cast<std::size_t>(i))).is_zero() || (common && *common != coeff)) {
      proportional = false;
    }
    if (!common) common = coeff;
    report.bracket_form[static_cast<std::size_t>(i - 1)] = std::move(r);
  }
  if (proportional) report.lambda = common;
  return report;
}

}  // namespace hiddenalg
