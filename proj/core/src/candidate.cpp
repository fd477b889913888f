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

#include "hiddenalg/candidate.hpp"

#include <algorithm>

namespace hiddenalg {

namespace {

constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

const std::array<std::string, kRoleCount + 1>& names() {
  static const std::array<std::string, kRoleCount + 1> n = [] {
    std::array<std::string, kRoleCount + 1> out;
    for (int mu = 0; mu < 4; ++mu) {
      out[static_cast<std::size_t>(mu)] = "R" + std::to_string(mu);
      out[static_cast<std::size_t>(mu) + 4] = "Rt" + std::to_string(mu);
    }
    for (std::size_t m = 0; m < 6; ++m)
      out[8 + m] = "M" + std::to_string(kPairs[m][0]) + std::to_string(kPairs[m][1]);
    out[kUnitRole] = "unit";
    return out;
  }();
  return n;
}

int eta(int mu, int nu) {
  if (mu != nu) return 0;
  return mu == 0 ? 1 : -1;
}

/// Adds s * role to a defect vector in storage coordinates.
void add_role(std::vector<double>& v, const CandidateAlgebra& c, std::size_t role, double s) {
  v[c.index_of(role)] += s;
}

double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

const std::string& role_name(std::size_t role) {
  if (role > kUnitRole) throw UsageError("role_name: role out of range");
  return names()[role];
}

std::size_t role_from_name(const std::string& name) {
  const auto& n = names();
  const auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end()) throw UsageError("unknown role '" + name + "'");
  return static_cast<std::size_t>(it - n.begin());
}

std::size_t role_R(int mu) { return static_cast<std::size_t>(mu); }
std::size_t role_Rt(int mu) { return static_cast<std::size_t>(mu) + 4; }

std::pair<std::size_t, int> role_M(int mu, int nu) {
  if (mu == nu) return {0, 0};
  const int lo = std::min(mu, nu), hi = std::max(mu, nu);
  for (std::size_t m = 0; m < 6; ++m)
    if (kPairs[m][0] == lo && kPairs[m][1] == hi) return {8 + m, mu < nu ? 1 : -1};
  throw UsageError("role_M: index out of range");
}

std::array<int, 2> lorentz_pair(std::size_t m) { return kPairs.at(m); }

int levi_civita4(int mu, int nu, int rho, int sigma) {
  std::array<int, 4> p{mu, nu, rho, sigma};
  int sign = 1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  return sign;
}

CandidateAlgebra::CandidateAlgebra(bool with_unit)
    : has_unit_(with_unit), dim_(kRoleCount + (with_unit ? 1 : 0)), c_(dim_ * dim_ * dim_, 0.0) {
  role_index_.resize(dim_);
  for (std::size_t r = 0; r < dim_; ++r) role_index_[r] = r;
  if (with_unit) {
    const std::size_t u = kUnitRole;
    for (std::size_t j = 0; j < dim_; ++j) {
      at(u, j, j) = 1.0;
      at(j, u, j) = 1.0;
    }
  }
}

CandidateAlgebra CandidateAlgebra::zero(bool with_unit) { return CandidateAlgebra(with_unit); }

CandidateAlgebra CandidateAlgebra::so31(bool with_unit) {
  CandidateAlgebra c(with_unit);
  for (std::size_t A = 0; A < 6; ++A) {
    for (std::size_t B = 0; B < 6; ++B) {
      const int m = kPairs[A][0], n = kPairs[A][1], r = kPairs[B][0], s = kPairs[B][1];
      const std::array<std::array<int, 3>, 4> terms{{
          {eta(n, r), m, s}, {eta(m, s), n, r}, {-eta(m, r), n, s}, {-eta(n, s), m, r}}};
      for (const auto& [coef, a, b] : terms) {
        if (coef == 0) continue;
        const auto [k, sign] = role_M(a, b);
        if (sign == 0) continue;
        // The bracket is antisymmetric, so half of it goes into each ordered product.
        c.at(8 + A, 8 + B, k) += 0.5 * coef * sign;
      }
    }
  }
  return c;
}

std::vector<std::size_t> CandidateAlgebra::roles() const {
  std::vector<std::size_t> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) out[role_index_[r]] = r;
  return out;
}

CandidateAlgebra CandidateAlgebra::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != dim_) throw UsageError("permuted: permutation has wrong size");
  std::vector<bool> seen(dim_, false);
  for (std::size_t p : perm) {
    if (p >= dim_ || seen[p]) throw UsageError("permuted: not a permutation");
    seen[p] = true;
  }
  CandidateAlgebra out(*this);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) out.at(perm[i], perm[j], perm[k]) = at(i, j, k);
  for (std::size_t r = 0; r < dim_; ++r) out.role_index_[r] = perm[role_index_[r]];
  return out;
}

AlgebraPtr CandidateAlgebra::to_algebra(const std::string& name) const {
  // Basis order: storage order with the unit removed.
  std::vector<std::size_t> storage;
  for (std::size_t s = 0; s < dim_; ++s)
    if (s != unit_index()) storage.push_back(s);
  const std::vector<std::size_t> role_of = roles();
  std::vector<std::string> basis;
  for (std::size_t s : storage) basis.push_back(role_name(role_of[s]));

  AlgebraDef::Builder b(name, kRoleCount, has_unit_);
  b.basis_names(basis).scalar_tag("real");
  for (std::size_t i = 0; i < kRoleCount; ++i)
    for (std::size_t j = 0; j < kRoleCount; ++j) {
      for (std::size_t k = 0; k < kRoleCount; ++k) {
        const double v = at(storage[i], storage[j], storage[k]);
        if (v != 0.0) b.add(i, j, k, Scalar(Rational(v)));
      }
      if (has_unit_) {
        const double v = at(storage[i], storage[j], unit_index());
        if (v != 0.0) b.add_unit(i, j, Scalar(Rational(v)));
      }
    }
  return b.build();
}

CandidateAlgebra CandidateAlgebra::from_algebra(const AlgebraDef& alg, const std::vector<std::size_t>& roles) {
  if (alg.dim() != kRoleCount || roles.size() != kRoleCount)
    throw UsageError("candidate algebras have exactly " + std::to_string(kRoleCount) + " role elements");
  std::vector<bool> seen(kRoleCount, false);
  for (std::size_t r : roles) {
    if (r >= kRoleCount || seen[r]) throw UsageError("candidate roles must name each role exactly once");
    seen[r] = true;
  }
  CandidateAlgebra c(alg.unital());
  for (std::size_t b = 0; b < kRoleCount; ++b) c.role_index_[roles[b]] = b;
  const auto real = [](const Scalar& s) {
    if (!s.is_real()) throw UsageError("candidate structure constants must be real");
    return s.re().get_d();
  };
  for (std::size_t i = 0; i < kRoleCount; ++i)
    for (std::size_t j = 0; j < kRoleCount; ++j) {
      for (std::size_t k = 0; k < kRoleCount; ++k) c.at(i, j, k) = real(alg.structure(i, j, k));
      const double u = real(alg.unit_coeff(i, j));
      if (c.has_unit_) {
        c.at(i, j, kUnitRole) = u;
      } else if (u != 0.0) {
        throw UsageError("non-unital candidate has a unit component");
      }
    }
  return c;
}

ResidualBreakdown residual(const CandidateAlgebra& c) {
  const std::size_t n = c.dim();
  ResidualBreakdown r;
  std::vector<double> v(n);

  const auto commutator = [&](std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < n; ++k) v[k] = c.at(a, b, k) - c.at(b, a, k);
  };

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      commutator(c.index_of(role_R(mu)), c.index_of(role_Rt(nu)));
      const auto [m, sign] = role_M(mu, nu);
      if (sign != 0) add_role(v, c, m, -2.0 * sign);
      r.r_comm += norm2(v);
    }

  for (std::size_t A = 0; A < 6; ++A)
    for (std::size_t B = 0; B < 6; ++B) {
      commutator(c.index_of(8 + A), c.index_of(8 + B));
      const int m = kPairs[A][0], nn = kPairs[A][1], rho = kPairs[B][0], s = kPairs[B][1];
      const std::array<std::array<int, 3>, 4> terms{{
          {eta(nn, rho), m, s}, {eta(m, s), nn, rho}, {-eta(m, rho), nn, s}, {-eta(nn, s), m, rho}}};
      for (const auto& [coef, a, b] : terms) {
        if (coef == 0) continue;
        const auto [k, sign] = role_M(a, b);
        if (sign != 0) add_role(v, c, k, -static_cast<double>(coef * sign));
      }
      r.r_lorentz += norm2(v);
    }

  for (int family = 0; family < 2; ++family) {
    const auto P = [&](int mu) { return c.index_of(family == 0 ? role_R(mu) : role_Rt(mu)); };
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        for (int rho = 0; rho < 4; ++rho) {
          const std::size_t a = P(mu), b = P(nu), d = P(rho);
          // (e_a e_b) e_d - e_a (e_b e_d)
          std::fill(v.begin(), v.end(), 0.0);
          for (std::size_t l = 0; l < n; ++l) {
            const double ab = c.at(a, b, l);
            const double bd = c.at(b, d, l);
            if (ab == 0.0 && bd == 0.0) continue;
            for (std::size_t k = 0; k < n; ++k) v[k] += ab * c.at(l, d, k) - bd * c.at(a, l, k);
          }
          for (int sg = 0; sg < 4; ++sg) {
            const int e = levi_civita4(mu, nu, rho, sg);
            if (e != 0) v[P(sg)] -= 2.0 * e * eta(sg, sg);
          }
          r.r_assoc += norm2(v);
        }
  }
  return r;
}

}  // namespace hiddenalg
