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

#include "hiddenalg/susy.hpp"

namespace hiddenalg {

namespace {

std::string idx(std::initializer_list<int> values) {
  std::string out = "(";
  bool first = true;
  for (int v : values) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + ")";
}

std::string expect(const SuperOp& lhs, const SuperOp& rhs) {
  return "lhs " + lhs.to_string() + ", expected " + rhs.to_string();
}

Scalar momentum_factor(MomentumSign sign) {
  return sign == MomentumSign::minus_i ? -Scalar::i() : Scalar::i();
}

std::size_t u(int v) { return static_cast<std::size_t>(v); }

}  // namespace

std::string convention_name(SigmaConvention conv) {
  return conv == SigmaConvention::paper ? "paper" : "standard";
}

std::string momentum_name(MomentumSign sign) {
  return sign == MomentumSign::minus_i ? "P=-i*d" : "P=+i*d";
}

int metric(int mu, int nu) {
  if (mu != nu) return 0;
  return mu == 0 ? 1 : -1;
}

SigmaMatrices SigmaMatrices::make(SigmaConvention conv) {
  const Scalar scale = conv == SigmaConvention::paper ? Scalar::ratio(1, 4) : Scalar(1);
  SigmaMatrices s{conv, {}, {}};
  for (int mu = 0; mu < 4; ++mu) {
    s.sigma[u(mu)] = scale * Matrix2::pauli(mu);
    s.sigmabar[u(mu)] = Scalar(metric(mu, mu)) * s.sigma[u(mu)];
  }
  return s;
}

Matrix2 SigmaMatrices::sigma_lowered_raised(int mu) const {
  const Matrix2 raised = EpsilonSpinor::upper() * sigma[u(mu)] * EpsilonSpinor::upper_dotted().transpose();
  return Scalar(metric(mu, mu)) * raised;
}

Matrix2 EpsilonSpinor::upper() {
  Matrix2 e;
  e(0, 1) = Scalar(-1);
  e(1, 0) = Scalar(1);
  return e;
}

Matrix2 EpsilonSpinor::lower_dotted() {
  Matrix2 e;
  e(0, 1) = Scalar(1);
  e(1, 0) = Scalar(-1);
  return e;
}

Matrix2 EpsilonSpinor::upper_dotted() { return lower_dotted().inverse(); }

Matrix2 EpsilonSpinor::lower() { return upper().inverse(); }

std::array<Scalar, 2> raise_lower(const std::array<Scalar, 2>& psi, SpinorIndexMode mode) {
  Matrix2 e;
  switch (mode) {
    case SpinorIndexMode::raise_undotted: e = EpsilonSpinor::upper(); break;
    case SpinorIndexMode::lower_dotted: e = EpsilonSpinor::lower_dotted(); break;
    case SpinorIndexMode::raise_dotted: e = EpsilonSpinor::upper_dotted(); break;
    case SpinorIndexMode::lower_undotted: e = EpsilonSpinor::lower(); break;
  }
  return {e(0, 0) * psi[0] + e(0, 1) * psi[1], e(1, 0) * psi[0] + e(1, 1) * psi[1]};
}

Generators build_generators(SigmaConvention conv, MomentumSign sign) {
  const SigmaMatrices s = SigmaMatrices::make(conv);
  const Scalar p = momentum_factor(sign);
  Generators g{conv, sign, {}, {}, {}, {}, {}, {}};
  for (int mu = 0; mu < 4; ++mu) {
    g.P_lower[u(mu)] = p * SuperOp::d(mu);
    g.P_upper[u(mu)] = Scalar(metric(mu, mu)) * g.P_lower[u(mu)];
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      g.M[u(mu)][u(nu)] = SuperOp::x(mu) * g.P_upper[u(nu)] - SuperOp::x(nu) * g.P_upper[u(mu)];

  const Scalar i = Scalar::i();
  for (int a = 1; a <= 2; ++a) {
    SuperOp q = -i * SuperOp::dtheta(a);
    SuperOp qbar = i * SuperOp::dthetabar(a);
    for (int mu = 0; mu < 4; ++mu) {
      for (int b = 1; b <= 2; ++b) {
        // Q_a picks sigma^mu_{a b}, Qbar_a picks sigma^mu_{b a}.
        const Scalar& sq = s.sigma[u(mu)](u(a - 1), u(b - 1));
        const Scalar& sqbar = s.sigma[u(mu)](u(b - 1), u(a - 1));
        if (!sq.is_zero()) q -= sq * (SuperOp::thetabar(b) * SuperOp::d(mu));
        if (!sqbar.is_zero()) qbar += sqbar * (SuperOp::theta(b) * SuperOp::d(mu));
      }
    }
    g.Q[u(a - 1)] = std::move(q);
    g.Qbar[u(a - 1)] = std::move(qbar);
  }
  const Matrix2 eps = EpsilonSpinor::upper_dotted();
  for (std::size_t a = 0; a < 2; ++a)
    g.Qbar_upper[a] = eps(a, 0) * g.Qbar[0] + eps(a, 1) * g.Qbar[1];
  return g;
}

std::optional<Scalar> proportionality(const SuperOp& value, const SuperOp& target) {
  if (target.is_zero()) return std::nullopt;
  const auto& [m, t] = *target.terms().begin();
  const Scalar s = value.coefficient(m) / t;
  if (value != s * target) return std::nullopt;
  return s;
}

PoincareReport verify_poincare(MomentumSign sign) {
  const Generators g = build_generators(SigmaConvention::standard, sign);
  PoincareReport r{sign,
                   {"[P^mu, P^nu] = 0"},
                   {"[M^{mu nu}, P^l] = i(eta^{nu l} P^mu - eta^{mu l} P^nu)"},
                   {"[M^{mu nu}, M^{rho sigma}] = i(eta^{nu rho} M^{mu sigma} + ...)"}};
  const Scalar i = Scalar::i();
  const auto& P = g.P_upper;
  const auto& M = g.M;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const SuperOp lhs = graded_bracket(P[u(mu)], P[u(nu)]);
      r.pp.record(lhs.is_zero(), idx({mu, nu}), expect(lhs, SuperOp()));
    }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      for (int l = 0; l < 4; ++l) {
        const SuperOp lhs = graded_bracket(M[u(mu)][u(nu)], P[u(l)]);
        const SuperOp rhs = i * (Scalar(metric(nu, l)) * P[u(mu)] - Scalar(metric(mu, l)) * P[u(nu)]);
        r.mp.record(lhs == rhs, idx({mu, nu, l}), expect(lhs, rhs));
        const SuperOp lhs_lower = graded_bracket(M[u(mu)][u(nu)], g.P_lower[u(l)]);
        const SuperOp rhs_lower = i * (Scalar(nu == l ? 1 : 0) * P[u(mu)] - Scalar(mu == l ? 1 : 0) * P[u(nu)]);
        r.mp.record(lhs_lower == rhs_lower, idx({mu, nu, l}) + " lowered", expect(lhs_lower, rhs_lower));
      }
    }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int sg = 0; sg < 4; ++sg) {
          const SuperOp lhs = graded_bracket(M[u(mu)][u(nu)], M[u(rho)][u(sg)]);
          const SuperOp rhs = i * (Scalar(metric(nu, rho)) * M[u(mu)][u(sg)] +
                                   Scalar(metric(mu, sg)) * M[u(nu)][u(rho)] -
                                   Scalar(metric(mu, rho)) * M[u(nu)][u(sg)] -
                                   Scalar(metric(nu, sg)) * M[u(mu)][u(rho)]);
          r.mm.record(lhs == rhs, idx({mu, nu, rho, sg}), expect(lhs, rhs));
        }
  return r;
}

bool SusyReport::p_q_zero() const {
  for (const auto& row : p_q)
    for (const auto& op : row)
      if (!op.is_zero()) return false;
  return true;
}

bool SusyReport::p_qbar_zero() const {
  for (const auto& row : p_qbar)
    for (const auto& op : row)
      if (!op.is_zero()) return false;
  return true;
}

SusyReport verify_susy(SigmaConvention conv, MomentumSign sign) {
  const Generators g = build_generators(conv, sign);
  const SigmaMatrices s = SigmaMatrices::make(conv);
  SusyReport r;
  r.sigma_convention = conv;
  r.momentum = sign;
  r.qq.label = "{Q_a, Q_b} = 0";
  r.qbqb.label = "{Qbar_adot, Qbar_bdot} = 0";
  r.spatial_inversion.label = "P_i = (1/4) sigma_i^{a adot} {Q_a, Qbar_adot}";
  r.nilpotency.label = "Q Q f = 0";

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const SuperOp qq = graded_bracket(g.Q[u(a)], g.Q[u(b)]);
      r.qq.record(qq.is_zero(), idx({a + 1, b + 1}), expect(qq, SuperOp()));
      const SuperOp qbqb = graded_bracket(g.Qbar[u(a)], g.Qbar[u(b)]);
      r.qbqb.record(qbqb.is_zero(), idx({a + 1, b + 1}), expect(qbqb, SuperOp()));
    }

  bool c1_consistent = true;
  bool plane_wave = true;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      r.q_qbar[a][b] = graded_bracket(g.Q[a], g.Qbar[b]);
      const SuperOp pw = graded_bracket_plane_wave(to_plane_wave(g.Q[a]), to_plane_wave(g.Qbar[b]));
      plane_wave = plane_wave && pw == to_plane_wave(r.q_qbar[a][b]);
      SuperOp target;
      for (std::size_t mu = 0; mu < 4; ++mu) target += s.sigma[mu](a, b) * g.P_lower[mu];
      const auto c = proportionality(r.q_qbar[a][b], target);
      if (!c || (r.c1 && *r.c1 != *c)) c1_consistent = false;
      if (c && !r.c1) r.c1 = c;
    }
  if (!c1_consistent) r.c1.reset();
  r.plane_wave_agrees = plane_wave;

  std::array<SuperOp, 4> contracted;
  bool c2_consistent = true;
  for (int mu = 0; mu < 4; ++mu) {
    const Matrix2 sr = s.sigma_lowered_raised(mu);
    SuperOp sum;
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        if (!sr(a, b).is_zero()) sum += sr(a, b) * r.q_qbar[a][b];
    contracted[u(mu)] = sum;
    r.c2_per_mu[u(mu)] = proportionality(sum, g.P_lower[u(mu)]);
    const auto& c = r.c2_per_mu[u(mu)];
    if (!c || (r.c2 && *r.c2 != *c)) c2_consistent = false;
    if (c && !r.c2) r.c2 = c;
  }
  if (!c2_consistent) r.c2.reset();
  for (int i = 1; i <= 3; ++i) {
    const SuperOp rhs = Scalar::ratio(1, 4) * contracted[u(i)];
    r.spatial_inversion.record(rhs == g.P_lower[u(i)], idx({i}), expect(g.P_lower[u(i)], rhs));
  }

  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t a = 0; a < 2; ++a) {
      r.p_q[mu][a] = graded_bracket(g.P_upper[mu], g.Q[a]);
      r.p_qbar[mu][a] = graded_bracket(g.P_upper[mu], g.Qbar_upper[a]);
    }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      for (int a = 0; a < 2; ++a) {
        const std::string where = "M^{" + std::to_string(mu) + std::to_string(nu) + "},a=" + std::to_string(a + 1) + ": ";
        const SuperOp mq = graded_bracket(g.M[u(mu)][u(nu)], g.Q[u(a)]);
        if (!mq.is_zero()) r.m_q.push_back(where + mq.to_string());
        const SuperOp mqb = graded_bracket(g.M[u(mu)][u(nu)], g.Qbar_upper[u(a)]);
        if (!mqb.is_zero()) r.m_qbar.push_back(where + mqb.to_string());
      }

  // Superspace functions: bosonic factor times every odd monomial.
  std::vector<SuperOp> bosonic{SuperOp::constant(Scalar(1)), SuperOp::x(0), SuperOp::x(1) * SuperOp::x(2),
                               SuperOp::x(3) * SuperOp::x(3) * SuperOp::x(0)};
  for (std::uint8_t bits = 0; bits < 16; ++bits) {
    Monomial m;
    m.coords = bits;
    const SuperOp odd = SuperOp::monomial(m, Scalar(1));
    for (std::size_t k = 0; k < bosonic.size(); ++k) {
      const SuperOp f = bosonic[k] * odd;
      for (int a = 0; a < 2; ++a) {
        const SuperOp qf = apply(g.Q[u(a)], apply(g.Q[u(a)], f));
        r.nilpotency.record(qf.is_zero(), "Q_" + std::to_string(a + 1) + " " + f.to_string(), qf.to_string());
        const SuperOp qbf = apply(g.Qbar[u(a)], apply(g.Qbar[u(a)], f));
        r.nilpotency.record(qbf.is_zero(), "Qbar_" + std::to_string(a + 1) + " " + f.to_string(), qbf.to_string());
      }
    }
  }
  return r;
}

IdentityCheck verify_grassmann() {
  IdentityCheck check{"{theta, theta} = {thetabar, thetabar} = {theta, thetabar} = 0"};
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) {
      const SuperOp b = graded_bracket(SuperOp::odd_coord(static_cast<OddIndex>(k)),
                                       SuperOp::odd_coord(static_cast<OddIndex>(l)));
      check.record(b.is_zero(), idx({k, l}), expect(b, SuperOp()));
    }
  return check;
}

EpsilonReport verify_epsilon() {
  EpsilonReport r{{"eps^{ab} = i sigma^2"},
                  {"eps_{adot bdot} = -i sigma^2"},
                  {"eps^{ab} = eps^{adot bdot}"},
                  {"eps_{ab} = eps_{adot bdot}"},
                  {"eps^{ab} eps_{bc} = delta^a_c"}};
  const Matrix2 isigma2 = Scalar::i() * Matrix2::pauli(2);
  const auto mat = [](const Matrix2& lhs, const Matrix2& rhs) {
    return "lhs " + lhs.to_string() + ", rhs " + rhs.to_string();
  };
  r.upper_matrix.record(EpsilonSpinor::upper() == isigma2, "matrix", mat(EpsilonSpinor::upper(), isigma2));
  const Matrix2 minus = Scalar(-1) * isigma2;
  r.lower_dotted_matrix.record(EpsilonSpinor::lower_dotted() == minus, "matrix",
                               mat(EpsilonSpinor::lower_dotted(), minus));
  r.dotted_equal.record(EpsilonSpinor::upper() == EpsilonSpinor::upper_dotted(), "matrix",
                        mat(EpsilonSpinor::upper(), EpsilonSpinor::upper_dotted()));
  r.lower_equal.record(EpsilonSpinor::lower() == EpsilonSpinor::lower_dotted(), "matrix",
                       mat(EpsilonSpinor::lower(), EpsilonSpinor::lower_dotted()));
  const Matrix2 prod = EpsilonSpinor::upper() * EpsilonSpinor::lower_dotted();
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 2; ++c) {
      const Scalar want = a == c ? Scalar(1) : Scalar();
      r.inverse.record(prod(a, c) == want, idx({static_cast<int>(a) + 1, static_cast<int>(c) + 1}),
                       prod(a, c).to_string());
    }
  return r;
}

}  // namespace hiddenalg
