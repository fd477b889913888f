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

#include "hiddenalg/superop.hpp"

#include <bit>
#include <vector>

namespace hiddenalg {

namespace {

constexpr std::array<const char*, 4> kOddNames{"th1", "th2", "thb1", "thb2"};

int count_above(std::uint8_t bits, int k) {
  return std::popcount(static_cast<unsigned>(bits >> (k + 1)));
}

int sign_of(int n) { return (n & 1) ? -1 : 1; }

struct OddTerm {
  std::uint8_t coords;
  std::uint8_t derivs;
  int sign;
};

/// (theta^c d^d) * theta_k, normal ordered.
void times_coord(const OddTerm& t, int k, std::vector<OddTerm>& out) {
  const std::uint8_t bit = static_cast<std::uint8_t>(1u << k);
  // Move theta_k left through all derivatives: d^T theta_k =
  //   (-1)^{|T|} theta_k d^T + [k in T] (-1)^{#(T > k)} d^{T \ k}.
  if (!(t.coords & bit)) {
    const int s = sign_of(std::popcount(static_cast<unsigned>(t.derivs))) * sign_of(count_above(t.coords, k));
    out.push_back({static_cast<std::uint8_t>(t.coords | bit), t.derivs, t.sign * s});
  }
  if (t.derivs & bit) {
    out.push_back({t.coords, static_cast<std::uint8_t>(t.derivs & ~bit), t.sign * sign_of(count_above(t.derivs, k))});
  }
}

/// (theta^c d^d) * d_k, normal ordered.
void times_deriv(const OddTerm& t, int k, std::vector<OddTerm>& out) {
  const std::uint8_t bit = static_cast<std::uint8_t>(1u << k);
  if (t.derivs & bit) return;
  out.push_back({t.coords, static_cast<std::uint8_t>(t.derivs | bit), t.sign * sign_of(count_above(t.derivs, k))});
}

std::vector<OddTerm> odd_product(const Monomial& a, const Monomial& b) {
  std::vector<OddTerm> cur{{a.coords, a.derivs, 1}};
  std::vector<OddTerm> next;
  auto step = [&](auto&& fn, int k) {
    next.clear();
    for (const OddTerm& t : cur) fn(t, k, next);
    cur.swap(next);
  };
  for (int k = 0; k < 4; ++k) {
    if (b.coords & (1u << k)) step(times_coord, k);
  }
  for (int k = 0; k < 4; ++k) {
    if (b.derivs & (1u << k)) step(times_deriv, k);
  }
  return cur;
}

struct EvenTerm {
  std::array<std::uint8_t, 4> x;
  std::array<std::uint8_t, 4> d;
  long coeff;
};

long falling(long n, long k) {
  long r = 1;
  for (long j = 0; j < k; ++j) r *= n - j;
  return r;
}

long binomial(long n, long k) {
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

std::uint8_t narrow(int v) {
  if (v > 255) throw UsageError("SuperOp: exponent overflow");
  return static_cast<std::uint8_t>(v);
}

/// (x^a d^b)(x^c d^e) in the Weyl algebra, one variable at a time:
///   d^b x^c = sum_k C(b, k) c!/(c-k)! x^{c-k} d^{b-k}.
std::vector<EvenTerm> even_product(const Monomial& l, const Monomial& r, bool commuting) {
  std::vector<EvenTerm> cur{{{}, {}, 1}};
  std::vector<EvenTerm> next;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    next.clear();
    const int b = l.d[mu], c = r.x[mu];
    const int kmax = commuting ? 0 : std::min(b, c);
    for (const EvenTerm& t : cur) {
      for (int k = 0; k <= kmax; ++k) {
        EvenTerm n = t;
        n.x[mu] = narrow(l.x[mu] + c - k);
        n.d[mu] = narrow(b + r.d[mu] - k);
        n.coeff *= binomial(b, k) * falling(c, k);
        next.push_back(n);
      }
    }
    cur.swap(next);
  }
  return cur;
}

SuperOp compose_impl(const SuperOp& a, const SuperOp& b, bool commuting) {
  SuperOp out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const auto odd = odd_product(ma, mb);
      if (odd.empty()) continue;
      const auto even = even_product(ma, mb, commuting);
      const Scalar c = ca * cb;
      for (const EvenTerm& e : even) {
        for (const OddTerm& o : odd) {
          Monomial m;
          m.x = e.x;
          m.d = e.d;
          m.coords = o.coords;
          m.derivs = o.derivs;
          out += SuperOp::monomial(m, c * Scalar(e.coeff * o.sign));
        }
      }
    }
  }
  return out;
}

SuperOp bracket_impl(const SuperOp& a, const SuperOp& b, bool commuting) {
  const auto pa = a.parity();
  const auto pb = b.parity();
  if (!pa || !pb) throw UsageError("graded_bracket: operand has mixed parity");
  const Scalar sign((*pa & *pb) ? -1 : 1);
  return compose_impl(a, b, commuting) - sign * compose_impl(b, a, commuting);
}

void check_index(int v, int lo, int hi, const char* what) {
  if (v < lo || v > hi) throw UsageError(std::string("SuperOp: bad index for ") + what);
}

}  // namespace

int Monomial::parity() const {
  return (std::popcount(static_cast<unsigned>(coords)) + std::popcount(static_cast<unsigned>(derivs))) & 1;
}

bool Monomial::has_derivatives() const {
  if (derivs != 0) return true;
  for (auto e : d) {
    if (e != 0) return true;
  }
  return false;
}

SuperOp SuperOp::monomial(const Monomial& m, const Scalar& c) {
  SuperOp op;
  op.add_term(m, c);
  return op;
}

SuperOp SuperOp::constant(const Scalar& c) { return monomial(Monomial{}, c); }

SuperOp SuperOp::x(int mu) {
  check_index(mu, 0, 3, "x");
  Monomial m;
  m.x[static_cast<std::size_t>(mu)] = 1;
  return monomial(m, Scalar(1));
}

SuperOp SuperOp::d(int mu) {
  check_index(mu, 0, 3, "d");
  Monomial m;
  m.d[static_cast<std::size_t>(mu)] = 1;
  return monomial(m, Scalar(1));
}

SuperOp SuperOp::odd_coord(OddIndex k) {
  Monomial m;
  m.coords = static_cast<std::uint8_t>(1u << static_cast<int>(k));
  return monomial(m, Scalar(1));
}

SuperOp SuperOp::odd_deriv(OddIndex k) {
  Monomial m;
  m.derivs = static_cast<std::uint8_t>(1u << static_cast<int>(k));
  return monomial(m, Scalar(1));
}

SuperOp SuperOp::theta(int a) {
  check_index(a, 1, 2, "theta");
  return odd_coord(static_cast<OddIndex>(a - 1));
}

SuperOp SuperOp::thetabar(int a) {
  check_index(a, 1, 2, "thetabar");
  return odd_coord(static_cast<OddIndex>(a + 1));
}

SuperOp SuperOp::dtheta(int a) {
  check_index(a, 1, 2, "dtheta");
  return odd_deriv(static_cast<OddIndex>(a - 1));
}

SuperOp SuperOp::dthetabar(int a) {
  check_index(a, 1, 2, "dthetabar");
  return odd_deriv(static_cast<OddIndex>(a + 1));
}

void SuperOp::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar SuperOp::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<int> SuperOp::parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : terms_) {
    const int q = m.parity();
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(0);
}

SuperOp& SuperOp::operator+=(const SuperOp& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperOp& SuperOp::operator-=(const SuperOp& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperOp& SuperOp::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

SuperOp operator*(const SuperOp& a, const SuperOp& b) { return compose(a, b); }

std::string SuperOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string factors;
    auto add = [&factors](const std::string& f) {
      if (!factors.empty()) factors += "*";
      factors += f;
    };
    for (std::size_t mu = 0; mu < 4; ++mu) {
      if (m.x[mu] == 0) continue;
      add("x" + std::to_string(mu) + (m.x[mu] > 1 ? "^" + std::to_string(m.x[mu]) : ""));
    }
    for (int k = 0; k < 4; ++k) {
      if (m.coords & (1u << k)) add(kOddNames[static_cast<std::size_t>(k)]);
    }
    for (std::size_t mu = 0; mu < 4; ++mu) {
      if (m.d[mu] == 0) continue;
      add("d" + std::to_string(mu) + (m.d[mu] > 1 ? "^" + std::to_string(m.d[mu]) : ""));
    }
    for (int k = 0; k < 4; ++k) {
      if (m.derivs & (1u << k)) add(std::string("d") + kOddNames[static_cast<std::size_t>(k)]);
    }
    const bool negative = (c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    const Scalar mag = negative ? -c : c;
    std::string coef = mag.to_string();
    if (!mag.is_real() && sgn(mag.re()) != 0) coef = "(" + coef + ")";
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (factors.empty()) {
      out += coef;
    } else if (coef == "1") {
      out += factors;
    } else {
      out += coef + "*" + factors;
    }
  }
  return out;
}

SuperOp compose(const SuperOp& a, const SuperOp& b) { return compose_impl(a, b, false); }

SuperOp graded_bracket(const SuperOp& a, const SuperOp& b) { return bracket_impl(a, b, false); }

SuperOp apply(const SuperOp& op, const SuperOp& f) {
  for (const auto& [m, c] : f.terms()) {
    if (m.has_derivatives()) throw UsageError("apply: argument is not a superspace function");
  }
  const SuperOp full = compose(op, f);
  SuperOp out;
  for (const auto& [m, c] : full.terms()) {
    if (!m.has_derivatives()) out += SuperOp::monomial(m, c);
  }
  return out;
}

SuperOp to_plane_wave(const SuperOp& op) {
  SuperOp out;
  for (const auto& [m, c] : op.terms()) {
    int power = 0;
    for (std::size_t mu = 0; mu < 4; ++mu) {
      if (m.x[mu] != 0) throw UsageError("to_plane_wave: operator depends on x");
      power += m.d[mu];
    }
    Scalar f(1);
    for (int k = 0; k < power; ++k) f *= Scalar::i();
    out += SuperOp::monomial(m, c * f);
  }
  return out;
}

SuperOp compose_plane_wave(const SuperOp& a, const SuperOp& b) { return compose_impl(a, b, true); }

SuperOp graded_bracket_plane_wave(const SuperOp& a, const SuperOp& b) { return bracket_impl(a, b, true); }

}  // namespace hiddenalg
