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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include "hiddenalg/algebra_io.hpp"
#include "hiddenalg/corpus.hpp"
#include "hiddenalg/properties.hpp"
#include "hiddenalg/search.hpp"
#include "hiddenalg/split_octonion.hpp"
#include "hiddenalg/susy.hpp"
#include "hiddenalg/verify_report.hpp"
#include "hiddenalg_cli/cli.hpp"
#include "oracles.hpp"

using namespace hiddenalg;
namespace fs = std::filesystem;

namespace {

// Time limits in seconds.
constexpr double kLimitTables = 1.0;
constexpr double kLimitZorn = 1.0;
constexpr double kLimitProfile = 1.0;
constexpr double kLimitMyung = 5.0;
constexpr double kLimitSusy = 5.0;
constexpr double kLimitPoincare = 10.0;
constexpr double kLimitSearch = 60.0;
// Lorentz residual of the embedded so(3,1) candidate.
constexpr double kLorentzTolerance = 1e-12;
constexpr int kSearchIterations = 10000;
constexpr std::size_t kMinFuzzFiles = 50;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) note = what;
    ok = false;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "took %.3f s, limit %.0f s", secs, limit);
    o.require(secs < limit, buf);
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", n, title.c_str(), secs, o.ok ? "" : ": ",
              o.note.c_str());
  std::fflush(stdout);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int eps3(int i, int j, int k) { return (i - j) * (j - k) * (k - i) / 2; }

std::string str(const Element& e) { return e.to_string(); }

// ---- criterion 5 oracle: generators applied to functions by definition ----

const Scalar kI = Scalar::i();

/// Pauli matrices written out, index [mu][a][b].
Scalar pauli(int mu, int a, int b) {
  static const long re[4][2][2] = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}, {{1, 0}, {0, -1}}};
  static const long im[4][2][2] = {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}, {{0, -1}, {1, 0}}, {{0, 0}, {0, 0}}};
  return Scalar(Rational(re[mu][a][b]), Rational(im[mu][a][b]));
}

oracle::Function add(oracle::Function a, const oracle::Function& b, const Scalar& s = Scalar(1)) {
  for (const auto& [k, v] : b) {
    a[k] += s * v;
    if (a[k].is_zero()) a.erase(k);
  }
  return a;
}

bool anticommutator_oracle(const Generators& g, Outcome& o) {
  const auto fs = oracle::test_functions(1);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const SuperOp& Q = g.Q[a];
      const SuperOp& Qb = g.Qbar[b];
      for (const auto& f : fs) {
        const auto lhs = add(oracle::act(Q, oracle::act(Qb, f)), oracle::act(Qb, oracle::act(Q, f)));
        oracle::Function rhs;
        for (int mu = 0; mu < 4; ++mu)
          rhs = add(rhs, oracle::act(SuperOp::d(mu), f), Scalar(2) * pauli(mu, a, b) * -kI);
        if (lhs != rhs) {
          o.require(false, "oracle {Q,Qbar} != 2 sigma P at a=" + std::to_string(a + 1) + " bdot=" + std::to_string(b + 1));
          return false;
        }
      }
    }
  return true;
}

}  // namespace

int main() {
  std::printf("hiddenalg acceptance\n");

  criterion(1, "table identities [q_i,q_j], [q_{i+3},q_{j+3}], associators (27 cases each)", kLimitTables, [](Outcome& o) {
    const IdentityCheck a = verify_quaternion_commutators(), b = verify_split_commutators(), c = verify_split_associators();
    o.require(a.cases == 27 && a.holds(), "quaternion commutators: " + a.first_failure);
    o.require(b.cases == 27 && b.holds(), "split commutators: " + b.first_failure);
    o.require(c.cases == 27 && c.holds(), "split associators: " + c.first_failure);
    // Direct recomputation from the table.
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        Element q_expect = Element(split_octonions()), s_expect = Element(split_octonions()),
                a_expect = Element(split_octonions());
        for (int k = 1; k <= 3; ++k) {
          q_expect += Scalar(2 * eps3(i, j, k)) * q(k);
          s_expect += Scalar(-2 * eps3(i, j, k)) * q(k);
          a_expect += Scalar(2 * eps3(i, j, k)) * q(7);
          const Element assoc = associator(q(i + 3), q(j + 3), q(k + 3));
          o.require(assoc == Scalar(2 * eps3(i, j, k)) * q(7), "associator " + str(assoc));
        }
        o.require(commutator(q(i), q(j)) == q_expect, "[q_i,q_j]");
        o.require(commutator(q(i + 3), q(j + 3)) == s_expect, "[q_{i+3},q_{j+3}]");
      }
  });

  criterion(2, "Zorn isomorphism on all 64 basis pairs", kLimitZorn, [](Outcome& o) {
    const ZornIsomorphismReport r = verify_zorn_isomorphism();
    std::size_t agree = 0;
    for (std::size_t u = 0; u <= 7; ++u)
      for (std::size_t v = 0; v <= 7; ++v)
        if (to_zorn(q(u) * q(v)) == zorn_multiply(to_zorn(q(u)), to_zorn(q(v)))) ++agree;
    o.require(r.pairs_checked == 64, "pairs checked");
    o.require(agree == 64 - r.mismatches.size(), "report disagrees with recomputation");
    o.require(agree == 64, std::to_string(agree) + "/64 pairs agree");
  });

  criterion(3, "split-octonion property profile", kLimitProfile, [](Outcome& o) {
    const AlgebraPtr& so = split_octonions();
    const auto holds = [&](Property p) { return check_property(so, p).holds; };
    o.require(!holds({PropertyKind::associative}), "associative should be false");
    o.require(holds({PropertyKind::flexible}), "flexible should be true");
    o.require(holds(Property::power_associative(4)), "power-associative(4) should be true");
    o.require(!holds({PropertyKind::lie_admissible}), "lie-admissible should be false");
    const Element jac = jacobiator(q(4), q(5), q(6));
    o.require(jac == Scalar(12) * q(7), "jacobiator(q4,q5,q6) = " + str(jac));
    const std::size_t quat[] = {0, 1, 2};
    o.require(check_property(subalgebra(so, quat, "quaternion"), {PropertyKind::associative}).holds,
              "quaternion subalgebra should be associative");
    const PropertyReport alt = check_property(so, {PropertyKind::alternative});
    o.require(alt.holds, "alternative should be true; " + alt.summary());
  });

  criterion(4, "Myung: derivation <=> flexible and Lie-admissible on the corpus", kLimitMyung, [](Outcome& o) {
    const auto corpus = myung_corpus();
    o.require(corpus.size() >= 5, "corpus too small");
    for (const MyungVerdict& v : myung_equivalence(corpus)) o.require(v.equivalent(), v.algebra->name());
  });

  criterion(5, "SUSY anticommutators, c1 = 2 and c2 = 4", kLimitSusy, [](Outcome& o) {
    for (SigmaConvention conv : {SigmaConvention::standard, SigmaConvention::paper}) {
      const SusyReport r = verify_susy(conv);
      o.require(r.qq.cases == 4 && r.qq.holds(), "{Q,Q} " + convention_name(conv));
      o.require(r.qbqb.cases == 4 && r.qbqb.holds(), "{Qbar,Qbar} " + convention_name(conv));
    }
    const SusyReport s = verify_susy(SigmaConvention::standard);
    o.require(s.c1 && *s.c1 == Scalar(2), "c1 != 2");
    o.require(s.c2 && *s.c2 == Scalar(4), "c2 != 4");
    o.require(s.spatial_inversion.holds(), "inversion: " + s.spatial_inversion.first_failure);
    anticommutator_oracle(build_generators(SigmaConvention::standard), o);
  });

  criterion(6, "Poincare algebra of the orbital generators", kLimitPoincare, [](Outcome& o) {
    const PoincareReport r = verify_poincare(MomentumSign::plus_i);
    o.require(r.pp.cases == 16 && r.pp.holds(), "[P,P]: " + r.pp.first_failure);
    o.require(r.mp.cases == 96 && r.mp.holds(), "[M,P]: " + r.mp.first_failure);
    o.require(r.mm.cases == 256 && r.mm.holds(), "[M,M]: " + r.mm.first_failure);
  });

  criterion(7, "spinor epsilon identities", 0, [](Outcome& o) {
    const EpsilonReport r = verify_epsilon();
    o.require(r.inverse.holds(), "eps^{ab} eps_{bc}");
    o.require(r.dotted_equal.holds(), "eps^{ab} = eps^{adot bdot}");
    o.require(r.lower_equal.holds(), "eps_{ab} = eps_{adot bdot}");
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c) {
        Scalar s;
        for (int b = 0; b < 2; ++b) s += EpsilonSpinor::upper()(a, b) * EpsilonSpinor::lower()(b, c);
        o.require(s == Scalar(a == c ? 1 : 0), "delta recomputation");
      }
  });

  criterion(8, "verify-paper RECORDED entries and golden lines output", 0, [](Outcome& o) {
    const VerifyReport r = build_verify_report();
    const auto recorded = [&](const std::string& id, const std::string& needle) {
      const ReportEntry* e = r.find(id);
      o.require(e && e->status == Status::recorded && e->detail.find(needle) != std::string::npos, id);
    };
    recorded("Eq. 1-10", "computed = 0");
    recorded("Eq. 1-20", "computed = 0");
    recorded("Eq. 3-30", "lambda = 1");
    recorded("c2", "1/4 (paper sigma");
    std::ostringstream out, err;
    const int code = cli::run({"verify-paper", "--format", "lines"}, out, err);
    o.require(code == (r.ok() ? 0 : 1), "exit code");
    o.require(out.str() == slurp(fs::path(HIDDENALG_GOLDEN_DIR) / "verify_paper.lines"), "golden mismatch");
  });

  criterion(9, "search: so(3,1) residual, monotone deterministic traces, 10000 iterations", kLimitSearch, [](Outcome& o) {
    const CandidateAlgebra so31 = CandidateAlgebra::so31(false);
    const double rl = residual(so31).r_lorentz;
    o.require(rl <= kLorentzTolerance, "r_lorentz = " + std::to_string(rl));
    o.require(oracle::brute_force_residual(so31).r_lorentz <= kLorentzTolerance, "oracle r_lorentz");
    SearchConfig cfg;
    cfg.restarts = 1;
    cfg.max_iters = kSearchIterations;
    cfg.rng_seed = 1;
    const SearchResult a = search(cfg), b = search(cfg);
    o.require(a.best().trace == b.best().trace, "not seed-deterministic");
    const auto& t = a.best().trace;
    o.require(t.size() == kSearchIterations + 1, "trace length");
    for (std::size_t i = 1; i < t.size(); ++i) o.require(t[i] <= t[i - 1], "trace increases at " + std::to_string(i));
  });

  criterion(10, "parser round trip and malformed-input corpus", 0, [](Outcome& o) {
    std::size_t fixtures = 0;
    for (const auto& entry : fs::directory_iterator(HIDDENALG_FIXTURE_DIR)) {
      if (entry.path().extension() != ".alg") continue;
      ++fixtures;
      const AlgebraFile f = read_algebra_file(entry.path().string());
      const std::string once = serialize(*f.algebra, f.roles);
      const AlgebraFile g = parse_algebra_file(once);
      o.require(*g.algebra == *f.algebra && g.roles == f.roles && serialize(*g.algebra, g.roles) == once,
                entry.path().filename().string());
    }
    o.require(fixtures >= 5, "fixtures missing");
    std::size_t rejected = 0, total = 0;
    for (const auto& entry : fs::directory_iterator(HIDDENALG_FUZZ_DIR)) {
      if (entry.path().extension() != ".alg") continue;
      ++total;
      std::smatch m;
      const std::string text = slurp(entry.path());
      if (!std::regex_search(text, m, std::regex("# expect line (\\d+)"))) continue;
      std::ostringstream out, err;
      const int code = cli::run({"check", entry.path().string(), "--properties", "flexible"}, out, err);
      if (code == 2 && err.str().find(":" + m[1].str() + ": ") != std::string::npos) ++rejected;
      else o.require(false, entry.path().filename().string() + ": " + err.str());
    }
    o.require(total >= kMinFuzzFiles, "only " + std::to_string(total) + " malformed files");
    o.require(rejected == total, std::to_string(rejected) + "/" + std::to_string(total) + " rejected");
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
