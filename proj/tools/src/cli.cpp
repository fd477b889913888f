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

#include "hiddenalg_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>

#include "hiddenalg/algebra_io.hpp"
#include "hiddenalg/candidate.hpp"
#include "hiddenalg/properties.hpp"
#include "hiddenalg/search.hpp"
#include "hiddenalg/split_octonion.hpp"
#include "hiddenalg/verify_report.hpp"
#include "hiddenalg/zorn.hpp"

namespace hiddenalg::cli {

namespace {

/// Input problem reported as exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

AlgebraFile load(const std::string& path) {
  try {
    return read_algebra_file(path);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.message());
  } catch (const UsageError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

int cmd_check(const std::string& file, const std::vector<std::string>& names, int degree, std::ostream& out) {
  std::vector<Property> props;
  for (const auto& n : names) {
    const auto kind = parse_property_name(n);
    if (!kind) throw InputError("unknown property '" + n + "'");
    props.push_back(*kind == PropertyKind::power_associative ? Property::power_associative(degree) : Property{*kind});
  }
  if (degree < 1) throw InputError("--degree must be positive");
  const AlgebraFile f = load(file);
  bool all = true;
  for (const auto& p : props) {
    const PropertyReport r = check_property(f.algebra, p);
    out << r.summary() << "\n";
    all = all && r.holds;
  }
  return all ? kPass : kAlgebraicFail;
}

int cmd_table(const std::string& file, bool zorn, std::ostream& out) {
  const AlgebraFile f = load(file);
  const AlgebraPtr& alg = f.algebra;
  if (zorn) {
    if (!(*alg == *split_octonions())) throw InputError("--zorn needs the split-octonion table");
    out << "1 -> " << to_zorn(q(0)).to_string() << "\n";
    for (std::size_t k = 1; k <= 7; ++k) out << "q" << k << " -> " << to_zorn(q(k)).to_string() << "\n";
    return kPass;
  }
  const std::size_t n = alg->dim();
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
  for (std::size_t j = 0; j < n; ++j) cells[0][j + 1] = alg->basis_names()[j];
  for (std::size_t i = 0; i < n; ++i) {
    cells[i + 1][0] = alg->basis_names()[i];
    for (std::size_t j = 0; j < n; ++j)
      cells[i + 1][j + 1] = (Element::basis(alg, i) * Element::basis(alg, j)).to_string();
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c <= n; ++c) {
      line += row[c] + std::string(width[c] - row[c].size(), ' ');
      if (c < n) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return kPass;
}

int cmd_verify(const std::string& format, std::ostream& out) {
  const VerifyReport r = build_verify_report();
  out << (format == "lines" ? format_lines(r) : format_text(r));
  return r.ok() ? kPass : kAlgebraicFail;
}

void print_breakdown(const ResidualBreakdown& r, std::ostream& out) {
  out << "r_comm     " << real(r.r_comm) << "\n"
      << "r_lorentz  " << real(r.r_lorentz) << "\n"
      << "r_assoc    " << real(r.r_assoc) << "\n"
      << "total      " << real(r.total()) << "\n";
}

constexpr const char* kConventionNote =
    "# [M, M] is matched to the real Lorentz form: the factor i of the bracket is absorbed into M\n";

std::vector<std::size_t> basis_roles(const CandidateAlgebra& c) {
  std::vector<std::size_t> out;
  const auto roles = c.roles();
  for (std::size_t s = 0; s < c.dim(); ++s)
    if (s != c.unit_index()) out.push_back(roles[s]);
  return out;
}

struct SearchFlags {
  SearchConfig cfg;
  std::string out_file;
  std::string trace_file;
  std::string freeze = "none";
  std::string init = "random";
  bool serial = false;
};

int cmd_search(SearchFlags flags, std::ostream& out) {
  SearchConfig cfg = flags.cfg;
  try {
    cfg.freeze = parse_freeze(flags.freeze);
    cfg.init = parse_init_mode(flags.init);
    cfg.parallel = !flags.serial;
    cfg.validate();
  } catch (const UsageError& e) {
    throw InputError(e.what());
  }
  const SearchResult result = search(cfg);
  const RestartResult& best = result.best();
  out << kConventionNote;
  out << "restarts " << cfg.restarts << ", iterations " << cfg.max_iters << ", seed " << cfg.rng_seed << "\n";
  out << "best restart " << result.best_restart << "\n";
  print_breakdown(best.residual, out);
  out << "converged  " << (result.converged(cfg.tolerance) ? "true" : "false") << " (tolerance "
      << real(cfg.tolerance) << ")\n";

  if (!flags.out_file.empty()) {
    std::ofstream f(flags.out_file);
    if (!f) throw InputError("cannot write '" + flags.out_file + "'");
    f << serialize(*best.best.to_algebra("candidate"), basis_roles(best.best));
  }
  if (!flags.trace_file.empty()) {
    std::ofstream f(flags.trace_file);
    if (!f) throw InputError("cannot write '" + flags.trace_file + "'");
    for (std::size_t r = 0; r < result.restarts.size(); ++r) {
      f << r;
      for (double v : result.restarts[r].trace) f << " " << real(v);
      f << "\n";
    }
  }
  return kPass;
}

int cmd_residual(const std::string& file, std::ostream& out) {
  const AlgebraFile f = load(file);
  if (!f.roles) throw InputError(file + ": candidate files need a 'roles' line");
  CandidateAlgebra c = [&] {
    try {
      return CandidateAlgebra::from_algebra(*f.algebra, *f.roles);
    } catch (const UsageError& e) {
      throw InputError(file + ": " + e.what());
    }
  }();
  out << kConventionNote;
  print_breakdown(residual(c), out);
  return kPass;
}

int cmd_myung(const std::vector<std::string>& files, std::ostream& out) {
  std::vector<AlgebraPtr> corpus;
  for (const auto& file : files) corpus.push_back(load(file).algebra);
  bool all = true;
  const auto tf = [](bool b) { return b ? "true" : "false"; };
  for (const auto& v : myung_equivalence(corpus)) {
    out << v.algebra->name() << ": derivation=" << tf(v.derivation) << " flexible=" << tf(v.flexible)
        << " lie-admissible=" << tf(v.lie_admissible) << " -> " << (v.equivalent() ? "consistent" : "VIOLATED")
        << "\n";
    all = all && v.equivalent();
  }
  return all ? kPass : kAlgebraicFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for nonassociative and supersymmetric decompositions", "hiddenalg"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> properties;
  int degree = 4;
  auto* check = app.add_subcommand("check", "Check algebraic properties of an algebra file");
  check->add_option("file", file, "Algebra file")->required();
  check->add_option("--properties,-p", properties,
                    "associative, alternative, flexible, lie-admissible, power-associative, jordan, unital, "
                    "derivation")
      ->required()
      ->delimiter(',');
  check->add_option("--degree", degree, "Degree for power-associative")->capture_default_str();

  bool zorn = false;
  auto* table = app.add_subcommand("table", "Print the multiplication table");
  table->add_option("file", file, "Algebra file")->required();
  table->add_flag("--zorn", zorn, "Print Zorn matrix images (split-octonion table only)");

  std::string format = "text";
  auto* verify = app.add_subcommand("verify-paper", "Run the full equation checklist");
  verify->add_option("--format", format, "text or lines")
      ->check(CLI::IsMember({"text", "lines"}))
      ->capture_default_str();

  SearchFlags sf;
  auto* srch = app.add_subcommand("search", "Local search for the algebra R");
  srch->add_option("--restarts", sf.cfg.restarts)->capture_default_str();
  srch->add_option("--iters", sf.cfg.max_iters)->capture_default_str();
  srch->add_option("--seed", sf.cfg.rng_seed)->capture_default_str();
  srch->add_option("--tol", sf.cfg.tolerance)->capture_default_str();
  srch->add_option("--step", sf.cfg.step_scale)->capture_default_str();
  srch->add_option("--out", sf.out_file, "Write the best candidate here");
  srch->add_option("--trace", sf.trace_file, "Write one residual trace line per restart here");
  srch->add_option("--freeze", sf.freeze, "none or M")->capture_default_str();
  srch->add_option("--init", sf.init, "zero, random or so31")->capture_default_str();
  srch->add_flag("--unit", sf.cfg.with_unit, "Adjoin a unit element");
  srch->add_flag("--serial", sf.serial, "Run restarts on one thread");

  auto* resid = app.add_subcommand("residual", "Residual breakdown of a candidate file");
  resid->add_option("file", file, "Candidate file with a roles line")->required();

  std::vector<std::string> files;
  auto* myung = app.add_subcommand("myung", "Derivation property versus flexible and Lie-admissible");
  myung->add_option("files", files, "Algebra files")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(file, properties, degree, out);
    if (*table) return cmd_table(file, zorn, out);
    if (*verify) return cmd_verify(format, out);
    if (*srch) return cmd_search(sf, out);
    if (*resid) return cmd_residual(file, out);
    if (*myung) return cmd_myung(files, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace hiddenalg::cli
