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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "hiddenalg/algebra_io.hpp"
#include "hiddenalg/corpus.hpp"
#include "hiddenalg/split_octonion.hpp"
#include "hiddenalg_cli/cli.hpp"

using namespace hiddenalg;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Lines with comments and surrounding whitespace removed, blanks dropped.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    line = line.substr(0, line.find('#'));
    line = std::regex_replace(line, std::regex("^\\s+|\\s+$"), "");
    line = std::regex_replace(line, std::regex("\\s+"), " ");
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

bool same_algebra(const AlgebraDef& a, const AlgebraDef& b) {
  if (a.dim() != b.dim() || a.unital() != b.unital()) return false;
  const auto pa = std::make_shared<const AlgebraDef>(a), pb = std::make_shared<const AlgebraDef>(b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Element x = Element::basis(pa, i) * Element::basis(pa, j);
      const Element y = Element::basis(pb, i) * Element::basis(pb, j);
      if (x.unit_part() != y.unit_part()) return false;
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (x[k] != y[k]) return false;
    }
  return true;
}

std::size_t expected_line(const std::string& text) {
  std::smatch m;
  if (!std::regex_search(text, m, std::regex("# expect line (\\d+)"))) return 0;
  return std::stoul(m[1]);
}

}  // namespace

TEST(AlgebraIo, FixturesRoundTrip) {
  for (const char* name : {"splitO", "quaternion", "su2", "complex", "so31"}) {
    SCOPED_TRACE(name);
    const std::string text = slurp(fs::path(HIDDENALG_FIXTURE_DIR) / (std::string(name) + ".alg"));
    const AlgebraFile f = parse_algebra_file(text);
    const std::string again = serialize(*f.algebra, f.roles);
    EXPECT_EQ(content_lines(again), content_lines(text));
    EXPECT_TRUE(same_algebra(*parse_algebra(again), *f.algebra));
  }
}

TEST(AlgebraIo, CorpusRoundTrip) {
  for (const AlgebraPtr& a : myung_corpus()) {
    SCOPED_TRACE(a->name());
    const std::string text = serialize(*a);
    EXPECT_TRUE(same_algebra(*parse_algebra(text), *a));
    EXPECT_EQ(serialize(*parse_algebra(text)), text);
  }
}

TEST(AlgebraIo, ComplexCoefficients) {
  const AlgebraPtr a = parse_algebra(
      "dimension 3\n"
      "e1 e2 -> 1/2*e1 - 3i*e2 + (1+2i)*e3\n"
      "e2 e2 -> -1/3+i\n"
      "e3 e3 -> 2i*e1 # trailing comment\n");
  const Element p = Element::basis(a, 0) * Element::basis(a, 1);
  EXPECT_EQ(p[0], Scalar::ratio(1, 2));
  EXPECT_EQ(p[1], Scalar(-3) * Scalar::i());
  EXPECT_EQ(p[2], Scalar(1) + Scalar(2) * Scalar::i());
  EXPECT_EQ((Element::basis(a, 1) * Element::basis(a, 1)).unit_part(), Scalar::ratio(-1, 3) + Scalar::i());
  EXPECT_EQ((Element::basis(a, 2) * Element::basis(a, 2))[0], Scalar(2) * Scalar::i());
  EXPECT_TRUE(same_algebra(*parse_algebra(serialize(*a)), *a));
}

TEST(AlgebraIo, FormatCoefficient) {
  EXPECT_EQ(format_coefficient(Scalar(3)), "3");
  EXPECT_EQ(format_coefficient(Scalar::ratio(-1, 2)), "-1/2");
  EXPECT_EQ(format_coefficient(Scalar(2) * Scalar::i()), "2i");
  EXPECT_EQ(format_coefficient(Scalar(1) - Scalar(2) * Scalar::i()), "(1-2i)");
}

TEST(AlgebraIo, RolesLine) {
  const AlgebraFile f = parse_algebra_file("dimension 2\nroles M01 R3\n");
  ASSERT_TRUE(f.roles);
  EXPECT_EQ(f.roles->at(0), 8u);
  EXPECT_EQ(f.roles->at(1), 3u);
}

TEST(AlgebraIo, ErrorsCarryLineNumbers) {
  try {
    parse_algebra("dimension 2\n\ne1 e3 -> e1\n");
    FAIL() << "accepted bad operand";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(std::string(e.what()).rfind("line 3: ", 0), 0u);
  }
  EXPECT_THROW(read_algebra_file("/nonexistent/file.alg"), std::runtime_error);
}

TEST(AlgebraIo, FuzzCorpusRejected) {
  std::size_t n = 0;
  for (const auto& entry : fs::directory_iterator(HIDDENALG_FUZZ_DIR)) {
    if (entry.path().extension() != ".alg") continue;
    ++n;
    SCOPED_TRACE(entry.path().filename().string());
    const std::string text = slurp(entry.path());
    const std::size_t want = expected_line(text);
    ASSERT_GT(want, 0u);
    try {
      parse_algebra_file(text);
      ADD_FAILURE() << "accepted";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), want) << e.what();
    }
    std::ostringstream out, err;
    const int code = cli::run({"check", entry.path().string(), "--properties", "flexible"}, out, err);
    EXPECT_EQ(code, 2);
    EXPECT_NE(err.str().find(":" + std::to_string(want) + ": "), std::string::npos) << err.str();
  }
  EXPECT_GE(n, 50u);
}
