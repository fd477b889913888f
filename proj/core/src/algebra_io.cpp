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

#include "hiddenalg/algebra_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "hiddenalg/candidate.hpp"

namespace hiddenalg {

namespace {

constexpr std::size_t kMaxDimension = 64;

bool is_ident(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.') return false;
  }
  return true;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Right-hand side of a product line.
class ExprScanner {
public:
  ExprScanner(std::string_view s, std::size_t line, std::size_t dim) : s_(s), line_(line), dim_(dim) {}

  BasisProduct parse() {
    BasisProduct out{std::vector<Scalar>(dim_), Scalar()};
    std::vector<bool> seen(dim_, false);
    bool seen_const = false;
    skip_ws();
    if (at_end()) fail("empty product expression");
    bool first = true;
    while (!at_end()) {
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++p_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' before term at column " + col());
      }
      first = false;
      if (at_end()) fail("dangling sign at end of expression");

      Scalar value(sign);
      bool has_coef = false;
      if (peek() != 'e') {
        value = parse_coef(sign);
        has_coef = true;
        skip_ws();
      }
      std::optional<std::size_t> basis;
      if (has_coef && !at_end() && peek() == '*') {
        ++p_;
        skip_ws();
        if (at_end() || peek() != 'e') fail("expected e<k> after '*'");
        basis = parse_basis();
      } else if (!has_coef) {
        basis = parse_basis();
      } else if (!at_end() && peek() != '+' && peek() != '-') {
        fail("unexpected '" + std::string(1, peek()) + "' at column " + col());
      }
      skip_ws();

      if (basis) {
        if (seen[*basis]) fail("repeated term e" + std::to_string(*basis + 1));
        seen[*basis] = true;
        out.coeffs[*basis] = value;
      } else {
        if (seen_const) fail("repeated constant term");
        seen_const = true;
        out.unit = value;
      }
    }
    return out;
  }

private:
  bool at_end() const { return p_ >= s_.size(); }
  char peek() const { return s_[p_]; }
  std::string col() const { return std::to_string(p_ + 1); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++p_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

  bool digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

  Rational parse_rat() {
    const std::size_t start = p_;
    while (digit()) ++p_;
    if (p_ == start) fail("expected a number at column " + std::to_string(start + 1));
    std::string text(s_.substr(start, p_ - start));
    if (!at_end() && peek() == '/') {
      ++p_;
      const std::size_t dstart = p_;
      while (digit()) ++p_;
      if (p_ == dstart) fail("expected a denominator at column " + std::to_string(dstart + 1));
      const std::string den(s_.substr(dstart, p_ - dstart));
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      text += "/" + den;
    }
    Rational r(text, 10);
    r.canonicalize();
    return r;
  }

  /// `[rat] i` starting at p_ (no sign); nullopt and p_ unchanged when absent.
  std::optional<Rational> try_imaginary() {
    const std::size_t save = p_;
    Rational im(1);
    if (digit()) im = parse_rat();
    if (!at_end() && peek() == 'i') {
      ++p_;
      return im;
    }
    p_ = save;
    return std::nullopt;
  }

  /// Coefficient with the term's sign applied. In an unparenthesized a+bi the
  /// sign belongs to a only.
  Scalar parse_coef(const Rational& sign) {
    if (peek() == '(') {
      ++p_;
      skip_ws();
      Rational inner_sign(1);
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') inner_sign = -1;
        ++p_;
      }
      Scalar inner;
      if (auto im = try_imaginary()) {
        inner = Scalar(Rational(0), inner_sign * *im);
      } else {
        const Rational re = inner_sign * parse_rat();
        inner = Scalar(re);
        if (!at_end() && (peek() == '+' || peek() == '-')) {
          const Rational s2 = peek() == '-' ? -1 : 1;
          ++p_;
          auto im2 = try_imaginary();
          if (!im2) fail("expected imaginary part at column " + col());
          inner = Scalar(re, s2 * *im2);
        }
      }
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')' at column " + col());
      ++p_;
      return Scalar(sign) * inner;
    }
    if (auto im = try_imaginary()) return Scalar(Rational(0), sign * *im);
    if (!digit()) fail("unexpected '" + std::string(1, peek()) + "' at column " + col());
    const Rational re = parse_rat();
    // a+bi without spaces is one complex coefficient.
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      const std::size_t save = p_;
      const Rational s2 = peek() == '-' ? -1 : 1;
      ++p_;
      if (auto im = try_imaginary()) {
        if (at_end() || peek() == '*' || std::isspace(static_cast<unsigned char>(peek())) || peek() == '+' ||
            peek() == '-') {
          return Scalar(sign * re, s2 * *im);
        }
      }
      p_ = save;
    }
    if (!at_end() && peek() == 'e') fail("missing '*' between coefficient and basis element");
    return Scalar(sign * re);
  }

  std::size_t parse_basis() {
    ++p_;  // 'e'
    const std::size_t start = p_;
    while (digit()) ++p_;
    if (p_ == start) fail("expected basis index after 'e'");
    const std::string digits(s_.substr(start, p_ - start));
    if (digits.size() > 6) fail("basis index e" + digits + " out of range");
    const std::size_t k = std::stoul(digits);
    if (k == 0 || k > dim_) {
      fail("basis index e" + digits + " out of range 1.." + std::to_string(dim_));
    }
    if (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '/')) {
      fail("unexpected '" + std::string(1, peek()) + "' at column " + col());
    }
    return k - 1;
  }

  std::string_view s_;
  std::size_t p_ = 0;
  std::size_t line_;
  std::size_t dim_;
};

std::size_t parse_operand(const std::string& tok, std::size_t line, std::size_t dim) {
  if (tok.size() < 2 || tok[0] != 'e' || tok.find_first_not_of("0123456789", 1) != std::string::npos) {
    throw ParseError(line, "expected operand e<i>, got '" + tok + "'");
  }
  if (tok.size() > 7) throw ParseError(line, "basis index " + tok + " out of range");
  const std::size_t k = std::stoul(tok.substr(1));
  if (k == 0 || k > dim) {
    throw ParseError(line, "basis index " + tok + " out of range 1.." + std::to_string(dim));
  }
  return k - 1;
}

struct Header {
  std::optional<std::size_t> dimension;
  std::optional<bool> unital;
  std::optional<std::string> name;
  std::optional<std::string> scalar;
  std::optional<std::vector<std::string>> basis;
  std::optional<std::vector<std::size_t>> roles;
};

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line), message_(message) {}

AlgebraFile parse_algebra_file(std::string_view text) {
  Header h;
  struct ProductLine {
    std::size_t line, i, j;
    BasisProduct value;
  };
  std::vector<ProductLine> products;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    for (char c : line) {
      const auto uc = static_cast<unsigned char>(c);
      if (uc >= 0x80 || (std::iscntrl(uc) && c != '\t' && c != '\r')) {
        throw ParseError(line_no, "unexpected non-ASCII or control character");
      }
    }

    const auto arrow = line.find("->");
    if (arrow != std::string_view::npos) {
      if (!h.dimension) throw ParseError(line_no, "product line before 'dimension'");
      const auto lhs = split_ws(line.substr(0, arrow));
      if (lhs.size() != 2) throw ParseError(line_no, "expected 'e<i> e<j> -> <expr>'");
      const std::size_t i = parse_operand(lhs[0], line_no, *h.dimension);
      const std::size_t j = parse_operand(lhs[1], line_no, *h.dimension);
      if (!seen.insert({i, j}).second) throw ParseError(line_no, "duplicate product " + lhs[0] + " " + lhs[1]);
      ExprScanner scanner(line.substr(arrow + 2), line_no, *h.dimension);
      products.push_back({line_no, i, j, scanner.parse()});
      continue;
    }

    auto tokens = split_ws(line);
    const std::string key = tokens.front();
    tokens.erase(tokens.begin());
    const auto single = [&](const char* what) {
      if (tokens.size() != 1) throw ParseError(line_no, std::string("expected '") + what + " <value>'");
      return tokens.front();
    };
    const auto once = [&](bool already) {
      if (already) throw ParseError(line_no, "duplicate '" + key + "' header");
    };
    if (key == "dimension") {
      once(h.dimension.has_value());
      const std::string v = single("dimension");
      if (v.find_first_not_of("0123456789") != std::string::npos || v.size() > 4) {
        throw ParseError(line_no, "dimension must be a positive integer");
      }
      const std::size_t n = std::stoul(v);
      if (n == 0 || n > kMaxDimension) {
        throw ParseError(line_no, "dimension must be in 1.." + std::to_string(kMaxDimension));
      }
      h.dimension = n;
    } else if (key == "unital") {
      once(h.unital.has_value());
      const std::string v = single("unital");
      if (v != "true" && v != "false") throw ParseError(line_no, "unital must be 'true' or 'false'");
      h.unital = v == "true";
    } else if (key == "name") {
      once(h.name.has_value());
      const std::string v = single("name");
      if (!is_ident(v)) throw ParseError(line_no, "invalid name '" + v + "'");
      h.name = v;
    } else if (key == "scalar") {
      once(h.scalar.has_value());
      const std::string v = single("scalar");
      if (!is_ident(v)) throw ParseError(line_no, "invalid scalar tag '" + v + "'");
      h.scalar = v;
    } else if (key == "basis") {
      once(h.basis.has_value());
      if (!h.dimension) throw ParseError(line_no, "'basis' before 'dimension'");
      if (tokens.size() != *h.dimension) {
        throw ParseError(line_no, "basis lists " + std::to_string(tokens.size()) + " labels, dimension is " +
                                      std::to_string(*h.dimension));
      }
      std::set<std::string> uniq;
      for (const auto& t : tokens) {
        if (!is_ident(t)) throw ParseError(line_no, "invalid basis label '" + t + "'");
        if (!uniq.insert(t).second) throw ParseError(line_no, "repeated basis label '" + t + "'");
      }
      h.basis = tokens;
    } else if (key == "roles") {
      once(h.roles.has_value());
      if (!h.dimension) throw ParseError(line_no, "'roles' before 'dimension'");
      if (tokens.size() != *h.dimension) {
        throw ParseError(line_no, "roles lists " + std::to_string(tokens.size()) + " labels, dimension is " +
                                      std::to_string(*h.dimension));
      }
      std::vector<std::size_t> roles;
      std::set<std::size_t> uniq;
      for (const auto& t : tokens) {
        std::size_t r = kUnitRole;
        try {
          r = role_from_name(t);
        } catch (const UsageError&) {
          throw ParseError(line_no, "unknown role '" + t + "'");
        }
        if (r == kUnitRole) throw ParseError(line_no, "the unit is implicit and has no role slot");
        if (!uniq.insert(r).second) throw ParseError(line_no, "repeated role '" + t + "'");
        roles.push_back(r);
      }
      h.roles = roles;
    } else {
      throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
    }
  }

  if (!h.dimension) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'dimension' header");
  const bool unital = h.unital.value_or(true);
  AlgebraDef::Builder b(h.name.value_or("algebra"), *h.dimension, unital);
  if (h.basis) b.basis_names(*h.basis);
  if (h.scalar) b.scalar_tag(*h.scalar);
  for (const auto& p : products) {
    if (!unital && !p.value.unit.is_zero()) {
      throw ParseError(p.line, "constant term in a non-unital algebra");
    }
    b.set_product(p.i, p.j, p.value);
  }
  return {b.build(), h.roles};
}

AlgebraPtr parse_algebra(std::string_view text) { return parse_algebra_file(text).algebra; }

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_file(buf.str());
}

std::string format_coefficient(const Scalar& s) {
  const std::string re = s.re().get_str();
  if (s.is_real()) return re;
  const Rational& im = s.im();
  const std::string im_abs = abs(im) == 1 ? "" : Rational(abs(im)).get_str();
  if (sgn(s.re()) == 0) return (sgn(im) < 0 ? "-" : "") + im_abs + "i";
  return "(" + re + (sgn(im) < 0 ? "-" : "+") + im_abs + "i)";
}

std::string serialize(const AlgebraDef& alg, const std::optional<std::vector<std::size_t>>& roles) {
  if (!is_ident(alg.name())) throw UsageError("serialize: algebra name '" + alg.name() + "' is not an identifier");
  std::ostringstream out;
  out << "name " << alg.name() << "\n";
  out << "dimension " << alg.dim() << "\n";
  out << "unital " << (alg.unital() ? "true" : "false") << "\n";
  if (alg.scalar_tag() != "qi") out << "scalar " << alg.scalar_tag() << "\n";
  bool default_names = true;
  for (std::size_t k = 0; k < alg.dim(); ++k)
    default_names = default_names && alg.basis_names()[k] == "e" + std::to_string(k + 1);
  if (!default_names) {
    out << "basis";
    for (const auto& n : alg.basis_names()) out << " " << n;
    out << "\n";
  }
  if (roles) {
    out << "roles";
    for (std::size_t r : *roles) out << " " << role_name(r);
    out << "\n";
  }

  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      const BasisProduct p = alg.product(i, j);
      if (p.is_zero()) continue;
      std::string expr;
      const auto append = [&](const Scalar& c, const std::string& basis) {
        std::string coef;
        bool negative = false;
        if (c.is_real() || sgn(c.re()) == 0) {
          negative = c.is_real() ? sgn(c.re()) < 0 : sgn(c.im()) < 0;
          coef = format_coefficient(negative ? -c : c);
        } else {
          coef = format_coefficient(c);
        }
        std::string term;
        if (basis.empty()) {
          term = coef;
        } else {
          term = coef == "1" ? basis : coef + "*" + basis;
        }
        if (expr.empty()) {
          expr = (negative ? "-" : "") + term;
        } else {
          expr += (negative ? " - " : " + ") + term;
        }
      };
      for (std::size_t k = 0; k < alg.dim(); ++k)
        if (!p.coeffs[k].is_zero()) append(p.coeffs[k], "e" + std::to_string(k + 1));
      if (!p.unit.is_zero()) append(p.unit, "");
      out << "e" << i + 1 << " e" << j + 1 << " -> " << expr << "\n";
    }
  }
  return out.str();
}

}  // namespace hiddenalg
