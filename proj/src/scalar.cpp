// Copyright 2026 The realdagger Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "realdagger/scalar.hpp"

#include <cctype>
#include <ostream>

#include "realdagger/errors.hpp"

namespace realdagger {

Scalar& Scalar::operator+=(const Scalar& y) {
  a_ += y.a_;
  b_ += y.b_;
  c_ += y.c_;
  d_ += y.d_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  c_ -= y.c_;
  d_ -= y.d_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& y) {
  // Write x = p + q i with p = a + b r2, q = c + d r2 in Q(r2), and use
  // (u + v r2)(u' + v' r2) = (uu' + 2vv') + (uv' + vu') r2.
  if (is_zero() || y.is_zero()) {
    *this = Scalar();
    return *this;
  }
  if (y.b_.is_zero() && y.c_.is_zero() && y.d_.is_zero()) {
    if (y.a_.is_one()) return *this;
    a_ *= y.a_;
    b_ *= y.a_;
    c_ *= y.a_;
    d_ *= y.a_;
    return *this;
  }
  const Coordinate two(2);
  const Coordinate pp_a = a_ * y.a_ + two * b_ * y.b_;
  const Coordinate pp_b = a_ * y.b_ + b_ * y.a_;
  const Coordinate qq_a = c_ * y.c_ + two * d_ * y.d_;
  const Coordinate qq_b = c_ * y.d_ + d_ * y.c_;
  const Coordinate pq_a = a_ * y.c_ + two * b_ * y.d_;
  const Coordinate pq_b = a_ * y.d_ + b_ * y.c_;
  const Coordinate qp_a = c_ * y.a_ + two * d_ * y.b_;
  const Coordinate qp_b = c_ * y.b_ + d_ * y.a_;
  a_ = pp_a - qq_a;
  b_ = pp_b - qq_b;
  c_ = pq_a + qp_a;
  d_ = pq_b + qp_b;
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  // 1/(p + q i) = (p - q i) / (p^2 + q^2); p^2 + q^2 = u + v r2 is real and
  // nonzero, and 1/(u + v r2) = (u - v r2) / (u^2 - 2 v^2).
  const Scalar norm = *this * conj();
  const Coordinate& u = norm.a_;
  const Coordinate& v = norm.b_;
  const Coordinate denom = u * u - Coordinate(2) * v * v;
  return conj() * of(u / denom, -v / denom, 0, 0);
}

int Scalar::sign_real() const {
  if (!is_real()) throw InvariantViolation("sign_real", "argument " + str() + " is not real");
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 2 b^2; the larger magnitude wins.
  const int cmp_sq = compare(a_ * a_, Coordinate(2) * b_ * b_);
  if (cmp_sq == 0) return 0;  // unreachable for rationals, sqrt2 is irrational
  return cmp_sq > 0 ? sa : sb;
}

namespace {

void append_term(std::string& out, const Rational& q, const char* unit) {
  if (sgn(q) == 0) return;
  const bool negative = sgn(q) < 0;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? '-' : '+';
  }
  const Rational mag = abs(q);
  if (*unit == '\0') {
    out += mag.get_str();
  } else if (mag == 1) {
    out += unit;
  } else {
    out += mag.get_str();
    out += '*';
    out += unit;
  }
}

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar run() {
    Rational coords[4];
    skip_ws();
    if (at_end()) fail("expected a scalar");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      parse_term(sign, coords);
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return Scalar(coords[0], coords[1], coords[2], coords[3]);
  }

 private:
  void parse_term(int sign, Rational* coords) {
    Rational coef = 1;
    bool have_i = false;
    bool have_r2 = false;
    bool need_factor = true;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = parse_rational();
      need_factor = false;
      if (!at_end() && peek() == '*') {
        ++pos_;
        need_factor = true;
      }
    }
    while (need_factor) {
      const std::size_t start = pos_;
      if (s_.substr(pos_, 2) == "r2") {
        if (have_r2) fail_at(start, "repeated factor 'r2'");
        have_r2 = true;
        pos_ += 2;
      } else if (!at_end() && peek() == 'i') {
        if (have_i) fail_at(start, "repeated factor 'i'");
        have_i = true;
        ++pos_;
      } else {
        fail("expected a number, 'i' or 'r2'");
      }
      need_factor = false;
      if (!at_end() && peek() == '*') {
        ++pos_;
        need_factor = true;
      }
    }
    const int slot = (have_i ? 2 : 0) + (have_r2 ? 1 : 0);
    coords[slot] += sign * coef;
  }

  Rational parse_rational() {
    mpz_class num = parse_digits();
    mpz_class den = 1;
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected denominator digits");
      }
      const std::size_t start = pos_;
      den = parse_digits();
      if (den == 0) fail_at(start, "zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  mpz_class parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw ParseError("malformed scalar: " + what, 0, pos + 1);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Scalar::str() const {
  std::string out;
  append_term(out, a_.get(), "");
  append_term(out, b_.get(), "r2");
  append_term(out, c_.get(), "i");
  append_term(out, d_.get(), "i*r2");
  return out.empty() ? "0" : out;
}

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).run(); }

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace realdagger
