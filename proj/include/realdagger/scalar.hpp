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

#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "realdagger/coordinate.hpp"

namespace realdagger {

/// Exact element a + b*sqrt2 + c*i + d*i*sqrt2 of the eighth cyclotomic field
/// Q(i, sqrt2). The coordinates are unique, so equality is coordinatewise.
///
/// Conjugation flips the sign of (c, d); elements with c = d = 0 form the real
/// subfield Q(sqrt2).
class Scalar {
 public:
  Scalar() = default;
  Scalar(int n) : a_(n) {}  // NOLINT: implicit, Eigen builds Scalar(0), Scalar(1)
  explicit Scalar(const Rational& a, const Rational& b = 0, const Rational& c = 0, const Rational& d = 0)
      : a_(a), b_(b), c_(c), d_(d) {}

  static Scalar sqrt2() { return of(0, 1, 0, 0); }
  static Scalar i() { return of(0, 0, 1, 0); }
  /// 1/sqrt2 = sqrt2/2.
  static Scalar inv_sqrt2() { return Scalar(0, Rational(1, 2)); }

  Rational a() const { return a_.get(); }
  Rational b() const { return b_.get(); }
  Rational c() const { return c_.get(); }
  Rational d() const { return d_.get(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  bool is_real() const { return c_.is_zero() && d_.is_zero(); }

  Scalar conj() const { return of(a_, b_, -c_, -d_); }
  /// (x + conj x) / 2.
  Scalar real_part() const { return of(a_, b_, 0, 0); }
  /// (x - conj x) / 2i, an element of the real subfield.
  Scalar imag_part() const { return of(c_, d_, 0, 0); }
  /// Multiplicative inverse. Throws DivisionByZero on zero.
  Scalar inv() const;
  /// Exact sign of a real element. Throws InvariantViolation if not real.
  int sign_real() const;

  Scalar operator-() const { return of(-a_, -b_, -c_, -d_); }
  Scalar& operator+=(const Scalar& y);
  Scalar& operator-=(const Scalar& y);
  Scalar& operator*=(const Scalar& y);
  Scalar& operator/=(const Scalar& y) { return *this *= y.inv(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// Canonical text, e.g. `1/2+1/2*i*r2`. Contains no whitespace.
  std::string str() const;
  /// Parses the textual form. Terms are `q`, `q*r2`, `q*i`, `q*i*r2` (the
  /// factors `i`, `r2` in either order, coefficient optional) joined by `+`
  /// or `-`. Whitespace between terms is allowed.
  static Scalar parse(std::string_view text);

 private:
  static Scalar of(Coordinate a, Coordinate b, Coordinate c, Coordinate d) {
    Scalar x;
    x.a_ = std::move(a);
    x.b_ = std::move(b);
    x.c_ = std::move(c);
    x.d_ = std::move(d);
    return x;
  }

  Coordinate a_, b_, c_, d_;
};

inline Scalar conj(const Scalar& x) { return x.conj(); }
inline bool is_real(const Scalar& x) { return x.is_real(); }
inline Scalar real_part(const Scalar& x) { return x.real_part(); }
inline int sign_real(const Scalar& x) { return x.sign_real(); }
inline Scalar inv(const Scalar& x) { return x.inv(); }

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace realdagger

namespace Eigen {

template <>
struct NumTraits<realdagger::Scalar> : GenericNumTraits<realdagger::Scalar> {
  using Real = realdagger::Scalar;
  using NonInteger = realdagger::Scalar;
  using Literal = realdagger::Scalar;
  using Nested = realdagger::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
