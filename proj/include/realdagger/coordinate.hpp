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

#include <gmpxx.h>

#include <cstdint>
#include <memory>

namespace realdagger {

/// Arbitrary-precision rational in lowest terms with positive denominator.
using Rational = mpq_class;

/// A rational stored as a reduced int64 fraction while it fits, falling back
/// to GMP on overflow. The representation is canonical (small exactly when
/// it fits), so equality never needs GMP for small values.
class Coordinate {
 public:
  Coordinate() = default;
  Coordinate(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers
  explicit Coordinate(const Rational& q) { assign(q); }

  Coordinate(const Coordinate& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<Rational>(*o.big_);
  }
  Coordinate(Coordinate&&) noexcept = default;
  Coordinate& operator=(const Coordinate& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<Rational>(*o.big_) : nullptr;
    }
    return *this;
  }
  Coordinate& operator=(Coordinate&&) noexcept = default;

  Rational get() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  int sign() const;

  Coordinate operator-() const;
  Coordinate& operator+=(const Coordinate& y);
  Coordinate& operator-=(const Coordinate& y) { return *this += -y; }
  Coordinate& operator*=(const Coordinate& y);

  friend Coordinate operator+(Coordinate x, const Coordinate& y) { return x += y; }
  friend Coordinate operator-(Coordinate x, const Coordinate& y) { return x -= y; }
  friend Coordinate operator*(Coordinate x, const Coordinate& y) { return x *= y; }
  friend Coordinate operator/(const Coordinate& x, const Coordinate& y);

  friend bool operator==(const Coordinate& x, const Coordinate& y) {
    if (!x.big_ && !y.big_) return x.num_ == y.num_ && x.den_ == y.den_;
    return x.big_ && y.big_ && *x.big_ == *y.big_;
  }
  /// -1, 0 or 1 as x < y, x = y, x > y.
  friend int compare(const Coordinate& x, const Coordinate& y);

 private:
  void assign(const Rational& q);
  void assign_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<Rational> big_;
};

}  // namespace realdagger
