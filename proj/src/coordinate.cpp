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

#include "realdagger/coordinate.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace realdagger {

namespace {

using Wide = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  while (b != 0) {
    const Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Rational to_rational(std::int64_t num, std::int64_t den) {
  Rational q;
  mpz_set_si(q.get_num_mpz_t(), num);
  mpz_set_si(q.get_den_mpz_t(), den);
  return q;
}

bool fits(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != std::numeric_limits<long>::min(); }

}  // namespace

Rational Coordinate::get() const { return big_ ? *big_ : to_rational(num_, den_); }

int Coordinate::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

void Coordinate::assign(const Rational& q) {
  if (fits(q.get_num()) && fits(q.get_den())) {
    // Reduce here as well: gmpxx does not canonicalize (num, den) constructors.
    if (sgn(q.get_den()) == 0) throw std::domain_error("zero denominator");
    assign_wide(q.get_num().get_si(), q.get_den().get_si());
  } else {
    Rational reduced = q;
    reduced.canonicalize();
    if (fits(reduced.get_num()) && fits(reduced.get_den())) {
      assign_wide(reduced.get_num().get_si(), reduced.get_den().get_si());
      return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<Rational>(std::move(reduced));
  }
}

void Coordinate::assign_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num <= kMax && num >= -kMax && den <= kMax) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  // Rare: split the 128-bit values into GMP integers.
  auto to_mpz = [](Wide v) {
    const bool negative = v < 0;
    unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class z = static_cast<unsigned long>(u >> 64);
    z <<= 64;
    z += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    return negative ? mpz_class(-z) : z;
  };
  Rational q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  assign(q);
}

Coordinate Coordinate::operator-() const {
  Coordinate out;
  if (big_) {
    out.assign(-*big_);
  } else {
    out.num_ = -num_;
    out.den_ = den_;
  }
  return out;
}

Coordinate& Coordinate::operator+=(const Coordinate& y) {
  if (y.is_zero()) return *this;
  if (is_zero()) return *this = y;
  if (big_ || y.big_) {
    assign(get() + y.get());
    return *this;
  }
  if (den_ == 1 && y.den_ == 1) {
    std::int64_t sum;
    if (!__builtin_add_overflow(num_, y.num_, &sum) && sum != std::numeric_limits<std::int64_t>::min()) {
      num_ = sum;
      return *this;
    }
  }
  assign_wide(Wide(num_) * y.den_ + Wide(y.num_) * den_, Wide(den_) * y.den_);
  return *this;
}

Coordinate& Coordinate::operator*=(const Coordinate& y) {
  if (is_zero()) return *this;
  if (y.is_zero()) return *this = Coordinate();
  if (big_ || y.big_) {
    assign(get() * y.get());
    return *this;
  }
  assign_wide(Wide(num_) * y.num_, Wide(den_) * y.den_);
  return *this;
}

Coordinate operator/(const Coordinate& x, const Coordinate& y) {
  Coordinate out;
  if (x.big_ || y.big_) {
    out.assign(x.get() / y.get());
    return out;
  }
  out.assign_wide(Wide(x.num_) * y.den_, Wide(x.den_) * y.num_);
  return out;
}

int compare(const Coordinate& x, const Coordinate& y) {
  if (x.big_ || y.big_) {
    const int c = cmp(x.get(), y.get());
    return (c > 0) - (c < 0);
  }
  const Wide l = Wide(x.num_) * y.den_;
  const Wide r = Wide(y.num_) * x.den_;
  return (l > r) - (l < r);
}

}  // namespace realdagger
