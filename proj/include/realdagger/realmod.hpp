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

#include <string>
#include <vector>

#include "realdagger/linalg.hpp"

namespace realdagger {

/// A complex space C^dim with the antilinear involution v -> inv * conj(v).
///
/// Objects compare by dimension and exact involution matrix; deciding
/// isomorphism is a separate question.
class RealModule {
 public:
  RealModule() = default;
  /// Throws InvariantViolation unless inv * conj(inv) = I.
  RealModule(Index dim, Matrix inv);

  /// Skips validation; `check()` reports what is wrong.
  static RealModule unchecked(Index dim, Matrix inv);

  Index dim() const { return dim_; }
  const Matrix& inv() const { return inv_; }

  /// inv * conj(v) for a column vector or a stack of them.
  Matrix apply_involution(const Matrix& v) const { return inv_ * entrywise_conj(v); }

  /// Names of violated invariants; empty when valid.
  std::vector<std::string> check() const;

  friend bool operator==(const RealModule& x, const RealModule& y) {
    return x.dim_ == y.dim_ && same_matrix(x.inv_, y.inv_);
  }

 private:
  Index dim_ = 0;
  Matrix inv_ = Matrix(0, 0);
};

/// A complex-linear map intertwining the involutions:
/// mat * source.inv = target.inv * conj(mat).
class RealHom {
 public:
  RealHom() = default;
  /// Throws InvariantViolation when `mat` does not intertwine.
  RealHom(RealModule source, RealModule target, Matrix mat);

  static RealHom unchecked(RealModule source, RealModule target, Matrix mat);

  const RealModule& source() const { return source_; }
  const RealModule& target() const { return target_; }
  const Matrix& mat() const { return mat_; }

 private:
  RealModule source_, target_;
  Matrix mat_ = Matrix(0, 0);
};

bool is_real_hom(const RealModule& source, const RealModule& target, const Matrix& mat);

/// The real numbers: C with plain complex conjugation.
RealModule tensor_unit();
RealModule tensor(const RealModule& m1, const RealModule& m2);
RealHom tensor_hom(const RealHom& f1, const RealHom& f2);
RealModule direct_sum(const RealModule& m1, const RealModule& m2);
/// v (x) w -> w (x) v.
RealHom braiding(const RealModule& m1, const RealModule& m2);
RealHom identity_hom(const RealModule& m);
/// g after f. Throws InvariantViolation when f.target != g.source.
RealHom compose(const RealHom& g, const RealHom& f);

/// Structure maps of the monoidal category. With row-major Kronecker indexing
/// they are all identity matrices between equal modules.
RealHom associator(const RealModule& m1, const RealModule& m2, const RealModule& m3);
RealHom left_unitor(const RealModule& m);
RealHom right_unitor(const RealModule& m);

/// The scalar -1 on the tensor unit.
RealHom negative_unit();

/// Fixed vectors of the involution, v = inv * conj(v).
struct FixedPoints {
  /// Dimension over the real subfield.
  Index dim = 0;
  /// dim x dim complex matrix whose columns are a real-subfield basis.
  Matrix basis;
};

FixedPoints fixed_points(const RealModule& m);

}  // namespace realdagger
