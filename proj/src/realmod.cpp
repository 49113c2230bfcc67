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

#include "realdagger/realmod.hpp"

namespace realdagger {

RealModule::RealModule(Index dim, Matrix inv) : dim_(dim), inv_(std::move(inv)) {
  const auto failures = check();
  if (!failures.empty()) throw InvariantViolation(failures.front(), "not a Real module");
}

RealModule RealModule::unchecked(Index dim, Matrix inv) {
  RealModule m;
  m.dim_ = dim;
  m.inv_ = std::move(inv);
  return m;
}

std::vector<std::string> RealModule::check() const {
  std::vector<std::string> failures;
  if (inv_.rows() != dim_ || inv_.cols() != dim_) {
    failures.emplace_back("involution shape");
    return failures;
  }
  if (!same_matrix(Matrix(inv_ * entrywise_conj(inv_)), identity(dim_))) {
    failures.emplace_back("involutivity");
  }
  return failures;
}

bool is_real_hom(const RealModule& source, const RealModule& target, const Matrix& mat) {
  if (mat.rows() != target.dim() || mat.cols() != source.dim()) return false;
  return same_matrix(Matrix(mat * source.inv()), Matrix(target.inv() * entrywise_conj(mat)));
}

RealHom::RealHom(RealModule source, RealModule target, Matrix mat)
    : source_(std::move(source)), target_(std::move(target)), mat_(std::move(mat)) {
  if (mat_.rows() != target_.dim() || mat_.cols() != source_.dim()) {
    throw ShapeMismatch("RealHom: matrix is " + std::to_string(mat_.rows()) + "x" +
                        std::to_string(mat_.cols()) + ", expected " +
                        std::to_string(target_.dim()) + "x" + std::to_string(source_.dim()));
  }
  if (!is_real_hom(source_, target_, mat_)) {
    throw InvariantViolation("intertwining", "matrix does not commute with the involutions");
  }
}

RealHom RealHom::unchecked(RealModule source, RealModule target, Matrix mat) {
  RealHom h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.mat_ = std::move(mat);
  return h;
}

RealModule tensor_unit() { return RealModule(1, identity(1)); }

RealModule tensor(const RealModule& m1, const RealModule& m2) {
  return RealModule::unchecked(m1.dim() * m2.dim(), kron(m1.inv(), m2.inv()));
}

RealHom tensor_hom(const RealHom& f1, const RealHom& f2) {
  return RealHom::unchecked(tensor(f1.source(), f2.source()), tensor(f1.target(), f2.target()),
                            kron(f1.mat(), f2.mat()));
}

RealModule direct_sum(const RealModule& m1, const RealModule& m2) {
  const Index n = m1.dim() + m2.dim();
  Matrix inv = Matrix::Zero(n, n);
  inv.topLeftCorner(m1.dim(), m1.dim()) = m1.inv();
  inv.bottomRightCorner(m2.dim(), m2.dim()) = m2.inv();
  return RealModule::unchecked(n, std::move(inv));
}

RealHom braiding(const RealModule& m1, const RealModule& m2) {
  return RealHom::unchecked(tensor(m1, m2), tensor(m2, m1), swap_matrix(m1.dim(), m2.dim()));
}

RealHom identity_hom(const RealModule& m) { return RealHom::unchecked(m, m, identity(m.dim())); }

RealHom compose(const RealHom& g, const RealHom& f) {
  if (!(f.target() == g.source())) {
    throw InvariantViolation("composable", "target of the first map is not the source of the second");
  }
  return RealHom::unchecked(f.source(), g.target(), g.mat() * f.mat());
}

RealHom associator(const RealModule& m1, const RealModule& m2, const RealModule& m3) {
  const RealModule left = tensor(tensor(m1, m2), m3);
  const RealModule right = tensor(m1, tensor(m2, m3));
  return RealHom(left, right, identity(left.dim()));
}

RealHom left_unitor(const RealModule& m) {
  return RealHom(tensor(tensor_unit(), m), m, identity(m.dim()));
}

RealHom right_unitor(const RealModule& m) {
  return RealHom(tensor(m, tensor_unit()), m, identity(m.dim()));
}

RealHom negative_unit() { return RealHom(tensor_unit(), tensor_unit(), -identity(1)); }

FixedPoints fixed_points(const RealModule& m) {
  // inv*conj(v) - v = 0, as a linear system over the real subfield.
  const Matrix system = realify(-identity(m.dim()), m.inv());
  const Matrix stacked = kernel_matrix(system);
  return FixedPoints{stacked.cols(), complex_from_realified(stacked)};
}

}  // namespace realdagger
