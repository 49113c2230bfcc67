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

#include "realdagger/equivalence.hpp"

namespace realdagger {

namespace {

const Matrix& require_j(const RealVS& v) {
  if (!v.J) throw InvariantViolation("complex structure", "real space has no J");
  return *v.J;
}

const Matrix& require_g(const RealVS& v) {
  if (!v.g) throw InvariantViolation("inner product", "real space has no g");
  return *v.g;
}

Matrix diag_minus_plus(Index m) {
  Matrix d = Matrix::Zero(2 * m, 2 * m);
  for (Index k = 0; k < m; ++k) {
    d(k, k) = -Scalar::i();
    d(m + k, m + k) = Scalar::i();
  }
  return d;
}

}  // namespace

std::vector<std::string> RealVS::check() const {
  std::vector<std::string> failures;
  if (g) {
    if (g->rows() != dim || g->cols() != dim) {
      failures.emplace_back("inner product shape");
    } else {
      if (!is_real_matrix(*g)) failures.emplace_back("inner product is real");
      if (!same_matrix(Matrix(g->transpose()), *g)) failures.emplace_back("inner product symmetry");
      if (rank(*g) != dim) failures.emplace_back("inner product nondegenerate");
    }
  }
  if (J) {
    if (J->rows() != dim || J->cols() != dim) {
      failures.emplace_back("complex structure shape");
    } else {
      if (!is_real_matrix(*J)) failures.emplace_back("complex structure is real");
      if (!same_matrix(Matrix(*J * *J), Matrix(-identity(dim)))) {
        failures.emplace_back("complex structure squares to -1");
      }
    }
  }
  if (failures.empty() && g && J) {
    if (!same_matrix(Matrix(J->transpose() * *g * *J), *g)) failures.emplace_back("isometric complex structure");
  }
  return failures;
}

void RealVS::validate() const {
  const auto failures = check();
  if (!failures.empty()) throw InvariantViolation(failures.front(), "invalid real vector space");
}

RealModule complexify(const RealVS& v) { return RealModule(v.dim, identity(v.dim)); }

ComplexFrame complex_frame(const RealVS& v) {
  v.validate();
  const Matrix& j = require_j(v);
  const Index n = v.dim;
  const Index m = n / 2;
  Matrix chosen(n, 0);
  for (Index e = 0; e < n && chosen.cols() < m; ++e) {
    Matrix trial(n, chosen.cols() + 1);
    trial << chosen, identity(n).col(e);
    Matrix with_j(n, 2 * trial.cols());
    with_j << trial, j * trial;
    if (rank(with_j) == with_j.cols()) chosen = trial;
  }
  Matrix real_basis(n, n);
  real_basis << chosen, j * chosen;
  const Matrix t_inv = inverse(real_basis);
  return ComplexFrame{chosen, t_inv.topRows(m) + t_inv.bottomRows(m) * Scalar::i()};
}

RealModule hyperbolic_module(Index m) {
  Matrix swap = Matrix::Zero(2 * m, 2 * m);
  swap.topRightCorner(m, m) = identity(m);
  swap.bottomLeftCorner(m, m) = identity(m);
  return RealModule(2 * m, std::move(swap));
}

HyperbolicIso hyperbolic_iso(const RealVS& v) {
  const Matrix& j = require_j(v);
  const ComplexFrame f = complex_frame(v);
  const Index n = v.dim;
  const Index m = n / 2;
  const Scalar s = Scalar::inv_sqrt2();

  // Column e of the forward map is the image of the real vector e, i.e.
  // (e, e)/sqrt2 in (V_{-J}, V_{+J}) coordinates.
  Matrix forward(2 * m, n);
  forward << entrywise_conj(f.coords), f.coords;
  forward *= s;

  const Matrix jb = j * f.frame;
  Matrix backward(n, 2 * m);
  backward << f.frame + jb * Scalar::i(), f.frame - jb * Scalar::i();
  backward *= s;

  if (!same_matrix(Matrix(forward * backward), identity(2 * m)) ||
      !same_matrix(Matrix(backward * forward), identity(n))) {
    throw InvariantViolation("hyperbolic isomorphism", "forward and inverse do not compose to identities");
  }
  const RealModule source = complexify(v);
  const RealModule target = hyperbolic_module(m);
  return HyperbolicIso{RealHom(source, target, forward), RealHom(target, source, backward)};
}

std::pair<Vector, Vector> hyperbolic_apply(const RealVS& v, const Vector& re, const Vector& im) {
  const Matrix& j = require_j(v);
  const Scalar s = Scalar::inv_sqrt2();
  const Vector j_im = j * im;
  return {(re - j_im) * s, (re + j_im) * s};
}

std::pair<Vector, Vector> hyperbolic_inverse_apply(const RealVS& v, const Vector& minus,
                                                  const Vector& plus) {
  const Matrix& j = require_j(v);
  const Scalar s = Scalar::inv_sqrt2();
  return {(minus + plus) * s, (j * minus - j * plus) * s};
}

Matrix diagonalized_complex_structure(const RealVS& v) {
  const Matrix& j = require_j(v);
  const HyperbolicIso iso = hyperbolic_iso(v);
  const Matrix transported = iso.forward.mat() * j * iso.inverse.mat();
  const Matrix expected = diag_minus_plus(v.dim / 2);
  if (!same_matrix(transported, expected)) {
    throw InvariantViolation("diagonalization", "transported J is not diag(-i, +i)");
  }
  return expected;
}

Scalar hermitian_form_value(const RealVS& v, const Vector& x, const Vector& y) {
  const Matrix& g = require_g(v);
  const Matrix& j = require_j(v);
  return (x.transpose() * g * y)(0, 0) + Scalar::i() * ((j * x).transpose() * g * y)(0, 0);
}

HermitianSpace inner_to_hermitian_formula(const RealVS& v) {
  v.validate();
  require_g(v);
  const ComplexFrame f = complex_frame(v);
  const Index m = f.frame.cols();
  HermitianSpace h{m, Matrix(m, m)};
  for (Index k = 0; k < m; ++k) {
    for (Index l = 0; l < m; ++l) h.gram(k, l) = hermitian_form_value(v, f.frame.col(k), f.frame.col(l));
  }
  h.validate();
  return h;
}

Matrix transported_bilinear_form(const RealVS& v) {
  const Matrix& g = require_g(v);
  const HyperbolicIso iso = hyperbolic_iso(v);
  // x = backward * y, so x^T g x' = y^T (backward^T g backward) y'.
  return iso.inverse.mat().transpose() * g * iso.inverse.mat();
}

HermitianSpace inner_to_hermitian_functorial(const RealVS& v) {
  v.validate();
  const Index m = v.dim / 2;
  const Index n2 = 2 * m;
  const Matrix form = transported_bilinear_form(v);
  // The pairing as a map out of the tensor square, row-major index a*2m + b.
  Matrix pairing(1, n2 * n2);
  for (Index a = 0; a < n2; ++a) {
    for (Index b = 0; b < n2; ++b) pairing(0, a * n2 + b) = form(a, b);
  }
  const Matrix icplx = diagonalized_complex_structure(v);
  const Matrix square = kron(icplx, icplx);
  const Matrix plus_one = kernel_matrix(Matrix(square - identity(n2 * n2)));
  const Matrix minus_one = kernel_matrix(Matrix(square + identity(n2 * n2)));
  if (!is_zero_matrix(pairing * minus_one)) {
    throw InvariantViolation("isometry", "transported pairing does not factor through the +1 eigenspace");
  }
  HermitianSpace h{m, Matrix::Zero(m, m)};
  const Matrix values = pairing * plus_one;
  for (Index col = 0; col < plus_one.cols(); ++col) {
    // Eigenvectors of a diagonal operator come out as basis tensors e_a (x) e_b.
    Index idx = 0;
    while (is_zero(plus_one(idx, col))) ++idx;
    const Index a = idx / n2;
    const Index b = idx % n2;
    if (a < m && b >= m) h.gram(a, b - m) = values(0, col) / plus_one(idx, col);
  }
  h.validate();
  if (!(h == inner_to_hermitian_formula(v))) {
    throw InvariantViolation("hermitian transport", "functorial and formula routes disagree");
  }
  return h;
}

Scalar transported_pairing(const RealVS& v, const Vector& minus, const Vector& plus) {
  const Matrix& g = require_g(v);
  const Matrix& j = require_j(v);
  const Scalar s = Scalar::inv_sqrt2();
  const Vector left = (minus + j * minus * Scalar::i()) * s;
  const Vector right = (plus - j * plus * Scalar::i()) * s;
  return (left.transpose() * g * right)(0, 0);
}

}  // namespace realdagger
