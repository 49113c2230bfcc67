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

#include "realdagger/hermitian.hpp"

namespace realdagger {

namespace {

Matrix row_from_bilinear(const Matrix& form) {
  const Index n = form.rows();
  Matrix row(1, n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) row(0, a * n + b) = form(a, b);
  }
  return row;
}

Matrix column_from_bilinear(const Matrix& form) { return row_from_bilinear(form).transpose(); }

// row * (a (x) b) without forming the Kronecker product.
Matrix row_times_kron(const Matrix& row, const Matrix& a, const Matrix& b) {
  return kron_apply({a.transpose(), b.transpose()}, row.transpose()).transpose();
}

void require_map_shape(const Matrix& g, const EigenSplit& e1, const EigenSplit& e2) {
  if (g.rows() != e2.hilbert_dim() || g.cols() != e1.hilbert_dim()) {
    throw ShapeMismatch("map is " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                        " but the Hilbert spaces have dimensions " + std::to_string(e1.hilbert_dim()) +
                        " -> " + std::to_string(e2.hilbert_dim()));
  }
}

}  // namespace

Matrix SelfDualRealModule::bilinear_form() const {
  const Index n = dim();
  Matrix form(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) form(a, b) = pairing(0, a * n + b);
  }
  return form;
}

std::vector<std::string> SelfDualRealModule::check() const {
  std::vector<std::string> failures = module.check();
  const Index n = dim();
  if (!failures.empty()) return failures;
  if (pairing.rows() != 1 || pairing.cols() != n * n) failures.emplace_back("pairing shape");
  if (coev.rows() != n * n || coev.cols() != 1) failures.emplace_back("coevaluation shape");
  if (icplx.rows() != n || icplx.cols() != n) failures.emplace_back("complex structure shape");
  if (!failures.empty()) return failures;

  const Matrix& inv = module.inv();
  if (!same_matrix(row_times_kron(pairing, inv, inv), entrywise_conj(pairing))) {
    failures.emplace_back("pairing equivariance");
  }
  if (!same_matrix(coev, kron_apply({inv, inv}, entrywise_conj(coev)))) {
    failures.emplace_back("coevaluation equivariance");
  }
  const Matrix id = identity(n);
  // With coev = sum C_ab e_a (x) e_b and the form M, the composite
  // (id (x) pairing) . (coev (x) id) is C M and (pairing (x) id) . (id (x) coev)
  // is (M C)^T.
  Matrix c(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) c(a, b) = coev(a * n + b, 0);
  }
  const Matrix m = bilinear_form();
  const Matrix left = c * m;
  const Matrix right = (m * c).transpose();
  if (!same_matrix(left, id)) failures.emplace_back("zig-zag (coev then pairing on the right)");
  if (!same_matrix(right, id)) failures.emplace_back("zig-zag (coev then pairing on the left)");
  // pairing . braiding is the transposed form.
  if (!same_matrix(Matrix(m.transpose()), m)) failures.emplace_back("pairing symmetry");
  if (!is_real_hom(module, module, icplx)) failures.emplace_back("complex structure is a Real homomorphism");
  if (!same_matrix(Matrix(icplx * icplx), Matrix(-id))) failures.emplace_back("complex structure squares to -1");
  if (!same_matrix(row_times_kron(pairing, icplx, icplx), pairing)) {
    failures.emplace_back("isometric complex structure");
  }
  return failures;
}

void SelfDualRealModule::validate() const {
  const auto failures = check();
  if (!failures.empty()) throw InvariantViolation(failures.front(), "not a self-dual Real module");
}

EigenSplit split_eigenspaces(const SelfDualRealModule& s) {
  s.validate();
  const Index n = s.dim();
  const Matrix i_id = identity(n) * Scalar::i();
  EigenSplit e;
  e.minus = kernel_matrix(Matrix(s.icplx + i_id));
  e.plus = kernel_matrix(Matrix(s.icplx - i_id));
  if (e.minus.cols() != e.plus.cols() || e.minus.cols() + e.plus.cols() != n) {
    throw InvariantViolation("eigenspace splitting", "the -i and +i eigenspaces do not split the module evenly");
  }
  const auto witness = solve(e.minus, s.module.apply_involution(e.plus));
  const auto witness_back = solve(e.plus, s.module.apply_involution(e.minus));
  if (!witness || !witness_back) {
    throw InvariantViolation("eigenspace splitting", "the involution does not swap the eigenspaces");
  }
  e.witness = *witness;
  e.witness_back = *witness_back;
  return e;
}

HermitianSpace extract_hermitian(const SelfDualRealModule& s) { return extract_hermitian(s, split_eigenspaces(s)); }

HermitianSpace extract_hermitian(const SelfDualRealModule& s, const EigenSplit& e) {
  const Matrix form = s.bilinear_form();
  if (!is_zero_matrix(Matrix(e.plus.transpose() * form * e.plus)) ||
      !is_zero_matrix(Matrix(e.minus.transpose() * form * e.minus))) {
    throw InvariantViolation("mixed-block support", "pairing is nonzero on a pure eigenspace block");
  }
  const Matrix bras = s.module.apply_involution(e.plus);
  HermitianSpace h{e.hilbert_dim(), bras.transpose() * form * e.plus};
  const auto failures = h.check();
  for (const auto& f : failures) {
    if (f == "nondegenerate") throw InvariantViolation("degenerate restriction", "extracted form is degenerate");
    throw InvariantViolation(f, "extracted form is not Hermitian");
  }
  return h;
}

SelfDualRealModule make_selfdual(const HermitianSpace& h) {
  h.validate();
  const Index m = h.dim;
  const Index n = 2 * m;
  Matrix swap = Matrix::Zero(n, n);
  swap.topRightCorner(m, m) = identity(m);
  swap.bottomLeftCorner(m, m) = identity(m);

  Matrix form = Matrix::Zero(n, n);
  form.topRightCorner(m, m) = h.gram;
  form.bottomLeftCorner(m, m) = h.gram.transpose();

  // Dual basis: the coevaluation is the inverse form, whose blocks pair each
  // basis vector with its gram-dual, in both orders.
  const Matrix gram_inv = inverse(h.gram);
  Matrix dual = Matrix::Zero(n, n);
  dual.topRightCorner(m, m) = gram_inv.transpose();
  dual.bottomLeftCorner(m, m) = gram_inv;

  Matrix icplx = Matrix::Zero(n, n);
  for (Index k = 0; k < m; ++k) {
    icplx(k, k) = -Scalar::i();
    icplx(m + k, m + k) = Scalar::i();
  }
  SelfDualRealModule s{RealModule(n, swap), row_from_bilinear(form), column_from_bilinear(dual), icplx};
  s.validate();
  return s;
}

SelfDualRealModule transport(const SelfDualRealModule& s, const Matrix& a) {
  const Matrix a_inv = inverse(a);
  SelfDualRealModule out{RealModule(s.dim(), a * s.module.inv() * entrywise_conj(a_inv)),
                         row_times_kron(s.pairing, a_inv, a_inv), kron_apply({a, a}, s.coev), a * s.icplx * a_inv};
  return out;
}

Geometry::Geometry(const SelfDualRealModule& s)
    : module(s), split(split_eigenspaces(s)), form(extract_hermitian(s, split)), bilinear(s.bilinear_form()) {
  frame = Matrix(s.dim(), s.dim());
  frame << split.plus, s.module.apply_involution(split.plus);
  frame_inverse = inverse(frame);
}

RealHom internalize_map(const Matrix& g, const SelfDualRealModule& s1, const SelfDualRealModule& s2) {
  return internalize_map(g, Geometry(s1), Geometry(s2));
}

RealHom internalize_map(const Matrix& g, const Geometry& x1, const Geometry& x2) {
  const SelfDualRealModule& s1 = x1.module;
  const SelfDualRealModule& s2 = x2.module;
  require_map_shape(g, x1.split, x2.split);
  const Index n1 = s1.dim();
  const Index m1 = x1.split.hilbert_dim();

  // Kets go to g kets; bras inv(psi) are forced to inv(g psi).
  const Matrix kets = x2.split.plus * g;
  Matrix image(s2.dim(), n1);
  image << kets, s2.module.apply_involution(kets);
  const RealHom map(s1.module, s2.module, image * x1.frame_inverse);
  if (!same_matrix(Matrix(map.mat() * s1.icplx), Matrix(s2.icplx * map.mat()))) {
    throw InvariantViolation("internally complex-linear", "internalized map does not commute with the complex structures");
  }

  // The bra component read as functionals: (G <a|, |b>)_2 = <g a|b> must be
  // <a|g^dagger b> for the gram adjoint.
  const Matrix bra_images = image.rightCols(m1);
  const Matrix functionals = bra_images.transpose() * x2.bilinear * x2.split.plus;
  if (!same_matrix(functionals, Matrix(x1.form.gram * gram_adjoint(g, x1.form, x2.form)))) {
    throw InvariantViolation("adjoint component", "bra component of the internal map is not the adjoint");
  }
  return map;
}

Matrix externalize_map(const RealHom& map, const SelfDualRealModule& s1, const SelfDualRealModule& s2) {
  return externalize_map(map, Geometry(s1), Geometry(s2));
}

Matrix externalize_map(const RealHom& map, const Geometry& x1, const Geometry& x2) {
  const SelfDualRealModule& s1 = x1.module;
  const SelfDualRealModule& s2 = x2.module;
  if (!(map.source() == s1.module) || !(map.target() == s2.module)) {
    throw InvariantViolation("composable", "map does not run between the given modules");
  }
  if (!is_real_hom(s1.module, s2.module, map.mat())) {
    throw InvariantViolation("intertwining", "map is not a Real homomorphism");
  }
  if (!same_matrix(Matrix(map.mat() * s1.icplx), Matrix(s2.icplx * map.mat()))) {
    throw InvariantViolation("internally complex-linear", "map does not commute with the complex structures");
  }
  // Frame coordinates of the image kets: the bra part must vanish.
  const Matrix coords = x2.frame_inverse * map.mat() * x1.split.plus;
  const Index m2 = x2.split.hilbert_dim();
  if (!is_zero_matrix(coords.bottomRows(coords.rows() - m2))) {
    throw InvariantViolation("internally complex-linear", "map does not preserve the +i eigenspace");
  }
  return coords.topRows(m2);
}

RealHom duality_transpose(const RealHom& map, const SelfDualRealModule& s1, const SelfDualRealModule& s2) {
  const Matrix id1 = identity(s1.dim());
  const Matrix id2 = identity(s2.dim());
  const Matrix coev_then = kron(s1.coev, id2);
  const Matrix middle = kron_apply({id1, map.mat(), id2}, coev_then);
  const Matrix out = kron_apply({id1, s2.pairing}, middle);
  return RealHom(s2.module, s1.module, out);
}

Matrix dagger(const Matrix& g, const SelfDualRealModule& s1, const SelfDualRealModule& s2) {
  return dagger(g, Geometry(s1), Geometry(s2));
}

Matrix dagger(const Matrix& g, const Geometry& x1, const Geometry& x2) {
  const RealHom map = internalize_map(g, x1, x2);
  const Matrix adj = externalize_map(duality_transpose(map, x1.module, x2.module), x2, x1);
  if (!same_matrix(adj, gram_adjoint(g, x1.form, x2.form))) {
    throw InvariantViolation("dagger", "duality transpose disagrees with the gram adjoint");
  }
  return adj;
}

bool is_internal_isometry(const Matrix& g, const SelfDualRealModule& s1, const SelfDualRealModule& s2) {
  return is_internal_isometry(g, Geometry(s1), Geometry(s2));
}

bool is_internal_isometry(const Matrix& g, const Geometry& x1, const Geometry& x2) {
  const RealHom map = internalize_map(g, x1, x2);
  const bool preserves_pairing =
      same_matrix(row_times_kron(x2.module.pairing, map.mat(), map.mat()), x1.module.pairing);
  const bool adjoint_inverts = same_matrix(Matrix(dagger(g, x1, x2) * g), identity(g.cols()));
  if (preserves_pairing != adjoint_inverts) {
    throw InvariantViolation("isometry", "pairing preservation and g^dagger g = 1 disagree");
  }
  return preserves_pairing;
}

bool is_unitary(const Matrix& g, const Geometry& x1, const Geometry& x2) {
  return is_internal_isometry(g, x1, x2) && g.rows() == g.cols() && rank(g) == g.rows();
}

bool is_unitary(const Matrix& g, const SelfDualRealModule& s1, const SelfDualRealModule& s2) {
  return is_internal_isometry(g, s1, s2) && g.rows() == g.cols() && rank(g) == g.rows();
}

}  // namespace realdagger
