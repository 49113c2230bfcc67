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

#include "realdagger/density.hpp"

namespace realdagger {

namespace {

// Bras inv(plus) then kets plus: a basis of H adapted to conj(H) (+) H.
Matrix bra_ket_frame(const SelfDualRealModule& s, const EigenSplit& e) {
  Matrix frame(s.dim(), s.dim());
  frame << s.module.apply_involution(e.plus), e.plus;
  return frame;
}

}  // namespace

CSMatSpace csmat(const SelfDualRealModule& s) {
  s.validate();
  const Index n = s.dim();
  const Matrix id = identity(n * n);
  const Matrix braid_eq = swap_matrix(n, n) - id;
  const Matrix cplx_eq = kron(s.icplx, s.icplx) - id;
  Matrix both(2 * n * n, n * n);
  both << braid_eq, cplx_eq;
  CSMatSpace c{s, kernel_matrix(both)};

  const Matrix smat = kernel_matrix(braid_eq);
  const Matrix cmat = kernel_matrix(cplx_eq);
  Matrix joined(n * n, smat.cols() + cmat.cols());
  joined << smat, cmat;
  const Index intersection_dim = smat.cols() + cmat.cols() - rank(joined);
  if (!in_span(smat, c.basis) || !in_span(cmat, c.basis) || c.basis.cols() != intersection_dim) {
    throw InvariantViolation("pullback", "CSMat is not the intersection of SMat and CMat");
  }
  return c;
}

FixedLocus fixed_locus(const CSMatSpace& c) {
  const Matrix& inv = c.parent.module.inv();
  const auto restricted = solve(c.basis, Matrix(kron(inv, inv) * entrywise_conj(c.basis)));
  if (!restricted) throw InvariantViolation("Real submodule", "CSMat is not closed under the involution");
  const FixedPoints coeffs = fixed_points(RealModule(c.basis.cols(), *restricted));
  return FixedLocus{coeffs.dim, c.basis * coeffs.basis};
}

DensityGeometry::DensityGeometry(const SelfDualRealModule& s)
    : geometry(s), space(csmat(s)), frame(bra_ket_frame(s, geometry.split)), frame_inverse(inverse(frame)) {}

bool in_fixed_locus(const DensityGeometry& d, const Matrix& v) {
  // CSMat is cut out by the braiding and icplx (x) icplx equations.
  const SelfDualRealModule& s = d.geometry.module;
  const Index n = s.dim();
  if (v.rows() != n * n || v.cols() != 1) return false;
  const Matrix& inv = s.module.inv();
  return same_matrix(Matrix(swap_matrix(n, n) * v), v) && same_matrix(kron_apply({s.icplx, s.icplx}, v), v) &&
         same_matrix(kron_apply({inv, inv}, entrywise_conj(v)), v);
}

Matrix fixed_locus_to_hermitian_operator(const CSMatSpace& c, const Matrix& v) {
  return fixed_locus_to_hermitian_operator(DensityGeometry(c.parent), v);
}

Matrix fixed_locus_to_hermitian_operator(const DensityGeometry& d, const Matrix& v) {
  if (!in_fixed_locus(d, v)) throw InvariantViolation("fixed locus", "vector is not a fixed point of CSMat");
  const Index n = d.geometry.module.dim();
  const Index m = d.geometry.split.hilbert_dim();
  const Matrix coords = kron_apply({d.frame_inverse, d.frame_inverse}, v);
  Matrix x(m, m);
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) x(a, b) = coords((m + a) * n + b, 0);
  }
  return x * d.geometry.form.gram;
}

Matrix hermitian_operator_to_fixed_locus(const CSMatSpace& c, const Matrix& rho) {
  return hermitian_operator_to_fixed_locus(DensityGeometry(c.parent), rho);
}

Matrix hermitian_operator_to_fixed_locus(const DensityGeometry& d, const Matrix& rho) {
  const HermitianSpace& h = d.geometry.form;
  if (!is_hermitian_operator(rho, h)) throw InvariantViolation("hermitian operator", "rho is not self-adjoint");
  const Index n = d.geometry.module.dim();
  const Index m = d.geometry.split.hilbert_dim();
  const Matrix x = rho * inverse(h.gram);
  Matrix coords = Matrix::Zero(n * n, 1);
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      coords((m + a) * n + b, 0) += x(a, b);  // |a> (x) <b|
      coords(b * n + (m + a), 0) += x(a, b);  // <b| (x) |a>
    }
  }
  return kron_apply({d.frame, d.frame}, coords);
}

bool is_hermitian_operator(const Matrix& rho, const HermitianSpace& h) {
  return rho.rows() == h.dim && rho.cols() == h.dim && same_matrix(gram_adjoint(rho, h, h), rho);
}

Scalar operator_trace(const Matrix& rho, const HermitianSpace& h) {
  const Matrix dual = inverse(h.gram);
  return (conj_transpose(dual) * h.gram * rho).trace();
}

std::string to_string(Positivity p) {
  switch (p) {
    case Positivity::yes:
      return "yes";
    case Positivity::no:
      return "no";
    case Positivity::unknown:
      break;
  }
  return "unknown";
}

Positivity operator_positivity(const Matrix& rho, const HermitianSpace& h) {
  if (!is_positive_definite(h) || !is_hermitian_operator(rho, h)) return Positivity::unknown;
  // <psi|rho psi> = psi^H (gram rho) psi, and gram rho is a Hermitian matrix.
  return is_positive_semidefinite(Matrix(h.gram * rho)) ? Positivity::yes : Positivity::no;
}

Matrix channel(const Matrix& g, const Matrix& rho, const SelfDualRealModule& s) {
  return channel(g, rho, DensityGeometry(s));
}

Matrix channel(const Matrix& g, const Matrix& rho, const DensityGeometry& d) {
  const Geometry& x = d.geometry;
  if (!is_hermitian_operator(rho, x.form)) throw InvariantViolation("hermitian operator", "rho is not self-adjoint");
  const Matrix direct = g * rho * dagger(g, x, x);

  const RealHom map = internalize_map(g, x, x);
  const Matrix moved = kron_apply({map.mat(), map.mat()}, hermitian_operator_to_fixed_locus(d, rho));
  if (!in_fixed_locus(d, moved)) {
    throw InvariantViolation("CSMat closure", "G (x) G leaves the fixed locus of CSMat");
  }
  if (!same_matrix(fixed_locus_to_hermitian_operator(d, moved), direct)) {
    throw InvariantViolation("channel square", "G (x) G on CSMat disagrees with g rho g^dagger");
  }
  return direct;
}

ChannelReport channel_with_certificates(const Matrix& g, const Matrix& rho, const SelfDualRealModule& s) {
  return channel_with_certificates(g, rho, DensityGeometry(s));
}

ChannelReport channel_with_certificates(const Matrix& g, const Matrix& rho, const DensityGeometry& d) {
  const HermitianSpace& h = d.geometry.form;
  ChannelReport r;
  r.result = channel(g, rho, d);
  r.hermitian = is_hermitian_operator(r.result, h);
  r.trace_preserved = operator_trace(r.result, h) == operator_trace(rho, h);
  r.positive = operator_positivity(r.result, h);
  return r;
}

}  // namespace realdagger
