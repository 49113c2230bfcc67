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

#include "realdagger/hermitian.hpp"

namespace realdagger {

/// Internally complex, internally symmetric matrices inside H (x) H: the
/// common fixed space of the braiding and of icplx (x) icplx.
struct CSMatSpace {
  SelfDualRealModule parent;
  /// N^2 x k, columns a complex basis.
  Matrix basis;
};

/// Iterated equalizer, checked to be the intersection of the braiding
/// equalizer and the complex-structure equalizer.
CSMatSpace csmat(const SelfDualRealModule& s);

/// Involution-fixed vectors of CSMat, as a real-subfield basis (N^2 x d).
struct FixedLocus {
  Index real_dim = 0;
  Matrix vectors;
};

FixedLocus fixed_locus(const CSMatSpace& c);

/// A module with its CSMat and bra-ket frame (bras inv(plus), then kets
/// plus), computed once for repeated operator conversions.
struct DensityGeometry {
  explicit DensityGeometry(const SelfDualRealModule& s);

  Geometry geometry;
  CSMatSpace space;
  Matrix frame;
  Matrix frame_inverse;
};

/// v is in CSMat and fixed by the involution.
bool in_fixed_locus(const DensityGeometry& d, const Matrix& v);

/// ket_a (x) bra_b coefficients X of a fixed vector give the operator
/// rho = sum X_ab |a><b| = X * gram. Throws InvariantViolation when v is not
/// in the fixed locus.
Matrix fixed_locus_to_hermitian_operator(const CSMatSpace& c, const Matrix& v);
Matrix fixed_locus_to_hermitian_operator(const DensityGeometry& d, const Matrix& v);
/// Inverse of fixed_locus_to_hermitian_operator.
Matrix hermitian_operator_to_fixed_locus(const CSMatSpace& c, const Matrix& rho);
Matrix hermitian_operator_to_fixed_locus(const DensityGeometry& d, const Matrix& rho);

/// rho equals its adjoint with respect to the form.
bool is_hermitian_operator(const Matrix& rho, const HermitianSpace& h);

/// sum over a basis e_a and its gram-dual d_a of <d_a|rho e_a>.
Scalar operator_trace(const Matrix& rho, const HermitianSpace& h);

enum class Positivity { yes, no, unknown };
std::string to_string(Positivity p);

/// Positive semidefinite with respect to a positive-definite form; unknown
/// when the form itself is indefinite.
Positivity operator_positivity(const Matrix& rho, const HermitianSpace& h);

/// rho -> g rho g^dagger, computed as a matrix product and as G (x) G acting
/// on the fixed locus of CSMat; the two are checked to agree.
Matrix channel(const Matrix& g, const Matrix& rho, const SelfDualRealModule& s);
Matrix channel(const Matrix& g, const Matrix& rho, const DensityGeometry& d);

struct ChannelReport {
  Matrix result;
  bool hermitian = false;
  bool trace_preserved = false;
  Positivity positive = Positivity::unknown;
};

ChannelReport channel_with_certificates(const Matrix& g, const Matrix& rho, const SelfDualRealModule& s);
ChannelReport channel_with_certificates(const Matrix& g, const Matrix& rho, const DensityGeometry& d);

}  // namespace realdagger
