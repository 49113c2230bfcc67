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

/// C^dim with the form <v|w> = v^H * gram * w, antilinear in the first slot.
/// Signature is unconstrained.
struct HermitianSpace {
  Index dim = 0;
  Matrix gram = Matrix(0, 0);

  /// Failed invariants among: gram shape, conjugate symmetry, nondegenerate.
  std::vector<std::string> check() const;
  void validate() const;

  Scalar inner(const Vector& v, const Vector& w) const { return (conj_transpose(v) * gram * w)(0, 0); }

  static HermitianSpace standard(Index n) { return HermitianSpace{n, identity(n)}; }

  friend bool operator==(const HermitianSpace& x, const HermitianSpace& y) {
    return x.dim == y.dim && same_matrix(x.gram, y.gram);
  }
};

/// Every leading principal minor of the gram has exact sign +1.
bool is_positive_definite(const HermitianSpace& h);

/// Every principal minor of a Hermitian matrix is >= 0 (exact test for
/// positive semidefiniteness). Throws InvariantViolation on non-real minors.
bool is_positive_semidefinite(const Matrix& hermitian_matrix);

/// The operator adjoint h1 -> h2 of g : h1 -> h2 is gram1^-1 g^H gram2, the
/// unique map with <phi|adj(g) psi>_1 = <g phi|psi>_2.
Matrix gram_adjoint(const Matrix& g, const HermitianSpace& h1, const HermitianSpace& h2);

}  // namespace realdagger
