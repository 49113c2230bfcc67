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

#include "realdagger/hermitian_space.hpp"

namespace realdagger {

std::vector<std::string> HermitianSpace::check() const {
  std::vector<std::string> failures;
  if (gram.rows() != dim || gram.cols() != dim) {
    failures.emplace_back("gram shape");
    return failures;
  }
  if (!same_matrix(conj_transpose(gram), gram)) failures.emplace_back("conjugate symmetry");
  if (rank(gram) != dim) failures.emplace_back("nondegenerate");
  return failures;
}

void HermitianSpace::validate() const {
  const auto failures = check();
  if (!failures.empty()) throw InvariantViolation(failures.front(), "not a Hermitian form");
}

bool is_positive_definite(const HermitianSpace& h) {
  for (Index k = 1; k <= h.dim; ++k) {
    if (determinant<Scalar>(h.gram.topLeftCorner(k, k)).sign_real() != 1) return false;
  }
  return true;
}

bool is_positive_semidefinite(const Matrix& m) {
  const Index n = m.rows();
  if (n >= 20) throw ShapeMismatch("is_positive_semidefinite: dimension too large for minor enumeration");
  for (unsigned long subset = 1; subset < (1ul << n); ++subset) {
    std::vector<Index> idx;
    for (Index k = 0; k < n; ++k) {
      if (subset & (1ul << k)) idx.push_back(k);
    }
    Matrix minor(static_cast<Index>(idx.size()), static_cast<Index>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t c = 0; c < idx.size(); ++c) {
        minor(static_cast<Index>(r), static_cast<Index>(c)) = m(idx[r], idx[c]);
      }
    }
    if (determinant(minor).sign_real() < 0) return false;
  }
  return true;
}

Matrix gram_adjoint(const Matrix& g, const HermitianSpace& h1, const HermitianSpace& h2) {
  if (g.rows() != h2.dim || g.cols() != h1.dim) throw ShapeMismatch("gram_adjoint: map shape does not match spaces");
  return inverse(h1.gram) * conj_transpose(g) * h2.gram;
}

}  // namespace realdagger
