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

// Self-dual Real modules with an isometric internal complex structure, and
// the Hermitian geometry they encode.
//
// All bilinear data on H (x) H uses row-major Kronecker indexing a*N + b.
// The underlying Hilbert space of such a module is the +i eigenspace of the
// internal complex structure; maps g between Hilbert spaces are written in
// the eigenbasis returned by split_eigenspaces.

#pragma once

#include <string>
#include <vector>

#include "realdagger/hermitian_space.hpp"
#include "realdagger/realmod.hpp"

namespace realdagger {

struct SelfDualRealModule {
  RealModule module;
  /// H (x) H -> R, a 1 x N^2 row.
  Matrix pairing;
  /// R -> H (x) H, an N^2 x 1 column.
  Matrix coev;
  /// Internal complex structure, N x N.
  Matrix icplx;

  Index dim() const { return module.dim(); }

  /// The pairing as the N x N matrix M with (v, w) = v^T M w.
  Matrix bilinear_form() const;

  /// Names of the violated structure laws; empty when valid.
  std::vector<std::string> check() const;
  void validate() const;
};

/// Bases of the -i and +i eigenspaces of the complex structure, and the
/// matrices of the involution between them: inv(plus) = minus * witness and
/// inv(minus) = plus * witness_back.
struct EigenSplit {
  Matrix minus;
  Matrix plus;
  Matrix witness;
  Matrix witness_back;

  Index hilbert_dim() const { return plus.cols(); }
};

EigenSplit split_eigenspaces(const SelfDualRealModule& s);

/// The Hermitian form <x|y> = (inv x, y) on the +i eigenspace, in the basis
/// of split_eigenspaces. Checks that the pairing vanishes on the (+i)(+i) and
/// (-i)(-i) blocks.
HermitianSpace extract_hermitian(const SelfDualRealModule& s);
HermitianSpace extract_hermitian(const SelfDualRealModule& s, const EigenSplit& e);

/// A validated module with its eigenspaces and Hermitian form, computed once
/// so that repeated map operations skip the structure checks.
struct Geometry {
  explicit Geometry(const SelfDualRealModule& s);

  SelfDualRealModule module;
  EigenSplit split;
  HermitianSpace form;
  /// Kets then bras: [plus, inv(plus)], and its inverse.
  Matrix frame;
  Matrix frame_inverse;
  Matrix bilinear;
};

/// conj(H) (+) H with the swap involution, complex structure diag(-i, +i),
/// pairing [[0, gram], [gram^T, 0]] and the gram-dual coevaluation.
SelfDualRealModule make_selfdual(const HermitianSpace& h);

/// Transport of all structure along an invertible matrix a : H -> H'.
/// The involution becomes a * inv * conj(a)^-1, so a is a Real isomorphism.
SelfDualRealModule transport(const SelfDualRealModule& s, const Matrix& a);

/// The internally complex-linear Real homomorphism with +i block g. Its -i
/// block is forced by equivariance; the result is checked to send each bra
/// <psi| to <g psi| = <psi| g^dagger.
RealHom internalize_map(const Matrix& g, const SelfDualRealModule& s1, const SelfDualRealModule& s2);
RealHom internalize_map(const Matrix& g, const Geometry& x1, const Geometry& x2);

/// The +i block of an internally complex-linear Real homomorphism. Throws
/// InvariantViolation if the map does not commute with the complex structures.
Matrix externalize_map(const RealHom& map, const SelfDualRealModule& s1, const SelfDualRealModule& s2);
Matrix externalize_map(const RealHom& map, const Geometry& x1, const Geometry& x2);

/// The duality transpose of a Real homomorphism s1 -> s2: coevaluation of s1,
/// then the map in the middle slot, then the pairing of s2. A map s2 -> s1.
RealHom duality_transpose(const RealHom& map, const SelfDualRealModule& s1, const SelfDualRealModule& s2);

/// Hermitian adjoint of g : H1 -> H2, computed as externalize(duality
/// transpose(internalize g)). Checked against the gram adjoint.
Matrix dagger(const Matrix& g, const SelfDualRealModule& s1, const SelfDualRealModule& s2);
Matrix dagger(const Matrix& g, const Geometry& x1, const Geometry& x2);

/// pairing2 . (G (x) G) = pairing1, checked to agree with dagger(g) g = 1.
bool is_internal_isometry(const Matrix& g, const SelfDualRealModule& s1, const SelfDualRealModule& s2);
bool is_internal_isometry(const Matrix& g, const Geometry& x1, const Geometry& x2);
/// Internal isometry that is also invertible.
bool is_unitary(const Matrix& g, const SelfDualRealModule& s1, const SelfDualRealModule& s2);
bool is_unitary(const Matrix& g, const Geometry& x1, const Geometry& x2);

}  // namespace realdagger
