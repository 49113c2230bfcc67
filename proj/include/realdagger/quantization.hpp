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

// Finite Real sets, Real bundles over them, and the quantization of plain
// finite sets into self-dual Real modules.

#pragma once

#include <string>
#include <vector>

#include "realdagger/hermitian.hpp"

namespace realdagger {

/// The complex numbers as a commutative monoid on R_Re (+) R_Im, written in
/// the basis (Re, Im). `mult` is 2 x 4 on basis tensors a*2 + b.
struct InternalComplex {
  Matrix mult;
  Matrix unit;
  Matrix conj_endo;

  std::vector<std::string> check() const;
};

InternalComplex internal_complex();

/// A finite set with an involution tau.
struct RealSet {
  Index size = 0;
  std::vector<Index> tau;

  std::vector<std::string> check() const;
  void validate() const;
  Index fixed_point_count() const;
};

/// n points with the identity involution ("singular" points).
RealSet trivial_embed(Index n);
/// 2n points, k swapped with n + k ("smooth" points).
RealSet free_embed(Index n);
RealSet product(const RealSet& x, const RealSet& y);

/// f : source -> target with f . tau_source = tau_target . f.
struct EquivariantMap {
  RealSet source;
  RealSet target;
  std::vector<Index> map;

  void validate() const;
};

/// Fibers C^{d_x} and antilinear isos V_x -> V_{tau x}, v -> phi_x conj(v),
/// with phi_{tau x} conj(phi_x) = I.
struct RealBundle {
  RealSet base;
  std::vector<Index> fibers;
  std::vector<Matrix> phi;

  std::vector<std::string> check() const;
  void validate() const;
  Index total_rank() const;
};

/// Rank-1 fibers with phi = [[1]]: the base times the Real numbers line.
RealBundle line_bundle(const RealSet& base);

RealBundle pullback(const EquivariantMap& f, const RealBundle& b);
/// Fiber over y is the direct sum of the fibers over f^-1(y), ascending.
RealBundle pushforward(const EquivariantMap& f, const RealBundle& b);
RealBundle external_tensor(const RealBundle& b1, const RealBundle& b2);

/// A complex bundle over a plain set X seen as a Real bundle over
/// free_embed(|X|): fiber V_x over x and its conjugate over the mirror point,
/// with the canonical complex structure +i on V_x and -i on the mirror.
struct ComplexAsRealBundle {
  RealBundle bundle;
  std::vector<Matrix> complex_structure;
};

ComplexAsRealBundle complex_to_real_bundle(const std::vector<Index>& dims);

/// Complex-linear fiber maps a_x : V_x -> V_x as the Real bundle
/// endomorphism (a_x over x, conj(a_x) over the mirror).
std::vector<Matrix> complex_to_real_bundle_map(const std::vector<Matrix>& maps);

/// F_{tau x} phi_x = phi_x conj(F_x) for every x (a map covering the identity).
bool is_bundle_endomorphism(const RealBundle& b, const std::vector<Matrix>& fiber_maps);

/// Direct sum of all fibers; the involution sends block x to block tau x by
/// phi_x.
RealModule reflect(const RealBundle& b);
/// Block-diagonal matrix of a bundle map covering the identity.
Matrix reflect_map(const RealBundle& b, const std::vector<Matrix>& fiber_maps);

/// Real-subfield basis (columns, N^2 x k) of the symmetric, equivariant,
/// icplx-isometric pairings on a Real module.
Matrix admissible_pairings(const RealModule& m, const Matrix& icplx);

struct Quantized {
  std::vector<std::string> labels;
  SelfDualRealModule space;
};

/// The reflection of free_embed(|W|) times the Real line, with its canonical
/// complex structure and the pairing normalized so <w|w> = +1.
Quantized quantize(const std::vector<std::string>& labels);
Quantized quantize(Index n);

/// The basis state of each element of W: a column of the +i eigenspace.
std::vector<Vector> quantize_unit(const Quantized& q);

}  // namespace realdagger
