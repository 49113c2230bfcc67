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

// Real vector spaces on one side, Real modules on the other: complexification,
// the hyperbolic splitting of a complex structure, and the passage from a
// J-invariant inner product to a Hermitian form.
//
// Coordinates. A real space V = R^n with complex structure J is a complex
// space V_{+J} of dimension m = n/2 once a complex frame b_1..b_m is chosen
// ({b_k, J b_k} a real basis); V_{-J} is the same real space with i acting as
// -J, and the same frame gives its coordinates. Complex coordinates c of a
// real vector v in V_{+J} satisfy v = B Re(c) + J B Im(c); in V_{-J} they are
// conj(c).

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "realdagger/hermitian_space.hpp"
#include "realdagger/realmod.hpp"

namespace realdagger {

/// R^dim over the real subfield, optionally with an inner product g and a
/// complex structure J.
struct RealVS {
  Index dim = 0;
  std::optional<Matrix> g;
  std::optional<Matrix> J;

  std::vector<std::string> check() const;
  void validate() const;
};

/// V (x) C with its canonical Real structure (entrywise conjugation).
RealModule complexify(const RealVS& v);

/// Complex frame of (V, J): columns of `frame` (n x m) are real vectors b_k
/// picked greedily from the standard basis; `coords` (m x n) sends a real
/// vector to its V_{+J} coordinates.
struct ComplexFrame {
  Matrix frame;
  Matrix coords;
};

ComplexFrame complex_frame(const RealVS& v);

/// V_{-J} (+) V_{+J} in frame coordinates, whose involution swaps the two
/// summands: (c-, c+) -> (conj c+, conj c-).
RealModule hyperbolic_module(Index m);

struct HyperbolicIso {
  RealHom forward;  // complexify(V) -> hyperbolic_module(m)
  RealHom inverse;
};

/// v + i v' -> (1/sqrt2)(v - J v', v + J v') and its inverse
/// (v-, v+) -> (1/sqrt2)(v- + v+) + (i/sqrt2)(J v- - J v+).
/// Both composites are checked to be identities.
HyperbolicIso hyperbolic_iso(const RealVS& v);

/// The forward formula on real vectors: returns (v - J v', v + J v') / sqrt2.
std::pair<Vector, Vector> hyperbolic_apply(const RealVS& v, const Vector& re, const Vector& im);
/// The inverse formula on real vectors: returns (real part, imaginary part).
std::pair<Vector, Vector> hyperbolic_inverse_apply(const RealVS& v, const Vector& minus,
                                                  const Vector& plus);

/// J (x) C transported through the hyperbolic isomorphism; checked to equal
/// diag(-i I, +i I) and returned.
Matrix diagonalized_complex_structure(const RealVS& v);

/// g(v, w) + i g(J v, w) for real vectors.
Scalar hermitian_form_value(const RealVS& v, const Vector& x, const Vector& y);

/// The Hermitian form on V_{+J} by the classical formula, in frame coordinates.
HermitianSpace inner_to_hermitian_formula(const RealVS& v);

/// The same form obtained structurally: transport g (x) C through the
/// hyperbolic isomorphism, check it vanishes off the +1 eigenspace of
/// diag(-i,+i) (x) diag(-i,+i), and read the V_{-J} (x) V_{+J} block.
/// Throws if it disagrees with the formula route.
HermitianSpace inner_to_hermitian_functorial(const RealVS& v);

/// g (x) C evaluated on (1/sqrt2)(v- + iJv-) (x) (1/sqrt2)(v+ - iJv+), the
/// images of (v-, 0) and (0, v+).
Scalar transported_pairing(const RealVS& v, const Vector& minus, const Vector& plus);

/// Bilinear form of g (x) C transported to hyperbolic_module coordinates.
Matrix transported_bilinear_form(const RealVS& v);

}  // namespace realdagger
