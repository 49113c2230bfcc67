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

// Seeded generators of small exact test objects.

#pragma once

#include <cstdint>
#include <random>

#include "realdagger/density.hpp"
#include "realdagger/equivalence.hpp"
#include "realdagger/quantization.hpp"

namespace realdagger {

/// Thin wrapper over mt19937_64 with range reduction done by hand, so a seed
/// produces the same objects with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  bool coin() { return range(0, 1) == 1; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// p/q with |p| <= 3, 1 <= q <= 3; zero about a third of the time.
Rational random_rational(Rng& rng);
Scalar random_real_scalar(Rng& rng);
Scalar random_scalar(Rng& rng);

Matrix random_matrix(Rng& rng, Index rows, Index cols);
/// Entries in the real subfield Q(sqrt2).
Matrix random_real_matrix(Rng& rng, Index rows, Index cols);
Matrix random_invertible(Rng& rng, Index n);
Matrix random_real_invertible(Rng& rng, Index n);
/// Permuted product of unit triangular matrices with entries in {0, +-1, +-i}:
/// invertible with an inverse of the same kind.
Matrix random_unimodular(Rng& rng, Index n);

/// A Real module with inv = Q conj(Q)^-1, together with Q. The columns of Q
/// are a real-subfield basis of the fixed points.
struct RandomRealModule {
  RealModule module;
  Matrix q;
};

RandomRealModule random_real_module(Rng& rng, Index n);
/// Q2 X Q1^-1 with X over the real subfield.
RealHom random_real_hom(Rng& rng, const RandomRealModule& m1, const RandomRealModule& m2);

/// Real space of the given dimension, optionally with an inner product.
RealVS random_realvs(Rng& rng, Index dim, bool with_g);
/// Even dimension: J = A J0 A^-1 for the block rotation J0 and g the
/// J-average of B^T B.
RealVS random_isometric(Rng& rng, Index dim);

Matrix random_hermitian_matrix(Rng& rng, Index n);
/// Positive-definite B^H B, or an arbitrary nondegenerate Hermitian gram.
Matrix random_gram(Rng& rng, Index n, bool positive);
/// rho with gram * rho Hermitian.
Matrix random_hermitian_operator(Rng& rng, const HermitianSpace& h);

/// Word of the given length in Hadamards on coordinate pairs, the phase
/// diag(1, i) on one coordinate, and transpositions.
Matrix random_unitary_word(Rng& rng, Index n, int length);

/// make_selfdual of a random gram, transported along a random unimodular map.
SelfDualRealModule random_selfdual(Rng& rng, Index hilbert_dim, bool positive);

RealSet random_real_set(Rng& rng, Index size);
/// Fibers of dimension 1 or 2; phi = P and conj(P)^-1 on free orbits and a
/// random Real structure on fixed points.
RealBundle random_bundle(Rng& rng, const RealSet& base);

}  // namespace realdagger
