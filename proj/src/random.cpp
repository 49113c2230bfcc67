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

#include "realdagger/random.hpp"

namespace realdagger {

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational random_rational(Rng& rng) {
  if (rng.range(0, 2) == 0) return Rational(0);
  Rational r(static_cast<long>(rng.range(-3, 3)), static_cast<unsigned long>(rng.range(1, 3)));
  r.canonicalize();
  return r;
}

Scalar random_real_scalar(Rng& rng) {
  return Scalar(random_rational(rng), rng.range(0, 3) == 0 ? random_rational(rng) : Rational(0));
}

Scalar random_scalar(Rng& rng) {
  const Scalar re = random_real_scalar(rng);
  const Scalar im = random_real_scalar(rng);
  return re + im * Scalar::i();
}

Matrix random_matrix(Rng& rng, Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = random_scalar(rng);
  }
  return m;
}

Matrix random_real_matrix(Rng& rng, Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = random_real_scalar(rng);
  }
  return m;
}

Matrix random_invertible(Rng& rng, Index n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (rank(m) == n) return m;
  }
}

Matrix random_real_invertible(Rng& rng, Index n) {
  for (;;) {
    Matrix m = random_real_matrix(rng, n, n);
    if (rank(m) == n) return m;
  }
}

Matrix random_unimodular(Rng& rng, Index n) {
  static const Scalar units[] = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
  Matrix lower = identity(n);
  Matrix upper = identity(n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < r; ++c) {
      if (rng.coin()) lower(r, c) = units[rng.range(0, 3)];
      if (rng.coin()) upper(c, r) = units[rng.range(0, 3)];
    }
  }
  Matrix perm = Matrix::Zero(n, n);
  std::vector<Index> order;
  for (Index k = 0; k < n; ++k) order.push_back(k);
  for (Index k = n - 1; k > 0; --k) std::swap(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(rng.range(0, k))]);
  for (Index k = 0; k < n; ++k) perm(k, order[static_cast<std::size_t>(k)]) = 1;
  return perm * lower * upper;
}

RandomRealModule random_real_module(Rng& rng, Index n) {
  const Matrix q = random_invertible(rng, n);
  return RandomRealModule{RealModule(n, q * inverse(entrywise_conj(q))), q};
}

RealHom random_real_hom(Rng& rng, const RandomRealModule& m1, const RandomRealModule& m2) {
  const Matrix x = random_real_matrix(rng, m2.module.dim(), m1.module.dim());
  return RealHom(m1.module, m2.module, m2.q * x * inverse(m1.q));
}

RealVS random_realvs(Rng& rng, Index dim, bool with_g) {
  RealVS v{dim, std::nullopt, std::nullopt};
  if (with_g) {
    for (;;) {
      const Matrix s = random_real_matrix(rng, dim, dim);
      Matrix g = s + s.transpose();
      if (rank(g) == dim) {
        v.g = std::move(g);
        break;
      }
    }
  }
  v.validate();
  return v;
}

RealVS random_isometric(Rng& rng, Index dim) {
  if (dim % 2 != 0) throw ShapeMismatch("complex structure needs an even dimension");
  Matrix j0 = Matrix::Zero(dim, dim);
  for (Index k = 0; k < dim; k += 2) {
    j0(k + 1, k) = 1;
    j0(k, k + 1) = -1;
  }
  const Matrix a = random_real_invertible(rng, dim);
  const Matrix j = a * j0 * inverse(a);
  const Matrix b = random_real_invertible(rng, dim);
  Matrix g = b.transpose() * b;
  g = (g + j.transpose() * g * j) * Scalar(Rational(1, 2));
  RealVS v{dim, g, j};
  v.validate();
  return v;
}

Matrix random_hermitian_matrix(Rng& rng, Index n) {
  const Matrix x = random_matrix(rng, n, n);
  return x + conj_transpose(x);
}

Matrix random_gram(Rng& rng, Index n, bool positive) {
  if (positive) {
    Matrix b = random_unimodular(rng, n);
    b.row(rng.range(0, n - 1)) *= Scalar(static_cast<int>(rng.range(1, 2)));
    return conj_transpose(b) * b;
  }
  for (;;) {
    Matrix h = random_hermitian_matrix(rng, n);
    if (rank(h) == n) return h;
  }
}

Matrix random_hermitian_operator(Rng& rng, const HermitianSpace& h) {
  return inverse(h.gram) * random_hermitian_matrix(rng, h.dim);
}

Matrix random_unitary_word(Rng& rng, Index n, int length) {
  Matrix word = identity(n);
  for (int step = 0; step < length; ++step) {
    Matrix gate = identity(n);
    const auto kind = n == 1 ? 1 : rng.range(0, 2);
    const Index p = rng.range(0, n - 1);
    Index q = n == 1 ? 0 : rng.range(0, n - 2);
    if (q >= p) ++q;
    if (kind == 0) {
      const Scalar h = Scalar::inv_sqrt2();
      gate(p, p) = h;
      gate(p, q) = h;
      gate(q, p) = h;
      gate(q, q) = -h;
    } else if (kind == 1) {
      gate(p, p) = Scalar::i();
    } else {
      gate(p, p) = 0;
      gate(q, q) = 0;
      gate(p, q) = 1;
      gate(q, p) = 1;
    }
    word = gate * word;
  }
  return word;
}

SelfDualRealModule random_selfdual(Rng& rng, Index hilbert_dim, bool positive) {
  const SelfDualRealModule base = make_selfdual(HermitianSpace{hilbert_dim, random_gram(rng, hilbert_dim, positive)});
  SelfDualRealModule s = transport(base, random_unimodular(rng, 2 * hilbert_dim));
  s.validate();
  return s;
}

RealSet random_real_set(Rng& rng, Index size) {
  RealSet s{size, std::vector<Index>(static_cast<std::size_t>(size), -1)};
  for (Index x = 0; x < size; ++x) {
    if (s.tau[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<Index> free;
    for (Index y = x + 1; y < size; ++y) {
      if (s.tau[static_cast<std::size_t>(y)] < 0) free.push_back(y);
    }
    Index partner = x;
    if (!free.empty() && rng.coin()) partner = free[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(free.size()) - 1))];
    s.tau[static_cast<std::size_t>(x)] = partner;
    s.tau[static_cast<std::size_t>(partner)] = x;
  }
  return s;
}

RealBundle random_bundle(Rng& rng, const RealSet& base) {
  base.validate();
  const auto n = static_cast<std::size_t>(base.size);
  RealBundle b{base, std::vector<Index>(n, 0), std::vector<Matrix>(n)};
  for (Index x = 0; x < base.size; ++x) {
    const auto ux = static_cast<std::size_t>(x);
    const Index tx = base.tau[ux];
    if (tx < x) continue;
    const Index d = rng.range(1, 2);
    b.fibers[ux] = d;
    b.fibers[static_cast<std::size_t>(tx)] = d;
    if (tx == x) {
      b.phi[ux] = random_real_module(rng, d).module.inv();
    } else {
      const Matrix p = random_invertible(rng, d);
      b.phi[ux] = p;
      b.phi[static_cast<std::size_t>(tx)] = inverse(entrywise_conj(p));
    }
  }
  b.validate();
  return b;
}

}  // namespace realdagger
