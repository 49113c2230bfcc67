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

#include "realdagger/quantization.hpp"

#include <set>

namespace realdagger {

namespace {

std::size_t at(Index k) { return static_cast<std::size_t>(k); }

Matrix basis_vector(Index n, Index k) { return identity(n).col(k); }

}  // namespace

std::vector<std::string> InternalComplex::check() const {
  std::vector<std::string> failures;
  const Matrix id = identity(2);
  if (!same_matrix(Matrix(mult * kron(mult, id)), Matrix(mult * kron(id, mult)))) {
    failures.emplace_back("associativity");
  }
  if (!same_matrix(Matrix(mult * kron(unit, id)), id)) failures.emplace_back("left unit");
  if (!same_matrix(Matrix(mult * kron(id, unit)), id)) failures.emplace_back("right unit");
  if (!same_matrix(Matrix(mult * swap_matrix(2, 2)), mult)) failures.emplace_back("commutativity");
  if (!same_matrix(Matrix(conj_endo * conj_endo), id)) failures.emplace_back("conjugation is involutive");
  if (!same_matrix(Matrix(conj_endo * mult), Matrix(mult * kron(conj_endo, conj_endo)))) {
    failures.emplace_back("conjugation preserves multiplication");
  }
  if (!same_matrix(Matrix(conj_endo * unit), unit)) failures.emplace_back("conjugation preserves the unit");
  if (!same_matrix(Matrix(mult * basis_vector(4, 3)), Matrix(-basis_vector(2, 0)))) {
    failures.emplace_back("i squared is -1");
  }
  return failures;
}

InternalComplex internal_complex() {
  // Columns: Re.Re -> Re, Re.Im -> Im, Im.Re -> Im, Im.Im -> -Re.
  Matrix mult(2, 4);
  mult << 1, 0, 0, -1,
          0, 1, 1, 0;
  Matrix conj_endo(2, 2);
  conj_endo << 1, 0,
               0, -1;
  InternalComplex c{mult, basis_vector(2, 0), conj_endo};
  const auto failures = c.check();
  if (!failures.empty()) throw InvariantViolation(failures.front(), "internal complex numbers");
  return c;
}

std::vector<std::string> RealSet::check() const {
  std::vector<std::string> failures;
  if (static_cast<Index>(tau.size()) != size) {
    failures.emplace_back("involution size");
    return failures;
  }
  for (Index x = 0; x < size; ++x) {
    if (tau[at(x)] < 0 || tau[at(x)] >= size || tau[at(tau[at(x)])] != x) {
      failures.emplace_back("involutivity");
      break;
    }
  }
  return failures;
}

void RealSet::validate() const {
  const auto failures = check();
  if (!failures.empty()) throw InvariantViolation(failures.front(), "not a Real set");
}

Index RealSet::fixed_point_count() const {
  Index count = 0;
  for (Index x = 0; x < size; ++x) count += tau[at(x)] == x ? 1 : 0;
  return count;
}

RealSet trivial_embed(Index n) {
  RealSet s{n, {}};
  for (Index x = 0; x < n; ++x) s.tau.push_back(x);
  return s;
}

RealSet free_embed(Index n) {
  RealSet s{2 * n, std::vector<Index>(at(2 * n))};
  for (Index k = 0; k < n; ++k) {
    s.tau[at(k)] = n + k;
    s.tau[at(n + k)] = k;
  }
  return s;
}

RealSet product(const RealSet& x, const RealSet& y) {
  RealSet p{x.size * y.size, {}};
  for (Index a = 0; a < x.size; ++a) {
    for (Index b = 0; b < y.size; ++b) p.tau.push_back(x.tau[at(a)] * y.size + y.tau[at(b)]);
  }
  return p;
}

void EquivariantMap::validate() const {
  source.validate();
  target.validate();
  if (static_cast<Index>(map.size()) != source.size) throw ShapeMismatch("equivariant map: wrong number of images");
  for (Index x = 0; x < source.size; ++x) {
    const Index fx = map[at(x)];
    if (fx < 0 || fx >= target.size) throw ShapeMismatch("equivariant map: image out of range");
    if (map[at(source.tau[at(x)])] != target.tau[at(fx)]) {
      throw InvariantViolation("equivariance", "f(tau x) != tau f(x) at x = " + std::to_string(x));
    }
  }
}

std::vector<std::string> RealBundle::check() const {
  std::vector<std::string> failures = base.check();
  if (!failures.empty()) return failures;
  if (static_cast<Index>(fibers.size()) != base.size || static_cast<Index>(phi.size()) != base.size) {
    failures.emplace_back("fiber count");
    return failures;
  }
  for (Index x = 0; x < base.size; ++x) {
    const Index tx = base.tau[at(x)];
    if (fibers[at(tx)] != fibers[at(x)]) {
      failures.emplace_back("fiber dimensions match across the involution");
      return failures;
    }
    if (phi[at(x)].rows() != fibers[at(tx)] || phi[at(x)].cols() != fibers[at(x)]) {
      failures.emplace_back("covering iso shape");
      return failures;
    }
  }
  for (Index x = 0; x < base.size; ++x) {
    const Index tx = base.tau[at(x)];
    if (!same_matrix(Matrix(phi[at(tx)] * entrywise_conj(phi[at(x)])), identity(fibers[at(x)]))) {
      failures.emplace_back("covering isos are involutive");
      break;
    }
  }
  return failures;
}

void RealBundle::validate() const {
  const auto failures = check();
  if (!failures.empty()) throw InvariantViolation(failures.front(), "not a Real bundle");
}

Index RealBundle::total_rank() const {
  Index r = 0;
  for (Index d : fibers) r += d;
  return r;
}

RealBundle line_bundle(const RealSet& base) {
  return RealBundle{base, std::vector<Index>(at(base.size), 1), std::vector<Matrix>(at(base.size), identity(1))};
}

RealBundle pullback(const EquivariantMap& f, const RealBundle& b) {
  f.validate();
  b.validate();
  if (!(b.base.tau == f.target.tau)) throw InvariantViolation("base", "bundle does not live over the target");
  RealBundle out{f.source, {}, {}};
  for (Index x = 0; x < f.source.size; ++x) {
    out.fibers.push_back(b.fibers[at(f.map[at(x)])]);
    out.phi.push_back(b.phi[at(f.map[at(x)])]);
  }
  out.validate();
  return out;
}

RealBundle pushforward(const EquivariantMap& f, const RealBundle& b) {
  f.validate();
  b.validate();
  if (!(b.base.tau == f.source.tau)) throw InvariantViolation("base", "bundle does not live over the source");
  // Offset of each source fiber inside the fiber over its image.
  std::vector<Index> offset(at(f.source.size), 0);
  RealBundle out{f.target, std::vector<Index>(at(f.target.size), 0), {}};
  for (Index x = 0; x < f.source.size; ++x) {
    const Index y = f.map[at(x)];
    offset[at(x)] = out.fibers[at(y)];
    out.fibers[at(y)] += b.fibers[at(x)];
  }
  for (Index y = 0; y < f.target.size; ++y) {
    out.phi.push_back(Matrix::Zero(out.fibers[at(f.target.tau[at(y)])], out.fibers[at(y)]));
  }
  for (Index x = 0; x < f.source.size; ++x) {
    const Index tx = f.source.tau[at(x)];
    out.phi[at(f.map[at(x)])].block(offset[at(tx)], offset[at(x)], b.fibers[at(tx)], b.fibers[at(x)]) = b.phi[at(x)];
  }
  out.validate();
  return out;
}

RealBundle external_tensor(const RealBundle& b1, const RealBundle& b2) {
  b1.validate();
  b2.validate();
  RealBundle out{product(b1.base, b2.base), {}, {}};
  for (Index x = 0; x < b1.base.size; ++x) {
    for (Index y = 0; y < b2.base.size; ++y) {
      out.fibers.push_back(b1.fibers[at(x)] * b2.fibers[at(y)]);
      out.phi.push_back(kron(b1.phi[at(x)], b2.phi[at(y)]));
    }
  }
  out.validate();
  return out;
}

ComplexAsRealBundle complex_to_real_bundle(const std::vector<Index>& dims) {
  const Index n = static_cast<Index>(dims.size());
  ComplexAsRealBundle out{RealBundle{free_embed(n), {}, {}}, {}};
  for (int mirror = 0; mirror < 2; ++mirror) {
    const Scalar phase = mirror ? -Scalar::i() : Scalar::i();
    for (Index d : dims) {
      out.bundle.fibers.push_back(d);
      // v in V_x goes to conj(v) in the mirror copy: phi = I.
      out.bundle.phi.push_back(identity(d));
      out.complex_structure.push_back(identity(d) * phase);
    }
  }
  out.bundle.validate();
  return out;
}

std::vector<Matrix> complex_to_real_bundle_map(const std::vector<Matrix>& maps) {
  std::vector<Matrix> out = maps;
  for (const Matrix& a : maps) out.push_back(entrywise_conj(a));
  return out;
}

bool is_bundle_endomorphism(const RealBundle& b, const std::vector<Matrix>& fiber_maps) {
  if (static_cast<Index>(fiber_maps.size()) != b.base.size) return false;
  for (Index x = 0; x < b.base.size; ++x) {
    const Matrix& fx = fiber_maps[at(x)];
    if (fx.rows() != b.fibers[at(x)] || fx.cols() != b.fibers[at(x)]) return false;
    const Matrix& ftx = fiber_maps[at(b.base.tau[at(x)])];
    if (!same_matrix(Matrix(ftx * b.phi[at(x)]), Matrix(b.phi[at(x)] * entrywise_conj(fx)))) return false;
  }
  return true;
}

RealModule reflect(const RealBundle& b) {
  b.validate();
  std::vector<Index> offset;
  Index total = 0;
  for (Index d : b.fibers) {
    offset.push_back(total);
    total += d;
  }
  Matrix inv = Matrix::Zero(total, total);
  for (Index x = 0; x < b.base.size; ++x) {
    const Index tx = b.base.tau[at(x)];
    inv.block(offset[at(tx)], offset[at(x)], b.fibers[at(tx)], b.fibers[at(x)]) = b.phi[at(x)];
  }
  return RealModule(total, std::move(inv));
}

Matrix reflect_map(const RealBundle& b, const std::vector<Matrix>& fiber_maps) {
  if (!is_bundle_endomorphism(b, fiber_maps)) {
    throw InvariantViolation("bundle map", "fiber maps do not commute with the covering isos");
  }
  const Index total = b.total_rank();
  Matrix out = Matrix::Zero(total, total);
  Index offset = 0;
  for (Index x = 0; x < b.base.size; ++x) {
    out.block(offset, offset, b.fibers[at(x)], b.fibers[at(x)]) = fiber_maps[at(x)];
    offset += b.fibers[at(x)];
  }
  return out;
}

Matrix admissible_pairings(const RealModule& m, const Matrix& icplx) {
  const Index n = m.dim();
  const Index nn = n * n;
  const Matrix id = identity(nn);
  const Matrix zero = Matrix::Zero(nn, nn);
  // Unknown: the pairing row p, stored as the column p^T. Constraints
  // p sigma = p, p (icplx (x) icplx) = p, p (inv (x) inv) = conj(p).
  const Matrix symmetric = realify(Matrix(swap_matrix(n, n).transpose() - id), zero);
  const Matrix isometric = realify(Matrix(kron(icplx, icplx).transpose() - id), zero);
  const Matrix equivariant = realify(Matrix(kron(m.inv(), m.inv()).transpose()), Matrix(-id));
  Matrix system(3 * 2 * nn, 2 * nn);
  system << symmetric, isometric, equivariant;
  return complex_from_realified(kernel_matrix(system));
}

Quantized quantize(const std::vector<std::string>& labels) {
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    throw InvariantViolation("distinct labels", "quantized set has repeated elements");
  }
  const Index n = static_cast<Index>(labels.size());

  // One smooth point: its pairing is unique up to a real scale; fix the
  // scale by <1|1> = +1.
  const ComplexAsRealBundle point = complex_to_real_bundle({1});
  const RealModule point_module = reflect(point.bundle);
  const Matrix point_icplx = reflect_map(point.bundle, point.complex_structure);
  const Matrix choices = admissible_pairings(point_module, point_icplx);
  if (choices.cols() != 1) {
    throw InvariantViolation("unique pairing", "the smooth point admits " + std::to_string(choices.cols()) +
                                                   " independent pairings");
  }
  // <1|1> = (inv e0, e0) = pairing at the (mirror, point) slot 1*2 + 0.
  const Scalar norm = choices(2, 0);
  const Matrix point_pairing = choices / norm;

  // W is a disjoint union of smooth points; the pairing is their orthogonal sum.
  const ComplexAsRealBundle bundle = complex_to_real_bundle(std::vector<Index>(at(n), 1));
  const RealModule module = reflect(bundle.bundle);
  const Matrix icplx = reflect_map(bundle.bundle, bundle.complex_structure);
  Matrix form = Matrix::Zero(2 * n, 2 * n);
  for (Index x = 0; x < n; ++x) {
    const Index slot[2] = {x, n + x};
    for (Index a = 0; a < 2; ++a) {
      for (Index b = 0; b < 2; ++b) form(slot[a], slot[b]) = point_pairing(a * 2 + b, 0);
    }
  }
  const Matrix dual = inverse(form);
  Matrix pairing(1, 4 * n * n);
  Matrix coev(4 * n * n, 1);
  for (Index a = 0; a < 2 * n; ++a) {
    for (Index b = 0; b < 2 * n; ++b) {
      pairing(0, a * 2 * n + b) = form(a, b);
      coev(a * 2 * n + b, 0) = dual(a, b);
    }
  }
  Quantized q{labels, SelfDualRealModule{module, pairing, coev, icplx}};
  q.space.validate();
  return q;
}

Quantized quantize(Index n) {
  std::vector<std::string> labels;
  for (Index k = 0; k < n; ++k) labels.push_back(std::to_string(k));
  return quantize(labels);
}

std::vector<Vector> quantize_unit(const Quantized& q) {
  const EigenSplit e = split_eigenspaces(q.space);
  std::vector<Vector> states;
  for (Index k = 0; k < e.hilbert_dim(); ++k) states.emplace_back(e.plus.col(k));
  return states;
}

}  // namespace realdagger
