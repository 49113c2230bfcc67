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

#include "realdagger/properties.hpp"

#include <chrono>
#include <stdexcept>

#include "realdagger/cli.hpp"

namespace realdagger {

namespace {

using Body = std::function<void(Rng&, int, Tally&)>;

Vector basis_vector(Index n, Index k) { return identity(n).col(k); }

Vector random_vector(Rng& rng, Index n) { return random_matrix(rng, n, 1); }

// A random square matrix of random rank, so that singular cases occur.
Matrix random_low_rank(Rng& rng, Index n) {
  const Index r = rng.range(0, n);
  return random_matrix(rng, n, r) * random_matrix(rng, r, n);
}

// (Re v, Im v) stacked, as realify expects.
Matrix stack_re_im(const Matrix& v) {
  Matrix out(2 * v.rows(), v.cols());
  out << v.unaryExpr([](const Scalar& x) { return x.real_part(); }),
      v.unaryExpr([](const Scalar& x) { return x.imag_part(); });
  return out;
}

std::string dims(Index a, Index b) { return std::to_string(a) + "x" + std::to_string(b); }

// Sesquilinearity of (x, y) -> f(x, y) at random arguments.
template <typename F>
void expect_sesquilinear(Rng& rng, Index n, F form, Tally& t) {
  const Vector x = random_vector(rng, n);
  const Vector y = random_vector(rng, n);
  const Vector z = random_vector(rng, n);
  const Scalar c = random_scalar(rng);
  t.expect(form(Vector(x * c), y) == conj(c) * form(x, y), "antilinear in the first slot");
  t.expect(form(x, Vector(y * c)) == c * form(x, y), "linear in the second slot");
  t.expect(form(Vector(x + z), y) == form(x, y) + form(z, y), "additive in the first slot");
  t.expect(form(y, x) == conj(form(x, y)), "conjugate symmetry");
}

void expect_hermitian_gram(Rng& rng, const HermitianSpace& h, Tally& t) {
  t.expect(same_matrix(conj_transpose(h.gram), h.gram), "gram is conjugate symmetric");
  t.expect(rank(h.gram) == h.dim, "gram is nondegenerate");
  expect_sesquilinear(rng, h.dim, [&](const Vector& x, const Vector& y) { return h.inner(x, y); }, t);
}

SelfDualRealModule standard_model(Index n) { return make_selfdual(HermitianSpace::standard(n)); }

// Hilbert space dimension cycling through 1..3 with both signatures.
SelfDualRealModule cycling_selfdual(Rng& rng, int index) {
  return random_selfdual(rng, 1 + index % 3, index % 2 == 0);
}

std::vector<Property> build() {
  std::vector<Property> ps;
  auto add = [&](const char* module, const char* name, int weight, int fixed, Body body) {
    ps.push_back(Property{module, name, weight, fixed, std::move(body)});
  };

  // Scalars.
  add("scalars", "field axioms", 10, 0, [](Rng& rng, int, Tally& t) {
    const Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    t.expect((x + y) + z == x + (y + z), "additive associativity");
    t.expect((x * y) * z == x * (y * z), "multiplicative associativity");
    t.expect(x * (y + z) == x * y + x * z, "distributivity");
    t.expect(x + y == y + x && x * y == y * x, "commutativity");
    t.expect(x + Scalar(0) == x && x * Scalar(1) == x, "identities");
    if (!x.is_zero()) t.expect(x * inv(x) == Scalar(1), "inverse");
  });
  add("scalars", "conjugation is a ring homomorphism", 10, 0, [](Rng& rng, int, Tally& t) {
    const Scalar x = random_scalar(rng), y = random_scalar(rng);
    t.expect(conj(x * y) == conj(x) * conj(y), "conj of a product");
    t.expect(conj(x + y) == conj(x) + conj(y), "conj of a sum");
    t.expect(conj(conj(x)) == x, "involutive");
    t.expect(real_part(x) == (x + conj(x)) * Scalar(Rational(1, 2)), "real part");
  });
  add("scalars", "norm is a nonnegative real", 10, 0, [](Rng& rng, int, Tally& t) {
    const Scalar x = random_scalar(rng);
    const Scalar norm = x * conj(x);
    t.expect(norm.is_real(), "x conj(x) is real");
    const int sign = sign_real(norm);
    t.expect(sign >= 0 && ((sign == 0) == x.is_zero()), "sign of x conj(x)");
  });
  add("scalars", "word-size coordinates agree with GMP", 10, 0, [](Rng& rng, int, Tally& t) {
    // Magnitudes near 2^62 so sums and products cross the int64 range.
    auto big = [&rng]() {
      mpz_class num = static_cast<unsigned long>(rng.next() >> 1);
      if (rng.coin()) num = -num;
      const mpz_class den = static_cast<unsigned long>(rng.range(1, 1 << 20));
      Rational q = rng.coin() ? Rational(num, den) : Rational(rng.range(-5, 5), 7);
      q.canonicalize();
      return q;
    };
    const Rational x = big(), y = big();
    const Coordinate cx(x), cy(y);
    t.expect((cx + cy).get() == x + y, "sum");
    t.expect((cx - cy).get() == x - y, "difference");
    t.expect((cx * cy).get() == x * y, "product");
    if (sgn(y) != 0) t.expect((cx / cy).get() == x / y, "quotient");
    const int c = cmp(x, y);
    t.expect(compare(cx, cy) == (c > 0) - (c < 0), "comparison");
    t.expect((cx == cy) == (x == y) && Coordinate((cx * cy).get()) == cx * cy, "canonical equality");
  });
  add("scalars", "text round trip", 10, 0, [](Rng& rng, int, Tally& t) {
    const Scalar x = random_scalar(rng);
    t.expect(Scalar::parse(x.str()) == x, "parse(print(x)) = x for " + x.str());
  });

  // Linear algebra.
  add("linalg", "inverse or kernel, never both", 2, 0, [](Rng& rng, int index, Tally& t) {
    const Index n = 1 + index % 4;
    const Matrix a = random_low_rank(rng, n);
    const bool has_kernel = !kernel_basis(a).empty();
    try {
      const Matrix a_inv = inverse(a);
      t.expect(same_matrix(Matrix(a * a_inv), identity(n)), "A A^-1 = I");
      t.expect(!has_kernel, "invertible matrix with a kernel");
    } catch (const SingularMatrix&) {
      t.expect(has_kernel, "singular matrix without a kernel");
    }
  });
  add("linalg", "kernel vectors annihilate and count", 1, 0, [](Rng& rng, int index, Tally& t) {
    const Index rows = 1 + index % 4;
    const Index cols = 1 + (index / 4) % 5;
    const Index inner = rng.range(0, rows + 1);
    const Matrix a = random_matrix(rng, rows, inner) * random_matrix(rng, inner, cols);
    const auto basis = kernel_basis(a);
    for (const Vector& v : basis) t.expect(is_zero_matrix(Matrix(a * v)), "A v = 0");
    t.expect(static_cast<Index>(basis.size()) == cols - rank(a), "kernel size = cols - rank on " + dims(rows, cols));
    t.expect(rank(columns_to_matrix(basis, cols)) == static_cast<Index>(basis.size()), "kernel basis independent");
  });
  add("linalg", "realify respects composition", 1, 0, [](Rng& rng, int, Tally& t) {
    // (A2, C2) after (A1, C1) is v -> (A2 A1 + C2 conj C1) v + (A2 C1 + C2 conj A1) conj v.
    const Matrix a1 = random_matrix(rng, 2, 2), c1 = random_matrix(rng, 2, 2);
    const Matrix a2 = random_matrix(rng, 2, 2), c2 = random_matrix(rng, 2, 2);
    const Matrix a = a2 * a1 + c2 * entrywise_conj(c1);
    const Matrix c = a2 * c1 + c2 * entrywise_conj(a1);
    t.expect(same_matrix(realify(a, c), Matrix(realify(a2, c2) * realify(a1, c1))), "realify of a composite");
    const Vector v = random_vector(rng, 2);
    const Vector direct = a1 * v + c1 * entrywise_conj(v);
    t.expect(same_matrix(complex_from_realified(Matrix(realify(a1, c1) * stack_re_im(v))), direct),
             "realify acts on (Re, Im)");
  });
  add("linalg", "kronecker mixed product", 1, 0, [](Rng& rng, int, Tally& t) {
    const Matrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    const Matrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
    t.expect(same_matrix(Matrix(kron(a, b) * kron(c, d)), kron(Matrix(a * c), Matrix(b * d))), "mixed product");
    const Vector v = random_vector(rng, 4);
    t.expect(same_matrix(kron_apply({a, b}, v), Matrix(kron(a, b) * v)), "kron_apply agrees with kron");
  });
  add("linalg", "matrix text round trip", 1, 0, [](Rng& rng, int index, Tally& t) {
    const Matrix a = random_matrix(rng, 1 + index % 3, 1 + index % 4);
    t.expect(same_matrix(parse_matrix(to_text(a)), a), "parse(print(A)) = A");
  });

  // Real modules.
  add("realmod", "constructed modules are involutive", 1, 0, [](Rng& rng, int index, Tally& t) {
    const RandomRealModule m1 = random_real_module(rng, 1 + index % 3);
    const RandomRealModule m2 = random_real_module(rng, 1 + (index / 3) % 2);
    for (const RealModule& m : {m1.module, m2.module, tensor(m1.module, m2.module), direct_sum(m1.module, m2.module),
                                tensor_unit(), complexify(RealVS{3, std::nullopt, std::nullopt})}) {
      t.expect(m.check().empty(), "inv conj(inv) = I");
    }
  });
  add("realmod", "homs compose and tensor", 1, 0, [](Rng& rng, int index, Tally& t) {
    const Index n = 1 + index % 2;
    const RandomRealModule a = random_real_module(rng, n), b = random_real_module(rng, 2), c = random_real_module(rng, 2);
    const RealHom f = random_real_hom(rng, a, b);
    const RealHom g = random_real_hom(rng, b, c);
    t.expect(is_real_hom(a.module, c.module, compose(g, f).mat()), "composite intertwines");
    t.expect(is_real_hom(tensor(a.module, b.module), tensor(b.module, c.module), tensor_hom(f, g).mat()),
             "tensor of homs intertwines");
    t.expect(same_matrix(compose(identity_hom(b.module), f).mat(), f.mat()), "identity is neutral");
    const RealHom s = braiding(a.module, b.module);
    t.expect(same_matrix(Matrix(braiding(b.module, a.module).mat() * s.mat()), identity(n * 2)), "braiding squares to id");
  });
  add("realmod", "braiding naturality", 1, 0, [](Rng& rng, int index, Tally& t) {
    const Index n1 = 1 + index % 2, n2 = 1 + (index / 2) % 2;
    const RandomRealModule a1 = random_real_module(rng, n1), b1 = random_real_module(rng, n1);
    const RandomRealModule a2 = random_real_module(rng, n2), b2 = random_real_module(rng, n2);
    const RealHom f1 = random_real_hom(rng, a1, b1);
    const RealHom f2 = random_real_hom(rng, a2, b2);
    const Matrix left = braiding(b1.module, b2.module).mat() * tensor_hom(f1, f2).mat();
    const Matrix right = tensor_hom(f2, f1).mat() * braiding(a1.module, a2.module).mat();
    t.expect(same_matrix(left, right), "sigma (f1 x f2) = (f2 x f1) sigma");
  });
  add("realmod", "fixed points have full real dimension", 1, 0, [](Rng& rng, int index, Tally& t) {
    const Index n = 1 + index % 4;
    const RealModule m = random_real_module(rng, n).module;
    const FixedPoints f = fixed_points(m);
    t.expect(f.dim == n, "real dimension of the fixed points");
    t.expect(same_matrix(m.apply_involution(f.basis), f.basis), "basis vectors are fixed");
    // Independence over the real subfield: the (Re, Im) stack has full rank.
    t.expect(rank(stack_re_im(f.basis)) == f.dim, "fixed basis is independent over Q(sqrt2)");
  });
  add("realmod", "associator and unitor coherence", 0, 1, [](Rng& rng, int, Tally& t) {
    const RealModule a = random_real_module(rng, 1).module;
    const RealModule b = random_real_module(rng, 2).module;
    const RealModule c = random_real_module(rng, 2).module;
    const RealModule u = tensor_unit();
    // Triangle: (id_a x lambda_b) . alpha_{a,1,b} = rho_a x id_b.
    const Matrix left = tensor_hom(identity_hom(a), left_unitor(b)).mat() * associator(a, u, b).mat();
    const Matrix right = tensor_hom(right_unitor(a), identity_hom(b)).mat();
    t.expect(same_matrix(left, right), "triangle identity");
    // Pentagon on (a, b, c, a).
    const Matrix p1 = associator(a, b, tensor(c, a)).mat() * associator(tensor(a, b), c, a).mat();
    const Matrix p2 = tensor_hom(identity_hom(a), associator(b, c, a)).mat() *
                      associator(a, tensor(b, c), a).mat() * tensor_hom(associator(a, b, c), identity_hom(a)).mat();
    t.expect(same_matrix(p1, p2), "pentagon identity");
    // Hexagon.
    const Matrix h1 = associator(b, c, a).mat() * braiding(a, tensor(b, c)).mat() * associator(a, b, c).mat();
    const Matrix h2 = tensor_hom(identity_hom(b), braiding(a, c)).mat() * associator(b, a, c).mat() *
                      tensor_hom(braiding(a, b), identity_hom(c)).mat();
    t.expect(same_matrix(h1, h2), "hexagon identity");
    t.expect(is_real_hom(tensor(u, b), b, left_unitor(b).mat()), "unitor is a Real hom");
    t.expect(same_matrix(negative_unit().mat(), Matrix(-identity(1))), "negative unit");
  });

  // Equivalence.
  add("equivalence", "complexification round trip", 1, 0, [](Rng& rng, int index, Tally& t) {
    const Index n = 1 + index % 4;
    const RealVS v = random_realvs(rng, n, index % 2 == 0);
    const FixedPoints f = fixed_points(complexify(v));
    t.expect(f.dim == v.dim, "fixed points of complexify(V) have dim V");
    t.expect(same_matrix(f.basis, identity(n)), "canonical isomorphism is the identity");
  });
  add("equivalence", "hyperbolic isomorphism", 1, 0, [](Rng& rng, int index, Tally& t) {
    const Index n = index % 2 == 0 ? 2 : 4;
    const RealVS v = random_isometric(rng, n);
    const HyperbolicIso iso = hyperbolic_iso(v);
    t.expect(is_real_hom(complexify(v), hyperbolic_module(n / 2), iso.forward.mat()), "forward intertwines");
    t.expect(is_real_hom(hyperbolic_module(n / 2), complexify(v), iso.inverse.mat()), "inverse intertwines");
    t.expect(same_matrix(Matrix(iso.forward.mat() * iso.inverse.mat()), identity(n)), "forward . inverse = id");
    t.expect(same_matrix(Matrix(iso.inverse.mat() * iso.forward.mat()), identity(n)), "inverse . forward = id");
    const Matrix d = diagonalized_complex_structure(v);
    t.expect(same_matrix(Matrix(d * d), Matrix(-identity(n))), "diagonalized J squares to -1");
    // Closed formulas on real vectors agree with the matrices.
    const Vector re = random_real_matrix(rng, n, 1), im = random_real_matrix(rng, n, 1);
    const auto [vm, vp] = hyperbolic_apply(v, re, im);
    const ComplexFrame f = complex_frame(v);
    const Matrix lhs = iso.forward.mat() * (re + im * Scalar::i());
    Matrix rhs(n, 1);
    rhs << entrywise_conj(Matrix(f.coords * vm)), Matrix(f.coords * vp);
    t.expect(same_matrix(lhs, rhs), "forward formula matches the matrix");
    const auto [back_re, back_im] = hyperbolic_inverse_apply(v, vm, vp);
    t.expect(same_matrix(back_re, re) && same_matrix(back_im, im), "inverse formula undoes forward formula");
  });
  add("equivalence", "formula and functorial Hermitian forms agree", 1, 0, [](Rng& rng, int index, Tally& t) {
    const RealVS v = random_isometric(rng, index % 2 == 0 ? 2 : 4);
    const HermitianSpace formula = inner_to_hermitian_formula(v);
    const HermitianSpace functorial = inner_to_hermitian_functorial(v);
    t.expect(formula == functorial, "exact gram equality");
    // The transported pairing of (v-, 0) and (0, v+) is g(v-, v+) + i g(J v-, v+).
    const Vector vm = random_real_matrix(rng, v.dim, 1), vp = random_real_matrix(rng, v.dim, 1);
    const Scalar expected = (vm.transpose() * *v.g * vp)(0, 0) + Scalar::i() * ((*v.J * vm).transpose() * *v.g * vp)(0, 0);
    t.expect(transported_pairing(v, vm, vp) == expected, "transported pairing value");
  });
  add("equivalence", "extracted grams are Hermitian", 1, 0, [](Rng& rng, int index, Tally& t) {
    expect_hermitian_gram(rng, inner_to_hermitian_formula(random_isometric(rng, index % 2 == 0 ? 2 : 4)), t);
    expect_hermitian_gram(rng, inner_to_hermitian_functorial(random_isometric(rng, 2)), t);
    const SelfDualRealModule s = cycling_selfdual(rng, index);
    const EigenSplit e = split_eigenspaces(s);
    const HermitianSpace h = extract_hermitian(s, e);
    expect_hermitian_gram(rng, h, t);
    // The raw pairing on (inv x) (x) y is sesquilinear in eigen coordinates.
    expect_sesquilinear(rng, h.dim, [&](const Vector& x, const Vector& y) {
      const Matrix bra = s.module.apply_involution(Matrix(e.plus * x));
      return (s.pairing * kron(bra, Matrix(e.plus * y)))(0, 0);
    }, t);
    expect_hermitian_gram(rng, extract_hermitian(quantize(1 + index % 4).space), t);
  });

  // Hermitian structure.
  add("hermitian", "self-dual module laws", 1, 0, [](Rng& rng, int index, Tally& t) {
    const SelfDualRealModule s = cycling_selfdual(rng, index);
    const auto failures = s.check();
    t.expect(failures.empty(), failures.empty() ? "" : failures.front());
    const EigenSplit e = split_eigenspaces(s);
    t.expect(e.minus.cols() == e.plus.cols() && 2 * e.plus.cols() == s.dim(), "eigenspaces split evenly");
    t.expect(same_matrix(Matrix(e.witness_back * entrywise_conj(e.witness)), identity(e.hilbert_dim())),
             "witness composite is the identity");
  });
  add("hermitian", "make_selfdual then extract is the identity", 1, 0, [](Rng& rng, int index, Tally& t) {
    const Index n = 1 + index % 3;
    const HermitianSpace h{n, random_gram(rng, n, index % 2 == 0)};
    t.expect(extract_hermitian(make_selfdual(h)) == h, "gram recovered exactly");
  });
  add("hermitian", "internalize and externalize are inverse", 1, 0, [](Rng& rng, int index, Tally& t) {
    const Geometry x1(cycling_selfdual(rng, index));
    const Geometry x2(cycling_selfdual(rng, index + 1));
    const Matrix g = random_matrix(rng, x2.split.hilbert_dim(), x1.split.hilbert_dim());
    const RealHom map = internalize_map(g, x1, x2);
    t.expect(same_matrix(externalize_map(map, x1, x2), g), "externalize . internalize = id");
    t.expect(same_matrix(internalize_map(externalize_map(map, x1, x2), x1, x2).mat(), map.mat()),
             "internalize . externalize = id");
  });
  add("hermitian", "adjoint law and dagger", 1, 0, [](Rng& rng, int index, Tally& t) {
    const Geometry x1(cycling_selfdual(rng, index));
    const Geometry x2(cycling_selfdual(rng, index / 3));
    const Index m1 = x1.split.hilbert_dim(), m2 = x2.split.hilbert_dim();
    const Matrix g = random_matrix(rng, m2, m1);
    const Matrix adj = dagger(g, x1, x2);
    for (Index a = 0; a < m1; ++a) {
      for (Index b = 0; b < m2; ++b) {
        const Vector phi = basis_vector(m1, a), psi = basis_vector(m2, b);
        t.expect(x1.form.inner(phi, adj * psi) == x2.form.inner(g * phi, psi), "<phi|g+ psi> = <g phi|psi>");
      }
    }
    t.expect(same_matrix(adj, gram_adjoint(g, x1.form, x2.form)), "duality route equals the gram adjoint");
    t.expect(same_matrix(dagger(adj, x2, x1), g), "dagger is involutive");
  });
  add("hermitian", "dagger is contravariant", 1, 0, [](Rng& rng, int index, Tally& t) {
    const Geometry x1(cycling_selfdual(rng, index));
    const Geometry x2(cycling_selfdual(rng, index + 1));
    const Geometry x3(cycling_selfdual(rng, index + 2));
    const Matrix h = random_matrix(rng, x2.split.hilbert_dim(), x1.split.hilbert_dim());
    const Matrix g = random_matrix(rng, x3.split.hilbert_dim(), x2.split.hilbert_dim());
    t.expect(same_matrix(dagger(Matrix(g * h), x1, x3), Matrix(dagger(h, x1, x2) * dagger(g, x2, x3))),
             "(g h)+ = h+ g+");
  });
  add("hermitian", "isometry verdicts agree", 1, 0, [](Rng& rng, int index, Tally& t) {
    const Index n = 1 + index % 3;
    if (index % 2 == 0) {
      const Geometry x(standard_model(n));
      const Matrix u = random_unitary_word(rng, n, 1 + index % 7);
      t.expect(is_internal_isometry(u, x, x), "unitary word is an internal isometry");
      t.expect(same_matrix(Matrix(dagger(u, x, x) * u), identity(n)), "unitary word has u+ u = 1");
      t.expect(is_unitary(u, x, x), "unitary word is unitary");
      t.expect(same_matrix(dagger(u, x, x), conj_transpose(u)), "standard dagger is the conjugate transpose");
    } else {
      const Geometry x(cycling_selfdual(rng, index));
      const Index m = x.split.hilbert_dim();
      const Matrix g = index % 4 == 1 ? identity(m) : random_matrix(rng, m, m);
      const bool oracle = same_matrix(Matrix(gram_adjoint(g, x.form, x.form) * g), identity(m));
      t.expect(is_internal_isometry(g, x, x) == oracle, "pairing route agrees with g+ g = 1");
    }
  });

  // Density.
  add("density", "CSMat fixed locus has dimension n^2", 0, 3, [](Rng&, int index, Tally& t) {
    const Index n = 1 + index;
    const CSMatSpace c = csmat(standard_model(n));
    const FixedLocus f = fixed_locus(c);
    t.expect(f.real_dim == n * n, "real dimension " + std::to_string(f.real_dim) + " for n = " + std::to_string(n));
    // Oracle: the operator images of the fixed basis are Hermitian and span
    // the n^2-dimensional real space of Hermitian matrices.
    Matrix images(2 * n * n, f.real_dim);
    for (Index k = 0; k < f.real_dim; ++k) {
      const Matrix rho = fixed_locus_to_hermitian_operator(c, f.vectors.col(k));
      t.expect(is_hermitian_operator(rho, HermitianSpace::standard(n)), "image is Hermitian");
      for (Index e = 0; e < n * n; ++e) {
        images(e, k) = rho(e / n, e % n).real_part();
        images(n * n + e, k) = rho(e / n, e % n).imag_part();
      }
    }
    t.expect(rank(images) == n * n, "images span the Hermitian operators");
  });
  add("density", "operator and fixed vector round trip", 1, 0, [](Rng& rng, int index, Tally& t) {
    const SelfDualRealModule s = index % 2 == 0 ? standard_model(2) : random_selfdual(rng, 2, index % 4 == 1);
    const CSMatSpace c = csmat(s);
    const HermitianSpace h = extract_hermitian(s);
    const Matrix rho = random_hermitian_operator(rng, h);
    const Matrix v = hermitian_operator_to_fixed_locus(c, rho);
    t.expect(same_matrix(fixed_locus_to_hermitian_operator(c, v), rho), "operator -> vector -> operator");
  });
  add("density", "G (x) G preserves CSMat", 1, 0, [](Rng& rng, int index, Tally& t) {
    const SelfDualRealModule s = cycling_selfdual(rng, index % 2);
    const Geometry x(s);
    const CSMatSpace c = csmat(s);
    const Index m = x.split.hilbert_dim();
    const RealHom map = internalize_map(random_matrix(rng, m, m), x, x);
    const Matrix moved = kron(map.mat(), map.mat()) * c.basis;
    t.expect(in_span(c.basis, moved), "image stays in CSMat");
  });
  add("density", "channels preserve hermiticity", 1, 0, [](Rng& rng, int index, Tally& t) {
    const DensityGeometry d(index % 2 == 0 ? standard_model(2) : random_selfdual(rng, 2, index % 4 == 1));
    const HermitianSpace& h = d.geometry.form;
    const Matrix out = channel(random_matrix(rng, 2, 2), random_hermitian_operator(rng, h), d);
    t.expect(is_hermitian_operator(out, h), "g rho g+ is Hermitian");
  });
  add("density", "unitary channels preserve trace", 1, 0, [](Rng& rng, int index, Tally& t) {
    static const DensityGeometry d(standard_model(2));
    const HermitianSpace h = HermitianSpace::standard(2);
    const Matrix u = random_unitary_word(rng, 2, 1 + index % 6);
    const Matrix rho = random_hermitian_operator(rng, h);
    const ChannelReport r = channel_with_certificates(u, rho, d);
    t.expect(r.trace_preserved, "trace preserved");
    t.expect(r.hermitian, "result Hermitian");
    t.expect(operator_trace(r.result, h) == rho.trace(), "trace equals the matrix trace");
  });
  add("density", "channels compose", 1, 0, [](Rng& rng, int index, Tally& t) {
    const DensityGeometry d(index % 2 == 0 ? standard_model(2) : random_selfdual(rng, 2, true));
    const Matrix g1 = index % 3 == 0 ? random_unitary_word(rng, 2, 3) : random_matrix(rng, 2, 2);
    const Matrix g2 = random_matrix(rng, 2, 2);
    const Matrix rho = random_hermitian_operator(rng, d.geometry.form);
    t.expect(same_matrix(channel(g2, channel(g1, rho, d), d), channel(Matrix(g2 * g1), rho, d)),
             "channel(g2, channel(g1, rho)) = channel(g2 g1, rho)");
  });

  // Quantization.
  add("quantization", "internal complex numbers", 0, 1, [](Rng&, int, Tally& t) {
    const InternalComplex c = internal_complex();
    const auto failures = c.check();
    t.expect(failures.empty(), failures.empty() ? "" : failures.front());
    const Matrix re = basis_vector(2, 0), im = basis_vector(2, 1);
    t.expect(same_matrix(Matrix(c.mult * kron(re, re)), re), "Re Re = Re");
    t.expect(same_matrix(Matrix(c.mult * kron(im, im)), Matrix(-re)), "Im Im = -Re");
    t.expect(same_matrix(Matrix(c.mult * kron(re, im)), im) && same_matrix(Matrix(c.mult * kron(im, re)), im), "Re Im = Im");
    t.expect(same_matrix(Matrix(c.conj_endo * im), Matrix(-im)), "conj Im = -Im");
    t.expect(rank(c.conj_endo) == 2, "conjugation is an automorphism");
  });
  add("quantization", "reflection of random bundles", 1, 0, [](Rng& rng, int index, Tally& t) {
    const RealSet base = random_real_set(rng, 1 + index % 4);
    const RealBundle b = random_bundle(rng, base);
    const RealModule m = reflect(b);
    t.expect(m.check().empty(), "reflection is a Real module");
    t.expect(m.dim() == b.total_rank(), "reflection dimension");
    // Reflects validity: breaking one covering iso breaks the module.
    RealBundle broken = b;
    broken.phi[0] = broken.phi[0] * Scalar(2);
    t.expect(!broken.check().empty(), "broken bundle is rejected");
    const RealBundle tensor = external_tensor(b, random_bundle(rng, random_real_set(rng, 1 + index % 2)));
    t.expect(tensor.check().empty(), "external tensor is a Real bundle");
  });
  add("quantization", "complex bundles as Real bundles", 1, 0, [](Rng& rng, int index, Tally& t) {
    std::vector<Index> fiber_dims;
    for (int k = 0; k <= index % 3; ++k) fiber_dims.push_back(rng.range(1, 2));
    const ComplexAsRealBundle c = complex_to_real_bundle(fiber_dims);
    t.expect(c.bundle.check().empty(), "bundle is valid");
    t.expect(is_bundle_endomorphism(c.bundle, c.complex_structure), "structure covers the identity");
    const Matrix icplx = reflect_map(c.bundle, c.complex_structure);
    const RealModule m = reflect(c.bundle);
    t.expect(is_real_hom(m, m, icplx), "reflected structure is a Real hom");
    t.expect(same_matrix(Matrix(icplx * icplx), Matrix(-identity(m.dim()))), "reflected structure squares to -1");
    std::vector<Matrix> maps;
    for (Index d : fiber_dims) maps.push_back(random_matrix(rng, d, d));
    t.expect(is_bundle_endomorphism(c.bundle, complex_to_real_bundle_map(maps)), "complex maps give bundle maps");
    t.expect(is_real_hom(m, m, reflect_map(c.bundle, complex_to_real_bundle_map(maps))), "and reflect to Real homs");
  });
  add("quantization", "quantized sets are standard Hilbert spaces", 0, 4, [](Rng&, int index, Tally& t) {
    const Index n = 1 + index;
    const Quantized q = quantize(n);
    const auto failures = q.space.check();
    t.expect(failures.empty(), failures.empty() ? "" : failures.front());
    const HermitianSpace h = extract_hermitian(q.space);
    t.expect(h == HermitianSpace::standard(n), "gram is the identity");
    t.expect(is_positive_definite(h), "positive definite");
    const auto states = quantize_unit(q);
    t.expect(static_cast<Index>(states.size()) == n, "one state per element");
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        const Matrix bra = q.space.module.apply_involution(states[static_cast<std::size_t>(a)]);
        const Scalar value = (q.space.pairing * kron(bra, Matrix(states[static_cast<std::size_t>(b)])))(0, 0);
        t.expect(value == Scalar(a == b ? 1 : 0), "<a|b> = delta");
      }
    }
  });
  add("quantization", "base change bookkeeping", 1, 0, [](Rng& rng, int index, Tally& t) {
    // Cover X = Y x Z -> Y by projection; degree |Z| on every orbit.
    const RealSet y = random_real_set(rng, 1 + index % 2);
    const RealSet z = random_real_set(rng, 1 + (index / 2) % 2);
    const RealSet x = product(y, z);
    EquivariantMap f{x, y, {}};
    for (Index p = 0; p < x.size; ++p) f.map.push_back(p / z.size);
    const RealBundle b = random_bundle(rng, y);
    const RealBundle up = pullback(f, b);
    const RealBundle down = pushforward(f, up);
    for (Index p = 0; p < y.size; ++p) {
      t.expect(down.fibers[static_cast<std::size_t>(p)] == z.size * b.fibers[static_cast<std::size_t>(p)],
               "pushforward of pullback multiplies rank by the degree");
    }
    EquivariantMap id{y, y, {}};
    for (Index p = 0; p < y.size; ++p) id.map.push_back(p);
    const RealBundle same = pullback(id, b);
    bool equal = same.fibers == b.fibers;
    for (std::size_t k = 0; equal && k < b.phi.size(); ++k) equal = same_matrix(same.phi[k], b.phi[k]);
    t.expect(equal, "pullback along the identity");
  });

  // Command line.
  add("cli", "spec files round trip", 1, 0, [](Rng& rng, int index, Tally& t) {
    const Index n = 1 + index % 3;
    const RandomRealModule m = random_real_module(rng, n);
    const Matrix gram = random_gram(rng, n, index % 2 == 0);
    std::string text = "module m dim=" + std::to_string(n) + " inv=" + to_text(m.module.inv()) + "\n";
    text += "hermitian q dim=" + std::to_string(n) + " gram=" + to_text(gram) + "\n";
    text += "gate g on=q mat=" + to_text(random_matrix(rng, n, n)) + "\n";
    text += "operator r on=q mat=" + to_text(random_hermitian_operator(rng, HermitianSpace{n, gram})) + "\n";
    text += "channel c gate=g rho=r\n";
    text += "realvs v dim=2 g=1,0;0,1 J=0,-1;1,0\nquantize w basis=a,b\nrealset x size=2 tau=1,0\n";
    const std::string once = print_workspace(load_workspace(parse_spec(text)));
    const std::string twice = print_workspace(load_workspace(parse_spec(once)));
    t.expect(once == twice, "print . parse is idempotent");
    t.expect(same_matrix(load_workspace(parse_spec(once)).modules.at("m").inv(), m.module.inv()), "module survives");
  });
  return ps;
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

void Tally::expect(bool ok, const std::string& what) {
  if (ok) return;
  if (failures_ == 0) first_ = what;
  ++failures_;
}

const std::vector<Property>& properties() {
  static const std::vector<Property> all = build();
  return all;
}

const Property& find_property(const std::string& name) {
  for (const Property& p : properties()) {
    if (p.name == name) return p;
  }
  throw std::out_of_range("no property named '" + name + "'");
}

PropertyResult run_property(const Property& p, std::uint64_t seed, int cases) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed ^ name_hash(p.module + "/" + p.name));
  PropertyResult r{p.module, p.name, p.case_count(cases), 0, "", 0};
  for (int k = 0; k < r.cases; ++k) {
    Tally t;
    try {
      p.body(rng, k, t);
    } catch (const std::exception& e) {
      t.fail(std::string("exception: ") + e.what());
    }
    if (t.failures() > 0) {
      if (r.failures == 0) r.first_failure = "case " + std::to_string(k) + ": " + t.first_failure();
      ++r.failures;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<PropertyResult> run_selftest(std::uint64_t seed, int cases) {
  std::vector<PropertyResult> out;
  for (const Property& p : properties()) out.push_back(run_property(p, seed, cases));
  return out;
}

}  // namespace realdagger
