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

#include <gtest/gtest.h>

#include "realdagger/equivalence.hpp"

namespace realdagger {
namespace {

Matrix m(const char* text) { return parse_matrix(text); }

const RealVS kPlane{2, m("1,0;0,1"), m("0,-1;1,0")};

TEST(Equivalence, Complexify) {
  const RealModule line = complexify(RealVS{1, std::nullopt, std::nullopt});
  EXPECT_EQ(line, tensor_unit());
  EXPECT_TRUE(same_matrix(complexify(RealVS{2, std::nullopt, std::nullopt}).inv(), identity(2)));
  const FixedPoints f = fixed_points(complexify(RealVS{3, std::nullopt, std::nullopt}));
  EXPECT_EQ(f.dim, 3);
  EXPECT_TRUE(same_matrix(f.basis, identity(3)));
}

TEST(Equivalence, Validation) {
  EXPECT_FALSE((RealVS{2, m("1,0;0,1"), m("0,1;1,0")}).check().empty());   // J^2 = +1
  EXPECT_FALSE((RealVS{2, m("1,0;0,-1"), m("0,-1;1,0")}).check().empty());  // g indefinite
  EXPECT_FALSE((RealVS{2, m("1,0;0,2"), m("0,-1;1,0")}).check().empty());   // J not isometric
  EXPECT_FALSE((RealVS{3, std::nullopt, m("0,-1,0;1,0,0;0,0,1")}).check().empty());
  EXPECT_FALSE((RealVS{1, m("i"), std::nullopt}).check().empty());
  EXPECT_TRUE(kPlane.check().empty());
  EXPECT_THROW(hyperbolic_iso(RealVS{2, std::nullopt, std::nullopt}), InvariantViolation);
}

TEST(Equivalence, HyperbolicFormulas) {
  const auto [minus, plus] = hyperbolic_apply(kPlane, m("1;0"), m("0;1"));
  EXPECT_TRUE(same_matrix(minus, Matrix(m("1;0") * Scalar::sqrt2())));
  EXPECT_TRUE(same_matrix(plus, m("0;0")));

  const Vector v = m("2/3;-1");
  const auto [re, im] = hyperbolic_inverse_apply(kPlane, v, m("0;0"));
  EXPECT_TRUE(same_matrix(re, Matrix(v * Scalar::inv_sqrt2())));
  EXPECT_TRUE(same_matrix(im, Matrix(*kPlane.J * v * Scalar::inv_sqrt2())));
}

TEST(Equivalence, HyperbolicIso) {
  const HyperbolicIso iso = hyperbolic_iso(kPlane);
  EXPECT_TRUE(same_matrix(Matrix(iso.forward.mat() * iso.inverse.mat()), identity(2)));
  EXPECT_TRUE(same_matrix(Matrix(iso.inverse.mat() * iso.forward.mat()), identity(2)));
  EXPECT_EQ(iso.forward.target(), hyperbolic_module(1));
  // For this J the frame is e0 and e0 + i e1 has V_{+J} coordinate 1 + i*i = 0.
  EXPECT_TRUE(same_matrix(Matrix(iso.forward.mat() * m("1;i")), Matrix(m("1;0") * Scalar::sqrt2())));
}

TEST(Equivalence, DiagonalizedComplexStructure) {
  const Matrix d = diagonalized_complex_structure(kPlane);
  EXPECT_TRUE(same_matrix(d, m("-i,0;0,i")));
  EXPECT_TRUE(same_matrix(Matrix(d * d), Matrix(-identity(2))));
  const RealVS four{4, identity(4), m("0,-1,0,0;1,0,0,0;0,0,0,-1;0,0,1,0")};
  EXPECT_TRUE(same_matrix(diagonalized_complex_structure(four), m("-i,0,0,0;0,-i,0,0;0,0,i,0;0,0,0,i")));
}

TEST(Equivalence, HermitianFormValues) {
  const Vector e1 = m("1;0"), e2 = m("0;1");
  EXPECT_EQ(hermitian_form_value(kPlane, e1, e1), Scalar(1));
  EXPECT_EQ(hermitian_form_value(kPlane, e1, e2), Scalar::i());
  Matrix values(2, 2);
  for (Index a = 0; a < 2; ++a) {
    for (Index b = 0; b < 2; ++b) values(a, b) = hermitian_form_value(kPlane, identity(2).col(a), identity(2).col(b));
  }
  EXPECT_TRUE(same_matrix(values, m("1,i;-i,1")));
}

TEST(Equivalence, FormulaAndFunctorialAgree) {
  const HermitianSpace formula = inner_to_hermitian_formula(kPlane);
  const HermitianSpace functorial = inner_to_hermitian_functorial(kPlane);
  EXPECT_EQ(formula, functorial);
  EXPECT_EQ(formula, HermitianSpace::standard(1));
  const RealVS scaled{2, m("3,0;0,3"), m("0,-1;1,0")};
  EXPECT_TRUE(same_matrix(inner_to_hermitian_functorial(scaled).gram, m("3")));
}

TEST(Equivalence, TransportedPairing) {
  const Vector vm = m("1;2"), vp = m("-1/2;3");
  const Scalar expected = (vm.transpose() * vp)(0, 0) + Scalar::i() * ((*kPlane.J * vm).transpose() * vp)(0, 0);
  EXPECT_EQ(transported_pairing(kPlane, vm, vp), expected);
  // The transported form vanishes on V_{-J} (x) V_{-J} and V_{+J} (x) V_{+J}.
  const Matrix form = transported_bilinear_form(kPlane);
  EXPECT_TRUE(same_matrix(form, m("0,1;1,0")));
}

}  // namespace
}  // namespace realdagger
