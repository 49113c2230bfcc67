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

#include "realdagger/linalg.hpp"

namespace realdagger {
namespace {

Matrix m(const char* text) { return parse_matrix(text); }

const Matrix kHadamard = m("1/2*r2,1/2*r2;1/2*r2,-1/2*r2");

TEST(Linalg, Products) {
  const Matrix a = m("1,i;r2,-1/3");
  EXPECT_TRUE(same_matrix(matmul(identity(2), a), a));
  EXPECT_TRUE(same_matrix(entrywise_conj(m("i")), m("-i")));
  EXPECT_TRUE(same_matrix(transpose(transpose(a)), a));
  EXPECT_TRUE(same_matrix(conj_transpose(a), m("1,r2;-i,-1/3")));
  EXPECT_THROW(matmul(a, m("1,2,3")), ShapeMismatch);
  EXPECT_THROW(add(a, m("1")), ShapeMismatch);
  EXPECT_TRUE(same_matrix(scale(Scalar(2), a), m("2,2*i;2*r2,-2/3")));
}

TEST(Linalg, Kronecker) {
  EXPECT_TRUE(same_matrix(kron(identity(2), identity(3)), identity(6)));
  const Matrix x = m("0,1;1,0");
  const Matrix e00 = m("1;0;0;0");
  EXPECT_TRUE(same_matrix(Matrix(kron(x, identity(2)) * e00), m("0;0;1;0")));
  EXPECT_TRUE(same_matrix(kron_apply({x, identity(2)}, e00), m("0;0;1;0")));
  EXPECT_TRUE(same_matrix(Matrix(swap_matrix(2, 2) * m("0;1;0;0")), m("0;0;1;0")));
}

TEST(Linalg, Kernels) {
  EXPECT_TRUE(kernel_basis(identity(3)).empty());
  const auto zero = kernel_basis(Matrix(Matrix::Zero(2, 3)));
  ASSERT_EQ(zero.size(), 3u);
  for (Index k = 0; k < 3; ++k) EXPECT_TRUE(same_matrix(zero[static_cast<std::size_t>(k)], identity(3).col(k)));
  const auto line = kernel_basis(m("1,-1"));
  ASSERT_EQ(line.size(), 1u);
  EXPECT_TRUE(same_matrix(line[0], m("1;1")));
  EXPECT_EQ(rank(m("1,2;2,4")), 1);
}

TEST(Linalg, Inverses) {
  EXPECT_TRUE(same_matrix(inverse(identity(3)), identity(3)));
  EXPECT_TRUE(same_matrix(inverse(m("2,0;0,i")), m("1/2,0;0,-i")));
  EXPECT_TRUE(same_matrix(Matrix(kHadamard * kHadamard), identity(2)));
  EXPECT_TRUE(same_matrix(inverse(kHadamard), kHadamard));
  EXPECT_THROW(inverse(m("1,2;2,4")), SingularMatrix);
  EXPECT_THROW(inverse(m("1,2")), ShapeMismatch);
  EXPECT_EQ(determinant(m("1,2;3,4")), Scalar(-2));
  const auto x = solve(m("2,0;0,i"), m("1;1"));
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(same_matrix(*x, m("1/2;-i")));
  EXPECT_FALSE(solve(m("1;1"), m("1;2")).has_value());
}

TEST(Linalg, Realify) {
  EXPECT_TRUE(same_matrix(realify(identity(1), m("0")), identity(2)));
  EXPECT_TRUE(same_matrix(realify(m("0"), identity(1)), m("1,0;0,-1")));
  EXPECT_TRUE(same_matrix(realify(m("i"), m("0")), m("0,-1;1,0")));
  EXPECT_TRUE(same_matrix(complex_from_realified(m("1;2")), m("1+2*i")));
}

TEST(Linalg, TextForm) {
  const Matrix a = m("1/2*r2, -i; 0, 3/4+i*r2");
  EXPECT_EQ(to_text(a), "1/2*r2,-i;0,3/4+i*r2");
  EXPECT_TRUE(same_matrix(parse_matrix(to_text(a)), a));
  EXPECT_THROW(parse_matrix("1,2;3"), ParseError);
  try {
    parse_matrix("1,1//2");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(Linalg, GenericOverRationals) {
  // The algorithms are generic over exact fields; GMP rationals work as is.
  MatrixX<Rational> a(2, 2);
  a << 1, 2, 3, 4;
  const MatrixX<Rational> a_inv = inverse(a);
  EXPECT_TRUE(same_matrix(MatrixX<Rational>(a * a_inv), identity<Rational>(2)));
  EXPECT_EQ(rank(a), 2);
}

}  // namespace
}  // namespace realdagger
