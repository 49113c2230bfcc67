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

#include "realdagger/hermitian.hpp"

namespace realdagger {
namespace {

Matrix m(const char* text) { return parse_matrix(text); }

const Matrix kHadamard = m("1/2*r2,1/2*r2;1/2*r2,-1/2*r2");

SelfDualRealModule diagonal_model() {
  return SelfDualRealModule{RealModule(2, m("0,1;1,0")), m("0,1,1,0"), m("0;1;1;0"), m("-i,0;0,i")};
}

TEST(HermitianSpace, Checks) {
  EXPECT_TRUE(HermitianSpace::standard(2).check().empty());
  EXPECT_FALSE((HermitianSpace{2, m("1,i;i,1")}).check().empty());
  EXPECT_FALSE((HermitianSpace{2, m("1,1;1,1")}).check().empty());
  EXPECT_TRUE(is_positive_definite(HermitianSpace{2, m("2,i;-i,1")}));
  EXPECT_FALSE(is_positive_definite(HermitianSpace{2, m("1,0;0,-1")}));
  EXPECT_FALSE(is_positive_definite(HermitianSpace{2, m("1,r2;r2,1")}));
  EXPECT_TRUE(is_positive_definite(HermitianSpace{2, m("3/2,r2;r2,3/2")}));
}

TEST(SelfDual, DiagonalModel) {
  const SelfDualRealModule s = diagonal_model();
  EXPECT_TRUE(s.check().empty());
  const EigenSplit e = split_eigenspaces(s);
  EXPECT_TRUE(same_matrix(e.minus, m("1;0")));
  EXPECT_TRUE(same_matrix(e.plus, m("0;1")));
  EXPECT_EQ(extract_hermitian(s), HermitianSpace::standard(1));
  // No pairing between two kets.
  EXPECT_EQ((s.pairing * kron(e.plus, e.plus))(0, 0), Scalar(0));
}

TEST(SelfDual, MakeSelfdual) {
  const SelfDualRealModule s = make_selfdual(HermitianSpace::standard(1));
  EXPECT_EQ(s.module, diagonal_model().module);
  EXPECT_TRUE(same_matrix(s.pairing, diagonal_model().pairing));
  EXPECT_TRUE(same_matrix(s.coev, diagonal_model().coev));
  EXPECT_TRUE(same_matrix(s.icplx, diagonal_model().icplx));
  EXPECT_EQ(extract_hermitian(make_selfdual(HermitianSpace::standard(2))), HermitianSpace::standard(2));
  const HermitianSpace skew{2, m("2,1+i;1-i,-3")};
  EXPECT_EQ(extract_hermitian(make_selfdual(skew)), skew);
  EXPECT_TRUE(make_selfdual(skew).check().empty());
  EXPECT_THROW(make_selfdual(HermitianSpace{2, m("1,1;1,1")}), InvariantViolation);
}

TEST(SelfDual, BrokenLawsAreNamed) {
  SelfDualRealModule s = diagonal_model();
  s.coev = m("0;2;2;0");
  const auto failures = s.check();
  ASSERT_FALSE(failures.empty());
  EXPECT_EQ(failures[0], "zig-zag (coev then pairing on the right)");
  s = diagonal_model();
  s.icplx = m("i,0;0,-i") * Scalar(2);
  EXPECT_FALSE(s.check().empty());
  s = diagonal_model();
  s.pairing = m("0,1,2,0");
  EXPECT_FALSE(s.check().empty());
  EXPECT_THROW(split_eigenspaces(s), InvariantViolation);
}

TEST(SelfDual, Transport) {
  const SelfDualRealModule s = make_selfdual(HermitianSpace{1, m("2")});
  const SelfDualRealModule t = transport(s, m("1,i;0,1"));
  EXPECT_TRUE(t.check().empty());
  EXPECT_EQ(extract_hermitian(t), extract_hermitian(s));
}

TEST(Maps, InternalizeAndExternalize) {
  const SelfDualRealModule s = make_selfdual(HermitianSpace::standard(2));
  EXPECT_TRUE(same_matrix(internalize_map(identity(2), s, s).mat(), identity(4)));
  EXPECT_TRUE(same_matrix(externalize_map(identity_hom(s.module), s, s), identity(2)));
  const Matrix g = m("1,i;2,-1/2*r2");
  EXPECT_TRUE(same_matrix(externalize_map(internalize_map(g, s, s), s, s), g));
  // Real homs that do not commute with icplx are rejected.
  const RealHom swap(s.module, s.module, m("0,0,1,0;0,0,0,1;1,0,0,0;0,1,0,0"));
  EXPECT_THROW(externalize_map(swap, s, s), InvariantViolation);
  EXPECT_THROW(internalize_map(m("1,2,3"), s, s), ShapeMismatch);
}

TEST(Dagger, StandardExamples) {
  const SelfDualRealModule s = make_selfdual(HermitianSpace::standard(2));
  EXPECT_TRUE(same_matrix(dagger(identity(2), s, s), identity(2)));
  EXPECT_TRUE(same_matrix(dagger(m("0,1;0,0"), s, s), m("0,0;1,0")));
  const Matrix g = m("1,i;2+r2,0");
  EXPECT_TRUE(same_matrix(dagger(g, s, s), conj_transpose(g)));
  EXPECT_TRUE(same_matrix(dagger(dagger(g, s, s), s, s), g));
}

TEST(Dagger, NonstandardForm) {
  const HermitianSpace h{2, m("2,i;-i,1")};
  const SelfDualRealModule s = make_selfdual(h);
  const Matrix g = m("0,1;0,0");
  const Matrix adj = dagger(g, s, s);
  EXPECT_TRUE(same_matrix(adj, Matrix(inverse(h.gram) * conj_transpose(g) * h.gram)));
  for (Index a = 0; a < 2; ++a) {
    for (Index b = 0; b < 2; ++b) {
      const Vector phi = identity(2).col(a), psi = identity(2).col(b);
      EXPECT_EQ(h.inner(phi, adj * psi), h.inner(g * phi, psi));
    }
  }
}

TEST(Dagger, BetweenDimensions) {
  const SelfDualRealModule one = make_selfdual(HermitianSpace::standard(1));
  const SelfDualRealModule two = make_selfdual(HermitianSpace::standard(2));
  const Matrix e0 = m("1;0");
  EXPECT_TRUE(same_matrix(dagger(e0, one, two), m("1,0")));
  EXPECT_TRUE(is_internal_isometry(e0, one, two));
  EXPECT_FALSE(is_unitary(e0, one, two));
}

TEST(Unitary, Examples) {
  const SelfDualRealModule s = make_selfdual(HermitianSpace::standard(2));
  EXPECT_TRUE(is_unitary(kHadamard, s, s));
  EXPECT_TRUE(same_matrix(Matrix(dagger(kHadamard, s, s) * kHadamard), identity(2)));
  EXPECT_FALSE(is_unitary(m("1,1;0,1"), s, s));
  EXPECT_FALSE(is_internal_isometry(m("1,1;0,1"), s, s));
  EXPECT_TRUE(is_unitary(m("0,i;1,0"), s, s));
}

}  // namespace
}  // namespace realdagger
