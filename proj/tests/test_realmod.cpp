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

#include "realdagger/realmod.hpp"

namespace realdagger {
namespace {

Matrix m(const char* text) { return parse_matrix(text); }

const RealModule kR = tensor_unit();

TEST(RealModule, Unit) {
  EXPECT_EQ(kR.dim(), 1);
  EXPECT_TRUE(same_matrix(kR.apply_involution(m("i")), m("-i")));
  EXPECT_TRUE(kR.check().empty());
}

TEST(RealModule, Validation) {
  EXPECT_THROW(RealModule(1, m("2")), InvariantViolation);
  EXPECT_NO_THROW(RealModule(1, m("i")));
  const RealModule bad = RealModule::unchecked(1, m("2"));
  ASSERT_EQ(bad.check().size(), 1u);
  EXPECT_EQ(bad.check()[0], "involutivity");
  EXPECT_FALSE(RealModule::unchecked(2, m("1")).check().empty());
}

TEST(RealModule, TensorAndSum) {
  const RealModule rr = tensor(kR, kR);
  EXPECT_EQ(rr.dim(), 1);
  EXPECT_TRUE(same_matrix(left_unitor(kR).mat(), identity(1)));
  EXPECT_TRUE(same_matrix(Matrix(left_unitor(kR).mat() * rr.inv()), kR.inv()));
  EXPECT_EQ(direct_sum(kR, kR).dim(), 2);
  const RealModule swap(2, m("0,1;1,0"));
  EXPECT_TRUE(same_matrix(tensor(swap, kR).inv(), swap.inv()));
  EXPECT_TRUE(same_matrix(direct_sum(kR, swap).inv(), m("1,0,0;0,0,1;0,1,0")));
}

TEST(RealModule, Braiding) {
  EXPECT_TRUE(same_matrix(braiding(kR, kR).mat(), identity(1)));
  const RealModule two(2, identity(2));
  EXPECT_TRUE(same_matrix(Matrix(braiding(two, two).mat() * m("0;1;0;0")), m("0;0;1;0")));
  const RealModule three(3, identity(3));
  const Matrix s = braiding(two, three).mat();
  EXPECT_TRUE(same_matrix(Matrix(braiding(three, two).mat() * s), identity(6)));
}

TEST(RealModule, Homs) {
  const RealHom f(kR, kR, m("3"));
  EXPECT_TRUE(same_matrix(compose(identity_hom(kR), f).mat(), f.mat()));
  EXPECT_FALSE(is_real_hom(kR, kR, m("i")));
  EXPECT_THROW(RealHom(kR, kR, m("i")), InvariantViolation);
  const RealModule minus(1, m("-1"));
  EXPECT_TRUE(is_real_hom(kR, minus, m("i")));
  EXPECT_THROW(compose(f, RealHom(minus, minus, m("1"))), InvariantViolation);
  EXPECT_TRUE(same_matrix(negative_unit().mat(), m("-1")));
}

TEST(RealModule, FixedPoints) {
  const FixedPoints reals = fixed_points(kR);
  EXPECT_EQ(reals.dim, 1);
  EXPECT_TRUE(same_matrix(reals.basis, m("1")));
  const FixedPoints imaginary = fixed_points(RealModule(1, m("-1")));
  EXPECT_EQ(imaginary.dim, 1);
  EXPECT_TRUE(same_matrix(imaginary.basis, m("i")));
  const FixedPoints swapped = fixed_points(RealModule(2, m("0,1;1,0")));
  EXPECT_EQ(swapped.dim, 2);
  const RealModule swap(2, m("0,1;1,0"));
  EXPECT_TRUE(same_matrix(swap.apply_involution(swapped.basis), swapped.basis));
}

}  // namespace
}  // namespace realdagger
