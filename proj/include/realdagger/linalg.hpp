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

#pragma once

#include <Eigen/Core>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <unsupported/Eigen/KroneckerProduct>
#include <utility>
#include <vector>

#include "realdagger/errors.hpp"
#include "realdagger/scalar.hpp"

namespace realdagger {

template <typename T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Scalar>;
using Vector = VectorX<Scalar>;
using Index = Eigen::Index;

/// Exact field element: closed under + - * / with decidable equality.
template <typename T>
concept ExactField = requires(T x, T y) {
  { x + y } -> std::convertible_to<T>;
  { x - y } -> std::convertible_to<T>;
  { x * y } -> std::convertible_to<T>;
  { x / y } -> std::convertible_to<T>;
  { x == y } -> std::convertible_to<bool>;
  T(0);
  T(1);
};

template <ExactField T>
bool is_zero(const T& x) {
  if constexpr (requires { x.is_zero(); }) {
    return x.is_zero();
  } else {
    return x == T(0);
  }
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (!is_zero<T>(m(r, c))) return false;
    }
  }
  return true;
}

template <typename DA, typename DB>
bool same_matrix(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < a.cols(); ++c) {
      if (!(a(r, c) == b(r, c))) return false;
    }
  }
  return true;
}

template <ExactField T>
MatrixX<T> identity(Index n) {
  return MatrixX<T>::Identity(n, n);
}

inline Matrix identity(Index n) { return Matrix::Identity(n, n); }

// Shape-checked arithmetic. Eigen's own operators assert instead of throwing.

template <ExactField T>
MatrixX<T> matmul(const MatrixX<T>& a, const MatrixX<T>& b) {
  if (a.cols() != b.rows()) {
    throw ShapeMismatch("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  return a * b;
}

template <ExactField T>
MatrixX<T> add(const MatrixX<T>& a, const MatrixX<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("add: shapes differ");
  return a + b;
}

template <ExactField T>
MatrixX<T> scale(const T& s, const MatrixX<T>& a) {
  return a * s;
}

template <ExactField T>
MatrixX<T> transpose(const MatrixX<T>& a) {
  return a.transpose();
}

template <ExactField T>
MatrixX<T> kron(const MatrixX<T>& a, const MatrixX<T>& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

/// Reduced row echelon form and its pivot columns.
template <ExactField T>
struct RowEchelon {
  MatrixX<T> reduced;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination. The pivot in each column is the first nonzero
/// entry at or below the current row, so the result depends only on the input.
template <ExactField T>
RowEchelon<T> rref(MatrixX<T> m) {
  RowEchelon<T> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && is_zero<T>(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const T inv_pivot = T(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv_pivot;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero<T>(m(r, col))) continue;
      const T factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) {
        if (!is_zero<T>(m(row, c))) m(r, c) = m(r, c) - factor * m(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <ExactField T>
Index rank(const MatrixX<T>& m) {
  return rref(m).rank();
}

/// Null space basis read off the reduced row echelon form: one vector per
/// free column, in ascending column order, with a 1 in that free slot.
template <ExactField T>
std::vector<VectorX<T>> kernel_basis(const MatrixX<T>& a) {
  const RowEchelon<T> e = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<VectorX<T>> basis;
  for (Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<T> v = VectorX<T>::Zero(a.cols());
    v(free) = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      v(e.pivots[r]) = -e.reduced(static_cast<Index>(r), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Columns stacked side by side; `rows` fixes the height of an empty list.
template <ExactField T>
MatrixX<T> columns_to_matrix(const std::vector<VectorX<T>>& cols, Index rows) {
  MatrixX<T> m(rows, static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) m.col(static_cast<Index>(k)) = cols[k];
  return m;
}

template <ExactField T>
MatrixX<T> kernel_matrix(const MatrixX<T>& a) {
  return columns_to_matrix(kernel_basis(a), a.cols());
}

template <ExactField T>
MatrixX<T> inverse(const MatrixX<T>& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("inverse: matrix is not square");
  const Index n = a.rows();
  MatrixX<T> aug(n, 2 * n);
  aug << a, MatrixX<T>::Identity(n, n);
  const RowEchelon<T> e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) throw SingularMatrix();
  return e.reduced.rightCols(n);
}

template <ExactField T>
T determinant(MatrixX<T> m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant: matrix is not square");
  T det(1);
  const Index n = m.rows();
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && is_zero<T>(m(pivot, col))) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det = det * m(col, col);
    const T inv_pivot = T(1) / m(col, col);
    for (Index r = col + 1; r < n; ++r) {
      if (is_zero<T>(m(r, col))) continue;
      const T factor = m(r, col) * inv_pivot;
      for (Index c = col; c < n; ++c) m(r, c) = m(r, c) - factor * m(col, c);
    }
  }
  return det;
}

/// The unique X with a * X = b, or nullopt when b is outside the column span
/// of a. Throws ShapeMismatch when a has dependent columns.
template <ExactField T>
std::optional<MatrixX<T>> solve(const MatrixX<T>& a, const MatrixX<T>& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("solve: row counts differ");
  MatrixX<T> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  const RowEchelon<T> e = rref(std::move(aug));
  Index lhs_rank = 0;
  for (Index p : e.pivots) {
    if (p >= a.cols()) return std::nullopt;
    ++lhs_rank;
  }
  if (lhs_rank != a.cols()) throw ShapeMismatch("solve: coefficient columns are dependent");
  return MatrixX<T>(e.reduced.topRightCorner(a.cols(), b.cols()));
}

/// True iff every column of `vectors` lies in the column span of `span`.
template <ExactField T>
bool in_span(const MatrixX<T>& span, const MatrixX<T>& vectors) {
  MatrixX<T> both(span.rows(), span.cols() + vectors.cols());
  both << span, vectors;
  return rank(both) == rank(span);
}

// Cyclotomic-specific helpers.

Matrix entrywise_conj(const Matrix& a);
/// Conjugate transpose.
Matrix conj_transpose(const Matrix& a);
bool is_real_matrix(const Matrix& a);

/// Matrix over the real subfield of v -> a*v + conj_part*conj(v), acting on
/// (Re v, Im v) stacked as a 2n vector.
Matrix realify(const Matrix& a, const Matrix& conj_part);

/// Inverse of the (Re, Im) stacking: the complex vectors re + i*im.
Matrix complex_from_realified(const Matrix& stacked);

/// (A_1 (x) ... (x) A_k) * v without forming the Kronecker product: v is read
/// as a row-major tensor and each factor acts on its own slot.
Matrix kron_apply(const std::vector<Matrix>& factors, const Matrix& v);

/// Permutation matrix of v (x) w -> w (x) v on C^m (x) C^n.
Matrix swap_matrix(Index m, Index n);

/// Text form: rows separated by `;`, entries by `,`; the 0x0 matrix is `[]`.
std::string to_text(const Matrix& a);
Matrix parse_matrix(std::string_view text);

}  // namespace realdagger
