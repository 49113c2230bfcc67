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

#include "realdagger/linalg.hpp"

namespace realdagger {

Matrix entrywise_conj(const Matrix& a) {
  return a.unaryExpr([](const Scalar& x) { return x.conj(); });
}

Matrix conj_transpose(const Matrix& a) { return entrywise_conj(a).transpose(); }

bool is_real_matrix(const Matrix& a) {
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < a.cols(); ++c) {
      if (!a(r, c).is_real()) return false;
    }
  }
  return true;
}

Matrix realify(const Matrix& a, const Matrix& conj_part) {
  if (a.rows() != conj_part.rows() || a.cols() != conj_part.cols()) {
    throw ShapeMismatch("realify: linear and antilinear parts differ in shape");
  }
  auto re = [](const Matrix& m) { return Matrix(m.unaryExpr([](const Scalar& x) { return x.real_part(); })); };
  auto im = [](const Matrix& m) { return Matrix(m.unaryExpr([](const Scalar& x) { return x.imag_part(); })); };
  const Matrix ar = re(a), ai = im(a), cr = re(conj_part), ci = im(conj_part);
  // a(x + iy) + c(x - iy) = (ar x - ai y + cr x + ci y) + i(ai x + ar y + ci x - cr y)
  Matrix out(2 * a.rows(), 2 * a.cols());
  out << ar + cr, ci - ai, ai + ci, ar - cr;
  return out;
}

Matrix complex_from_realified(const Matrix& stacked) {
  if (stacked.rows() % 2 != 0) throw ShapeMismatch("complex_from_realified: odd row count");
  const Index n = stacked.rows() / 2;
  return stacked.topRows(n) + stacked.bottomRows(n) * Scalar::i();
}

Matrix kron_apply(const std::vector<Matrix>& factors, const Matrix& v) {
  std::vector<Index> dims;
  Index total = 1;
  for (const Matrix& f : factors) {
    dims.push_back(f.cols());
    total *= f.cols();
  }
  if (v.rows() != total) throw ShapeMismatch("kron_apply: vector length does not match the factors");
  Matrix cur = v;
  for (std::size_t t = 0; t < factors.size(); ++t) {
    const Matrix& f = factors[t];
    if (f.rows() == f.cols() && same_matrix(f, identity(f.rows()))) continue;
    Index outer = 1, inner = 1;
    for (std::size_t s = 0; s < t; ++s) outer *= dims[s];
    for (std::size_t s = t + 1; s < dims.size(); ++s) inner *= dims[s];
    const Index in_dim = dims[t];
    const Index out_dim = f.rows();
    Matrix next = Matrix::Zero(outer * out_dim * inner, cur.cols());
    for (Index col = 0; col < cur.cols(); ++col) {
      for (Index o = 0; o < outer; ++o) {
        for (Index k = 0; k < in_dim; ++k) {
          for (Index i = 0; i < inner; ++i) {
            const Scalar& x = cur((o * in_dim + k) * inner + i, col);
            if (x.is_zero()) continue;
            for (Index r = 0; r < out_dim; ++r) {
              if (f(r, k).is_zero()) continue;
              next((o * out_dim + r) * inner + i, col) += f(r, k) * x;
            }
          }
        }
      }
    }
    dims[t] = out_dim;
    cur = std::move(next);
  }
  return cur;
}

Matrix swap_matrix(Index m, Index n) {
  Matrix s = Matrix::Zero(m * n, m * n);
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < n; ++b) s(b * m + a, a * n + b) = Scalar(1);
  }
  return s;
}

std::string to_text(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return "[]";
  std::string out;
  for (Index r = 0; r < a.rows(); ++r) {
    if (r) out += ';';
    for (Index c = 0; c < a.cols(); ++c) {
      if (c) out += ',';
      out += a(r, c).str();
    }
  }
  return out;
}

Matrix parse_matrix(std::string_view text) {
  if (text == "[]") return Matrix(0, 0);
  std::vector<std::vector<Scalar>> rows;
  std::size_t row_start = 0;
  while (true) {
    const std::size_t row_end = std::min(text.find(';', row_start), text.size());
    std::vector<Scalar> row;
    std::size_t entry_start = row_start;
    while (true) {
      const std::size_t entry_end = std::min(text.find(',', entry_start), row_end);
      const std::string_view entry = text.substr(entry_start, entry_end - entry_start);
      try {
        row.push_back(Scalar::parse(entry));
      } catch (const ParseError& e) {
        throw e.relocated(0, entry_start);
      }
      if (entry_end == row_end) break;
      entry_start = entry_end + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("ragged matrix: row " + std::to_string(rows.size() + 1) + " has " +
                           std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       0, row_start + 1);
    }
    rows.push_back(std::move(row));
    if (row_end == text.size()) break;
    row_start = row_end + 1;
  }
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
    }
  }
  return m;
}

}  // namespace realdagger
