// Copyright 2026 The rumourlab Authors.
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

#include "rumourlab/grad/sparse.hpp"

#include <algorithm>

#include "rumourlab/error.hpp"

namespace rumourlab::grad {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols) {
  for (const Triplet& t : triplets) {
    if (t.row >= rows || t.col >= cols) {
      throw ValidationError("sparse entry (" + std::to_string(t.row) + "," + std::to_string(t.col) +
                            ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    }
  }
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  row_ptr_.assign(rows + 1, 0);
  for (std::size_t i = 0; i < triplets.size(); ++i) {
    const Triplet& t = triplets[i];
    if (i > 0 && triplets[i - 1].row == t.row && triplets[i - 1].col == t.col) {
      values_.back() += t.value;
      continue;
    }
    col_index_.push_back(t.col);
    values_.push_back(t.value);
    ++row_ptr_[t.row + 1];
  }
  for (std::size_t r = 0; r < rows; ++r) row_ptr_[r + 1] += row_ptr_[r];
}

double SparseMatrix::at(std::size_t row, std::size_t col) const {
  const auto begin = col_index_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
  const auto end = col_index_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
  const auto it = std::lower_bound(begin, end, col);
  if (it == end || *it != col) return 0.0;
  return values_[static_cast<std::size_t>(it - col_index_.begin())];
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      out.push_back({r, col_index_[k], values_[k]});
    }
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Triplet> flipped = triplets();
  for (Triplet& t : flipped) std::swap(t.row, t.col);
  return SparseMatrix(cols_, rows_, std::move(flipped));
}

Tensor SparseMatrix::to_dense() const {
  Tensor dense(Shape{rows_, cols_}, 0.0);
  for (const Triplet& t : triplets()) dense.at(t.row, t.col) = t.value;
  return dense;
}

void SparseMatrix::multiply(const double* x, std::size_t width, double* out) const {
  std::fill(out, out + rows_ * width, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    double* dst = out + r * width;
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const double v = values_[k];
      const double* src = x + col_index_[k] * width;
      for (std::size_t j = 0; j < width; ++j) dst[j] += v * src[j];
    }
  }
}

void SparseMatrix::multiply_transpose_add(const double* g, std::size_t width, double* out) const {
  for (std::size_t r = 0; r < rows_; ++r) {
    const double* src = g + r * width;
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const double v = values_[k];
      double* dst = out + col_index_[k] * width;
      for (std::size_t j = 0; j < width; ++j) dst[j] += v * src[j];
    }
  }
}

}  // namespace rumourlab::grad
