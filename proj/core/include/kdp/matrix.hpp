// Copyright 2026 The KDP Authors
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

#ifndef KDP_MATRIX_HPP_
#define KDP_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "kdp/rng.hpp"

namespace kdp {

// Dense row-major float32 matrix. Vectors are 1xN or Nx1 as convenient.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<float> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0f) {}

  float& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  float at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }

  std::span<float> row(int r) {
    return {data.data() + static_cast<std::size_t>(r) * cols,
            static_cast<std::size_t>(cols)};
  }
  std::span<const float> row(int r) const {
    return {data.data() + static_cast<std::size_t>(r) * cols,
            static_cast<std::size_t>(cols)};
  }

  std::size_t size() const { return data.size(); }

  static DenseMatrix zeros(int r, int c) { return DenseMatrix(r, c); }
  static DenseMatrix filled(int r, int c, float value);
  // entries ~ N(0, scale^2)
  static DenseMatrix randn(int r, int c, Rng& rng, float scale = 1.0f);
};

bool same_shape(const DenseMatrix& a, const DenseMatrix& b);
bool all_finite(const DenseMatrix& m);

// c = a * b
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
// c = a * b^T
DenseMatrix matmul_bt(const DenseMatrix& a, const DenseMatrix& b);
// c = a^T * b
DenseMatrix matmul_at(const DenseMatrix& a, const DenseMatrix& b);

void add_inplace(DenseMatrix& a, const DenseMatrix& b);
void sub_inplace(DenseMatrix& a, const DenseMatrix& b);
void scale_inplace(DenseMatrix& a, float s);
// adds the 1xN row vector to every row of a
void add_row_broadcast(DenseMatrix& a, const DenseMatrix& row);
void tanh_inplace(DenseMatrix& a);
// column sums as a 1xN row vector
DenseMatrix column_sums(const DenseMatrix& a);

}  // namespace kdp

#endif  // KDP_MATRIX_HPP_
