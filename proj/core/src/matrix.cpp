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

#include "kdp/matrix.hpp"

#include <Eigen/Core>
#include <cmath>
#include <string>

#include "kdp/error.hpp"

namespace kdp {
namespace {

using EigenMap =
    Eigen::Map<Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using ConstEigenMap = Eigen::Map<
    const Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

ConstEigenMap map(const DenseMatrix& m) {
  return ConstEigenMap(m.data.data(), m.rows, m.cols);
}

EigenMap map(DenseMatrix& m) { return EigenMap(m.data.data(), m.rows, m.cols); }

std::string shape_str(const DenseMatrix& m) {
  return std::to_string(m.rows) + "x" + std::to_string(m.cols);
}

}  // namespace

DenseMatrix DenseMatrix::filled(int r, int c, float value) {
  DenseMatrix m(r, c);
  std::fill(m.data.begin(), m.data.end(), value);
  return m;
}

DenseMatrix DenseMatrix::randn(int r, int c, Rng& rng, float scale) {
  DenseMatrix m(r, c);
  for (auto& v : m.data) v = scale * static_cast<float>(rng.normal());
  return m;
}

bool same_shape(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols;
}

bool all_finite(const DenseMatrix& m) {
  for (float v : m.data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) {
    throw ShapeError("matmul: " + shape_str(a) + " * " + shape_str(b));
  }
  DenseMatrix c(a.rows, b.cols);
  map(c).noalias() = map(a) * map(b);
  return c;
}

DenseMatrix matmul_bt(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.cols) {
    throw ShapeError("matmul_bt: " + shape_str(a) + " * " + shape_str(b) + "^T");
  }
  DenseMatrix c(a.rows, b.rows);
  map(c).noalias() = map(a) * map(b).transpose();
  return c;
}

DenseMatrix matmul_at(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows != b.rows) {
    throw ShapeError("matmul_at: " + shape_str(a) + "^T * " + shape_str(b));
  }
  DenseMatrix c(a.cols, b.cols);
  map(c).noalias() = map(a).transpose() * map(b);
  return c;
}

void add_inplace(DenseMatrix& a, const DenseMatrix& b) {
  if (!same_shape(a, b)) {
    throw ShapeError("add: " + shape_str(a) + " vs " + shape_str(b));
  }
  map(a) += map(b);
}

void sub_inplace(DenseMatrix& a, const DenseMatrix& b) {
  if (!same_shape(a, b)) {
    throw ShapeError("sub: " + shape_str(a) + " vs " + shape_str(b));
  }
  map(a) -= map(b);
}

void scale_inplace(DenseMatrix& a, float s) { map(a) *= s; }

void add_row_broadcast(DenseMatrix& a, const DenseMatrix& row) {
  if (row.rows != 1 || row.cols != a.cols) {
    throw ShapeError("broadcast: " + shape_str(a) + " += " + shape_str(row));
  }
  map(a).rowwise() += ConstEigenMap(row.data.data(), 1, row.cols).row(0);
}

void tanh_inplace(DenseMatrix& a) {
  for (auto& v : a.data) v = std::tanh(v);
}

DenseMatrix column_sums(const DenseMatrix& a) {
  DenseMatrix s(1, a.cols);
  map(s) = map(a).colwise().sum();
  return s;
}

}  // namespace kdp
