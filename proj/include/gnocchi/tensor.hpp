// Flat row-major tensor used as the serialization / exchange object.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gnocchi/common.hpp"

namespace gnocchi {

struct Tensor {
  std::vector<std::int64_t> shape;
  std::vector<float> values;  // row-major

  std::int64_t size() const {
    std::int64_t n = 1;
    for (auto d : shape) n *= d;
    return shape.empty() ? 0 : n;
  }

  void validate(const std::string& name = "tensor") const {
    for (auto d : shape) require(d >= 0, name + ": negative dim");
    require(static_cast<std::int64_t>(values.size()) == size(),
            name + ": value count does not match shape product");
    for (float v : values) require(std::isfinite(v), name + ": non-finite value");
  }
};

template <typename R>
Tensor to_tensor(const Mat<R>& m) {
  Tensor t;
  t.shape = {m.rows(), m.cols()};
  t.values.resize(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      t.values[static_cast<std::size_t>(i * m.cols() + j)] = static_cast<float>(m(i, j));
  return t;
}

template <typename R>
Mat<R> to_matrix(const Tensor& t) {
  require(t.shape.size() == 2, "to_matrix: tensor is not rank-2");
  Mat<R> m(t.shape[0], t.shape[1]);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = static_cast<R>(t.values[static_cast<std::size_t>(i * m.cols() + j)]);
  return m;
}

}  // namespace gnocchi
