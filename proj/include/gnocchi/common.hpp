// Common aliases and small helpers shared across the library.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnocchi {

inline constexpr const char* kVersion = "0.1.0";

template <typename R>
using Mat = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename R>
using Vec = Eigen::Matrix<R, Eigen::Dynamic, 1>;

using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;
using Vec6 = Eigen::Matrix<double, 6, 1>;

// Sequences are time-major: one (batch x dim) matrix per step.
template <typename R>
using Steps = std::vector<Mat<R>>;

[[noreturn]] inline void fail(const std::string& msg) { throw std::invalid_argument(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

template <typename R>
bool all_finite(const Mat<R>& m) {
  return m.allFinite();
}

template <typename R>
std::string shape_str(const Mat<R>& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

}  // namespace gnocchi
