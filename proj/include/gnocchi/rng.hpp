// Seeded random number generation. All stochastic code in the library draws
// through this wrapper so that a seed fixes every stream bit-for-bit;
// std::normal_distribution is implementation-defined and is not used.
#pragma once

#include <cstdint>
#include <random>

#include "gnocchi/common.hpp"

namespace gnocchi {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller, no cached second value: two uniforms per draw.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(2.0 * M_PI * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Uniform integer in [lo, hi] inclusive, rejection-free bias below 2^-53.
  std::int64_t randint(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(uniform() * static_cast<double>(span));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(randint(0, static_cast<std::int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent child stream; distinct keys give decorrelated sequences.
  Rng fork(std::uint64_t key) {
    return Rng(gen_() ^ (key * 0x9E3779B97F4A7C15ull));
  }

  template <typename R>
  void fill_normal(Mat<R>& m, double stddev = 1.0) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = static_cast<R>(normal() * stddev);
  }

  template <typename R>
  void fill_uniform(Mat<R>& m, double lo, double hi) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = static_cast<R>(uniform(lo, hi));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gnocchi
