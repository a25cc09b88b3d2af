// Sinusoidal position features for diffusion-step indices.
#pragma once

#include "gnocchi/common.hpp"

namespace gnocchi {

// Alternating sin/cos of the step index at geometrically spaced frequencies
// (base 10000). Odd sizes end on a sin slot.
template <typename R>
Vec<R> sinusoidal_embedding(int step_index, int size) {
  require(step_index >= 0, "sinusoidal_embedding: index must be >= 0");
  require(size >= 1, "sinusoidal_embedding: size must be >= 1");
  Vec<R> e(size);
  for (int k = 0; 2 * k < size; ++k) {
    const double freq = std::pow(10000.0, -2.0 * k / size);
    const double arg = step_index * freq;
    e(2 * k) = static_cast<R>(std::sin(arg));
    if (2 * k + 1 < size) e(2 * k + 1) = static_cast<R>(std::cos(arg));
  }
  return e;
}

}  // namespace gnocchi
