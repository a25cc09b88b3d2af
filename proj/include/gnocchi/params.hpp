// Parameter registry: trainable modules expose their weight/gradient pairs
// through a flat list so the optimizer, gradient checker, and serializer can
// walk them uniformly. Registration order is the serialization order.
#pragma once

#include <string>
#include <vector>

#include "gnocchi/common.hpp"

namespace gnocchi {

template <typename R>
struct ParamView {
  std::string name;
  Mat<R>* value;
  Mat<R>* grad;
};

template <typename R>
using ParamList = std::vector<ParamView<R>>;

template <typename R>
void zero_grads(ParamList<R>& params) {
  for (auto& p : params) p.grad->setZero();
}

template <typename R>
std::int64_t param_count(const ParamList<R>& params) {
  std::int64_t n = 0;
  for (const auto& p : params) n += p.value->size();
  return n;
}

template <typename R>
R grad_norm(const ParamList<R>& params) {
  R acc = 0;
  for (const auto& p : params) acc += p.grad->squaredNorm();
  return std::sqrt(acc);
}

template <typename R>
void clip_grad_norm(ParamList<R>& params, R max_norm) {
  const R n = grad_norm(params);
  if (n > max_norm && n > 0) {
    const R scale = max_norm / n;
    for (auto& p : params) *p.grad *= scale;
  }
}

}  // namespace gnocchi
