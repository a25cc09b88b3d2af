// Adam with decoupled weight decay over a parameter registry.
#pragma once

#include <stdexcept>

#include "gnocchi/common.hpp"
#include "gnocchi/params.hpp"

namespace gnocchi {

template <typename R>
struct Adam {
  R lr;
  R beta1 = R(0.9);
  R beta2 = R(0.999);
  R eps = R(1e-8);
  R weight_decay = R(0);
  long step_count = 0;

  std::vector<Mat<R>> m, v;  // first/second moments, mirror param shapes

  explicit Adam(R learning_rate, R wd = R(0)) : lr(learning_rate), weight_decay(wd) {}

  void step(ParamList<R>& params) {
    if (m.empty()) {
      for (auto& p : params) {
        m.emplace_back(Mat<R>::Zero(p.value->rows(), p.value->cols()));
        v.emplace_back(Mat<R>::Zero(p.value->rows(), p.value->cols()));
      }
    }
    require(m.size() == params.size(), "adam: parameter list changed size");
    for (auto& p : params)
      if (!p.grad->allFinite())
        throw std::runtime_error("adam: non-finite gradient in " + p.name + ", step aborted");

    ++step_count;
    const R bc1 = R(1) - std::pow(beta1, static_cast<R>(step_count));
    const R bc2 = R(1) - std::pow(beta2, static_cast<R>(step_count));
    for (std::size_t i = 0; i < params.size(); ++i) {
      auto& g = *params[i].grad;
      auto& th = *params[i].value;
      m[i] = beta1 * m[i] + (R(1) - beta1) * g;
      v[i] = beta2 * v[i] + (R(1) - beta2) * g.cwiseProduct(g);
      Mat<R> update = (lr * (m[i].array() / bc1) / ((v[i].array() / bc2).sqrt() + eps)).matrix();
      if (weight_decay != R(0)) update += lr * weight_decay * th;
      th -= update;
    }
  }
};

}  // namespace gnocchi
