// Central finite-difference oracle for analytic gradients.
#pragma once

#include <functional>
#include <string>

#include "gnocchi/common.hpp"
#include "gnocchi/params.hpp"

namespace gnocchi {

template <typename R>
struct GradCheckResult {
  R max_rel_error = 0;
  std::string worst_param;
};

// loss_fn(true) must zero the gradients, run forward+backward, and return the
// loss; loss_fn(false) evaluates the loss only. Every parameter entry is
// perturbed by +-step (1e-5 in double precision per contract).
template <typename R>
GradCheckResult<R> grad_check(ParamList<R>& params, const std::function<R(bool)>& loss_fn,
                              R step = R(1e-5)) {
  const R base = loss_fn(true);
  require(std::isfinite(base), "grad_check: non-finite loss");

  std::vector<Mat<R>> analytic;
  analytic.reserve(params.size());
  for (auto& p : params) analytic.push_back(*p.grad);

  GradCheckResult<R> result;
  for (std::size_t i = 0; i < params.size(); ++i) {
    Mat<R>& th = *params[i].value;
    for (Eigen::Index k = 0; k < th.size(); ++k) {
      const R saved = th.data()[k];
      th.data()[k] = saved + step;
      const R lp = loss_fn(false);
      th.data()[k] = saved - step;
      const R lm = loss_fn(false);
      th.data()[k] = saved;
      require(std::isfinite(lp) && std::isfinite(lm), "grad_check: non-finite loss under perturbation");
      const R numeric = (lp - lm) / (2 * step);
      const R a = analytic[i].data()[k];
      const R denom = std::max(std::abs(a) + std::abs(numeric), R(1e-6));
      const R rel = std::abs(a - numeric) / denom;
      if (rel > result.max_rel_error) {
        result.max_rel_error = rel;
        result.worst_param = params[i].name + "[" + std::to_string(k) + "]";
      }
    }
  }
  return result;
}

}  // namespace gnocchi
