// Affine layer, row-batched: y = x W + b.
#pragma once

#include "gnocchi/common.hpp"
#include "gnocchi/params.hpp"
#include "gnocchi/rng.hpp"

namespace gnocchi {

template <typename R>
struct Linear {
  Mat<R> W;   // in x out
  Mat<R> b;   // 1 x out
  Mat<R> dW;
  Mat<R> db;

  void init(Rng& rng, int in_dim, int out_dim) {
    W.resize(in_dim, out_dim);
    b.setZero(1, out_dim);
    const double k = in_dim > 0 ? 1.0 / std::sqrt(static_cast<double>(in_dim)) : 0.0;
    rng.fill_uniform(W, -k, k);
    dW.setZero(in_dim, out_dim);
    db.setZero(1, out_dim);
  }

  int in_dim() const { return static_cast<int>(W.rows()); }
  int out_dim() const { return static_cast<int>(W.cols()); }

  Mat<R> forward(const Mat<R>& x) const {
    require(x.cols() == W.rows(), "linear: input dim " + shape_str(x) + " vs weights " + shape_str(W));
    Mat<R> y = x * W;
    y.rowwise() += b.row(0);
    return y;
  }

  // Accumulates dW/db, returns dx.
  Mat<R> backward(const Mat<R>& x, const Mat<R>& dy) {
    dW.noalias() += x.transpose() * dy;
    db.row(0) += dy.colwise().sum();
    return dy * W.transpose();
  }

  void collect(ParamList<R>& out, const std::string& prefix) {
    out.push_back({prefix + ".W", &W, &dW});
    out.push_back({prefix + ".b", &b, &db});
  }
};

}  // namespace gnocchi
