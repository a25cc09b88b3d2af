// GRU cell and sequence passes with hand-written backward formulas.
//
// Gate convention (single bias per gate, candidate bias outside the reset
// product):
//   z_t = sigmoid(x W_z + h_{t-1} U_z + b_z)
//   r_t = sigmoid(x W_r + h_{t-1} U_r + b_r)
//   n_t = tanh(x W_n + b_n + r_t .* (h_{t-1} U_n))
//   h_t = (1 - z_t) .* n_t + z_t .* h_{t-1}
//
// Rows are batch samples. Weights are stored gate-concatenated [z|r|n] so a
// step costs two GEMMs.
#pragma once

#include "gnocchi/common.hpp"
#include "gnocchi/linear.hpp"
#include "gnocchi/params.hpp"
#include "gnocchi/rng.hpp"

namespace gnocchi {

template <typename R>
struct GruParams {
  Mat<R> W;  // D x 3H
  Mat<R> U;  // H x 3H
  Mat<R> b;  // 1 x 3H
  Mat<R> dW, dU, db;

  void init(Rng& rng, int input_dim, int hidden_dim) {
    const double k = 1.0 / std::sqrt(static_cast<double>(hidden_dim));
    W.resize(input_dim, 3 * hidden_dim);
    U.resize(hidden_dim, 3 * hidden_dim);
    b.setZero(1, 3 * hidden_dim);
    rng.fill_uniform(W, -k, k);
    rng.fill_uniform(U, -k, k);
    dW.setZero(input_dim, 3 * hidden_dim);
    dU.setZero(hidden_dim, 3 * hidden_dim);
    db.setZero(1, 3 * hidden_dim);
  }

  int input_dim() const { return static_cast<int>(W.rows()); }
  int hidden_dim() const { return static_cast<int>(U.rows()); }

  void collect(ParamList<R>& out, const std::string& prefix) {
    out.push_back({prefix + ".W", &W, &dW});
    out.push_back({prefix + ".U", &U, &dU});
    out.push_back({prefix + ".b", &b, &db});
  }

  void check_input(Eigen::Index cols) const {
    require(cols == W.rows(), "gru: input dim " + std::to_string(cols) + " does not match weights " +
                                  shape_str(W));
  }
};

template <typename R>
struct GruStepCache {
  Mat<R> z, r, n, s;  // B x H each; s = h_prev U_n
};

template <typename R>
struct GruCache {
  std::vector<Mat<R>> h;  // T+1 entries of B x H, h[0] = h0
  std::vector<GruStepCache<R>> steps;
};

namespace detail {
template <typename R>
Mat<R> sigmoid(const Mat<R>& a) {
  return ((-a.array()).exp() + R(1)).inverse().matrix();
}
}  // namespace detail

// One step. gx = x W + b must be precomputed by the caller (it can be batched
// over all timesteps when inputs are known in advance).
template <typename R>
Mat<R> gru_step(const GruParams<R>& p, const Mat<R>& gx, const Mat<R>& h_prev, GruStepCache<R>& cache) {
  const int H = p.hidden_dim();
  Mat<R> gh = h_prev * p.U;  // B x 3H
  cache.z = detail::sigmoid<R>(gx.leftCols(H) + gh.leftCols(H));
  cache.r = detail::sigmoid<R>(gx.middleCols(H, H) + gh.middleCols(H, H));
  cache.s = gh.rightCols(H);
  cache.n = (gx.rightCols(H) + cache.r.cwiseProduct(cache.s)).array().tanh().matrix();
  return (Mat<R>::Ones(h_prev.rows(), H) - cache.z).cwiseProduct(cache.n) + cache.z.cwiseProduct(h_prev);
}

// Backward of one step. dh is the adjoint of h_t; returns the adjoint of
// h_{t-1} and writes the adjoint of gx. Parameter gradients for U accumulate
// here; W/b gradients follow from d_gx at the sequence level.
template <typename R>
Mat<R> gru_step_backward(GruParams<R>& p, const Mat<R>& h_prev, const GruStepCache<R>& c, const Mat<R>& dh,
                         Mat<R>& d_gx) {
  const int H = p.hidden_dim();
  const auto ones = Mat<R>::Ones(dh.rows(), H);

  Mat<R> dz = dh.cwiseProduct(h_prev - c.n);
  Mat<R> dn = dh.cwiseProduct(ones - c.z);
  Mat<R> dh_prev = dh.cwiseProduct(c.z);

  Mat<R> da_n = dn.cwiseProduct(ones - c.n.cwiseProduct(c.n));
  Mat<R> dr = da_n.cwiseProduct(c.s);
  Mat<R> ds = da_n.cwiseProduct(c.r);
  Mat<R> da_z = dz.cwiseProduct(c.z).cwiseProduct(ones - c.z);
  Mat<R> da_r = dr.cwiseProduct(c.r).cwiseProduct(ones - c.r);

  d_gx.resize(dh.rows(), 3 * H);
  d_gx.leftCols(H) = da_z;
  d_gx.middleCols(H, H) = da_r;
  d_gx.rightCols(H) = da_n;

  // U consumes h_prev via [da_z | da_r | ds].
  Mat<R> dgh(dh.rows(), 3 * H);
  dgh.leftCols(H) = da_z;
  dgh.middleCols(H, H) = da_r;
  dgh.rightCols(H) = ds;

  p.dU.noalias() += h_prev.transpose() * dgh;
  dh_prev.noalias() += dgh * p.U.transpose();
  return dh_prev;
}

// Full sequence forward over time-major steps (each B x D).
template <typename R>
GruCache<R> gru_forward_steps(const GruParams<R>& p, const Steps<R>& xs, const Mat<R>& h0) {
  require(!xs.empty(), "gru: empty sequence");
  p.check_input(xs[0].cols());
  const auto T = xs.size();
  GruCache<R> cache;
  cache.h.resize(T + 1);
  cache.steps.resize(T);
  cache.h[0] = h0;
  for (std::size_t t = 0; t < T; ++t) {
    Mat<R> gx = xs[t] * p.W;
    gx.rowwise() += p.b.row(0);
    cache.h[t + 1] = gru_step(p, gx, cache.h[t], cache.steps[t]);
  }
  return cache;
}

// Sequence backward. dhs[t] is the adjoint of h_{t+1} (the step-t output).
// Accumulates parameter gradients; optionally emits input adjoints and dh0.
template <typename R>
void gru_backward_steps(GruParams<R>& p, const Steps<R>& xs, const GruCache<R>& cache, const Steps<R>& dhs,
                        Steps<R>* dxs, Mat<R>* dh0) {
  const auto T = xs.size();
  require(dhs.size() == T, "gru backward: adjoint count mismatch");
  if (dxs) dxs->assign(T, Mat<R>());
  Mat<R> carry = Mat<R>::Zero(cache.h[0].rows(), p.hidden_dim());
  Mat<R> d_gx;
  for (std::size_t t = T; t-- > 0;) {
    Mat<R> dh = carry + dhs[t];
    carry = gru_step_backward(p, cache.h[t], cache.steps[t], dh, d_gx);
    p.dW.noalias() += xs[t].transpose() * d_gx;
    p.db.row(0) += d_gx.colwise().sum();
    if (dxs) (*dxs)[t] = d_gx * p.W.transpose();
  }
  if (dh0) *dh0 = carry;
}

// Single-sequence forward: inputs T x D, h0 of length H, returns T x H.
template <typename R>
Mat<R> gru_forward(const GruParams<R>& p, const Mat<R>& inputs, const Vec<R>& h0) {
  require(inputs.rows() >= 1, "gru_forward: T must be >= 1");
  p.check_input(inputs.cols());
  require(h0.size() == p.hidden_dim(),
          "gru_forward: h0 size " + std::to_string(h0.size()) + " vs hidden " + std::to_string(p.hidden_dim()));
  Steps<R> xs(static_cast<std::size_t>(inputs.rows()));
  for (Eigen::Index t = 0; t < inputs.rows(); ++t) xs[static_cast<std::size_t>(t)] = inputs.row(t);
  GruCache<R> cache = gru_forward_steps(p, xs, Mat<R>(h0.transpose()));
  Mat<R> out(inputs.rows(), p.hidden_dim());
  for (Eigen::Index t = 0; t < inputs.rows(); ++t) out.row(t) = cache.h[static_cast<std::size_t>(t) + 1];
  return out;
}

// Bidirectional encoder: concatenated final states of the forward and the
// time-reversed pass, through a linear readout.
template <typename R>
Vec<R> bigru_encode(const GruParams<R>& fwd, const GruParams<R>& bwd, const Linear<R>& readout,
                    const Mat<R>& seq) {
  require(seq.rows() >= 1, "bigru_encode: empty sequence");
  const int H = fwd.hidden_dim();
  Mat<R> hf = gru_forward(fwd, seq, Vec<R>(Vec<R>::Zero(H)));
  Mat<R> rev = seq.colwise().reverse();
  Mat<R> hb = gru_forward(bwd, rev, Vec<R>(Vec<R>::Zero(bwd.hidden_dim())));
  Mat<R> concat(1, H + bwd.hidden_dim());
  concat << hf.row(hf.rows() - 1), hb.row(hb.rows() - 1);
  return readout.forward(concat).row(0).transpose();
}

}  // namespace gnocchi
