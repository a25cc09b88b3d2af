#include <catch2/catch_amalgamated.hpp>

#include "gnocchi/gru.hpp"
#include "gnocchi/rng.hpp"

using namespace gnocchi;

namespace {

// Independent scalar oracle for one GRU step (H = 1, D = 1).
double gru_scalar_step(double wz, double uz, double bz, double wr, double ur, double br, double wn,
                       double un, double bn, double x, double h) {
  auto sig = [](double a) { return 1.0 / (1.0 + std::exp(-a)); };
  const double z = sig(wz * x + uz * h + bz);
  const double r = sig(wr * x + ur * h + br);
  const double n = std::tanh(wn * x + bn + r * (un * h));
  return (1.0 - z) * n + z * h;
}

GruParams<double> zero_params(int d, int h) {
  GruParams<double> p;
  p.W.setZero(d, 3 * h);
  p.U.setZero(h, 3 * h);
  p.b.setZero(1, 3 * h);
  p.dW.setZero(d, 3 * h);
  p.dU.setZero(h, 3 * h);
  p.db.setZero(1, 3 * h);
  return p;
}

}  // namespace

TEST_CASE("zero weights halve the carried state each step", "[gru]") {
  auto p = zero_params(1, 1);
  Mat<double> inputs(6, 1);
  inputs << 0.3, -1.2, 4.0, 0.0, 2.5, -0.1;
  Vec<double> h0(1);
  h0 << 1.0;
  Mat<double> out = gru_forward(p, inputs, h0);
  for (int t = 0; t < 6; ++t) REQUIRE(out(t, 0) == Catch::Approx(std::pow(0.5, t + 1)).epsilon(1e-12));
}

TEST_CASE("zero state and zero weights stay at the fixed point", "[gru]") {
  auto p = zero_params(2, 3);
  Mat<double> inputs = Mat<double>::Zero(4, 2);
  Mat<double> out = gru_forward(p, inputs, Vec<double>(Vec<double>::Zero(3)));
  REQUIRE(out.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("T=1 scalar cell matches the step-by-step oracle", "[gru]") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    GruParams<double> p;
    p.init(rng, 1, 1);
    rng.fill_uniform(p.b, -0.5, 0.5);
    const double x = rng.uniform(-2, 2);
    const double h = rng.uniform(-1, 1);
    Mat<double> inputs(1, 1);
    inputs << x;
    Vec<double> h0(1);
    h0 << h;
    const double expected = gru_scalar_step(p.W(0, 0), p.U(0, 0), p.b(0, 0), p.W(0, 1), p.U(0, 1),
                                            p.b(0, 1), p.W(0, 2), p.U(0, 2), p.b(0, 2), x, h);
    const double got = gru_forward(p, inputs, h0)(0, 0);
    REQUIRE(got == Catch::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("forward direction is causal: prefixes agree", "[gru]") {
  Rng rng(3);
  GruParams<double> p;
  p.init(rng, 3, 5);
  Mat<double> inputs(8, 3);
  rng.fill_uniform(inputs, -1, 1);
  Mat<double> full = gru_forward(p, inputs, Vec<double>(Vec<double>::Zero(5)));
  for (int cut : {1, 3, 6}) {
    Mat<double> part = gru_forward(p, Mat<double>(inputs.topRows(cut)), Vec<double>(Vec<double>::Zero(5)));
    REQUIRE((part - full.topRows(cut)).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("shape mismatches are rejected with a dimension report", "[gru]") {
  Rng rng(5);
  GruParams<double> p;
  p.init(rng, 3, 4);
  Mat<double> bad(2, 7);
  bad.setZero();
  REQUIRE_THROWS_WITH(gru_forward(p, bad, Vec<double>(Vec<double>::Zero(4))),
                      Catch::Matchers::ContainsSubstring("input dim 7"));
  Mat<double> ok = Mat<double>::Zero(2, 3);
  REQUIRE_THROWS_AS(gru_forward(p, ok, Vec<double>(Vec<double>::Zero(9))), std::invalid_argument);
}

TEST_CASE("bigru readout with zero weights returns its bias", "[gru]") {
  Rng rng(7);
  GruParams<double> fwd, bwd;
  fwd.init(rng, 2, 4);
  bwd.init(rng, 2, 4);
  Linear<double> readout;
  readout.init(rng, 8, 3);
  readout.W.setZero();
  readout.b << 0.5, -1.25, 2.0;
  Mat<double> seq(5, 2);
  rng.fill_uniform(seq, -1, 1);
  Vec<double> out = bigru_encode(fwd, bwd, readout, seq);
  REQUIRE(out(0) == 0.5);
  REQUIRE(out(1) == -1.25);
  REQUIRE(out(2) == 2.0);
}

TEST_CASE("time reversal swaps the concatenated halves", "[gru]") {
  Rng rng(11);
  GruParams<double> fwd, bwd;
  fwd.init(rng, 3, 4);
  bwd.init(rng, 3, 4);
  Linear<double> readout;
  readout.init(rng, 8, 8);
  readout.W.setIdentity();  // expose the concat directly
  readout.b.setZero();
  Mat<double> seq(6, 3);
  rng.fill_uniform(seq, -1, 1);
  Mat<double> rev = seq.colwise().reverse();

  // Swapping module roles along with time reversal must reproduce the
  // original halves in swapped positions.
  Vec<double> a = bigru_encode(fwd, bwd, readout, seq);
  Vec<double> b = bigru_encode(bwd, fwd, readout, rev);
  REQUIRE((a.head(4) - b.tail(4)).cwiseAbs().maxCoeff() < 1e-14);
  REQUIRE((a.tail(4) - b.head(4)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("T=1 forward and backward passes read the same step", "[gru]") {
  Rng rng(13);
  GruParams<double> fwd, bwd;
  fwd.init(rng, 2, 3);
  bwd = fwd;  // identical weights: single-step states must coincide
  Linear<double> readout;
  readout.init(rng, 6, 6);
  readout.W.setIdentity();
  readout.b.setZero();
  Mat<double> seq(1, 2);
  seq << 0.4, -0.9;
  Vec<double> out = bigru_encode(fwd, bwd, readout, seq);
  REQUIRE((out.head(3) - out.tail(3)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("empty sequences are rejected", "[gru]") {
  Rng rng(19);
  GruParams<double> fwd, bwd;
  fwd.init(rng, 2, 3);
  bwd.init(rng, 2, 3);
  Linear<double> readout;
  readout.init(rng, 6, 2);
  REQUIRE_THROWS_AS(bigru_encode(fwd, bwd, readout, Mat<double>(0, 2)), std::invalid_argument);
}

TEST_CASE("batched steps match the single-sequence path", "[gru]") {
  Rng rng(23);
  GruParams<double> p;
  p.init(rng, 3, 4);
  const int B = 5, T = 7;
  std::vector<Mat<double>> seqs;
  Steps<double> xs(T, Mat<double>(B, 3));
  for (int i = 0; i < B; ++i) {
    Mat<double> s(T, 3);
    rng.fill_uniform(s, -1, 1);
    seqs.push_back(s);
    for (int t = 0; t < T; ++t) xs[t].row(i) = s.row(t);
  }
  GruCache<double> cache = gru_forward_steps(p, xs, Mat<double>(Mat<double>::Zero(B, 4)));
  for (int i = 0; i < B; ++i) {
    Mat<double> single = gru_forward(p, seqs[i], Vec<double>(Vec<double>::Zero(4)));
    for (int t = 0; t < T; ++t)
      REQUIRE((cache.h[t + 1].row(i) - single.row(t)).cwiseAbs().maxCoeff() < 1e-13);
  }
}
