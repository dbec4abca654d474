#pragma once

// Synthetic data generators shared by the test suites. All randomness goes
// through SplitMix64 so every test is reproducible on any platform.

#include <cmath>
#include <vector>

#include "enet/rng.hpp"
#include "enet/types.hpp"

namespace testgen {

inline double normal(enet::SplitMix64& rng) {
  const double u = std::max(rng.uniform(), 1e-300);
  const double v = rng.uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
}

struct GaussianSpec {
  Eigen::Index n = 50;
  Eigen::Index p = 10;
  std::uint64_t seed = 1;
  int n_signal = 3;          // leading coefficients alternate +/- beta_scale
  double beta_scale = 1.0;
  double noise_sd = 1.0;
  double rho = 0.0;          // pairwise column correlation (shared factor)
  double intercept = 0.0;
};

inline enet::Dataset gaussian(const GaussianSpec& spec) {
  enet::SplitMix64 rng(spec.seed);
  enet::Dataset data;
  data.family = enet::Family::gaussian;
  data.x.resize(spec.n, spec.p);
  data.y.resize(spec.n);
  const double shared = std::sqrt(std::max(spec.rho, 0.0));
  const double own = std::sqrt(1.0 - std::max(spec.rho, 0.0));
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(spec.p);
  for (int j = 0; j < spec.n_signal && j < spec.p; ++j)
    beta[j] = (j % 2 == 0 ? 1.0 : -1.0) * spec.beta_scale;
  for (Eigen::Index i = 0; i < spec.n; ++i) {
    const double g = normal(rng);
    for (Eigen::Index j = 0; j < spec.p; ++j) data.x(i, j) = shared * g + own * normal(rng);
    data.y[i] = spec.intercept + data.x.row(i).dot(beta) + spec.noise_sd * normal(rng);
  }
  return data;
}

struct BinomialSpec {
  Eigen::Index n = 200;
  Eigen::Index p = 3;
  std::uint64_t seed = 1;
  std::vector<double> beta = {0.8, -0.5, 0.3};  // zero-padded to p
  double intercept = 0.2;
};

inline enet::Dataset binomial(const BinomialSpec& spec) {
  enet::SplitMix64 rng(spec.seed);
  enet::Dataset data;
  data.family = enet::Family::binomial;
  data.x.resize(spec.n, spec.p);
  data.y.resize(spec.n);
  for (Eigen::Index i = 0; i < spec.n; ++i) {
    double eta = spec.intercept;
    for (Eigen::Index j = 0; j < spec.p; ++j) {
      data.x(i, j) = normal(rng);
      if (static_cast<std::size_t>(j) < spec.beta.size())
        eta += spec.beta[static_cast<std::size_t>(j)] * data.x(i, j);
    }
    data.y[i] = rng.uniform() < 1.0 / (1.0 + std::exp(-eta)) ? 1.0 : 0.0;
  }
  return data;
}

// Binary-predictor design with a binary outcome driven by columns 0..2
// (mirrors a small clinical screening table: 12 yes/no predictors).
inline enet::Dataset binary_design(Eigen::Index n, std::uint64_t seed, double b0 = 1.8,
                                   double b1 = 1.5, double b2 = -1.7) {
  const Eigen::Index p = 12;
  enet::SplitMix64 rng(seed);
  enet::Dataset data;
  data.family = enet::Family::binomial;
  data.x.resize(n, p);
  data.y.resize(n);
  data.column_names.clear();
  for (Eigen::Index j = 0; j < p; ++j) data.column_names.push_back("v" + std::to_string(j + 1));
  std::vector<double> prevalence(static_cast<std::size_t>(p));
  for (Eigen::Index j = 0; j < p; ++j)
    prevalence[static_cast<std::size_t>(j)] = 0.30 + 0.02 * static_cast<double>(j);
  const double intercept = -(b0 * prevalence[0] + b1 * prevalence[1] + b2 * prevalence[2]);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j)
      data.x(i, j) = rng.uniform() < prevalence[static_cast<std::size_t>(j)] ? 1.0 : 0.0;
    const double eta = intercept + b0 * data.x(i, 0) + b1 * data.x(i, 1) + b2 * data.x(i, 2);
    data.y[i] = rng.uniform() < 1.0 / (1.0 + std::exp(-eta)) ? 1.0 : 0.0;
  }
  return data;
}

// Pure-noise regression: y independent of every column.
inline enet::Dataset noise_gaussian(Eigen::Index n, Eigen::Index p, std::uint64_t seed) {
  enet::SplitMix64 rng(seed);
  enet::Dataset data;
  data.family = enet::Family::gaussian;
  data.x.resize(n, p);
  data.y.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) data.x(i, j) = normal(rng);
    data.y[i] = normal(rng);
  }
  return data;
}

}  // namespace testgen
