#pragma once

#include <vector>

#include "enet/types.hpp"

namespace enet {

struct SolverConfig {
  // Stop a coordinate-descent sweep when max_j v_j * (delta beta_j)^2 < tol,
  // v_j the weighted mean square of column j (1 on standardized data).
  double tol = 1e-7;
  int max_passes = 100000;
  int irls_max_iter = 25;
  double irls_tol = 1e-8;
  // Binomial fitted probabilities are clamped to [c, 1-c] so the IRLS
  // weights stay finite under separation.
  double min_prob_clamp = 1e-5;
};

// S(z, gamma) = sign(z) * max(|z| - gamma, 0)
double soft_threshold(double z, double gamma);

struct FitResult {
  Coefficients coef;           // standardized basis
  bool converged = true;
  bool clamp_active = false;   // binomial: the probability clamp fired
  int passes = 0;
};

// One elastic net fit at (alpha, lambda) by cyclic coordinate descent with
// soft thresholding. `data` must already be centered (and scaled when the
// caller wants the standardized penalty); gaussian family only. Columns
// flagged in `excluded` are pinned at zero. Runs full sweeps with an
// active-set refinement in between; if max_passes runs out the result comes
// back with converged=false rather than throwing.
FitResult fit_at(const Dataset& data, const PenaltyPoint& point, const Coefficients& warm,
                 const SolverConfig& cfg, const std::vector<std::uint8_t>& excluded = {});

// Binomial fit: IRLS outer loop. Each step forms the quadratic approximation
// to the negative log-likelihood at the current coefficients, with weights
// w_i = p_i (1 - p_i) and working response z_i = eta_i + (y_i - p_i) / w_i,
// then solves it by weighted coordinate descent. Throws numeric_error when
// the penalized deviance increases on three consecutive steps.
FitResult fit_binomial_at(const Dataset& data, const PenaltyPoint& point, const Coefficients& warm,
                          const SolverConfig& cfg, const std::vector<std::uint8_t>& excluded = {});

// Solutions along a decreasing lambda grid at fixed alpha.
struct FitPath {
  double alpha = 1.0;
  std::vector<double> lambdas;       // strictly decreasing
  Eigen::VectorXd intercepts;        // original scale, length L
  Eigen::MatrixXd betas;             // L x p, original scale
  Eigen::VectorXd intercepts_std;    // standardized basis, kept for diagnostics
  Eigen::MatrixXd betas_std;
  std::vector<int> nzero;            // exact count of beta_j != 0 per point
  std::vector<std::uint8_t> converged;
  std::vector<std::uint8_t> clamp_active;
};

// Fits the whole path in decreasing-lambda order, warm-starting every point
// from the previous solution. Standardizes (or centers) internally and
// reports coefficients on both bases. A non-converged point is flagged, not
// fatal. Dispatches on data.family.
FitPath fit_path(const Dataset& data, double alpha, const std::vector<double>& lambdas,
                 const SolverConfig& cfg, bool standardize = true);

struct KktReport {
  bool ok = true;
  double max_violation = 0.0;
  double intercept_violation = 0.0;
  std::vector<int> violations;   // predictor indexes exceeding tol
};

// First-order optimality check for the gaussian objective on standardized
// data. With g_j = (1/N) x_j' (y - b0 - X beta):
//   beta_j != 0:  |g_j - lambda (1-alpha) beta_j - lambda alpha sign(beta_j)| <= tol
//   beta_j == 0:  |g_j| <= lambda alpha + tol
// and |mean residual| <= tol for the intercept.
KktReport kkt_check(const Dataset& data, const Coefficients& coef, const PenaltyPoint& point,
                    double tol);

}  // namespace enet
