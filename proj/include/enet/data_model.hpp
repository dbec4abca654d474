#pragma once

#include <utility>

#include "enet/types.hpp"

namespace enet {

// Elastic net penalty P_alpha(beta) = sum_j [ (1-alpha)/2 beta_j^2 + alpha |beta_j| ].
// Computed as alpha * l1 + (1-alpha) * l2/2 so that the penalty is exactly
// linear in alpha. Throws std::invalid_argument on non-finite input or
// alpha outside [0, 1].
double penalty(const Eigen::VectorXd& beta, double alpha);

// Penalized least-squares objective (gaussian family):
//   (1/2N) sum_i (y_i - b0 - x_i' beta)^2 + lambda * P_alpha(beta)
// Coefficients must live on the same scale basis as `data`.
double objective(const Dataset& data, const Coefficients& coef, const PenaltyPoint& point);

// Center and scale every predictor column to mean 0, population sd 1
// (divisor N). Zero-variance columns are centered only and flagged in the
// stats. The response is never transformed. Throws data_error when every
// column is constant ("no varying predictors").
std::pair<Dataset, StandardizationStats> standardize(const Dataset& data);

// Center columns without scaling; scales come back as 1 so destandardize
// applies uniformly. Used when a search runs with standardize=false, in
// which case the penalty acts on original-scale coefficients.
std::pair<Dataset, StandardizationStats> center(const Dataset& data);

// Map standardized-basis coefficients back to the original scale:
//   beta_orig[j] = beta_std[j] / scales[j]
//   b0_orig     = b0_std - sum_j beta_orig[j] * means[j]
// Predictions are unchanged. Flagged zero-variance columns map to 0.
Coefficients destandardize(const Coefficients& coef, const StandardizationStats& stats);

}  // namespace enet
