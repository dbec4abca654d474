#pragma once

#include <vector>

#include "enet/types.hpp"

namespace enet {

// Smallest lambda at which the all-zero coefficient vector is optimal:
//   max_j |(1/N) sum_i x_ij (y_i - ybar)| / max(alpha, 0.001)
// `data` must be centered/standardized. The same formula serves both
// families (the binomial null residual is y - mean(y) as well). The result
// is rounded up by a few ulps so that a fit exactly at lambda_max lands on
// the all-zero model instead of letting the boundary coordinate creep in
// through rounding. Throws data_error("degenerate response") when every
// predictor has zero correlation with the response (constant y).
double lambda_max(const Dataset& data, double alpha);

// glmnet-convention default: 1e-4 when n > p, else 1e-2.
double default_lambda_min_ratio(Eigen::Index n, Eigen::Index p);

// The shared grid evaluated at every alpha of a search: nlambda values
// log-uniformly spaced from the global anchor
//   L = max over supplied alphas of lambda_max(data, alpha)
// down to L * lambda_min_ratio. The identical vector is used for every
// alpha, so common lambda values are evaluated across the whole plane.
std::vector<double> build_shared_grid(const Dataset& data, const std::vector<double>& alphas,
                                      int nlambda, double lambda_min_ratio,
                                      bool standardize = true);

}  // namespace enet
