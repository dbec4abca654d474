#include "enet/lambda_grid.hpp"

#include <cmath>
#include <limits>

#include "enet/data_model.hpp"

namespace enet {

double lambda_max(const Dataset& data, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in [0,1]");
  const Eigen::Index n = data.n_obs();
  if (n < 2) throw std::invalid_argument("lambda_max needs at least two observations");

  const double ybar = data.y.mean();
  const Eigen::VectorXd resid = data.y.array() - ybar;
  if (resid.cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, std::abs(ybar)))
    throw data_error("degenerate response: y is constant");

  double gmax = 0.0;
  for (Eigen::Index j = 0; j < data.n_pred(); ++j)
    gmax = std::max(gmax, std::abs(data.x.col(j).dot(resid)) / static_cast<double>(n));

  const double denom = std::max(alpha, 0.001);
  // Nudge upward a few ulps so a fit exactly at lambda_max lands strictly
  // inside the soft-threshold dead zone and stays all-zero.
  return (gmax / denom) * (1.0 + 8.0 * std::numeric_limits<double>::epsilon());
}

double default_lambda_min_ratio(Eigen::Index n_obs, Eigen::Index n_pred) {
  return n_obs > n_pred ? 1e-4 : 1e-2;
}

std::vector<double> build_shared_grid(const Dataset& data, const std::vector<double>& alphas,
                                      int nlambda, double lambda_min_ratio, bool standardize) {
  if (alphas.empty()) throw std::invalid_argument("alphas must be non-empty");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] >= 0.0 && alphas[i] <= 1.0))
      throw std::invalid_argument("alphas must lie in [0,1]");
    if (i > 0 && !(alphas[i] > alphas[i - 1]))
      throw std::invalid_argument("alphas must be strictly increasing");
  }
  if (nlambda < 2) throw std::invalid_argument("nlambda must be >= 2");
  if (!(lambda_min_ratio > 0.0 && lambda_min_ratio < 1.0))
    throw std::invalid_argument("lambda_min_ratio must be in (0,1)");

  auto [tdata, stats] = standardize ? enet::standardize(data) : center(data);
  (void)stats;

  // The envelope over the alpha vector; the smallest (clamped) alpha attains it.
  double anchor = 0.0;
  for (const double a : alphas) anchor = std::max(anchor, lambda_max(tdata, a));

  std::vector<double> grid(static_cast<std::size_t>(nlambda));
  const double denom = static_cast<double>(nlambda - 1);
  for (int k = 0; k < nlambda; ++k)
    grid[static_cast<std::size_t>(k)] = anchor * std::pow(lambda_min_ratio, k / denom);
  return grid;
}

}  // namespace enet
