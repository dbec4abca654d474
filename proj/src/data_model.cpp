#include "enet/data_model.hpp"

#include <cmath>

namespace enet {

namespace {

// Relative cutoff below which a column's population sd counts as zero.
bool is_zero_variance(double sd, double mean) {
  return sd <= 1e-12 * std::max(1.0, std::abs(mean));
}

std::pair<Dataset, StandardizationStats> transform(const Dataset& data, bool scale) {
  validate_dataset(data);
  const Eigen::Index n = data.n_obs();
  const Eigen::Index p = data.n_pred();

  StandardizationStats stats;
  stats.means.resize(p);
  stats.scales.resize(p);
  stats.zero_variance.assign(static_cast<std::size_t>(p), 0);

  Dataset out = data;
  Eigen::Index varying = 0;
  for (Eigen::Index j = 0; j < p; ++j) {
    const double mean = data.x.col(j).mean();
    out.x.col(j).array() -= mean;
    const double sd = std::sqrt(out.x.col(j).squaredNorm() / static_cast<double>(n));
    stats.means[j] = mean;
    if (is_zero_variance(sd, mean)) {
      stats.zero_variance[static_cast<std::size_t>(j)] = 1;
      stats.scales[j] = sd;  // recorded, never divided by
      continue;
    }
    ++varying;
    if (scale) {
      stats.scales[j] = sd;
      out.x.col(j) /= sd;
    } else {
      stats.scales[j] = 1.0;
    }
  }
  if (varying == 0) throw data_error("no varying predictors");
  return {std::move(out), std::move(stats)};
}

}  // namespace

double penalty(const Eigen::VectorXd& beta, double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("penalty: alpha must be in [0, 1]");
  if (!beta.allFinite()) throw std::invalid_argument("penalty: non-finite coefficient");
  const double l1 = beta.array().abs().sum();
  const double l2_half = 0.5 * beta.squaredNorm();
  return alpha * l1 + (1.0 - alpha) * l2_half;
}

double objective(const Dataset& data, const Coefficients& coef, const PenaltyPoint& point) {
  if (data.family != Family::gaussian)
    throw std::invalid_argument("objective: gaussian family only");
  if (coef.beta.size() != data.n_pred())
    throw std::invalid_argument("objective: coefficient length does not match predictors");
  const double n = static_cast<double>(data.n_obs());
  const Eigen::VectorXd resid =
      data.y - Eigen::VectorXd::Constant(data.n_obs(), coef.intercept) - data.x * coef.beta;
  return resid.squaredNorm() / (2.0 * n) + point.lambda * penalty(coef.beta, point.alpha);
}

std::pair<Dataset, StandardizationStats> standardize(const Dataset& data) {
  return transform(data, true);
}

std::pair<Dataset, StandardizationStats> center(const Dataset& data) {
  return transform(data, false);
}

Coefficients destandardize(const Coefficients& coef, const StandardizationStats& stats) {
  if (coef.basis != ScaleBasis::standardized)
    throw std::invalid_argument("destandardize: coefficients are not on the standardized basis");
  if (coef.beta.size() != stats.means.size())
    throw std::invalid_argument("destandardize: coefficient length does not match stats");

  Coefficients out;
  out.basis = ScaleBasis::original;
  out.beta.resize(coef.beta.size());
  double shift = 0.0;
  for (Eigen::Index j = 0; j < coef.beta.size(); ++j) {
    if (stats.zero_variance[static_cast<std::size_t>(j)]) {
      out.beta[j] = 0.0;
      continue;
    }
    out.beta[j] = coef.beta[j] / stats.scales[j];
    shift += out.beta[j] * stats.means[j];
  }
  out.intercept = coef.intercept - shift;
  return out;
}

}  // namespace enet
