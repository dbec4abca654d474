#include "enet/solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "enet/data_model.hpp"

namespace enet {

double soft_threshold(double z, double gamma) {
  if (z > gamma) return z - gamma;
  if (z < -gamma) return z + gamma;
  return 0.0;
}

namespace {

void check_solver_config(const SolverConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("solver tol must be > 0");
  if (cfg.max_passes < 1) throw std::invalid_argument("max_passes must be >= 1");
  if (cfg.irls_max_iter < 1) throw std::invalid_argument("irls_max_iter must be >= 1");
  if (!(cfg.irls_tol > 0.0)) throw std::invalid_argument("irls_tol must be > 0");
  if (!(cfg.min_prob_clamp > 0.0 && cfg.min_prob_clamp < 0.5))
    throw std::invalid_argument("min_prob_clamp must be in (0, 0.5)");
}

Coefficients start_from(const Coefficients& warm, Eigen::Index p) {
  if (warm.beta.size() == 0) {
    Coefficients c;
    c.beta = Eigen::VectorXd::Zero(p);
    c.basis = ScaleBasis::standardized;
    c.intercept = warm.intercept;
    return c;
  }
  if (warm.basis != ScaleBasis::standardized)
    throw std::invalid_argument("warm start must be on the standardized basis");
  if (warm.beta.size() != p)
    throw std::invalid_argument("warm start length does not match predictors");
  return warm;
}

// Cyclic coordinate descent on the (optionally weighted) elastic net
// objective (1/2N) sum_i w_i (y_i - b0 - x_i'b)^2 + lambda P_alpha(b).
// Full sweeps alternate with sweeps over the currently-nonzero coordinates
// until a full sweep finds no violators. w == nullptr means unit weights.
FitResult coordinate_descent(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                             const Eigen::VectorXd* w, const std::vector<std::uint8_t>& excluded,
                             const PenaltyPoint& point, const Coefficients& warm,
                             const SolverConfig& cfg) {
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  const double dn = static_cast<double>(n);
  const double gamma = point.lambda * point.alpha;
  const double ridge = point.lambda * (1.0 - point.alpha);

  Coefficients cur = start_from(warm, p);

  // v_j = (1/N) sum_i w_i x_ij^2 (1 on standardized columns)
  Eigen::VectorXd v(p);
  double wmean = 1.0;
  if (w) {
    for (Eigen::Index j = 0; j < p; ++j)
      v[j] = (w->array() * x.col(j).array().square()).sum() / dn;
    wmean = w->sum() / dn;
  } else {
    for (Eigen::Index j = 0; j < p; ++j) v[j] = x.col(j).squaredNorm() / dn;
  }

  Eigen::VectorXd r = y;
  r.array() -= cur.intercept;
  if (cur.beta.cwiseAbs().maxCoeff() > 0.0) r.noalias() -= x * cur.beta;

  const auto skip = [&](Eigen::Index j) {
    return (!excluded.empty() && excluded[static_cast<std::size_t>(j)]) || v[j] <= 0.0;
  };

  const auto update_coord = [&](Eigen::Index j) {
    double s;
    if (w)
      s = (w->array() * r.array() * x.col(j).array()).sum() / dn;
    else
      s = r.dot(x.col(j)) / dn;
    const double z = s + v[j] * cur.beta[j];
    const double bj = soft_threshold(z, gamma) / (v[j] + ridge);
    const double d = bj - cur.beta[j];
    if (d != 0.0) {
      r.noalias() -= d * x.col(j);
      cur.beta[j] = bj;
    }
    return v[j] * d * d;
  };

  const auto update_intercept = [&] {
    const double num = w ? (w->array() * r.array()).sum() / dn : r.sum() / dn;
    const double d = num / wmean;
    if (d != 0.0) {
      cur.intercept += d;
      r.array() -= d;
    }
    return wmean * d * d;
  };

  FitResult out;
  int passes = 0;
  bool converged = false;
  std::vector<Eigen::Index> active;
  while (passes < cfg.max_passes) {
    double dlx = update_intercept();
    for (Eigen::Index j = 0; j < p; ++j) {
      if (skip(j)) continue;
      dlx = std::max(dlx, update_coord(j));
    }
    ++passes;
    if (!std::isfinite(dlx)) throw numeric_error("coordinate descent produced non-finite values");
    if (dlx < cfg.tol) {
      converged = true;
      break;
    }
    active.clear();
    for (Eigen::Index j = 0; j < p; ++j)
      if (cur.beta[j] != 0.0 && !skip(j)) active.push_back(j);
    while (passes < cfg.max_passes) {
      double adlx = update_intercept();
      for (Eigen::Index j : active) adlx = std::max(adlx, update_coord(j));
      ++passes;
      if (!std::isfinite(adlx))
        throw numeric_error("coordinate descent produced non-finite values");
      if (adlx < cfg.tol) break;
    }
  }

  out.coef = std::move(cur);
  out.converged = converged;
  out.passes = passes;
  return out;
}

double stable_softplus(double eta) {
  return eta > 0.0 ? eta + std::log1p(std::exp(-eta)) : std::log1p(std::exp(eta));
}

}  // namespace

FitResult fit_at(const Dataset& data, const PenaltyPoint& point, const Coefficients& warm,
                 const SolverConfig& cfg, const std::vector<std::uint8_t>& excluded) {
  if (data.family != Family::gaussian)
    throw std::invalid_argument("fit_at handles the gaussian family; use fit_binomial_at");
  check_solver_config(cfg);
  return coordinate_descent(data.x, data.y, nullptr, excluded, point, warm, cfg);
}

FitResult fit_binomial_at(const Dataset& data, const PenaltyPoint& point, const Coefficients& warm,
                          const SolverConfig& cfg, const std::vector<std::uint8_t>& excluded) {
  if (data.family != Family::binomial)
    throw std::invalid_argument("fit_binomial_at needs a binomial dataset");
  check_solver_config(cfg);

  const Eigen::Index n = data.n_obs();
  const Eigen::Index p = data.n_pred();
  const double dn = static_cast<double>(n);
  const double clamp_lo = cfg.min_prob_clamp;
  const double clamp_hi = 1.0 - cfg.min_prob_clamp;

  FitResult out;
  out.coef = start_from(warm, p);
  out.converged = false;

  Eigen::VectorXd eta = Eigen::VectorXd::Constant(n, out.coef.intercept);
  if (out.coef.beta.cwiseAbs().maxCoeff() > 0.0) eta.noalias() += data.x * out.coef.beta;

  Eigen::VectorXd w(n), z(n);
  double prev_objective = std::numeric_limits<double>::infinity();
  int rising_steps = 0;

  for (int iter = 0; iter < cfg.irls_max_iter; ++iter) {
    bool step_clamped = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      double prob = 1.0 / (1.0 + std::exp(-eta[i]));
      if (prob < clamp_lo) {
        prob = clamp_lo;
        step_clamped = true;
      } else if (prob > clamp_hi) {
        prob = clamp_hi;
        step_clamped = true;
      }
      const double wi = prob * (1.0 - prob);
      w[i] = wi;
      z[i] = eta[i] + (data.y[i] - prob) / wi;
    }
    out.clamp_active = out.clamp_active || step_clamped;

    const double prev_intercept = out.coef.intercept;
    const Eigen::VectorXd prev_beta = out.coef.beta;

    FitResult inner = coordinate_descent(data.x, z, &w, excluded, point, out.coef, cfg);
    out.coef = std::move(inner.coef);
    out.passes += inner.passes;

    eta = Eigen::VectorXd::Constant(n, out.coef.intercept);
    if (out.coef.beta.cwiseAbs().maxCoeff() > 0.0) eta.noalias() += data.x * out.coef.beta;

    // penalized deviance scale: mean negative log-likelihood plus penalty
    double nll = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) nll += stable_softplus(eta[i]) - data.y[i] * eta[i];
    const double obj = nll / dn + point.lambda * penalty(out.coef.beta, point.alpha);
    if (!std::isfinite(obj)) throw numeric_error("binomial fit produced non-finite objective");
    // Divergence is judged only on unclamped steps: once the probability
    // clamp is in play (separation), the quadratic model mispredicts the
    // objective as the iteration settles on the clamped pseudo-solution, and
    // that regime is reported through clamp_active rather than an error.
    if (step_clamped) {
      rising_steps = 0;
    } else if (obj > prev_objective + 1e-12 * (1.0 + std::abs(prev_objective))) {
      if (++rising_steps >= 3) {
        std::ostringstream msg;
        msg << "binomial fit diverged at (alpha=" << point.alpha << ", lambda=" << point.lambda
            << "): penalized deviance rose on 3 consecutive IRLS steps";
        throw numeric_error(msg.str());
      }
    } else {
      rising_steps = 0;
    }
    prev_objective = obj;

    double delta = std::abs(out.coef.intercept - prev_intercept);
    delta = std::max(delta, (out.coef.beta - prev_beta).cwiseAbs().maxCoeff());
    if (delta < cfg.irls_tol) {
      out.converged = inner.converged;
      break;
    }
  }
  return out;
}

FitPath fit_path(const Dataset& data, double alpha, const std::vector<double>& lambdas,
                 const SolverConfig& cfg, bool standardize) {
  if (lambdas.empty()) throw std::invalid_argument("fit_path: empty lambda grid");
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (!(lambdas[k] >= 0.0) || !std::isfinite(lambdas[k]))
      throw std::invalid_argument("fit_path: lambdas must be finite and >= 0");
    if (k > 0 && !(lambdas[k] < lambdas[k - 1]))
      throw std::invalid_argument("fit_path: lambdas must be strictly decreasing");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("fit_path: alpha in [0,1]");

  auto [tdata, stats] = standardize ? enet::standardize(data) : center(data);
  const Eigen::Index p = data.n_pred();
  const std::size_t L = lambdas.size();

  FitPath path;
  path.alpha = alpha;
  path.lambdas = lambdas;
  path.intercepts.resize(static_cast<Eigen::Index>(L));
  path.betas.resize(static_cast<Eigen::Index>(L), p);
  path.intercepts_std.resize(static_cast<Eigen::Index>(L));
  path.betas_std.resize(static_cast<Eigen::Index>(L), p);
  path.nzero.resize(L);
  path.converged.resize(L);
  path.clamp_active.resize(L);

  Coefficients warm;
  warm.beta = Eigen::VectorXd::Zero(p);
  warm.basis = ScaleBasis::standardized;

  for (std::size_t k = 0; k < L; ++k) {
    const PenaltyPoint point{alpha, lambdas[k]};
    const FitResult fit = data.family == Family::gaussian
                              ? fit_at(tdata, point, warm, cfg, stats.zero_variance)
                              : fit_binomial_at(tdata, point, warm, cfg, stats.zero_variance);
    warm = fit.coef;

    const Eigen::Index row = static_cast<Eigen::Index>(k);
    const Coefficients orig = destandardize(fit.coef, stats);
    path.intercepts_std[row] = fit.coef.intercept;
    path.betas_std.row(row) = fit.coef.beta.transpose();
    path.intercepts[row] = orig.intercept;
    path.betas.row(row) = orig.beta.transpose();
    path.nzero[k] = static_cast<int>((fit.coef.beta.array() != 0.0).count());
    path.converged[k] = fit.converged ? 1 : 0;
    path.clamp_active[k] = fit.clamp_active ? 1 : 0;
  }
  return path;
}

KktReport kkt_check(const Dataset& data, const Coefficients& coef, const PenaltyPoint& point,
                    double tol) {
  if (data.family != Family::gaussian)
    throw std::invalid_argument("kkt_check covers the gaussian objective");
  if (coef.beta.size() != data.n_pred())
    throw std::invalid_argument("kkt_check: coefficient length mismatch");

  const double dn = static_cast<double>(data.n_obs());
  const Eigen::VectorXd r =
      data.y - Eigen::VectorXd::Constant(data.n_obs(), coef.intercept) - data.x * coef.beta;

  KktReport report;
  report.intercept_violation = std::abs(r.mean());
  if (report.intercept_violation > tol) report.ok = false;
  report.max_violation = report.intercept_violation;

  for (Eigen::Index j = 0; j < data.n_pred(); ++j) {
    const double g = data.x.col(j).dot(r) / dn;
    double viol;
    if (coef.beta[j] != 0.0) {
      const double sub = point.lambda * (1.0 - point.alpha) * coef.beta[j] +
                         point.lambda * point.alpha * (coef.beta[j] > 0.0 ? 1.0 : -1.0);
      viol = std::abs(g - sub);
    } else {
      viol = std::max(0.0, std::abs(g) - point.lambda * point.alpha);
    }
    report.max_violation = std::max(report.max_violation, viol);
    if (viol > tol) {
      report.ok = false;
      report.violations.push_back(static_cast<int>(j));
    }
  }
  return report;
}

}  // namespace enet
