#include "enet/cross_validation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "enet/parallel.hpp"
#include "enet/rng.hpp"

namespace enet {

FoldAssignment assign_folds(Eigen::Index n_obs, int k, std::uint64_t seed,
                            const std::vector<int>* strata) {
  if (k < 2) throw std::invalid_argument("k_folds must be >= 2");
  if (static_cast<Eigen::Index>(k) > n_obs)
    throw std::invalid_argument("k_folds exceeds the number of observations");
  if (static_cast<Eigen::Index>(2 * k) > n_obs)
    throw std::invalid_argument("k_folds too large: every fold needs at least two observations");
  if (strata && static_cast<Eigen::Index>(strata->size()) != n_obs)
    throw std::invalid_argument("strata length does not match observations");

  FoldAssignment out;
  out.fold_of.assign(static_cast<std::size_t>(n_obs), 0);
  out.k = k;
  out.seed = seed;
  out.stratified = strata != nullptr;
  out.stratification_incomplete = false;

  // Group rows by stratum label (a single stratum when unstratified), in
  // ascending label order so the draw is independent of container quirks.
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_obs); ++i)
    groups[strata ? (*strata)[i] : 0].push_back(i);

  SplitMix64 rng(seed);
  std::size_t offset = 0;
  for (auto& [label, rows] : groups) {
    (void)label;
    if (out.stratified && rows.size() < static_cast<std::size_t>(k))
      out.stratification_incomplete = true;
    for (std::size_t i = rows.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(rng.bounded(i));
      std::swap(rows[i - 1], rows[j]);
    }
    // Deal shuffled rows round-robin, continuing from where the previous
    // stratum stopped so overall fold sizes also stay within one of each other.
    for (std::size_t t = 0; t < rows.size(); ++t)
      out.fold_of[rows[t]] = static_cast<int>((offset + t) % static_cast<std::size_t>(k)) + 1;
    offset = (offset + rows.size()) % static_cast<std::size_t>(k);
  }
  return out;
}

namespace {

double clamp_prob(double p) {
  if (p < 1e-5) return 1e-5;
  if (p > 1.0 - 1e-5) return 1.0 - 1e-5;
  return p;
}

Dataset take_rows(const Dataset& data, const std::vector<Eigen::Index>& rows) {
  Dataset sub;
  sub.x.resize(static_cast<Eigen::Index>(rows.size()), data.n_pred());
  sub.y.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    sub.x.row(static_cast<Eigen::Index>(i)) = data.x.row(rows[i]);
    sub.y[static_cast<Eigen::Index>(i)] = data.y[rows[i]];
  }
  sub.column_names = data.column_names;
  sub.family = data.family;
  return sub;
}

void check_training_response(const Dataset& data, const std::vector<Eigen::Index>& train,
                             int fold) {
  if (data.family == Family::gaussian) {
    double lo = data.y[train.front()], hi = lo;
    for (const Eigen::Index i : train) {
      lo = std::min(lo, data.y[i]);
      hi = std::max(hi, data.y[i]);
    }
    if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi))) {
      std::ostringstream msg;
      msg << "fold " << fold << ": training response is constant";
      throw data_error(msg.str());
    }
  } else {
    bool has0 = false, has1 = false;
    for (const Eigen::Index i : train) (data.y[i] == 1.0 ? has1 : has0) = true;
    if (!has0 || !has1) {
      std::ostringstream msg;
      msg << "fold " << fold << ": training response has a single class";
      throw data_error(msg.str());
    }
  }
}

}  // namespace

CvPathResult cv_path_with_fit(const Dataset& data, double alpha,
                              std::shared_ptr<const std::vector<double>> lambdas,
                              const FoldAssignment& folds, const SolverConfig& cfg,
                              bool standardize) {
  if (!lambdas || lambdas->empty()) throw std::invalid_argument("cv_path: empty lambda grid");
  const Eigen::Index n = data.n_obs();
  if (static_cast<Eigen::Index>(folds.fold_of.size()) != n)
    throw std::invalid_argument("fold assignment does not match observations");
  const int k = folds.k;
  if (k < 2) throw std::invalid_argument("fold assignment needs k >= 2");

  std::vector<std::vector<Eigen::Index>> train_rows(static_cast<std::size_t>(k));
  std::vector<std::vector<Eigen::Index>> test_rows(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < n; ++i) {
    const int f = folds.fold_of[static_cast<std::size_t>(i)];
    if (f < 1 || f > k) throw std::invalid_argument("fold labels must lie in 1..k");
    for (int g = 1; g <= k; ++g)
      (g == f ? test_rows : train_rows)[static_cast<std::size_t>(g - 1)].push_back(i);
  }
  // Fail deterministically before any fitting if some training split is unusable.
  for (int f = 1; f <= k; ++f)
    check_training_response(data, train_rows[static_cast<std::size_t>(f - 1)], f);

  CvPathResult out;
  out.full_fit = fit_path(data, alpha, *lambdas, cfg, standardize);

  const std::size_t L = lambdas->size();
  Eigen::MatrixXd fold_loss(k, static_cast<Eigen::Index>(L));

  parallel_for(static_cast<std::size_t>(k), [&](std::size_t task) {
    const auto& train = train_rows[task];
    const auto& test = test_rows[task];
    const Dataset train_data = take_rows(data, train);
    // Standardization happens inside fit_path, so held-out rows never touch
    // the fold's column statistics.
    const FitPath fp = fit_path(train_data, alpha, *lambdas, cfg, standardize);

    for (std::size_t l = 0; l < L; ++l) {
      const Eigen::Index row = static_cast<Eigen::Index>(l);
      double sum = 0.0;
      for (const Eigen::Index i : test) {
        const double eta = fp.intercepts[row] + data.x.row(i).dot(fp.betas.row(row));
        if (data.family == Family::gaussian) {
          const double e = data.y[i] - eta;
          sum += e * e;
        } else {
          const double prob = clamp_prob(1.0 / (1.0 + std::exp(-eta)));
          sum += -2.0 * (data.y[i] * std::log(prob) + (1.0 - data.y[i]) * std::log1p(-prob));
        }
      }
      fold_loss(static_cast<Eigen::Index>(task), row) = sum / static_cast<double>(test.size());
    }
  });

  out.curve.alpha = alpha;
  out.curve.lambdas = std::move(lambdas);
  out.curve.cvm.resize(L);
  out.curve.cvsd.resize(L);
  out.curve.nzero = out.full_fit.nzero;
  const double dk = static_cast<double>(k);
  for (std::size_t l = 0; l < L; ++l) {
    const Eigen::Index col = static_cast<Eigen::Index>(l);
    double mean = 0.0;
    for (int f = 0; f < k; ++f) mean += fold_loss(f, col);
    mean /= dk;
    double ss = 0.0;
    for (int f = 0; f < k; ++f) {
      const double d = fold_loss(f, col) - mean;
      ss += d * d;
    }
    out.curve.cvm[l] = mean;
    out.curve.cvsd[l] = std::sqrt(ss / (dk - 1.0) / dk);
  }
  return out;
}

CvCurve cv_path(const Dataset& data, double alpha,
                std::shared_ptr<const std::vector<double>> lambdas, const FoldAssignment& folds,
                const SolverConfig& cfg, bool standardize) {
  return cv_path_with_fit(data, alpha, std::move(lambdas), folds, cfg, standardize).curve;
}

}  // namespace enet
