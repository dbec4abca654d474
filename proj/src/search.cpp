#include "enet/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "enet/lambda_grid.hpp"
#include "enet/parallel.hpp"

namespace enet {

std::vector<double> default_alphas() {
  std::vector<double> a(10);
  for (int i = 0; i < 10; ++i) a[static_cast<std::size_t>(i)] = 0.05 + i * (0.95 - 0.05) / 9.0;
  return a;
}

namespace {

void check_config(const SearchConfig& config) {
  if (config.alphas.empty()) throw std::invalid_argument("alphas must be non-empty");
  for (std::size_t i = 0; i < config.alphas.size(); ++i) {
    if (!(config.alphas[i] >= 0.0 && config.alphas[i] <= 1.0))
      throw std::invalid_argument("alphas must lie in [0,1]");
    if (i > 0 && !(config.alphas[i] > config.alphas[i - 1]))
      throw std::invalid_argument("alphas must be strictly increasing");
  }
  if (config.nlambda < 2) throw std::invalid_argument("nlambda must be >= 2");
  if (config.k_folds < 2) throw std::invalid_argument("k_folds must be >= 2");
}

// Preference order shared by preferable(), best_by_nzero() and z_surface():
// smaller cvm wins; on ties the sparser direction (larger lambda), then the
// more-ridge-like one (smaller alpha).
bool better_record(const CvRecord& a, const CvRecord& b) {
  if (a.cvm != b.cvm) return a.cvm < b.cvm;
  if (a.lambda != b.lambda) return a.lambda > b.lambda;
  return a.alpha < b.alpha;
}

std::size_t argmin_record(const std::vector<CvRecord>& rows) {
  if (rows.empty()) throw std::invalid_argument("empty summary");
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (better_record(rows[i], rows[best])) best = i;
  return best;
}

}  // namespace

SearchResult search(const Dataset& data, const SearchConfig& config) {
  validate_dataset(data);
  check_config(config);

  SearchResult result;
  result.config = config;
  if (!(result.config.lambda_min_ratio > 0.0))
    result.config.lambda_min_ratio = default_lambda_min_ratio(data.n_obs(), data.n_pred());
  if (!(result.config.lambda_min_ratio < 1.0))
    throw std::invalid_argument("lambda_min_ratio must be in (0,1)");

  std::vector<int> strata;
  const std::vector<int>* strata_ptr = nullptr;
  if (data.family == Family::binomial) {
    strata.resize(static_cast<std::size_t>(data.n_obs()));
    for (Eigen::Index i = 0; i < data.n_obs(); ++i)
      strata[static_cast<std::size_t>(i)] = data.y[i] == 1.0 ? 1 : 0;
    strata_ptr = &strata;
  }
  result.folds = assign_folds(data.n_obs(), config.k_folds, config.seed, strata_ptr);

  result.lambdas = std::make_shared<const std::vector<double>>(
      build_shared_grid(data, config.alphas, result.config.nlambda,
                        result.config.lambda_min_ratio, config.standardize));

  const std::size_t n_alpha = config.alphas.size();
  result.curves.resize(n_alpha);
  result.full_fits.resize(n_alpha);

  parallel_for(n_alpha, [&](std::size_t i) {
    const double alpha = config.alphas[i];
    try {
      CvPathResult r = cv_path_with_fit(data, alpha, result.lambdas, result.folds,
                                        config.solver, config.standardize);
      result.curves[i] = std::move(r.curve);
      result.full_fits[i] = std::move(r.full_fit);
    } catch (const data_error& e) {
      std::ostringstream msg;
      msg << "alpha=" << alpha << ": " << e.what();
      throw data_error(msg.str());
    } catch (const numeric_error& e) {
      std::ostringstream msg;
      msg << "alpha=" << alpha << ": " << e.what();
      throw numeric_error(msg.str());
    }
  });

  const std::size_t L = result.lambdas->size();
  result.summary.reserve(n_alpha * L);
  for (std::size_t i = 0; i < n_alpha; ++i) {
    const CvCurve& curve = result.curves[i];
    for (std::size_t l = 0; l < L; ++l) {
      CvRecord row;
      row.nzero = curve.nzero[l];
      row.l_index = static_cast<int>(i) + 1;
      row.lambda = (*result.lambdas)[l];
      row.cvm = curve.cvm[l];
      row.alpha = curve.alpha;
      row.cvsd = curve.cvsd[l];
      result.summary.push_back(row);
    }
  }

  result.column_names = data.column_names;
  if (result.column_names.empty()) {
    result.column_names.resize(static_cast<std::size_t>(data.n_pred()));
    for (Eigen::Index j = 0; j < data.n_pred(); ++j)
      result.column_names[static_cast<std::size_t>(j)] = "x" + std::to_string(j + 1);
  }
  result.family = data.family;
  return result;
}

const std::vector<CvRecord>& summarize(const SearchResult& result) { return result.summary; }

std::vector<CvRecord> best_by_nzero(const SearchResult& result) {
  std::map<int, CvRecord> best;
  for (const CvRecord& row : result.summary) {
    auto it = best.find(row.nzero);
    if (it == best.end())
      best.emplace(row.nzero, row);
    else if (better_record(row, it->second))
      it->second = row;
  }
  std::vector<CvRecord> rows;
  rows.reserve(best.size());
  for (const auto& [nz, row] : best) {
    (void)nz;
    rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CvRecord& a, const CvRecord& b) { return a.cvm < b.cvm; });
  return rows;
}

PreferableModel preferable(const SearchResult& result) {
  const std::size_t idx = argmin_record(result.summary);
  const std::size_t L = result.lambdas->size();
  const std::size_t i = idx / L;
  const std::size_t l = idx % L;

  PreferableModel model;
  model.record = result.summary[idx];
  const FitPath& fit = result.full_fits[i];
  model.coef.intercept = fit.intercepts[static_cast<Eigen::Index>(l)];
  model.coef.beta = fit.betas.row(static_cast<Eigen::Index>(l)).transpose();
  model.coef.basis = ScaleBasis::original;
  return model;
}

ZSurface z_surface(const SearchResult& result) {
  const std::size_t idx = argmin_record(result.summary);
  const std::size_t L = result.lambdas->size();
  const std::size_t n_alpha = result.curves.size();

  ZSurface surface;
  surface.n_alpha = static_cast<int>(n_alpha);
  surface.n_lambda = static_cast<int>(L);
  surface.cvm_min = result.summary[idx].cvm;
  surface.cvsd_at_min = result.summary[idx].cvsd;
  surface.sd_fallback = surface.cvsd_at_min == 0.0;

  surface.cells.reserve(n_alpha * L);
  for (std::size_t i = 0; i < n_alpha; ++i) {
    const CvCurve& curve = result.curves[i];
    for (std::size_t l = 0; l < L; ++l) {
      ZSurface::Cell cell;
      cell.alpha = curve.alpha;
      cell.lambda = (*result.lambdas)[l];
      // Distance above the minimum in cvsd-at-the-minimum units; falls back to
      // the raw cvm gap when that spread is exactly zero.
      cell.z = surface.sd_fallback ? curve.cvm[l] - surface.cvm_min
                                   : (curve.cvm[l] - surface.cvm_min) / surface.cvsd_at_min;
      cell.log10z = std::log10(std::max(cell.z, ZSurface::z_floor));
      cell.is_min = (i * L + l) == idx;
      surface.cells.push_back(cell);
    }
  }
  return surface;
}

SensitivityReport sensitivity_analysis(const Dataset& data, const SearchConfig& config,
                                       int n_reps) {
  if (n_reps < 2) throw std::invalid_argument("sensitivity analysis needs n_reps >= 2");

  SensitivityReport report;
  report.reps.reserve(static_cast<std::size_t>(n_reps));
  for (int r = 1; r <= n_reps; ++r) {
    SensitivityRep rep;
    rep.rep = r;
    rep.seed = config.seed + static_cast<std::uint64_t>(r);
    SearchConfig cfg = config;
    cfg.seed = rep.seed;
    try {
      const SearchResult result = search(data, cfg);
      const PreferableModel model = preferable(result);
      rep.ok = true;
      rep.selected = model.record;
      rep.coef = model.coef;
    } catch (const std::exception& e) {
      rep.ok = false;
      rep.error = e.what();
    }
    report.reps.push_back(std::move(rep));
  }

  report.column_names = data.column_names;
  if (report.column_names.empty()) {
    report.column_names.resize(static_cast<std::size_t>(data.n_pred()));
    for (Eigen::Index j = 0; j < data.n_pred(); ++j)
      report.column_names[static_cast<std::size_t>(j)] = "x" + std::to_string(j + 1);
  }

  report.selection_frequency.assign(static_cast<std::size_t>(data.n_pred()), 0.0);
  int n_ok = 0;
  for (const SensitivityRep& rep : report.reps) {
    if (!rep.ok) continue;
    ++n_ok;
    for (Eigen::Index j = 0; j < rep.coef.beta.size(); ++j)
      if (rep.coef.beta[j] != 0.0) report.selection_frequency[static_cast<std::size_t>(j)] += 1.0;
  }
  if (n_ok > 0)
    for (double& f : report.selection_frequency) f /= static_cast<double>(n_ok);
  return report;
}

}  // namespace enet
