#pragma once

#include <memory>
#include <string>
#include <vector>

#include "enet/cross_validation.hpp"
#include "enet/solver.hpp"
#include "enet/types.hpp"

namespace enet {

// 10 values evenly spaced over [0.05, 0.95].
std::vector<double> default_alphas();

struct SearchConfig {
  std::vector<double> alphas = default_alphas();  // sorted, unique, in [0,1]
  int nlambda = 100;
  double lambda_min_ratio = 0.0;   // <= 0 picks the data-shape default
  int k_folds = 10;
  std::uint64_t seed = 0;
  bool standardize = true;
  SolverConfig solver;
};

// One row of the search summary. l_index is the 1-based position of the
// alpha curve in ascending-alpha order.
struct CvRecord {
  int nzero = 0;
  int l_index = 0;
  double lambda = 0.0;
  double cvm = 0.0;
  double alpha = 0.0;
  double cvsd = 0.0;
};

struct SearchResult {
  SearchConfig config;
  std::shared_ptr<const std::vector<double>> lambdas;  // the one shared grid
  FoldAssignment folds;                                // reused by every alpha
  std::vector<CvCurve> curves;                         // ascending alpha
  std::vector<FitPath> full_fits;                      // full-data path per alpha
  std::vector<CvRecord> summary;                       // (l_index, descending lambda)
  std::vector<std::string> column_names;
  Family family = Family::gaussian;
};

// Cross-validates every alpha over one shared lambda grid with one fold
// assignment (stratified by class for binomial data). Deterministic given
// the seed; per-alpha work runs in parallel with a fixed-order reduction.
SearchResult search(const Dataset& data, const SearchConfig& config);

// Full CvRecord table, ordered by (l_index, descending lambda).
const std::vector<CvRecord>& summarize(const SearchResult& result);

// Minimum-cvm row per distinct nzero (ties: larger lambda, then smaller
// alpha), sorted by ascending cvm. The trade-off table behind the
// min-cvm-by-nzero plot.
std::vector<CvRecord> best_by_nzero(const SearchResult& result);

struct PreferableModel {
  CvRecord record;
  Coefficients coef;  // full-data coefficients at the selected point, original scale
};

// The grid point with the global minimum cvm; ties prefer larger lambda,
// then smaller alpha.
PreferableModel preferable(const SearchResult& result);

// Z(alpha, lambda) = (cvm - cvm_min) / cvsd_at_min, the number of standard
// deviations above the global minimum; plotted as log10(max(Z, z_floor)).
struct ZSurface {
  struct Cell {
    double alpha = 0.0;
    double lambda = 0.0;
    double z = 0.0;
    double log10z = 0.0;
    bool is_min = false;
  };
  std::vector<Cell> cells;  // alpha-major, lambda descending within each alpha
  std::size_t n_alpha = 0;
  std::size_t n_lambda = 0;
  double cvm_min = 0.0;
  double cvsd_at_min = 0.0;
  // cvsd at the minimum was zero; Z degrades to cvm - cvm_min (units change).
  bool sd_fallback = false;

  static constexpr double z_floor = 1e-2;
};

ZSurface z_surface(const SearchResult& result);

struct SensitivityRep {
  int rep = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  CvRecord selected;
  Coefficients coef;  // original scale
};

struct SensitivityReport {
  std::vector<SensitivityRep> reps;
  // Fraction of successful reps in which each coefficient is nonzero at the
  // selected point.
  std::vector<double> selection_frequency;
  std::vector<std::string> column_names;
};

// Reruns the whole search n_reps times with derived seeds (config.seed + rep
// index), varying only fold membership. A failed rep is recorded, not fatal.
SensitivityReport sensitivity_analysis(const Dataset& data, const SearchConfig& config,
                                       int n_reps);

}  // namespace enet
