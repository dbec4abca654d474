#pragma once

#include <memory>
#include <vector>

#include "enet/solver.hpp"
#include "enet/types.hpp"

namespace enet {

// Fold membership, a pure function of (n, k, seed, strata). Drawn with
// splitmix64 (see rng.hpp): indices are Fisher-Yates shuffled within each
// stratum and dealt round-robin with a running offset, so fold sizes differ
// by at most one overall and per stratum.
struct FoldAssignment {
  std::vector<int> fold_of;   // 1-based fold id per observation
  int k = 0;
  std::uint64_t seed = 0;
  bool stratified = false;
  bool stratification_incomplete = false;  // some stratum had fewer members than k

  bool operator==(const FoldAssignment&) const = default;
};

// strata, when given, holds one small integer label per observation (0/1 for
// binomial class stratification). Requires 2 <= k and 2*k <= n so every fold
// keeps at least two observations.
FoldAssignment assign_folds(Eigen::Index n, int k, std::uint64_t seed,
                            const std::vector<int>* strata = nullptr);

// Cross-validation curve for one alpha over the shared lambda grid.
struct CvCurve {
  double alpha = 1.0;
  std::shared_ptr<const std::vector<double>> lambdas;
  std::vector<double> cvm;    // mean of per-fold mean losses
  std::vector<double> cvsd;   // sd of fold means (divisor K-1) / sqrt(K)
  std::vector<int> nzero;     // from the full-data fit
};

struct CvPathResult {
  CvCurve curve;
  FitPath full_fit;
};

// K-fold CV of a lambda path at fixed alpha. Each fold refits the whole path
// on its training complement, standardizing from training rows only, and
// scores the held-out rows at every lambda. Loss: squared error (gaussian)
// or deviance -2 [y log p + (1-y) log(1-p)] with p clamped to
// [1e-5, 1 - 1e-5] (binomial). Folds evaluate in parallel; aggregation runs
// in fixed fold order so results are bitwise reproducible. Throws data_error
// naming the fold when a training half has a degenerate response.
CvPathResult cv_path_with_fit(const Dataset& data, double alpha,
                              std::shared_ptr<const std::vector<double>> lambdas,
                              const FoldAssignment& folds, const SolverConfig& cfg,
                              bool standardize = true);

CvCurve cv_path(const Dataset& data, double alpha,
                std::shared_ptr<const std::vector<double>> lambdas,
                const FoldAssignment& folds, const SolverConfig& cfg, bool standardize = true);

}  // namespace enet
