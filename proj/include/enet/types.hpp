#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace enet {

enum class Family { gaussian, binomial };

std::string family_name(Family family);
Family parse_family(const std::string& name);  // throws std::invalid_argument

// Rejected input data. Mapped to exit code 3 by the CLI.
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A fit diverged or produced non-finite values. Mapped to exit code 4.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense design matrix plus response. Rows are observations, columns are
// predictors; y is continuous for gaussian and strictly 0/1 for binomial.
struct Dataset {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  std::vector<std::string> column_names;
  Family family = Family::gaussian;

  Eigen::Index n_obs() const { return x.rows(); }
  Eigen::Index n_pred() const { return x.cols(); }
};

// Throws data_error unless: n >= 2, p >= 1, every entry of x and y finite,
// column_names matches p, and for binomial y in {0,1} with both classes
// present.
void validate_dataset(const Dataset& data);

// Column means and population standard deviations (divisor N). Columns with
// zero variance are flagged and never divided by; their coefficients stay
// pinned at zero downstream so column indices remain stable in reports.
struct StandardizationStats {
  Eigen::VectorXd means;
  Eigen::VectorXd scales;
  std::vector<std::uint8_t> zero_variance;
};

// One (alpha, lambda) pair of the tuning-parameter plane.
struct PenaltyPoint {
  double alpha = 1.0;
  double lambda = 0.0;
};

enum class ScaleBasis { standardized, original };

struct Coefficients {
  double intercept = 0.0;
  Eigen::VectorXd beta;
  ScaleBasis basis = ScaleBasis::standardized;
};

}  // namespace enet
