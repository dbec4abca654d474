#include "enet/types.hpp"

#include <cmath>

namespace enet {

std::string family_name(Family family) {
  return family == Family::gaussian ? "gaussian" : "binomial";
}

Family parse_family(const std::string& name) {
  if (name == "gaussian") return Family::gaussian;
  if (name == "binomial") return Family::binomial;
  throw std::invalid_argument("unknown family '" + name + "' (expected gaussian or binomial)");
}

void validate_dataset(const Dataset& data) {
  const Eigen::Index n = data.n_obs();
  const Eigen::Index p = data.n_pred();
  if (n < 2) throw data_error("dataset needs at least 2 observations, got " + std::to_string(n));
  if (p < 1) throw data_error("dataset needs at least 1 predictor");
  if (data.y.size() != n)
    throw data_error("response length " + std::to_string(data.y.size()) +
                     " does not match " + std::to_string(n) + " rows");
  if (!data.column_names.empty() && static_cast<Eigen::Index>(data.column_names.size()) != p)
    throw data_error("column_names size does not match predictor count");
  if (!data.x.allFinite()) throw data_error("non-finite entry in predictor matrix");
  if (!data.y.allFinite()) throw data_error("non-finite entry in response");
  if (data.family == Family::binomial) {
    bool has0 = false, has1 = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double v = data.y[i];
      if (v == 0.0) {
        has0 = true;
      } else if (v == 1.0) {
        has1 = true;
      } else {
        throw data_error("binomial response must be 0/1; row " + std::to_string(i + 1) +
                         " has value " + std::to_string(v));
      }
    }
    if (!has0 || !has1)
      throw data_error("binomial response needs both classes present");
  }
}

}  // namespace enet
