// Times the cross-validation search serial (--threads 1) against the OpenMP
// pool and checks the two produce identical tables.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "enet/parallel.hpp"
#include "enet/rng.hpp"
#include "enet/search.hpp"

namespace {

double normal(enet::SplitMix64& rng) {
  // Box-Muller on two uniforms; one draw per call is plenty here.
  const double u = std::max(rng.uniform(), 1e-300);
  const double v = rng.uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
}

enet::Dataset make_data(enet::Family family, Eigen::Index n, Eigen::Index p,
                        std::uint64_t seed) {
  enet::SplitMix64 rng(seed);
  enet::Dataset data;
  data.family = family;
  data.x.resize(n, p);
  data.y.resize(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < p; ++j) data.x(i, j) = normal(rng);
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  for (Eigen::Index j = 0; j < std::min<Eigen::Index>(p, 5); ++j) beta[j] = 0.8;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double eta = data.x.row(i).dot(beta);
    if (family == enet::Family::gaussian) {
      data.y[i] = eta + normal(rng);
    } else {
      const double prob = 1.0 / (1.0 + std::exp(-eta));
      data.y[i] = rng.uniform() < prob ? 1.0 : 0.0;
    }
  }
  return data;
}

double run_once(const enet::Dataset& data, const enet::SearchConfig& config, int threads,
                enet::SearchResult& out) {
  enet::set_max_threads(threads);
  const auto t0 = std::chrono::steady_clock::now();
  out = enet::search(data, config);
  const auto t1 = std::chrono::steady_clock::now();
  enet::set_max_threads(0);
  return std::chrono::duration<double>(t1 - t0).count();
}

bool identical(const enet::SearchResult& a, const enet::SearchResult& b) {
  if (a.summary.size() != b.summary.size()) return false;
  for (std::size_t i = 0; i < a.summary.size(); ++i) {
    const enet::CvRecord &ra = a.summary[i], &rb = b.summary[i];
    if (ra.cvm != rb.cvm || ra.cvsd != rb.cvsd || ra.nzero != rb.nzero ||
        ra.lambda != rb.lambda || ra.alpha != rb.alpha)
      return false;
  }
  return true;
}

int case_report(const char* name, const enet::Dataset& data, const enet::SearchConfig& config) {
  enet::SearchResult serial, parallel;
  const double ts = run_once(data, config, 1, serial);
  const double tp = run_once(data, config, 0, parallel);
  const bool same = identical(serial, parallel);
  std::printf("%-10s serial %7.3fs  parallel %7.3fs  speedup %5.2fx  identical %s\n", name, ts,
              tp, ts / tp, same ? "yes" : "NO");
  return same ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Eigen::Index n = 600, p = 30;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--n")
      n = std::atoll(argv[i + 1]);
    else if (flag == "--p")
      p = std::atoll(argv[i + 1]);
  }

  enet::SearchConfig config;
  config.nlambda = 50;
  config.seed = 7;

  int rc = 0;
  rc |= case_report("gaussian", make_data(enet::Family::gaussian, n, p, 11), config);
  rc |= case_report("binomial", make_data(enet::Family::binomial, n, p, 12), config);
  return rc;
}
