#include <charconv>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "enet/csv_io.hpp"
#include "enet/parallel.hpp"
#include "enet/report.hpp"
#include "enet/search.hpp"
#include "enet/svg.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw UsageError("cannot parse " + what + " '" + s + "'");
  return v;
}

// Either a comma list ("0.1,0.5,1") or an even spread ("lo:hi:count").
std::vector<double> parse_alphas(const std::string& spec) {
  std::vector<double> alphas;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::string cur;
    for (const char c : spec)
      if (c == ':') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    parts.push_back(cur);
    if (parts.size() != 3) throw UsageError("--alphas range form is lo:hi:count");
    const double lo = parse_double(parts[0], "--alphas low end");
    const double hi = parse_double(parts[1], "--alphas high end");
    const double cnt = parse_double(parts[2], "--alphas count");
    const int n = static_cast<int>(cnt);
    if (n < 1 || cnt != n) throw UsageError("--alphas count must be a positive integer");
    if (n == 1 && lo != hi) throw UsageError("--alphas count 1 needs lo == hi");
    if (lo > hi) throw UsageError("--alphas needs lo <= hi");
    for (int i = 0; i < n; ++i)
      alphas.push_back(n == 1 ? lo : lo + i * (hi - lo) / (n - 1));
  } else {
    std::string cur;
    for (const char c : spec + ",") {
      if (c == ',') {
        if (!cur.empty()) alphas.push_back(parse_double(cur, "--alphas entry"));
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  if (alphas.empty()) throw UsageError("--alphas is empty");
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  for (const double a : alphas)
    if (!(a >= 0.0 && a <= 1.0)) throw UsageError("--alphas values must lie in [0,1]");
  return alphas;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cross-validated elastic net search over a lambda-alpha grid"};
  app.get_formatter()->column_width(30);

  std::string data_path;
  std::string response;
  std::string family_name = "gaussian";
  std::string alpha_spec;
  std::string out_dir = ".";
  std::string format = "json";
  int nlambda = 100;
  double lambda_min_ratio = 0.0;
  int folds = 10;
  std::uint64_t seed = 0;
  bool no_standardize = false;
  int sensitivity = 0;
  int threads = 0;

  app.add_option("--data", data_path, "input CSV with a header row")->required();
  app.add_option("--response", response, "name of the response column")->required();
  app.add_option("--family", family_name, "gaussian or binomial")
      ->check(CLI::IsMember({"gaussian", "binomial"}));
  app.add_option("--alphas", alpha_spec, "comma list (0.1,0.5,1) or spread lo:hi:count");
  app.add_option("--nlambda", nlambda, "lambda grid size")->check(CLI::Range(2, 10000));
  app.add_option("--lambda-min-ratio", lambda_min_ratio,
                 "smallest lambda as a fraction of the largest (default: 1e-4 if n > p else "
                 "1e-2)");
  app.add_option("--folds", folds, "number of cross-validation folds")->check(CLI::Range(2, 1000));
  app.add_option("--seed", seed, "fold assignment seed");
  app.add_flag("--no-standardize", no_standardize, "skip predictor standardization");
  app.add_option("--out", out_dir, "output directory (created if missing)");
  app.add_option("--sensitivity", sensitivity, "run this many extra seed replications (>= 2)");
  app.add_option("--format", format, "summary table format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", threads, "worker cap, 0 = hardware default")
      ->check(CLI::Range(0, 4096));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    enet::set_max_threads(threads);

    enet::SearchConfig config;
    if (!alpha_spec.empty()) config.alphas = parse_alphas(alpha_spec);
    config.nlambda = nlambda;
    if (lambda_min_ratio != 0.0) {
      if (!(lambda_min_ratio > 0.0 && lambda_min_ratio < 1.0))
        throw UsageError("--lambda-min-ratio must lie in (0,1)");
      config.lambda_min_ratio = lambda_min_ratio;
    }
    config.k_folds = folds;
    config.seed = seed;
    config.standardize = !no_standardize;
    if (sensitivity != 0 && sensitivity < 2) throw UsageError("--sensitivity needs >= 2 reps");

    const enet::Family family = enet::parse_family(family_name);
    const enet::Dataset data = enet::load_csv(data_path, response, family);

    const enet::SearchResult result = enet::search(data, config);
    const enet::PreferableModel model = enet::preferable(result);
    const enet::ZSurface surface = enet::z_surface(result);
    const std::vector<enet::CvRecord> by_nzero = enet::best_by_nzero(result);

    const std::filesystem::path out(out_dir);
    std::filesystem::create_directories(out);

    if (format == "csv")
      enet::write_text_file(out / "summary.csv", enet::summary_to_csv(result));
    else
      enet::write_text_file(out / "summary.json", enet::summary_to_json(result));
    enet::write_text_file(out / "preferable.json", enet::preferable_to_json(result, model));
    enet::emit_contour_svg(surface, out / "contour.svg");
    enet::emit_nzero_svg(by_nzero, out / "nzero.svg");

    if (sensitivity >= 2) {
      const enet::SensitivityReport report =
          enet::sensitivity_analysis(data, config, sensitivity);
      if (format == "csv") {
        enet::write_text_file(out / "sensitivity.csv", enet::sensitivity_to_csv(report));
        enet::write_text_file(out / "sensitivity_frequency.csv",
                              enet::sensitivity_frequency_to_csv(report));
      } else {
        enet::write_text_file(out / "sensitivity.json", enet::sensitivity_to_json(report));
      }
    }

    const enet::CvRecord& best = model.record;
    std::printf("preferable: alpha=%g lambda=%g cvm=%g nzero=%d\n", best.alpha, best.lambda,
                best.cvm, best.nzero);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const enet::data_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const enet::numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
