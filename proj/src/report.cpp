#include "enet/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace enet {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::ordered_json record_json(const CvRecord& row) {
  return nlohmann::ordered_json{{"nzero", row.nzero},   {"l_index", row.l_index},
                                {"lambda", row.lambda}, {"cvm", row.cvm},
                                {"alpha", row.alpha},   {"cvsd", row.cvsd}};
}

std::string column_name(const std::vector<std::string>& names, std::size_t j) {
  if (j < names.size()) return names[j];
  return "x" + std::to_string(j + 1);
}

}  // namespace

std::string summary_to_csv(const SearchResult& result) {
  std::ostringstream out;
  out << "nzero,l_index,lambda,cvm,alpha,cvsd\n";
  for (const CvRecord& row : result.summary)
    out << row.nzero << ',' << row.l_index << ',' << fmt_double(row.lambda) << ','
        << fmt_double(row.cvm) << ',' << fmt_double(row.alpha) << ',' << fmt_double(row.cvsd)
        << '\n';
  return out.str();
}

std::string summary_to_json(const SearchResult& result) {
  nlohmann::ordered_json doc;
  doc["family"] = family_name(result.family);
  doc["seed"] = result.config.seed;
  doc["k_folds"] = result.config.k_folds;
  doc["standardize"] = result.config.standardize;
  doc["alphas"] = result.config.alphas;
  doc["lambda_grid"] = *result.lambdas;
  doc["stratified_folds"] = result.folds.stratified;
  doc["stratification_incomplete"] = result.folds.stratification_incomplete;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const CvRecord& row : result.summary) records.push_back(record_json(row));
  doc["records"] = std::move(records);
  nlohmann::ordered_json best = nlohmann::ordered_json::array();
  for (const CvRecord& row : best_by_nzero(result)) best.push_back(record_json(row));
  doc["best_by_nzero"] = std::move(best);
  return doc.dump(2) + "\n";
}

std::string preferable_to_json(const SearchResult& result, const PreferableModel& model) {
  nlohmann::ordered_json doc;
  doc["family"] = family_name(result.family);
  doc["record"] = record_json(model.record);
  doc["intercept"] = model.coef.intercept;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  nlohmann::ordered_json nonzero = nlohmann::ordered_json::array();
  for (Eigen::Index j = 0; j < model.coef.beta.size(); ++j) {
    const std::string name = column_name(result.column_names, static_cast<std::size_t>(j));
    coeffs.push_back({{"name", name}, {"value", model.coef.beta[j]}});
    if (model.coef.beta[j] != 0.0) nonzero.push_back(name);
  }
  doc["coefficients"] = std::move(coeffs);
  doc["nonzero"] = std::move(nonzero);
  return doc.dump(2) + "\n";
}

std::string sensitivity_to_json(const SensitivityReport& report) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json reps = nlohmann::ordered_json::array();
  for (const SensitivityRep& rep : report.reps) {
    nlohmann::ordered_json r;
    r["rep"] = rep.rep;
    r["seed"] = rep.seed;
    r["ok"] = rep.ok;
    if (rep.ok)
      r["selected"] = record_json(rep.selected);
    else
      r["error"] = rep.error;
    reps.push_back(std::move(r));
  }
  doc["reps"] = std::move(reps);
  nlohmann::ordered_json freq = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < report.selection_frequency.size(); ++j)
    freq.push_back({{"name", column_name(report.column_names, j)},
                    {"frequency", report.selection_frequency[j]}});
  doc["selection_frequency"] = std::move(freq);
  return doc.dump(2) + "\n";
}

std::string sensitivity_to_csv(const SensitivityReport& report) {
  std::ostringstream out;
  out << "rep,seed,ok,nzero,l_index,lambda,cvm,alpha,cvsd,error\n";
  for (const SensitivityRep& rep : report.reps) {
    out << rep.rep << ',' << rep.seed << ',' << (rep.ok ? 1 : 0) << ',';
    if (rep.ok)
      out << rep.selected.nzero << ',' << rep.selected.l_index << ','
          << fmt_double(rep.selected.lambda) << ',' << fmt_double(rep.selected.cvm) << ','
          << fmt_double(rep.selected.alpha) << ',' << fmt_double(rep.selected.cvsd) << ',';
    else
      out << ",,,,,,";
    std::string err = rep.error;
    for (char& c : err)
      if (c == ',' || c == '\n') c = ';';
    out << err << '\n';
  }
  return out.str();
}

std::string sensitivity_frequency_to_csv(const SensitivityReport& report) {
  std::ostringstream out;
  out << "name,frequency\n";
  for (std::size_t j = 0; j < report.selection_frequency.size(); ++j)
    out << column_name(report.column_names, j) << ','
        << fmt_double(report.selection_frequency[j]) << '\n';
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw numeric_error("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw numeric_error("failed while writing '" + path.string() + "'");
}

}  // namespace enet
