#include "enet/csv_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace enet {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (const char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

double parse_cell(const std::string& raw, std::size_t row, const std::string& column) {
  const std::string cell = trim(raw);
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    std::ostringstream msg;
    msg << "row " << row << ", column '" << column << "': cannot parse '" << cell
        << "' as a number";
    throw data_error(msg.str());
  }
  return value;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, const std::string& response, Family family) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open '" + path.string() + "'");

  std::string line;
  if (!std::getline(in, line)) throw data_error("'" + path.string() + "' is empty");

  std::vector<std::string> header = split_csv_line(line);
  for (std::string& name : header) name = trim(name);
  if (header.size() < 2)
    throw data_error("'" + path.string() + "' needs a response column and at least one predictor");

  std::size_t y_col = header.size();
  for (std::size_t j = 0; j < header.size(); ++j)
    if (header[j] == response) {
      y_col = j;
      break;
    }
  if (y_col == header.size())
    throw data_error("response column '" + response + "' not found in '" + path.string() + "'");

  std::vector<std::vector<double>> columns(header.size());
  std::size_t row = 1;  // data rows are numbered from 1 (header excluded)
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      std::ostringstream msg;
      msg << "row " << row << ": expected " << header.size() << " fields, found "
          << fields.size();
      throw data_error(msg.str());
    }
    for (std::size_t j = 0; j < fields.size(); ++j)
      columns[j].push_back(parse_cell(fields[j], row, header[j]));
    ++row;
  }

  const std::size_t n = columns[0].size();
  if (n == 0) throw data_error("'" + path.string() + "' has no data rows");

  Dataset data;
  data.family = family;
  data.y.resize(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) data.y[static_cast<Eigen::Index>(i)] = columns[y_col][i];

  data.x.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(header.size() - 1));
  Eigen::Index out_col = 0;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j == y_col) continue;
    for (std::size_t i = 0; i < n; ++i)
      data.x(static_cast<Eigen::Index>(i), out_col) = columns[j][i];
    data.column_names.push_back(header[j]);
    ++out_col;
  }

  if (family == Family::binomial) {
    for (std::size_t i = 0; i < n; ++i) {
      const double yi = columns[y_col][i];
      if (yi != 0.0 && yi != 1.0) {
        std::ostringstream msg;
        msg << "row " << (i + 1) << ", column '" << response
            << "': binomial response must be 0 or 1, found " << yi;
        throw data_error(msg.str());
      }
    }
  }

  validate_dataset(data);
  return data;
}

}  // namespace enet
