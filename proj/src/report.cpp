#include "qht/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "qht/errors.hpp"

namespace qht {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // collapse -0 so reports never depend on its sign
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double to_output_units(double nats, bool bits) {
  return bits ? nats / 0.69314718055994530942 : nats;
}

namespace {

// JSON cell: numbers stay numbers; non-finite values and labels are strings.
nlohmann::ordered_json json_cell(const std::string& s) {
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) {
      if (std::isfinite(v)) return v;
      return s;
    }
  } catch (...) {
  }
  return s;
}

}  // namespace

void ReportBuilder::begin_section(const std::string& name,
                                  const std::vector<std::string>& columns) {
  section_ = name;
  columns_ = columns;
  if (format_ == ReportFormat::csv) {
    csv_ += "# " + name + "\n";
    for (size_t i = 0; i < columns.size(); ++i) {
      if (i) csv_ += ",";
      csv_ += columns[i];
    }
    csv_ += "\n";
  } else {
    json_[name] = nlohmann::ordered_json::array();
  }
}

void ReportBuilder::add_row(const std::vector<std::string>& cells) {
  if (section_.empty()) throw ArgumentError("report row outside any section");
  if (format_ == ReportFormat::csv) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) csv_ += ",";
      csv_ += cells[i];
    }
    csv_ += "\n";
  } else {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (size_t i = 0; i < cells.size() && i < columns_.size(); ++i)
      row[columns_[i]] = json_cell(cells[i]);
    json_[section_].push_back(std::move(row));
  }
}

void ReportBuilder::add_scalar(const std::string& key,
                               const std::string& value) {
  if (format_ == ReportFormat::csv) {
    csv_ += "# " + key + "," + value + "\n";
  } else {
    json_[key] = json_cell(value);
  }
}

std::string ReportBuilder::str() const {
  if (format_ == ReportFormat::csv) return csv_;
  return json_.dump(2) + "\n";
}

void emit_report(const std::string& body, const std::string& path,
                 std::ostream& out) {
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file: " + path);
  f << body;
}

}  // namespace qht
