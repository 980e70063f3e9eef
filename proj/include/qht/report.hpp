// ============================================================================
// report.hpp — deterministic CSV / JSON report emission
// ============================================================================
//
// Reports are reproducible by construction: no timestamps, fixed %.12g
// number formatting, fixed section order.  CSV is the primary format
// (sections introduced by "# name" comment lines); the JSON mirror carries
// the same values with non-finite numbers encoded as strings ("inf",
// "-inf", "nan").
// ============================================================================

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qht {

enum class ReportFormat { csv, json };

// %.12g with stable spellings for non-finite values.
std::string format_number(double v);

// Optional conversion applied at output only: nats -> bits (divide by ln 2).
double to_output_units(double nats, bool bits);

class ReportBuilder {
 public:
  explicit ReportBuilder(ReportFormat format) : format_(format) {}

  // Starts a CSV section ("# name" + header row) and the matching JSON array.
  void begin_section(const std::string& name,
                     const std::vector<std::string>& columns);
  void add_row(const std::vector<std::string>& cells);

  // Scalar key/value pairs outside any table.
  void add_scalar(const std::string& key, const std::string& value);

  std::string str() const;

 private:
  ReportFormat format_;
  std::string csv_;
  nlohmann::ordered_json json_ = nlohmann::ordered_json::object();
  std::string section_;
  std::vector<std::string> columns_;
};

// Writes to the path, or to the provided stream when path is empty.
void emit_report(const std::string& body, const std::string& path,
                 std::ostream& out);

}  // namespace qht
