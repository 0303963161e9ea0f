#pragma once

// Verification reports: named identity checks with residual, tolerance and
// verdict, plus their JSON / CSV / table encodings.

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace susymod {

struct CheckEntry {
  std::string check_id;
  std::string paper_anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  /// Records a check; pass iff residual is finite and <= tolerance.
  void add(std::string check_id, std::string anchor, double residual, double tolerance);
  /// Appends every entry of `other` (suite name of `other` is dropped).
  void merge(const VerificationReport& other);

  void set_config(nlohmann::ordered_json config) { config_ = std::move(config); }
  void set_wall_time_ms(double ms) { wall_time_ms_ = ms; }

  [[nodiscard]] const std::string& suite() const noexcept { return suite_; }
  /// Entries sorted by check_id.
  [[nodiscard]] std::vector<CheckEntry> entries() const;
  [[nodiscard]] const CheckEntry& entry(const std::string& check_id) const;
  [[nodiscard]] bool overall_pass() const noexcept;
  [[nodiscard]] std::vector<CheckEntry> failures() const;
  [[nodiscard]] const nlohmann::ordered_json& config() const noexcept { return config_; }
  [[nodiscard]] double wall_time_ms() const noexcept { return wall_time_ms_; }

 private:
  std::string suite_;
  std::vector<CheckEntry> entries_;
  nlohmann::ordered_json config_ = nlohmann::ordered_json::object();
  double wall_time_ms_ = 0.0;
};

enum class OutputFormat { Json, Csv, Table };

[[nodiscard]] OutputFormat parse_format(const std::string& name);

/// JSON writer with floating-point values printed at 17 significant digits.
/// Non-finite numbers are written as null.
[[nodiscard]] std::string dump_json(const nlohmann::ordered_json& value);

/// {suite, config, entries[], overall_pass, wall_time_ms}
[[nodiscard]] nlohmann::ordered_json to_json(const VerificationReport& report);
[[nodiscard]] std::string to_csv(const VerificationReport& report);
[[nodiscard]] std::string to_table(const VerificationReport& report);
[[nodiscard]] std::string serialize(const VerificationReport& report, OutputFormat format);

/// RFC 4180 field quoting, used by every CSV writer in the project.
[[nodiscard]] std::string csv_field(const std::string& raw);
[[nodiscard]] std::string format_number(double value);

}  // namespace susymod
