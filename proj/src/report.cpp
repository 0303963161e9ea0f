#include "susymod/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace susymod {

void VerificationReport::add(std::string check_id, std::string anchor, double residual,
                             double tolerance) {
  const bool pass = std::isfinite(residual) && residual <= tolerance;
  entries_.push_back({std::move(check_id), std::move(anchor), residual, tolerance, pass});
}

void VerificationReport::merge(const VerificationReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::vector<CheckEntry> VerificationReport::entries() const {
  std::vector<CheckEntry> sorted = entries_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckEntry& a, const CheckEntry& b) { return a.check_id < b.check_id; });
  return sorted;
}

const CheckEntry& VerificationReport::entry(const std::string& check_id) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const CheckEntry& e) { return e.check_id == check_id; });
  if (it == entries_.end()) throw std::out_of_range("no check named " + check_id);
  return *it;
}

bool VerificationReport::overall_pass() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const CheckEntry& e) { return e.pass; });
}

std::vector<CheckEntry> VerificationReport::failures() const {
  std::vector<CheckEntry> out;
  for (const auto& e : entries()) {
    if (!e.pass) out.push_back(e);
  }
  return out;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "table") return OutputFormat::Table;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

std::string format_number(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

void write_json(const nlohmann::ordered_json& v, std::string& out) {
  using value_t = nlohmann::ordered_json::value_t;
  switch (v.type()) {
    case value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::ordered_json(key).dump();
        out += ':';
        write_json(item, out);
      }
      out += '}';
      break;
    }
    case value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ',';
        first = false;
        write_json(item, out);
      }
      out += ']';
      break;
    }
    case value_t::number_float:
      out += format_number(v.get<double>());
      break;
    default:
      out += v.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& value) {
  std::string out;
  write_json(value, out);
  return out;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : report.entries()) {
    entries.push_back({{"check_id", e.check_id},
                       {"paper_anchor", e.paper_anchor},
                       {"residual", e.residual},
                       {"tolerance", e.tolerance},
                       {"pass", e.pass}});
  }
  nlohmann::ordered_json out;
  out["suite"] = report.suite();
  out["config"] = report.config();
  out["entries"] = std::move(entries);
  out["overall_pass"] = report.overall_pass();
  out["wall_time_ms"] = report.wall_time_ms();
  return out;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string to_csv(const VerificationReport& report) {
  std::string out = "check_id,paper_anchor,residual,tolerance,pass\n";
  for (const auto& e : report.entries()) {
    out += csv_field(e.check_id) + ',' + csv_field(e.paper_anchor) + ',' +
           format_number(e.residual) + ',' + format_number(e.tolerance) + ',' +
           (e.pass ? "true" : "false") + '\n';
  }
  return out;
}

std::string to_table(const VerificationReport& report) {
  const auto entries = report.entries();
  std::size_t id_width = 8;
  for (const auto& e : entries) id_width = std::max(id_width, e.check_id.size());

  std::ostringstream os;
  os << "suite: " << report.suite() << '\n';
  os << std::left << std::setw(static_cast<int>(id_width)) << "check" << "  " << std::setw(12)
     << "residual" << "  " << std::setw(12) << "tolerance" << "  verdict  anchor\n";
  for (const auto& e : entries) {
    os << std::left << std::setw(static_cast<int>(id_width)) << e.check_id << "  "
       << std::scientific << std::setprecision(3) << std::setw(12) << e.residual << "  "
       << std::setw(12) << e.tolerance << "  " << (e.pass ? "PASS   " : "FAIL   ") << "  "
       << e.paper_anchor << '\n';
  }
  os << (report.overall_pass() ? "overall: PASS" : "overall: FAIL") << '\n';
  return os.str();
}

std::string serialize(const VerificationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return dump_json(to_json(report)) + '\n';
    case OutputFormat::Csv:
      return to_csv(report);
    case OutputFormat::Table:
      return to_table(report);
  }
  return {};
}

}  // namespace susymod
