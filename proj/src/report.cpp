#include "seqent/report.hpp"

#include <cmath>
#include <cstdio>

namespace seqent {

namespace {

std::string json_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
          out += buffer;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// RFC 4180: quote fields containing commas or quotes (probs specs do).
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_number(double value) {
  if (std::isnan(value)) return "\"nan\"";
  if (std::isinf(value)) return value > 0 ? "\"inf\"" : "\"-inf\"";
  return format_double(value);
}

std::string csv_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return format_double(value);
}

std::string json_row(const MonteCarloReport& r) {
  std::string out = "{";
  out += "\"estimator\":\"" + json_escape(std::string(to_string(r.config.estimator))) + "\",";
  out += "\"dist\":\"" + json_escape(r.config.dist_spec) + "\",";
  out += "\"n\":" + std::to_string(r.config.window) + ",";
  out += "\"reps\":" + std::to_string(r.config.replications) + ",";
  out += "\"failures\":" + std::to_string(r.failures) + ",";
  out += "\"mean\":" + json_number(r.mean) + ",";
  out += "\"stddev\":" + json_number(r.stddev) + ",";
  out += "\"stderr\":" + json_number(r.std_error) + ",";
  out += "\"truth\":" + json_number(r.truth) + ",";
  out += "\"bias\":" + json_number(r.bias) + ",";
  out += "\"z\":" + json_number(r.z) + ",";
  out += "\"mean_draws\":" + json_number(r.mean_draws) + ",";
  out += "\"seed\":" + std::to_string(r.config.master_seed) + ",";
  out += "\"generator\":\"" + json_escape(r.generator) + "\"";
  out += "}";
  return out;
}

std::string csv_row(const MonteCarloReport& r) {
  std::string out;
  out += csv_field(std::string(to_string(r.config.estimator))) + ",";
  out += csv_field(r.config.dist_spec) + ",";
  out += std::to_string(r.config.window) + ",";
  out += std::to_string(r.config.replications) + ",";
  out += std::to_string(r.failures) + ",";
  out += csv_number(r.mean) + ",";
  out += csv_number(r.stddev) + ",";
  out += csv_number(r.std_error) + ",";
  out += csv_number(r.truth) + ",";
  out += csv_number(r.bias) + ",";
  out += csv_number(r.z) + ",";
  out += csv_number(r.mean_draws) + ",";
  out += std::to_string(r.config.master_seed) + ",";
  out += csv_field(r.generator);
  return out;
}

constexpr char kCsvHeader[] =
    "estimator,dist,n,reps,failures,mean,stddev,stderr,truth,bias,z,mean_draws,seed,generator";

}  // namespace

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string to_json(const MonteCarloReport& report) { return json_row(report) + "\n"; }

std::string to_json(std::span<const MonteCarloReport> reports) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out += json_row(reports[i]);
    if (i + 1 < reports.size()) out += ',';
    out += '\n';
  }
  out += "]\n";
  return out;
}

std::string to_csv(std::span<const MonteCarloReport> reports) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& report : reports) {
    out += csv_row(report);
    out += '\n';
  }
  return out;
}

std::string to_json(const EstimateRecord& record, const std::string& dist_spec,
                    std::uint64_t window, std::uint64_t seed) {
  std::string out = "{";
  out += "\"estimator\":\"" + json_escape(std::string(to_string(record.id))) + "\",";
  out += "\"dist\":\"" + json_escape(dist_spec) + "\",";
  out += "\"n\":" + std::to_string(window) + ",";
  out += "\"seed\":" + std::to_string(seed) + ",";
  out += "\"value\":" + json_number(record.value) + ",";
  out += "\"draws\":" + std::to_string(record.draws_consumed) + ",";
  out += "\"generator\":\"" + json_escape(kGeneratorId) + "\"";
  out += "}\n";
  return out;
}

std::string to_csv(const EstimateRecord& record, const std::string& dist_spec,
                   std::uint64_t window, std::uint64_t seed) {
  std::string out = "estimator,dist,n,seed,value,draws,generator\n";
  out += csv_field(std::string(to_string(record.id))) + ",";
  out += csv_field(dist_spec) + ",";
  out += std::to_string(window) + ",";
  out += std::to_string(seed) + ",";
  out += csv_number(record.value) + ",";
  out += std::to_string(record.draws_consumed) + ",";
  out += csv_field(kGeneratorId);
  out += '\n';
  return out;
}

std::string to_json(std::span<const VerifyRow> rows) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const VerifyRow& row = rows[i];
    out += "{\"check\":\"" + json_escape(row.check) + "\",";
    out += "\"observed\":" + json_number(row.observed) + ",";
    out += "\"expected\":" + json_number(row.expected) + ",";
    out += "\"error\":" + json_number(row.error) + ",";
    out += "\"tail_bound\":" + json_number(row.tail_bound) + ",";
    out += "\"tolerance\":" + json_number(row.tolerance) + ",";
    out += std::string("\"pass\":") + (row.pass ? "true" : "false") + "}";
    if (i + 1 < rows.size()) out += ',';
    out += '\n';
  }
  out += "]\n";
  return out;
}

std::string to_csv(std::span<const VerifyRow> rows) {
  std::string out = "check,observed,expected,error,tail_bound,tolerance,pass\n";
  for (const VerifyRow& row : rows) {
    out += csv_field(row.check) + ",";
    out += csv_number(row.observed) + ",";
    out += csv_number(row.expected) + ",";
    out += csv_number(row.error) + ",";
    out += csv_number(row.tail_bound) + ",";
    out += csv_number(row.tolerance) + ",";
    out += row.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace seqent
