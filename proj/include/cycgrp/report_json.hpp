#pragma once

// JSON form of census reports. Objects are emitted with sorted keys so two
// runs over the same input are byte-identical.

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cycgrp/census.hpp"

namespace cycgrp {

inline constexpr int kReportSchemaVersion = 1;

std::string tool_version();

struct Invocation {
  std::string command;
  std::string target;
  std::uint64_t max_order = 0;

  friend bool operator==(const Invocation&, const Invocation&) = default;
};

struct ReportDocument {
  int schema_version = kReportSchemaVersion;
  std::string tool_version;
  Invocation invocation;
  CensusReport report;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

nlohmann::json to_json(const ReportDocument& doc);
/// Throws nlohmann::json::exception or std::invalid_argument on malformed input.
ReportDocument report_from_json(const nlohmann::json& j);

std::string dump_report(const ReportDocument& doc);
ReportDocument parse_report(std::string_view text);

}  // namespace cycgrp
