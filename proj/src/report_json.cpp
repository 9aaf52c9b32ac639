#include "cycgrp/report_json.hpp"

#include <stdexcept>

namespace cycgrp {

using nlohmann::json;

namespace {

Status status_from(const std::string& s) {
  for (Status st : {Status::Pass, Status::Fail, Status::NotRealizable, Status::OutOfCatalog}) {
    if (to_string(st) == s) return st;
  }
  throw std::invalid_argument("unknown verdict status '" + s + "'");
}

}  // namespace

std::string tool_version() {
#ifdef CYCGRP_VERSION
  return CYCGRP_VERSION;
#else
  return "0.0.0";
#endif
}

json to_json(const ReportDocument& doc) {
  const auto& r = doc.report;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back({{"check", v.check},
                        {"expected", v.expected},
                        {"observed", v.observed},
                        {"status", to_string(v.status)},
                        {"witness", v.witness}});
  }
  json cross = json::array();
  for (const auto& [total, names] : r.cross_tab) {
    cross.push_back({{"total", total}, {"groups", names}});
  }
  const auto& c = r.catalog;
  json catalog = {{"min_order", c.min_order},
                  {"max_order", c.max_order},
                  {"group_count", c.group_count},
                  {"entry_count", c.entry_count},
                  {"distinct_fingerprints", c.distinct_fingerprints},
                  {"complete_orders", c.complete_orders},
                  {"out_of_catalog_orders", c.out_of_catalog_orders},
                  {"collisions", c.collisions}};
  json counts = {{"pass", r.count(Status::Pass)},
                 {"fail", r.count(Status::Fail)},
                 {"not_realizable", r.count(Status::NotRealizable)},
                 {"out_of_catalog", r.count(Status::OutOfCatalog)},
                 {"unexpected_failures", r.unexpected_failures()}};
  return {{"schema_version", doc.schema_version},
          {"tool_version", doc.tool_version},
          {"invocation",
           {{"command", doc.invocation.command},
            {"target", doc.invocation.target},
            {"max_order", doc.invocation.max_order}}},
          {"report",
           {{"suite", r.suite},
            {"catalog", catalog},
            {"verdicts", verdicts},
            {"cross_tab", cross},
            {"expected_failures", r.expected_failures},
            {"notes", r.notes},
            {"counts", counts}}}};
}

ReportDocument report_from_json(const json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  if (doc.schema_version != kReportSchemaVersion) {
    throw std::invalid_argument("unsupported report schema_version " +
                                std::to_string(doc.schema_version));
  }
  doc.tool_version = j.at("tool_version").get<std::string>();
  const auto& inv = j.at("invocation");
  doc.invocation.command = inv.at("command").get<std::string>();
  doc.invocation.target = inv.at("target").get<std::string>();
  doc.invocation.max_order = inv.at("max_order").get<std::uint64_t>();

  const auto& r = j.at("report");
  auto& out = doc.report;
  out.suite = r.at("suite").get<std::string>();
  const auto& c = r.at("catalog");
  out.catalog.min_order = c.at("min_order").get<std::uint64_t>();
  out.catalog.max_order = c.at("max_order").get<std::uint64_t>();
  out.catalog.group_count = c.at("group_count").get<std::size_t>();
  out.catalog.entry_count = c.at("entry_count").get<std::size_t>();
  out.catalog.distinct_fingerprints = c.at("distinct_fingerprints").get<std::size_t>();
  out.catalog.complete_orders = c.at("complete_orders").get<std::vector<std::uint64_t>>();
  out.catalog.out_of_catalog_orders = c.at("out_of_catalog_orders").get<std::vector<std::uint64_t>>();
  out.catalog.collisions = c.at("collisions").get<std::vector<std::string>>();
  for (const auto& v : r.at("verdicts")) {
    out.verdicts.push_back({v.at("check").get<std::string>(), v.at("expected").get<std::string>(),
                            v.at("observed").get<std::string>(),
                            status_from(v.at("status").get<std::string>()),
                            v.at("witness").get<std::string>()});
  }
  for (const auto& row : r.at("cross_tab")) {
    out.cross_tab[row.at("total").get<std::uint64_t>()] =
        row.at("groups").get<std::vector<std::string>>();
  }
  out.expected_failures = r.at("expected_failures").get<std::vector<std::string>>();
  out.notes = r.at("notes").get<std::vector<std::string>>();
  return doc;
}

std::string dump_report(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

ReportDocument parse_report(std::string_view text) {
  return report_from_json(json::parse(text.begin(), text.end()));
}

}  // namespace cycgrp
