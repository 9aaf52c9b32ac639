#include "cycgrp/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cycgrp/catalog.hpp"
#include "cycgrp/cayley_io.hpp"
#include "cycgrp/census.hpp"
#include "cycgrp/names.hpp"
#include "cycgrp/report_json.hpp"

namespace cycgrp {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Painter {
 public:
  explicit Painter(bool on) : on_(on) {}
  std::string status(Status s, bool expected = false) const {
    std::string text = s == Status::Pass   ? "PASS"
                       : s == Status::Fail ? (expected ? "FAIL (expected)" : "FAIL")
                       : s == Status::NotRealizable ? "NOT-REALIZABLE"
                                                    : "OUT-OF-CATALOG";
    if (!on_) return text;
    const char* code = s == Status::Pass ? "32" : s == Status::Fail ? (expected ? "33" : "31") : "36";
    return std::string("\033[") + code + "m" + text + "\033[0m";
  }

 private:
  bool on_;
};

std::string by_order_text(const std::map<std::uint64_t, std::uint64_t>& m) {
  std::string s = "{";
  bool first = true;
  for (const auto& [d, c] : m) {
    if (c == 0) continue;
    s += (first ? "" : ", ") + std::to_string(d) + ":" + std::to_string(c);
    first = false;
  }
  return s + "}";
}

std::string name_help() {
  std::string s = "accepted group names:\n";
  for (const auto& line : group_name_forms()) s += "  " + line + "\n";
  return s;
}

Group resolve_group(const std::string& name) {
  const auto spec = parse_group_name(name);
  if (!spec) throw UsageError("unknown group name '" + name + "'\n" + name_help());
  try {
    validate(*spec);
    return construct(*spec);
  } catch (const NotRealizable& e) {
    throw UsageError("'" + name + "' does not exist: " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError("'" + name + "': " + e.what());
  }
}

void check_max_order(std::uint64_t max_order, std::uint64_t limit) {
  if (max_order < 1 || max_order > limit) {
    throw UsageError("--max-order must be in 1.." + std::to_string(limit));
  }
}

void print_count(std::ostream& out, const std::string& name, const Group& g) {
  const auto r = count_one(g);
  out << "group: " << name << "\n"
      << "order: " << g.order() << "\n"
      << "cyclic subgroups: " << r.census.total << "\n"
      << "by order: " << by_order_text(r.census.by_order) << "\n"
      << "divisor bound d(" << g.order() << ") = " << r.lower_bound << ": "
      << (r.bound_holds ? "holds" : "VIOLATED") << (r.cyclic ? " (cyclic, equality)" : "") << "\n"
      << "label: " << r.label;
  if (!r.matched_name.empty()) out << " (" << r.matched_name << ")";
  out << "\n";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f) throw UsageError("write failed for " + path);
}

int run_catalog(std::uint64_t max_order, const std::string& out_path, std::ostream& out) {
  check_max_order(max_order, kMaxGroupOrder);
  const auto cat = paper_catalog(max_order);
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : cat.groups) {
    std::vector<std::string> labels;
    for (const auto& s : g.specs) labels.push_back(family_label(s));
    out << g.order << '\t' << g.name << '\t' << g.census.total << '\t';
    for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
    out << "\n";
    nlohmann::json by_order = nlohmann::json::object();
    for (const auto& [d, c] : g.census.by_order) by_order[std::to_string(d)] = c;
    groups.push_back({{"name", g.name},
                      {"order", g.order},
                      {"total", g.census.total},
                      {"labels", labels},
                      {"by_order", by_order}});
  }
  const auto summary = summarize(cat);
  out << "# " << cat.groups.size() << " groups, " << cat.entries.size() << " family instances, "
      << summary.distinct_fingerprints << " distinct fingerprints, " << cat.failures.size()
      << " construction failures\n";
  for (const auto& c : summary.collisions) out << "# fingerprint collision: " << c << "\n";
  for (const auto& f : cat.failures) {
    out << "# construction failed: " << family_name(f.spec) << ": " << f.error << "\n";
  }
  if (!out_path.empty()) {
    nlohmann::json doc = {{"schema_version", kReportSchemaVersion},
                          {"tool_version", tool_version()},
                          {"invocation", {{"command", "catalog"}, {"target", ""}, {"max_order", max_order}}},
                          {"groups", groups},
                          {"collisions", summary.collisions}};
    write_text(out_path, doc.dump(2) + "\n");
  }
  return cat.failures.empty() ? kExitOk : kExitFail;
}

int run_verify(const std::string& target, std::uint64_t max_order, const std::string& json_path,
               bool verbose, std::ostream& out, const Painter& paint) {
  CensusReport report;
  if (target == "formulas") {
    check_max_order(max_order, kMaxGroupOrder);
    report = run_formula_suite(max_order);
  } else if (target == "lagrange") {
    check_max_order(max_order, kRetainTablesUpTo);
    report = lagrange_sweep(max_order);
  } else if (auto t = parse_target(target)) {
    check_max_order(max_order, kMaxGroupOrder);
    report = verify_classification(*t, max_order);
  } else {
    throw UsageError("--target must be one of le5, 6, 7, 8, formulas, lagrange");
  }

  out << "suite " << report.suite << ", max order " << max_order << ": "
      << report.count(Status::Pass) << " pass, " << report.count(Status::Fail) << " fail, "
      << report.count(Status::NotRealizable) << " not-realizable, "
      << report.count(Status::OutOfCatalog) << " out-of-catalog\n";
  out << "catalog: " << report.catalog.group_count << " groups, "
      << report.catalog.distinct_fingerprints << " distinct fingerprints\n";
  for (const auto& v : report.verdicts) {
    const bool expected = std::binary_search(report.expected_failures.begin(),
                                             report.expected_failures.end(), v.check);
    if (!verbose && v.status == Status::Pass) continue;
    if (!verbose && v.status == Status::NotRealizable) continue;
    out << paint.status(v.status, expected) << ' ' << v.check << ": expected " << v.expected
        << ", observed " << v.observed;
    if (!v.witness.empty()) out << " [" << v.witness << "]";
    out << "\n";
  }
  if (report.suite == "lagrange") {
    for (const auto& v : report.verdicts) {
      if (v.check == "lagrange/unique-violator") out << "violators: " << v.observed << "\n";
    }
  }
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  out << "result: " << paint.status(report.passed() ? Status::Pass : Status::Fail) << "\n";

  if (!json_path.empty()) {
    ReportDocument doc;
    doc.tool_version = tool_version();
    doc.invocation = {"verify", target, max_order};
    doc.report = report;
    write_text(json_path, dump_report(doc));
  }
  return report.passed() ? kExitOk : kExitFail;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Cyclic-subgroup census and verification for small finite groups", "cycgrp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  std::uint64_t max_order = 0;
  std::string out_path, group_name, file_path, target, json_path;
  bool verbose = false;

  auto* catalog = app.add_subcommand("catalog", "List every catalog group up to an order");
  catalog->add_option("--max-order", max_order, "Largest group order (<= 2000)")->required();
  catalog->add_option("--out", out_path, "Write the catalog as JSON");

  auto* count = app.add_subcommand("count", "Count the cyclic subgroups of one group");
  auto* count_group = count->add_option("--group", group_name, "Group name");
  auto* count_file = count->add_option("--file", file_path, "Cayley table file");
  count_group->excludes(count_file);
  count->require_option(1);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--target", target, "le5, 6, 7, 8, formulas or lagrange")->required();
  verify->add_option("--max-order", max_order, "Largest group order")->required();
  verify->add_option("--json", json_path, "Write the report as JSON");
  verify->add_flag("-v,--verbose", verbose, "Print every verdict");

  auto* exp = app.add_subcommand("export", "Write a group's Cayley table file");
  exp->add_option("--group", group_name, "Group name")->required();
  exp->add_option("--out", out_path, "Output path")->required();

  auto* imp = app.add_subcommand("import", "Validate a Cayley table file and count it");
  imp->add_option("--file", file_path, "Cayley table file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Painter paint(color);
  try {
    if (catalog->parsed()) return run_catalog(max_order, out_path, out);
    if (verify->parsed()) return run_verify(target, max_order, json_path, verbose, out, paint);
    if (count->parsed()) {
      if (!group_name.empty()) {
        print_count(out, group_name, resolve_group(group_name));
      } else {
        const Group g = read_cayley_file(file_path);
        print_count(out, file_path, g);
      }
      return kExitOk;
    }
    if (exp->parsed()) {
      const Group g = resolve_group(group_name);
      write_cayley_file(g, out_path);
      out << "wrote " << out_path << " (" << g.name() << ", order " << g.order() << ")\n";
      return kExitOk;
    }
    if (imp->parsed()) {
      const Group g = read_cayley_file(file_path);
      print_count(out, file_path, g);
      return kExitOk;
    }
  } catch (const CayleyFormatError& e) {
    err << "error: " << file_path;
    if (e.line()) {
      err << ":" << e.line();
      if (e.column()) err << ":" << e.column();
    }
    err << ": " << e.message() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const bool color = std::getenv("NO_COLOR") == nullptr && ::isatty(STDOUT_FILENO) == 1;
  return cli_main(args, std::cout, std::cerr, color);
}

}  // namespace cycgrp
