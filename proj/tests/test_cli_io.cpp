#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cycgrp/catalog.hpp"
#include "cycgrp/cayley_io.hpp"
#include "cycgrp/cli.hpp"
#include "cycgrp/constructors.hpp"
#include "cycgrp/names.hpp"
#include "cycgrp/report_json.hpp"

using namespace cycgrp;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "cycgrp_test_cli_io";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

CayleyFormatError parse_error(const std::string& text) {
  try {
    (void)parse_cayley(text);
  } catch (const CayleyFormatError& e) {
    return e;
  }
  FAIL("accepted: " << text);
  return CayleyFormatError(0, 0, "");
}

const Catalog& catalog100() {
  static const Catalog cat = paper_catalog(100);
  return cat;
}

}  // namespace

TEST_CASE("emit_cayley of C3") {
  CHECK(emit_cayley(cyclic(3)) == "cayley v1 3\n0 1 2\n1 2 0\n2 0 1\n");
}

TEST_CASE("parse_cayley tolerates comments and spacing") {
  const Group g = parse_cayley("# a comment\n\ncayley v1 2\n  0\t1 \n# mid\n1   0\r\n", "C2");
  CHECK(g.order() == 2);
  CHECK(g.name() == "C2");
  CHECK(g.mul(1, 1) == 0);
}

TEST_CASE("parse_cayley diagnostics") {
  auto e = parse_error("");
  CHECK(e.message().find("missing header") != std::string::npos);

  e = parse_error("cayley v2 2\n0 1\n1 0\n");
  CHECK(e.line() == 1);
  CHECK(e.column() == 8);

  e = parse_error("cayley v1 0\n");
  CHECK(e.line() == 1);
  e = parse_error("cayley v1 2001\n");
  CHECK(e.message().find("exceeds") != std::string::npos);

  e = parse_error("cayley v1 2\n0 1\n");
  CHECK(e.message().find("1 of 2 rows") != std::string::npos);

  e = parse_error("cayley v1 2\n0 1\n1 0\n0 1\n");
  CHECK(e.line() == 4);

  e = parse_error("cayley v1 2\n0 1 1\n1 0\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 5);

  e = parse_error("cayley v1 2\n0 x\n1 0\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 3);

  e = parse_error("cayley v1 2\n0 1\n1 2\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 3);
  CHECK(e.message().find("out of range") != std::string::npos);

  e = parse_error("cayley v1 2\n1 0\n0 1\n");
  CHECK(e.message().find("identity") != std::string::npos);

  e = parse_error("cayley v1 3\n0 1 2\n1 1 0\n2 0 1\n");
  CHECK(e.line() == 3);
  CHECK(e.message().find("repeats") != std::string::npos);
}

TEST_CASE("parse_cayley names a non-associative triple") {
  const std::string loop =
      "cayley v1 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
  const auto e = parse_error(loop);
  CHECK(e.message().find("associativity fails") != std::string::npos);
  CHECK(e.message().find("(xy)z != x(yz)") != std::string::npos);
  CHECK(e.line() >= 2);
}

TEST_CASE("emit then parse is the identity on the catalog up to 100") {
  for (const auto& g : catalog100().groups) {
    const std::string text = emit_cayley(*g.group);
    const Group back = parse_cayley(text);
    REQUIRE(back == *g.group);
    CHECK(emit_cayley(back) == text);
  }
}

TEST_CASE("group names round-trip") {
  for (const auto& s : catalog_specs(500)) {
    const auto name = family_name(s);
    const auto parsed = parse_group_name(name);
    REQUIRE_MESSAGE(parsed.has_value(), name);
    CHECK(family_name(*parsed) == name);
  }
  for (const auto& g : catalog100().groups) {
    const auto parsed = parse_group_name(g.name);
    REQUIRE(parsed.has_value());
    CHECK(fingerprint(construct(*parsed)) == g.fingerprint);
  }
}

TEST_CASE("group name aliases and rejects") {
  CHECK(family_name(*parse_group_name("S3")) == "C3:C2");
  CHECK(parse_group_name("Z3:Z4")->tag == FamilyTag::Z3SemiZ4);
  CHECK(parse_group_name("D12")->n == 6);
  CHECK(parse_group_name("mod27")->row == 7);
  CHECK(parse_group_name("pq2.4@p=3,q=5,irr")->variant == 0);
  CHECK(parse_group_name("pq2.4@p=3,q=7")->variant == 1);
  for (const char* bad : {"", "Foo", "C0", "D7", "G15", "Gxvi@p=3", "mod28", "pq2.3@p=2,q=3,k=1",
                          "C3xC", "C99999999999"}) {
    CHECK_FALSE(parse_group_name(bad).has_value());
  }
  CHECK_FALSE(group_name_forms().empty());
}

TEST_CASE("report JSON round-trips and is stable") {
  ReportDocument doc;
  doc.tool_version = tool_version();
  doc.invocation = {"verify", "lagrange", 60};
  doc.report = lagrange_sweep(60);
  const std::string text = dump_report(doc);
  CHECK(parse_report(text) == doc);
  CHECK(dump_report(parse_report(text)) == text);

  ReportDocument again = doc;
  again.report = lagrange_sweep(60);
  CHECK(dump_report(again) == text);

  const auto j = nlohmann::json::parse(text);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(j.at("schema_version") == kReportSchemaVersion);

  auto wrong = j;
  wrong["schema_version"] = 99;
  CHECK_THROWS_AS(report_from_json(wrong), std::invalid_argument);
  wrong = j;
  wrong["report"]["verdicts"][0]["status"] = "maybe";
  CHECK_THROWS_AS(report_from_json(wrong), std::invalid_argument);
}

TEST_CASE("formula report is byte-identical across runs") {
  ReportDocument a, b;
  a.invocation = b.invocation = {"verify", "formulas", 100};
  a.report = run_formula_suite(100);
  b.report = run_formula_suite(100);
  CHECK(dump_report(a) == dump_report(b));
}

TEST_CASE("cli count") {
  auto r = run({"count", "--group", "D8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cyclic subgroups: 7") != std::string::npos);
  CHECK(r.out.find("{1:1, 2:5, 4:1}") != std::string::npos);

  r = run({"count", "--group", "A4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cyclic subgroups: 8") != std::string::npos);

  r = run({"count", "--group", "Nope"});
  CHECK(r.code == 2);
  CHECK(r.err.find("accepted group names") != std::string::npos);

  r = run({"count", "--group", "C5:C2"});
  CHECK(r.code == 0);
  r = run({"count", "--group", "C7:C3"});
  CHECK(r.code == 0);
  r = run({"count", "--group", "C5:C3"});
  CHECK(r.code == 2);
  r = run({"count", "--group", "G3@p=2,q=3"});
  CHECK(r.code == 2);

  r = run({"count"});
  CHECK(r.code == 2);
  r = run({"count", "--group", "C4", "--file", "x"});
  CHECK(r.code == 2);
}

TEST_CASE("cli export and import") {
  const auto path = scratch("q8.txt");
  auto r = run({"export", "--group", "Q8", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(slurp(path) == emit_cayley(quaternion_8()));

  r = run({"import", "--file", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("cyclic subgroups: 5") != std::string::npos);
  CHECK(r.out.find("Q8") != std::string::npos);

  r = run({"count", "--file", path.string()});
  CHECK(r.code == 0);

  const auto bad = scratch("bad.txt");
  write(bad, "cayley v1 2\n0 1\n1 7\n");
  r = run({"import", "--file", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find(bad.string() + ":3:3:") != std::string::npos);

  r = run({"import", "--file", scratch("missing.txt").string()});
  CHECK(r.code == 2);
}

TEST_CASE("cli verify") {
  auto r = run({"verify", "--target", "lagrange", "--max-order", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("violators: {A4}") != std::string::npos);

  const auto json = scratch("v.json");
  r = run({"verify", "--target", "formulas", "--max-order", "16", "--json", json.string()});
  CHECK(r.code == 0);
  const auto doc = parse_report(slurp(json));
  CHECK(doc.invocation.command == "verify");
  CHECK(doc.invocation.target == "formulas");
  CHECK(doc.report.passed());

  r = run({"verify", "--target", "7", "--max-order", "100"});
  CHECK(r.code == 0);
  r = run({"verify", "--target", "lagrange", "--max-order", "600"});
  CHECK(r.code == 2);
  r = run({"verify", "--target", "9", "--max-order", "10"});
  CHECK(r.code == 2);
  r = run({"verify", "--target", "le5", "--max-order", "0"});
  CHECK(r.code == 2);
  r = run({"verify", "--target", "le5"});
  CHECK(r.code == 2);
}

TEST_CASE("cli catalog and help") {
  const auto out = scratch("cat.json");
  auto r = run({"catalog", "--max-order", "16", "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("G14") != std::string::npos);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("groups").size() == paper_catalog(16).groups.size());

  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"catalog", "--max-order", "5000"}).code == 2);
}
