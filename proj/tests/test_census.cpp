#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cycgrp/catalog.hpp"
#include "cycgrp/census.hpp"
#include "cycgrp/constructors.hpp"
#include "cycgrp/numtheory.hpp"
#include "support.hpp"

using namespace cycgrp;
using namespace testsupport;

namespace {

const Catalog& catalog500() {
  static const Catalog cat = paper_catalog(500);
  return cat;
}

const Verdict* find(const CensusReport& r, const std::string& id) {
  for (const auto& v : r.verdicts) {
    if (v.check == id) return &v;
  }
  return nullptr;
}

// Failing check ids, comma-joined in report order.
std::string failing(const CensusReport& r) {
  std::string out;
  for (const auto& v : r.verdicts) {
    if (v.status == Status::Fail) out += (out.empty() ? "" : ",") + v.check;
  }
  return out;
}

void check_report_invariants(const CensusReport& r) {
  CHECK(std::is_sorted(r.verdicts.begin(), r.verdicts.end(),
                       [](const Verdict& a, const Verdict& b) { return a.check < b.check; }));
  std::size_t in_tab = 0;
  for (const auto& [k, names] : r.cross_tab) in_tab += names.size();
  CHECK(in_tab == r.catalog.group_count);
  for (const auto& v : r.verdicts) {
    if (v.status == Status::Fail) CHECK_FALSE(v.witness.empty());
    if (v.check.rfind("formula/", 0) == 0 && v.status != Status::NotRealizable) {
      CHECK((v.status == Status::Pass) == (v.expected == v.observed));
    }
  }
}

}  // namespace

TEST_CASE("catalog of order 8, 12 and 16") {
  const Catalog c8 = paper_catalog(8);
  std::set<std::string> names;
  for (const auto& g : c8.groups) names.insert(g.name);
  for (const char* n : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2", "C4xC2",
                        "C2xC2xC2", "D8", "Q8", "C3:C2"}) {
    CHECK(names.count(n) == 1);
  }
  CHECK(c8.distinct_fingerprints() == c8.groups.size());

  const Catalog c16 = paper_catalog(16, 16);
  CHECK(c16.groups.size() == 14);
  CHECK(c16.distinct_fingerprints() == 14);
  const Catalog c12 = paper_catalog(12, 12);
  CHECK(c12.distinct_fingerprints() == 5);
}

TEST_CASE("catalog up to 500 is collision-free and fully built") {
  const auto& cat = catalog500();
  CHECK(cat.failures.empty());
  CHECK(cat.collisions.empty());
  CHECK(cat.distinct_fingerprints() == cat.groups.size());
  for (const auto& g : cat.groups) {
    REQUIRE(g.group);
    CHECK(g.group->order() == g.order);
  }
}

TEST_CASE("census-only mode drops large tables") {
  const Catalog cat = paper_catalog(625, 600, 500);
  CHECK_FALSE(cat.groups.empty());
  for (const auto& g : cat.groups) {
    CHECK_FALSE(g.group);
    CHECK(g.census.total > 0);
  }
  CHECK_THROWS_AS(paper_catalog(2001), std::invalid_argument);
}

TEST_CASE("element census sums to |G| and phi divides every count") {
  for (const auto& g : catalog500().groups) {
    std::uint64_t elems = 0, weighted = 0;
    for (const auto& [d, c] : g.census.elements_by_order) {
      elems += c;
      CHECK(c % euler_phi(d) == 0);
    }
    for (const auto& [d, c] : g.census.by_order) weighted += euler_phi(d) * c;
    CHECK(elems == g.order);
    CHECK(weighted == g.order);
  }
}

TEST_CASE("divisor bound holds, with equality exactly on cyclic groups") {
  for (const auto& g : catalog500().groups) {
    const auto d = divisor_count(g.order);
    CHECK(g.census.total >= d);
    CHECK((g.census.total == d) == is_cyclic(*g.group));
  }
}

TEST_CASE("formula suite at 16 passes") {
  const auto r = run_formula_suite(16);
  check_report_invariants(r);
  CHECK(failing(r).empty());
  CHECK(r.passed());
  std::size_t t1 = 0, t2 = 0;
  for (const auto& v : r.verdicts) {
    if (v.check.rfind("formula/table1-", 0) == 0) t1 += v.status == Status::Pass;
    if (v.check.rfind("formula/table2-", 0) == 0) t2 += v.status == Status::Pass;
  }
  CHECK(t1 == 5);
  CHECK(t2 == 14);
  CHECK(find(r, "formula/table2-row6/G6")->status == Status::Pass);
  CHECK(find(r, "formula/table2-row14/G14")->status == Status::Pass);
}

TEST_CASE("formula suite at 81 reproduces 17, 23 and 35") {
  const auto r = run_formula_suite(81);
  check_report_invariants(r);
  for (const auto& [id, value] : {std::pair<std::string, std::string>{"formula/table3-row7(ii)/Gxii@p=3", "17"},
                                  {"formula/table3-row8(ii)/Gxiii@p=3", "23"},
                                  {"formula/table3-row10(ii)/Gxv@p=3", "35"}}) {
    const Verdict* v = find(r, id);
    REQUIRE(v != nullptr);
    CHECK(v->status == Status::Pass);
    CHECK(v->observed == value);
  }
  const Verdict* floor = find(r, "table3-floor/Gxi@p=3");
  REQUIRE(floor != nullptr);
  CHECK(floor->status == Status::Pass);
}

TEST_CASE("formula suite at 500 has no failing verdicts") {
  const auto r = run_formula_suite(catalog500());
  check_report_invariants(r);
  CHECK(failing(r) == "");
  CHECK(r.count(Status::NotRealizable) > 0);
}

TEST_CASE("classification at 100") {
  const auto six = verify_classification(Target::Six, 100);
  check_report_invariants(six);
  CHECK(six.passed());
  for (const char* n : {"C32", "C12", "C18", "C20", "C50", "C4xC2"}) {
    const Verdict* v = find(six, std::string("classify-6/forward/") + n);
    REQUIRE(v != nullptr);
    CHECK(v->status == Status::Pass);
  }

  const auto seven = verify_classification(Target::Seven, 100);
  CHECK(seven.passed());
  std::set<std::string> got(seven.cross_tab.at(7).begin(), seven.cross_tab.at(7).end());
  CHECK(got == std::set<std::string>{"D8", "C5:C2", "G2@p=2,q=3", "C5xC5", "C64"});

  const auto eight = verify_classification(Target::Eight, 100);
  CHECK(eight.passed());
  std::set<std::string> e(eight.cross_tab.at(8).begin(), eight.cross_tab.at(8).end());
  for (const char* n : {"C30", "C24", "C2xC2xC3", "C2xC2xC5", "C8xC2", "C2xC2xC2", "C9xC3", "G11",
                        "G14", "mod27", "A4"}) {
    CHECK(e.count(n) == 1);
  }
  const Verdict* ooc = find(eight, "classify-8/out-of-catalog");
  REQUIRE(ooc != nullptr);
  CHECK(ooc->status == Status::OutOfCatalog);
}

TEST_CASE("classification at 500, both directions") {
  for (auto t : {Target::AtMost5, Target::Six, Target::Seven, Target::Eight}) {
    const auto r = verify_classification(t, catalog500());
    check_report_invariants(r);
    CHECK(failing(r).empty());
    CHECK(r.count(Status::OutOfCatalog) == 1);
    CHECK_FALSE(r.catalog.out_of_catalog_orders.empty());
  }
}

TEST_CASE("catalog groups with 6, 7 or 8 cyclic subgroups are listed instances") {
  for (auto t : {Target::Six, Target::Seven, Target::Eight, Target::AtMost5}) {
    std::vector<Fingerprint> listed;
    for (const auto& s : instantiate(classification_list(t), 500)) listed.push_back(fingerprint(construct(s)));
    for (const auto& g : catalog500().groups) {
      if (!target_matches(t, g.census.total)) continue;
      INFO(g.name);
      CHECK(std::find(listed.begin(), listed.end(), g.fingerprint) != listed.end());
    }
  }
}

TEST_CASE("lagrange sweep at 12") {
  const auto r = lagrange_sweep(12);
  check_report_invariants(r);
  CHECK(find(r, "lagrange/G1@p=2,q=3")->status == Status::Pass);
  CHECK(find(r, "lagrange/G2@p=2,q=3")->status == Status::Pass);
  CHECK(find(r, "lagrange/A4")->status == Status::Fail);
  CHECK(find(r, "lagrange/unique-violator")->status == Status::Pass);
  CHECK(r.passed());
}

TEST_CASE("A4 is the only violator for every bound") {
  for (std::uint64_t m : {12, 20, 45, 100, 250}) {
    const auto r = lagrange_sweep(m);
    CHECK(failing(r) == "lagrange/A4");
    CHECK(r.passed());
  }
  const auto r = lagrange_sweep(catalog500());
  CHECK(failing(r) == "lagrange/A4");
  CHECK(find(r, "lagrange/unique-violator")->observed == "{A4}");
  for (const auto& v : r.verdicts) {
    if (v.check.find("C2xC2xC") != std::string::npos) CHECK(v.status == Status::Pass);
  }
  CHECK_THROWS_AS(lagrange_sweep(501), std::invalid_argument);
}

TEST_CASE("lagrange sweep agrees with brute-force subgroup search") {
  for (const auto& g : catalog500().groups) {
    if (g.order < 2 || g.order > 100) continue;
    const auto f = factorize(g.order);
    if (f.size() != 2 || f[0].exponent != 2 || f[1].exponent != 1) continue;
    const std::uint64_t pq = f[0].prime * f[1].prime;
    bool found = false;
    for (const auto& h : all_subgroups(*g.group)) found |= h.size() == pq;
    CHECK(found == (g.name != "A4"));
  }
}

TEST_CASE("count_one") {
  std::mt19937 rng(7);
  const Group d8 = dihedral(4);
  const auto r = count_one(relabel(d8, random_perm(8, rng)));
  CHECK(r.census.total == 7);
  CHECK(r.matched_name == "D8");
  CHECK(r.bound_holds);
  CHECK_FALSE(r.cyclic);

  const auto c7 = count_one(cyclic(7));
  CHECK(c7.census.total == 2);
  CHECK(c7.label == "cyclic");
  CHECK(c7.cyclic);

  const std::vector<std::uint64_t> f(5, 2);
  const auto e32 = count_one(abelian_product(f));
  CHECK(e32.label == "out-of-catalog");
  CHECK(e32.census.total == 32);
  CHECK(e32.bound_holds);
}

TEST_CASE("reports are deterministic") {
  CHECK(run_formula_suite(60) == run_formula_suite(60));
  CHECK(verify_classification(Target::Eight, 60) == verify_classification(Target::Eight, 60));
  CHECK(lagrange_sweep(60) == lagrange_sweep(60));
}
