// One line per acceptance criterion: PASS/FAIL, a short detail, elapsed time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cycgrp/catalog.hpp"
#include "cycgrp/cayley_io.hpp"
#include "cycgrp/census.hpp"
#include "cycgrp/constructors.hpp"
#include "cycgrp/formulas.hpp"
#include "cycgrp/numtheory.hpp"
#include "cycgrp/report_json.hpp"

using namespace cycgrp;

namespace {

constexpr std::uint64_t kMaxOrder = 500;
constexpr double kLimitTable1 = 1.0;
constexpr double kLimitTable2 = 5.0;
constexpr double kLimitTable3 = 30.0;
constexpr double kLimitSmallShapes = 60.0;
constexpr double kLimitLagrange = 60.0;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> misses;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      misses.push_back(what);
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

FamilySpec spec(FamilyTag tag, std::uint64_t p, std::uint64_t q = 0, int row = 0) {
  FamilySpec s;
  s.tag = tag;
  s.p = p;
  s.q = q;
  s.row = row;
  return s;
}

// Closed form against a fresh construction.
void match(Outcome& o, const FamilySpec& s, std::size_t& n) {
  const Group g = construct(s);
  const auto observed = cyclic_census(g).total;
  const auto predicted = predicted_total(s);
  ++n;
  o.expect(predicted && *predicted == observed,
           family_name(s) + " predicted " + (predicted ? std::to_string(*predicted) : "-") +
               " observed " + std::to_string(observed));
}

void pinned(Outcome& o, const Group& g, std::uint64_t value) {
  const auto observed = cyclic_census(g).total;
  o.expect(observed == value, g.name() + " expected " + std::to_string(value) + " observed " +
                                  std::to_string(observed));
}

Group named(const FamilySpec& s) { return construct(s); }

const Catalog* g_catalog = nullptr;
double g_catalog_seconds = 0;

const Catalog& catalog() {
  if (!g_catalog) {
    const auto t0 = Clock::now();
    static const Catalog cat = paper_catalog(kMaxOrder);
    g_catalog = &cat;
    g_catalog_seconds = seconds_since(t0);
  }
  return *g_catalog;
}

bool shape_is(std::uint64_t n, std::vector<std::uint32_t> exps) {
  if (n < 2) return false;
  const auto f = factorize(n);
  if (f.size() != exps.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].exponent != exps[i]) return false;
  }
  return true;
}

Outcome table1() {
  Outcome o;
  std::size_t n = 0;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (int row = 1; row <= 7; ++row) {
      if (p == 2 && row >= 6) continue;
      if (p != 2 && (row == 4 || row == 5)) continue;
      match(o, spec(FamilyTag::Table1Row, p, 0, row), n);
    }
  }
  pinned(o, named(spec(FamilyTag::Table1Row, 2, 0, 4)), 7);
  pinned(o, named(spec(FamilyTag::Table1Row, 2, 0, 5)), 5);
  pinned(o, named(spec(FamilyTag::Table1Row, 3, 0, 7)), 8);
  o.detail = std::to_string(n) + " rows at p in {2,3,5,7}";
  return o;
}

Outcome table2() {
  Outcome o;
  std::size_t n = 0;
  const std::uint64_t listed[] = {14, 10, 12, 12, 10, 8, 12, 10, 8};
  std::set<Fingerprint> order16;
  for (int row = 6; row <= 14; ++row) {
    const Group g = named(spec(FamilyTag::Table2Row, 2, 0, row));
    pinned(o, g, listed[row - 6]);
    order16.insert(fingerprint(g));
    match(o, spec(FamilyTag::Table2Row, 2, 0, row), n);
  }
  for (std::uint64_t p : {2, 3, 5}) {
    for (int row = 1; row <= 5; ++row) {
      const auto s = spec(FamilyTag::Table2Row, p, 0, row);
      match(o, s, n);
      if (p == 2) order16.insert(fingerprint(construct(s)));
    }
  }
  o.expect(order16.size() == 14, "order 16 fingerprints " + std::to_string(order16.size()));
  o.detail = std::to_string(n) + " rows, " + std::to_string(order16.size()) +
             " distinct groups of order 16";
  return o;
}

Outcome table3() {
  Outcome o;
  std::size_t n = 0;
  for (std::uint64_t p : {3, 5}) {
    for (int row = 1; row <= 10; ++row) {
      const auto s = spec(FamilyTag::Table3Row, p, 0, row);
      const Group g = construct(s);
      const auto total = cyclic_census(g).total;
      o.expect(total >= 11, family_name(s) + " below 11");
      match(o, s, n);
    }
  }
  pinned(o, named(spec(FamilyTag::Table3Row, 3, 0, 7)), 17);
  pinned(o, named(spec(FamilyTag::Table3Row, 3, 0, 8)), 23);
  pinned(o, named(spec(FamilyTag::Table3Row, 3, 0, 10)), 35);
  o.detail = std::to_string(n) + " rows at p in {3,5}";
  return o;
}

Outcome small_shapes() {
  Outcome o;
  const auto& cat = catalog();
  std::size_t n = 0, unrealizable = 0;
  for (const auto& e : cat.entries) {
    const auto& g = cat.groups[e.group];
    if (!shape_is(g.order, {1, 1}) && !shape_is(g.order, {1, 2}) && !shape_is(g.order, {2, 1})) {
      continue;
    }
    switch (e.spec.tag) {
      case FamilyTag::NonabPQ:
      case FamilyTag::PQ2Case:
      case FamilyTag::P2QG1:
      case FamilyTag::P2QG2:
      case FamilyTag::P2QG3:
      case FamilyTag::A4:
      case FamilyTag::Cyclic:
      case FamilyTag::AbelianProduct:
      case FamilyTag::ElemAbelian: break;
      default: continue;
    }
    const auto predicted = predicted_total(e.spec);
    ++n;
    o.expect(predicted && *predicted == g.census.total,
             family_name(e.spec) + " predicted " + (predicted ? std::to_string(*predicted) : "-") +
                 " observed " + std::to_string(g.census.total));
  }
  for (const auto& s : cat.unrealizable) {
    if (s.tag == FamilyTag::NonabPQ || s.tag == FamilyTag::PQ2Case || s.tag == FamilyTag::P2QG1 ||
        s.tag == FamilyTag::P2QG2 || s.tag == FamilyTag::P2QG3) {
      ++unrealizable;
    }
  }
  o.expect(cat.failures.empty(), "construction failures");
  o.detail = std::to_string(n) + " instances of order pq, pq^2, p^2q; " +
             std::to_string(unrealizable) + " parameter choices not realizable";
  return o;
}

Outcome rank2() {
  Outcome o;
  std::size_t n = 0;
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint32_t a = 0; ipow(p, a) <= 1024; ++a) {
      for (std::uint32_t b = 0; b <= a && ipow(p, a + b) <= 1024; ++b) {
        const std::vector<std::uint64_t> f{ipow(p, a), ipow(p, b)};
        const auto c = cyclic_census(abelian_product(f));
        for (std::uint32_t r = 0; r <= a; ++r) {
          ++n;
          const auto expect = predicted_count_by_order(a, b, p, r);
          const auto got = c.by_order.at(ipow(p, r));
          o.expect(expect == got, "C" + std::to_string(f[0]) + "xC" + std::to_string(f[1]) +
                                      " at order " + std::to_string(ipow(p, r)));
        }
      }
    }
  }
  o.detail = std::to_string(n) + " per-order counts";
  return o;
}

Outcome divisor_bound() {
  Outcome o;
  const auto& cat = catalog();
  std::size_t cyclic_groups = 0;
  for (const auto& g : cat.groups) {
    const auto d = divisor_count(g.order);
    const bool cyc = is_cyclic(*g.group);
    cyclic_groups += cyc;
    o.expect(g.census.total >= d, g.name + " below d(n)");
    o.expect((g.census.total == d) == cyc, g.name + " equality iff cyclic");
  }
  o.detail = std::to_string(cat.groups.size()) + " groups, " + std::to_string(cyclic_groups) +
             " cyclic";
  return o;
}

Outcome classification() {
  Outcome o;
  const auto& cat = catalog();
  std::ostringstream d;
  for (auto t : {Target::AtMost5, Target::Six, Target::Seven, Target::Eight}) {
    const auto r = verify_classification(t, cat);
    std::size_t found = 0;
    for (const auto& [k, names] : r.cross_tab) {
      if (target_matches(t, k)) found += names.size();
    }
    for (const auto& v : r.verdicts) {
      o.expect(v.status != Status::Fail, v.check + " " + v.observed);
    }
    o.expect(r.count(Status::OutOfCatalog) == 1, to_string(t) + " out-of-catalog verdict");
    d << to_string(t) << ":" << found << " ";
  }
  d << "groups; " << summarize(cat).out_of_catalog_orders.size() << " orders out of catalog";
  o.detail = d.str();
  return o;
}

Outcome lagrange() {
  Outcome o;
  const auto r = lagrange_sweep(catalog());
  std::vector<std::string> violators;
  std::size_t swept = 0;
  for (const auto& v : r.verdicts) {
    if (v.check == "lagrange/unique-violator") continue;
    ++swept;
    if (v.status == Status::Fail) violators.push_back(v.check.substr(9));
  }
  o.expect(violators == std::vector<std::string>{"A4"}, "violators differ from {A4}");
  o.expect(r.passed(), "report not passing");
  o.detail = std::to_string(swept) + " groups of order p^2q, violators {" +
             (violators.empty() ? "" : violators[0]) + (violators.size() > 1 ? ",..." : "") + "}";
  return o;
}

Outcome power_law() {
  Outcome o;
  std::size_t groups = 0, checks = 0;
  for (const auto& s : catalog_specs(kMaxOrder)) {
    if (s.tag != FamilyTag::P2QG1 && s.tag != FamilyTag::P2QG2 && s.tag != FamilyTag::P2QG3) continue;
    const Group g = construct(s);
    ++groups;
    const std::uint64_t p = s.p, q = s.q;
    const std::uint64_t m = s.tag == FamilyTag::P2QG1 ? p : p * p;
    const std::uint64_t extra = s.tag == FamilyTag::P2QG1 ? p : 1;
    const std::uint64_t i = *find_element_of_order(q, s.tag == FamilyTag::P2QG3 ? p * p : p);
    auto idx = [&](std::uint64_t r, std::uint64_t sx, std::uint64_t t) {
      return static_cast<Elem>((sx * q + r) * extra + t);
    };
    const Elem a = idx(1, 0, 0), b = idx(0, 1, 0);
    o.expect(g.mul(g.mul(b, a), g.inverse(b)) == g.power(a, static_cast<std::int64_t>(i)),
             family_name(s) + " action");
    std::size_t bad = 0;
    for (std::uint64_t r = 0; r < q; ++r) {
      for (std::uint64_t sx = 0; sx < m; ++sx) {
        for (std::uint64_t t = 0; t < extra; ++t) {
          const Elem x = idx(r, sx, t);
          Elem acc = 0;
          for (std::uint64_t n = 1; n <= g.order(); ++n) {
            acc = g.mul(acc, x);
            const auto [ra, sb] = semidirect_power_exponent(r, sx, n, i, q);
            bad += acc != idx(ra, sb % m, n * t % extra);
            ++checks;
          }
        }
      }
    }
    o.expect(bad == 0, family_name(s) + " " + std::to_string(bad) + " mismatches");
  }
  o.detail = std::to_string(groups) + " groups, " + std::to_string(checks) + " powers";
  return o;
}

Outcome properties() {
  Outcome o;
  const auto& cat = catalog();
  for (const auto& g : cat.groups) {
    std::uint64_t s = 0;
    for (const auto& [d, c] : g.census.by_order) s += euler_phi(d) * c;
    o.expect(s == g.order, g.name + " phi-weighted sum");
  }
  std::size_t round_trips = 0;
  for (const auto& g : cat.groups) {
    if (g.order > 100) continue;
    const auto text = emit_cayley(*g.group);
    const Group back = parse_cayley(text);
    o.expect(back == *g.group && emit_cayley(back) == text, g.name + " round trip");
    ++round_trips;
  }
  auto render = [] {
    ReportDocument doc;
    doc.tool_version = tool_version();
    doc.invocation = {"verify", "formulas", kMaxOrder};
    doc.report = run_formula_suite(kMaxOrder);
    return dump_report(doc);
  };
  const auto first = render(), second = render();
  o.expect(first == second, "reports differ between runs");
  o.detail = std::to_string(cat.groups.size()) + " groups, " + std::to_string(round_trips) +
             " round trips, report " + std::to_string(first.size()) + " bytes twice";
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit;  // seconds, 0 = none
  bool uses_catalog;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "order p^3 table", kLimitTable1, false, table1},
      {"AC2", "order 16 and abelian p^4 table", kLimitTable2, false, table2},
      {"AC3", "odd p^4 table", kLimitTable3, false, table3},
      {"AC4", "orders pq, pq^2, p^2q", kLimitSmallShapes, true, small_shapes},
      {"AC5", "rank-2 abelian per-order counts", 0, false, rank2},
      {"AC6", "divisor bound both directions", 0, true, divisor_bound},
      {"AC7", "classification within catalog", 0, true, classification},
      {"AC8", "subgroups of order pq", kLimitLagrange, true, lagrange},
      {"AC9", "power law in G1, G2, G3", 0, false, power_law},
      {"AC10", "property suite", 0, true, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const bool fresh = c.uses_catalog && !g_catalog;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.misses.push_back(std::string("exception: ") + e.what());
    }
    // the first criterion that needs the catalog pays for building it
    double elapsed = seconds_since(t0);
    if (c.uses_catalog && !fresh) elapsed += g_catalog_seconds;
    const bool in_time = c.limit == 0 || elapsed < c.limit;
    const bool ok = o.ok && in_time;
    failed += !ok;
    std::printf("%-4s %s  %s: %s (%.2f s", c.id, ok ? "PASS" : "FAIL", c.title, o.detail.c_str(),
                elapsed);
    if (c.limit > 0) std::printf(", limit %.0f s", c.limit);
    std::printf(")\n");
    if (!in_time) std::printf("       over time limit\n");
    for (std::size_t i = 0; i < o.misses.size() && i < 10; ++i) {
      std::printf("       mismatch: %s\n", o.misses[i].c_str());
    }
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
