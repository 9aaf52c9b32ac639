#pragma once

// Verification engine: formula predictions against direct counts, the
// classification lists against the catalog, and the Lagrange-converse sweep.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cycgrp/catalog.hpp"
#include "cycgrp/formulas.hpp"
#include "cycgrp/group.hpp"

namespace cycgrp {

enum class Status { Pass, Fail, NotRealizable, OutOfCatalog };

std::string to_string(Status s);

struct Verdict {
  std::string check;
  std::string expected;
  std::string observed;
  Status status = Status::Pass;
  std::string witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct CatalogSummary {
  std::uint64_t min_order = 1;
  std::uint64_t max_order = 0;
  std::size_t group_count = 0;
  std::size_t entry_count = 0;
  std::size_t distinct_fingerprints = 0;
  /// Orders <= max_order for which the catalog holds every group.
  std::vector<std::uint64_t> complete_orders;
  /// Orders <= max_order covered only partially.
  std::vector<std::uint64_t> out_of_catalog_orders;
  std::vector<std::string> collisions;

  friend bool operator==(const CatalogSummary&, const CatalogSummary&) = default;
};

struct CensusReport {
  std::string suite;
  CatalogSummary catalog;
  std::vector<Verdict> verdicts;  // sorted by check
  /// |c(G)| -> names of catalog groups with that count.
  std::map<std::uint64_t, std::vector<std::string>> cross_tab;
  /// Check ids whose failure is the expected outcome.
  std::vector<std::string> expected_failures;
  std::vector<std::string> notes;

  std::size_t count(Status s) const;
  /// Failing verdicts not listed in expected_failures.
  std::size_t unexpected_failures() const;
  bool passed() const { return unexpected_failures() == 0; }

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

CatalogSummary summarize(const Catalog& cat);

/// Every catalog instance checked against its closed form, plus the
/// divisor-count bound for every group and the order-p^4 floor of 11.
CensusReport run_formula_suite(const Catalog& cat);
CensusReport run_formula_suite(std::uint64_t max_order);

/// Both directions of the classification for one target count, scoped to
/// the catalog.
CensusReport verify_classification(Target target, const Catalog& cat);
CensusReport verify_classification(Target target, std::uint64_t max_order);

/// Subgroup of order pq in every catalog group of order p^2 q (p < q).
/// Needs the retained tables, so max_order <= 500.
CensusReport lagrange_sweep(const Catalog& cat);
CensusReport lagrange_sweep(std::uint64_t max_order);

struct CountResult {
  CyclicCensus census;
  std::uint64_t lower_bound = 0;
  bool cyclic = false;
  /// total >= d(n), with equality exactly when cyclic.
  bool bound_holds = false;
  /// Family label of the fingerprint-matching catalog group, "cyclic" for
  /// cyclic groups, or "out-of-catalog".
  std::string label;
  std::string matched_name;
};

/// Census of one group, annotated against the catalog of its order.
CountResult count_one(const Group& g);

}  // namespace cycgrp
