#pragma once

// Every group family instance up to a given order, constructed and
// deduplicated.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cycgrp/formulas.hpp"
#include "cycgrp/group.hpp"

namespace cycgrp {

/// Thrown by construct() for parameter choices where the family is empty.
class NotRealizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds the group a spec describes. Throws std::invalid_argument on
/// constraint violations and NotRealizable when the divisibility conditions
/// fail.
Group construct(const FamilySpec& spec);

struct CatalogGroup {
  std::string name;
  std::uint64_t order = 0;
  /// Null when the table was dropped (census-only mode).
  std::shared_ptr<const Group> group;
  Fingerprint fingerprint;
  CyclicCensus census;
  /// Every family label this construction realizes.
  std::vector<FamilySpec> specs;
};

struct CatalogEntry {
  FamilySpec spec;
  std::size_t group;  // index into Catalog::groups
};

struct ConstructionFailure {
  FamilySpec spec;
  std::string error;
};

struct Catalog {
  std::uint64_t min_order = 1;
  std::uint64_t max_order = 0;
  std::vector<CatalogGroup> groups;  // sorted by (order, name)
  std::vector<CatalogEntry> entries;
  std::vector<FamilySpec> unrealizable;
  std::vector<ConstructionFailure> failures;
  /// Pairs of distinct constructions with equal fingerprints.
  std::vector<std::pair<std::size_t, std::size_t>> collisions;

  std::size_t distinct_fingerprints() const;
  /// First group with this fingerprint, or nullptr.
  const CatalogGroup* find(const Fingerprint& fp) const;
  const CatalogGroup* find_name(const std::string& name) const;
};

/// Realizable family instances with min_order <= |G| <= max_order, in a
/// fixed order. With `unrealizable` set, returns the instances whose
/// divisibility conditions fail instead.
std::vector<FamilySpec> catalog_specs(std::uint64_t max_order, std::uint64_t min_order = 1,
                                      bool unrealizable = false);

/// True for orders of shape 1, p, p^2, p^3, p^4, pq, p^2 q, p q^2, where the
/// catalog holds every group up to isomorphism.
bool catalog_complete_for(std::uint64_t order);

inline constexpr std::uint64_t kRetainTablesUpTo = 500;

/// Builds every instance (in parallel), computes fingerprints and censuses.
/// Tables of order above `retain_up_to` are dropped after counting, which
/// keeps memory bounded for large sweeps. Throws std::invalid_argument when
/// max_order exceeds the group-size limit.
Catalog paper_catalog(std::uint64_t max_order, std::uint64_t min_order = 1,
                      std::uint64_t retain_up_to = kRetainTablesUpTo);

}  // namespace cycgrp
