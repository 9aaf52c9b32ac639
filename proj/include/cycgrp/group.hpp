#pragma once

// Finite groups as closed multiplication tables over element indices
// 0..n-1, with index 0 the identity.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cycgrp/errors.hpp"

namespace cycgrp {

using Elem = std::uint32_t;

/// Largest group order the engine accepts.
inline constexpr std::size_t kMaxGroupOrder = 2000;
/// Up to this order associativity is checked on all n^3 triples; above it
/// only triples whose middle entry is a generator are checked (Light's test).
inline constexpr std::size_t kFullAssociativityLimit = 200;
inline constexpr std::size_t kDefaultSubgroupCap = 500;

class Group {
 public:
  /// Validates the table (range, identity at 0, Latin square, associativity)
  /// and throws AxiomViolation on failure. `generators` is an optional hint
  /// for the associativity test; it is extended until it generates.
  static Group from_table(std::size_t order, std::vector<Elem> table, std::string name = {},
                          std::span<const Elem> generators = {});

  std::size_t order() const noexcept { return n_; }
  Elem mul(Elem x, Elem y) const noexcept { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  Elem inverse(Elem x) const noexcept { return inverse_[x]; }
  Elem power(Elem x, std::int64_t k) const;
  Elem commutator(Elem x, Elem y) const;  // x^-1 y^-1 x y

  /// Throws std::out_of_range for x >= order().
  std::uint32_t element_order(Elem x) const;
  std::span<const std::uint32_t> element_orders() const noexcept { return orders_; }

  std::span<const Elem> table() const noexcept { return table_; }
  std::span<const Elem> row(Elem x) const noexcept {
    return {table_.data() + static_cast<std::size_t>(x) * n_, n_};
  }
  /// A set that generates the group under right multiplication.
  std::span<const Elem> generators() const noexcept { return generators_; }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const Group& a, const Group& b) { return a.table_ == b.table_; }

 private:
  Group() = default;

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<Elem> generators_;
  std::string name_;
};

/// Close `generators` under an arbitrary multiplication on value type T and
/// return the resulting table group. The identity is placed at index 0.
/// Throws SizeOverflow when more than `n_bound` distinct values appear and
/// AxiomViolation when the closure is not a group.
template <class T, class Mul, class Hash = std::hash<T>>
Group build_from_generators(std::size_t n_bound, const T& identity, std::span<const T> generators,
                            Mul mul, std::string name = {}) {
  std::vector<T> elems{identity};
  std::unordered_map<T, Elem, Hash> index{{identity, 0}};
  auto intern = [&](const T& v) -> Elem {
    auto [it, inserted] = index.emplace(v, static_cast<Elem>(elems.size()));
    if (inserted) {
      if (elems.size() >= n_bound) {
        throw SizeOverflow("build_from_generators: closure exceeds bound " +
                           std::to_string(n_bound));
      }
      elems.push_back(v);
    }
    return it->second;
  };
  std::vector<Elem> gen_idx;
  for (const auto& g : generators) gen_idx.push_back(intern(g));
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (Elem g : gen_idx) {
      T prod = mul(elems[k], elems[g]);
      intern(prod);
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto it = index.find(mul(elems[x], elems[y]));
      if (it == index.end()) {
        throw AxiomViolation("build_from_generators: product escapes the closure",
                             {static_cast<Elem>(x), static_cast<Elem>(y), 0});
      }
      table[x * n + y] = it->second;
    }
  }
  return Group::from_table(n, std::move(table), std::move(name), gen_idx);
}

// ---------------------------------------------------------------------------
// Cyclic-subgroup census

struct CyclicCensus {
  /// divisor d of |G| -> number of cyclic subgroups of order d (zeros kept).
  std::map<std::uint64_t, std::uint64_t> by_order;
  /// divisor d of |G| -> number of elements of order d.
  std::map<std::uint64_t, std::uint64_t> elements_by_order;
  std::uint64_t total = 0;
};

CyclicCensus cyclic_census(const Group& g);

// ---------------------------------------------------------------------------
// Subgroups

/// A subgroup as the sorted list of its element indices.
struct Subgroup {
  std::vector<Elem> elements;
  std::size_t size() const noexcept { return elements.size(); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

/// Deduplicated, sorted by (size, elements).
using SubgroupSet = std::vector<Subgroup>;

/// Smallest subgroup containing `gens`.
Subgroup generated_subgroup(const Group& g, std::span<const Elem> gens);
bool is_closed_subgroup(const Group& g, const Subgroup& h);
bool is_cyclic_subgroup(const Group& g, const Subgroup& h);

Subgroup center(const Group& g);
Subgroup derived_subgroup(const Group& g);
Subgroup centralizer(const Group& g, Elem x);

/// Length of the upper central series, or empty when G is not nilpotent.
std::optional<std::uint32_t> nilpotency_class(const Group& g);

/// Every subgroup of G, by joining cyclic subgroups to a fixpoint.
/// Throws CapExceeded when |G| > size_cap.
SubgroupSet all_subgroups(const Group& g, std::size_t size_cap = kDefaultSubgroupCap);

/// Every subgroup whose order divides m (the same fixpoint restricted to the
/// divisor lattice of m).
SubgroupSet subgroups_dividing(const Group& g, std::uint64_t m,
                               std::size_t size_cap = kDefaultSubgroupCap);

/// False whenever m does not divide |G|.
bool has_subgroup_of_order(const Group& g, std::uint64_t m,
                           std::size_t size_cap = kDefaultSubgroupCap);

/// Number of Sylow p-subgroups. Requires p prime dividing |G|.
std::uint64_t sylow_count(const Group& g, std::uint64_t p,
                          std::size_t size_cap = kDefaultSubgroupCap);

bool is_abelian(const Group& g);
bool is_cyclic(const Group& g);
std::uint64_t exponent(const Group& g);

// ---------------------------------------------------------------------------
// Fingerprints

/// Isomorphism invariants used to deduplicate catalogs. Equal fingerprints
/// are necessary for isomorphism, never sufficient.
struct Fingerprint {
  std::uint64_t order = 0;
  /// (element order, number of elements), ascending.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order_histogram;
  bool abelian = false;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::uint64_t cyclic_total = 0;
  /// Sorted multiset of per-element profiles: element order, centralizer
  /// order, membership in G', order of the normal closure of <x>, and the
  /// number of l-th roots for each prime l dividing |G|.
  std::vector<std::vector<std::uint64_t>> element_profiles;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Group& g);

/// Same group with elements renamed by `perm` (perm[old] = new); perm[0]
/// must be 0.
Group relabel(const Group& g, std::span<const Elem> perm);

}  // namespace cycgrp
