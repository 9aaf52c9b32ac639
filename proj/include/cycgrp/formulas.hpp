#pragma once

// Group families and their closed-form cyclic-subgroup counts.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cycgrp {

enum class FamilyTag {
  Cyclic,          // factors = {n}
  AbelianProduct,  // factors = invariant factors, any order
  ElemAbelian,     // p, n = rank
  NonabPQ,         // C_q x| C_p, p | q - 1
  PQ2Case,         // order p q^2, row = case 1..6 in the order 6, 2q+4, q^2+3, q^2+q+2, 2q+3, 3q+2
  P2QG1,           // (C_q x| C_p) x C_p
  P2QG2,           // C_q x| C_{p^2}, ord_q(i) = p
  P2QG3,           // C_q x| C_{p^2}, ord_q(i) = p^2
  Table1Row,       // order p^3, row 1..7
  Table2Row,       // abelian p^4 (rows 1..5) and order 16 (rows 6..14)
  Table3Row,       // nonabelian p^4, p odd, row 1..10 = labels (vi)..(xv)
  A4,
  Dihedral,        // D_{2n}, n = number of rotations
  Quaternion8,
  Z3SemiZ4,
};

struct FamilySpec {
  FamilyTag tag = FamilyTag::Cyclic;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  int row = 0;
  /// PQ2Case row 4: k >= 1 selects the diagonal action diag(l, l^k);
  /// 0 selects the irreducible action (p | q + 1).
  int variant = -1;
  std::vector<std::uint64_t> factors;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Short kebab-case tag plus row/case, e.g. "table3-row7(ii)".
std::string family_label(const FamilySpec& spec);

/// Stable CLI name of the constructed group, e.g. "C4xC2", "G1@p=2,q=3".
std::string family_name(const FamilySpec& spec);

std::uint64_t family_order(const FamilySpec& spec);

/// Throws std::invalid_argument when the parameters break the family's
/// constraints (non-prime parameters, p >= q where p < q is required, a row
/// outside the table, a p = 2 row requested for odd p, ...).
void validate(const FamilySpec& spec);

/// Whether the group exists for these parameters (divisibility conditions).
bool realizable(const FamilySpec& spec);

/// Closed-form |c(G)|; empty when no closed form covers the instance.
std::optional<std::uint64_t> predicted_total(const FamilySpec& spec);

/// Number of cyclic subgroups of order p^r in C_{p^n} x C_{p^m}, n >= m.
std::uint64_t predicted_count_by_order(std::uint32_t n, std::uint32_t m, std::uint64_t p,
                                       std::uint32_t r);

/// d(n): no group of order n has fewer cyclic subgroups.
std::uint64_t lower_bound(std::uint64_t n);

// ---------------------------------------------------------------------------

enum class Target { AtMost5, Six, Seven, Eight };

std::string to_string(Target t);
/// Accepts "le5", "6", "7", "8".
std::optional<Target> parse_target(const std::string& s);

struct ClassificationItem {
  enum class Kind {
    CyclicShape,         // C_n for every n whose prime exponents form `shape`
    CyclicPrimePowers,   // C_{p^k} for k in 0..shape[0] (subgroups of C_{p^k})
    AbelianNoncyclic4q,  // C2 x C2 x C_q, q an odd prime
    Fixed,               // one concrete group
  };
  std::string statement;
  Kind kind = Kind::Fixed;
  /// Prime exponents listed by increasing prime (CyclicShape: {2, 1} is
  /// p^2 q with p < q) or the top exponent (CyclicPrimePowers).
  std::vector<std::uint32_t> shape;
  std::optional<FamilySpec> fixed;
};

struct ClassificationList {
  Target target;
  std::vector<ClassificationItem> items;
};

ClassificationList classification_list(Target target);

/// Concrete instances of one item with order <= max_order.
std::vector<FamilySpec> instantiate(const ClassificationItem& item, std::uint64_t max_order);
std::vector<FamilySpec> instantiate(const ClassificationList& list, std::uint64_t max_order);

bool target_matches(Target t, std::uint64_t total);

}  // namespace cycgrp
