#include "cycgrp/formulas.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cycgrp/numtheory.hpp"

namespace cycgrp {

namespace {

const char* const kRoman[] = {"vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii", "xiv", "xv"};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_prime(std::uint64_t p, const char* name) {
  require(is_prime(p), std::string(name) + " = " + std::to_string(p) + " is not prime");
}

std::string join_cyclic(const std::vector<std::uint64_t>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += 'x';
    out += 'C' + std::to_string(factors[i]);
  }
  return out;
}

std::string pq_suffix(const FamilySpec& s) {
  return "@p=" + std::to_string(s.p) + ",q=" + std::to_string(s.q);
}

// Per-prime exponent partitions of a finite abelian group, descending.
std::map<std::uint64_t, std::vector<std::uint32_t>> abelian_partitions(
    const std::vector<std::uint64_t>& factors) {
  std::map<std::uint64_t, std::vector<std::uint32_t>> parts;
  for (auto f : factors) {
    if (f < 2) continue;
    for (const auto& pp : factorize(f)) parts[pp.prime].push_back(pp.exponent);
  }
  for (auto& [p, v] : parts) std::sort(v.rbegin(), v.rend());
  return parts;
}

std::uint64_t rank2_total(std::uint32_t n, std::uint32_t m, std::uint64_t p) {
  std::uint64_t total = 0;
  for (std::uint32_t r = 0; r <= n; ++r) total += predicted_count_by_order(n, m, p, r);
  return total;
}

std::uint64_t elementary_total(std::uint64_t p, std::uint32_t rank) {
  std::uint64_t total = 2;
  for (std::uint32_t k = 1; k < rank; ++k) total += ipow(p, k);
  return total;
}

std::optional<std::uint64_t> abelian_total(const std::vector<std::uint64_t>& factors) {
  const auto parts = abelian_partitions(factors);
  std::uint64_t n = 1;
  for (auto f : factors) n *= f;
  const bool cyclic_shape =
      std::all_of(parts.begin(), parts.end(), [](const auto& kv) { return kv.second.size() <= 1; });
  if (cyclic_shape) return divisor_count(n);

  if (parts.size() == 1) {
    const auto& [p, e] = *parts.begin();
    if (e.size() == 2) return rank2_total(e[0], e[1], p);
    if (std::all_of(e.begin(), e.end(), [](auto x) { return x == 1; })) {
      return elementary_total(p, static_cast<std::uint32_t>(e.size()));
    }
    if (e == std::vector<std::uint32_t>{2, 1, 1}) return 2 * p * p + p + 2;
    return std::nullopt;
  }
  if (parts.size() == 2) {
    const auto& [p, ep] = *parts.begin();
    const auto& [q, eq] = *std::next(parts.begin());
    const std::vector<std::uint32_t> one{1}, two{1, 1};
    if (ep == two && eq == one) return 2 * p + 4;
    if (ep == one && eq == two) return 2 * q + 4;
  }
  return std::nullopt;
}

}  // namespace

std::string family_label(const FamilySpec& s) {
  switch (s.tag) {
    case FamilyTag::Cyclic: return "cyclic";
    case FamilyTag::AbelianProduct: return "abelian";
    case FamilyTag::ElemAbelian: return "elementary-abelian";
    case FamilyTag::NonabPQ: return "nonabelian-pq";
    case FamilyTag::PQ2Case: {
      std::string l = "pq2-case" + std::to_string(s.row);
      if (s.row == 4) l += s.variant == 0 ? "(irr)" : "(k=" + std::to_string(s.variant) + ")";
      return l;
    }
    case FamilyTag::P2QG1: return "p2q-g1";
    case FamilyTag::P2QG2: return "p2q-g2";
    case FamilyTag::P2QG3: return "p2q-g3";
    case FamilyTag::Table1Row: return "table1-row" + std::to_string(s.row);
    case FamilyTag::Table2Row: return "table2-row" + std::to_string(s.row);
    case FamilyTag::Table3Row: {
      std::string l = "table3-row" + std::to_string(s.row);
      if (s.row == 7 || s.row == 8 || s.row == 10) l += s.p == 3 ? "(ii)" : "(i)";
      return l;
    }
    case FamilyTag::A4: return "a4";
    case FamilyTag::Dihedral: return "dihedral";
    case FamilyTag::Quaternion8: return "quaternion8";
    case FamilyTag::Z3SemiZ4: return "z3-semi-z4";
  }
  return "unknown";
}

std::string family_name(const FamilySpec& s) {
  const auto p = s.p;
  switch (s.tag) {
    case FamilyTag::Cyclic:
    case FamilyTag::AbelianProduct: return join_cyclic(s.factors);
    case FamilyTag::ElemAbelian: return join_cyclic(std::vector<std::uint64_t>(s.n, p));
    case FamilyTag::NonabPQ: return "C" + std::to_string(s.q) + ":C" + std::to_string(p);
    case FamilyTag::PQ2Case:
      switch (s.row) {
        case 1: return join_cyclic({p * s.q * s.q});
        case 2: return join_cyclic({p, s.q, s.q});
        case 4:
          return "pq2.4" + pq_suffix(s) +
                 (s.variant == 0 ? std::string(",irr") : ",k=" + std::to_string(s.variant));
        default: return "pq2." + std::to_string(s.row) + pq_suffix(s);
      }
    case FamilyTag::P2QG1: return "G1" + pq_suffix(s);
    case FamilyTag::P2QG2: return "G2" + pq_suffix(s);
    case FamilyTag::P2QG3: return "G3" + pq_suffix(s);
    case FamilyTag::Table1Row:
      switch (s.row) {
        case 1: return join_cyclic({p * p * p});
        case 2: return join_cyclic({p * p, p});
        case 3: return join_cyclic({p, p, p});
        case 4: return "D8";
        case 5: return "Q8";
        case 6: return "heis" + std::to_string(p * p * p);
        default: return "mod" + std::to_string(p * p * p);
      }
    case FamilyTag::Table2Row:
      switch (s.row) {
        case 1: return join_cyclic({ipow(p, 4)});
        case 2: return join_cyclic({p * p * p, p});
        case 3: return join_cyclic({p * p, p * p});
        case 4: return join_cyclic({p * p, p, p});
        case 5: return join_cyclic({p, p, p, p});
        default: return "G" + std::to_string(s.row);
      }
    case FamilyTag::Table3Row:
      return "G" + std::string(kRoman[std::clamp(s.row, 1, 10) - 1]) + "@p=" + std::to_string(p);
    case FamilyTag::A4: return "A4";
    case FamilyTag::Dihedral: return "D" + std::to_string(2 * static_cast<std::uint64_t>(s.n));
    case FamilyTag::Quaternion8: return "Q8";
    case FamilyTag::Z3SemiZ4: return "G2@p=2,q=3";
  }
  return "?";
}

std::uint64_t family_order(const FamilySpec& s) {
  switch (s.tag) {
    case FamilyTag::Cyclic:
    case FamilyTag::AbelianProduct: {
      std::uint64_t n = 1;
      for (auto f : s.factors) n *= f;
      return n;
    }
    case FamilyTag::ElemAbelian: return ipow(s.p, s.n);
    case FamilyTag::NonabPQ: return s.p * s.q;
    case FamilyTag::PQ2Case: return s.p * s.q * s.q;
    case FamilyTag::P2QG1:
    case FamilyTag::P2QG2:
    case FamilyTag::P2QG3: return s.p * s.p * s.q;
    case FamilyTag::Table1Row: return ipow(s.p, 3);
    case FamilyTag::Table2Row:
    case FamilyTag::Table3Row: return ipow(s.p, 4);
    case FamilyTag::A4:
    case FamilyTag::Z3SemiZ4: return 12;
    case FamilyTag::Dihedral: return 2 * static_cast<std::uint64_t>(s.n);
    case FamilyTag::Quaternion8: return 8;
  }
  return 0;
}

void validate(const FamilySpec& s) {
  switch (s.tag) {
    case FamilyTag::Cyclic:
      require(s.factors.size() == 1 && s.factors[0] >= 1, "cyclic: needs exactly one order >= 1");
      break;
    case FamilyTag::AbelianProduct:
      require(!s.factors.empty(), "abelian: needs at least one factor");
      for (auto f : s.factors) require(f >= 2, "abelian: factors must be >= 2");
      break;
    case FamilyTag::ElemAbelian:
      require_prime(s.p, "p");
      require(s.n >= 1, "elementary abelian: rank must be >= 1");
      break;
    case FamilyTag::NonabPQ:
    case FamilyTag::PQ2Case:
    case FamilyTag::P2QG1:
    case FamilyTag::P2QG2:
    case FamilyTag::P2QG3:
      require_prime(s.p, "p");
      require_prime(s.q, "q");
      require(s.p < s.q, "family requires p < q");
      if (s.tag == FamilyTag::PQ2Case) {
        require(s.row >= 1 && s.row <= 6, "pq2: case must be 1..6");
        if (s.row == 4) {
          require(s.variant >= 0 && static_cast<std::uint64_t>(s.variant) < s.p,
                  "pq2 case 4: k must be in 1..p-1, or 0 for the irreducible action");
        }
      }
      break;
    case FamilyTag::Table1Row:
      require_prime(s.p, "p");
      require(s.row >= 1 && s.row <= 7, "table1: row must be 1..7");
      if (s.row == 4 || s.row == 5) require(s.p == 2, "table1 rows 4-5 need p = 2");
      if (s.row == 6 || s.row == 7) require(s.p != 2, "table1 rows 6-7 need odd p");
      break;
    case FamilyTag::Table2Row:
      require_prime(s.p, "p");
      require(s.row >= 1 && s.row <= 14, "table2: row must be 1..14");
      if (s.row >= 6) require(s.p == 2, "table2 rows 6-14 need p = 2");
      break;
    case FamilyTag::Table3Row:
      require_prime(s.p, "p");
      require(s.p != 2, "table3 needs odd p");
      require(s.row >= 1 && s.row <= 10, "table3: row must be 1..10");
      break;
    case FamilyTag::Dihedral:
      require(s.n >= 1, "dihedral: n must be >= 1");
      break;
    case FamilyTag::A4:
    case FamilyTag::Quaternion8:
    case FamilyTag::Z3SemiZ4: break;
  }
}

bool realizable(const FamilySpec& s) {
  validate(s);
  const auto p = s.p, q = s.q;
  switch (s.tag) {
    case FamilyTag::NonabPQ:
    case FamilyTag::P2QG1:
    case FamilyTag::P2QG2: return (q - 1) % p == 0;
    case FamilyTag::P2QG3: return (q - 1) % (p * p) == 0;
    case FamilyTag::PQ2Case:
      switch (s.row) {
        case 1:
        case 2: return true;
        case 3:
        case 6: return (q - 1) % p == 0;
        case 4:
          if (s.variant == 0) return p != 2 && (q + 1) % p == 0;
          return (q - 1) % p == 0;
        default: return false;
      }
    default: return true;
  }
}

std::optional<std::uint64_t> predicted_total(const FamilySpec& s) {
  validate(s);
  const auto p = s.p, q = s.q;
  switch (s.tag) {
    case FamilyTag::Cyclic: return divisor_count(s.factors[0]);
    case FamilyTag::AbelianProduct: return abelian_total(s.factors);
    case FamilyTag::ElemAbelian: return s.n == 1 ? 2 : elementary_total(p, s.n);
    case FamilyTag::NonabPQ: return q + 2;
    case FamilyTag::PQ2Case: {
      const std::uint64_t v[] = {6, 2 * q + 4, q * q + 3, q * q + q + 2, 2 * q + 3, 3 * q + 2};
      return v[s.row - 1];
    }
    case FamilyTag::P2QG1: return p * q + 4;
    case FamilyTag::P2QG2: return q + 4;
    case FamilyTag::P2QG3: return 2 * q + 2;
    case FamilyTag::Table1Row: {
      const std::uint64_t v[] = {4, 2 * p + 2, p * p + p + 2, 7, 5, p * p + p + 2, 2 * p + 2};
      return v[s.row - 1];
    }
    case FamilyTag::Table2Row: {
      const std::uint64_t v[] = {5,  3 * p + 2, p * p + 2 * p + 2, 2 * p * p + p + 2,
                                 p * p * p + p * p + p + 2,
                                 14, 10, 12, 12, 10, 8, 12, 10, 8};
      return v[s.row - 1];
    }
    case FamilyTag::Table3Row: {
      const std::uint64_t a = 2 * p * p + p + 2;
      const std::uint64_t b = p * p * p + p * p + p + 2;
      const bool three = p == 3;
      const std::uint64_t v[] = {3 * p + 2, a, p * p + 2 * p + 2, a, a, a,
                                 three ? 17 : a, three ? 23 : a, b, three ? 35 : b};
      return v[s.row - 1];
    }
    case FamilyTag::A4: return 8;
    case FamilyTag::Quaternion8: return 5;
    case FamilyTag::Z3SemiZ4: return 7;
    case FamilyTag::Dihedral:
      if (s.n == 4) return 7;
      if (s.n == 6) return 10;
      if (s.n > 2 && is_prime(s.n)) return s.n + 2;
      return std::nullopt;
  }
  return std::nullopt;
}

std::uint64_t predicted_count_by_order(std::uint32_t n, std::uint32_t m, std::uint64_t p,
                                       std::uint32_t r) {
  if (m > n) throw std::invalid_argument("predicted_count_by_order: needs n >= m");
  if (r > n) throw std::invalid_argument("predicted_count_by_order: r exceeds n");
  if (!is_prime(p)) throw std::invalid_argument("predicted_count_by_order: p is not prime");
  if (r == 0) return 1;
  if (r <= m) return ipow(p, r - 1) * (p + 1);
  return ipow(p, m);
}

std::uint64_t lower_bound(std::uint64_t n) { return divisor_count(n); }

// ---------------------------------------------------------------------------

std::string to_string(Target t) {
  switch (t) {
    case Target::AtMost5: return "le5";
    case Target::Six: return "6";
    case Target::Seven: return "7";
    case Target::Eight: return "8";
  }
  return "?";
}

std::optional<Target> parse_target(const std::string& s) {
  if (s == "le5") return Target::AtMost5;
  if (s == "6") return Target::Six;
  if (s == "7") return Target::Seven;
  if (s == "8") return Target::Eight;
  return std::nullopt;
}

bool target_matches(Target t, std::uint64_t total) {
  switch (t) {
    case Target::AtMost5: return total <= 5;
    case Target::Six: return total == 6;
    case Target::Seven: return total == 7;
    case Target::Eight: return total == 8;
  }
  return false;
}

namespace {

using Kind = ClassificationItem::Kind;

ClassificationItem shape_item(std::string statement, std::vector<std::uint32_t> shape) {
  return {std::move(statement), Kind::CyclicShape, std::move(shape), std::nullopt};
}

ClassificationItem fixed_item(std::string statement, FamilySpec spec) {
  return {std::move(statement), Kind::Fixed, {}, std::move(spec)};
}

FamilySpec abelian(std::vector<std::uint64_t> factors) {
  FamilySpec s;
  s.tag = FamilyTag::AbelianProduct;
  s.factors = std::move(factors);
  return s;
}

FamilySpec tagged(FamilyTag tag, std::uint64_t p = 0, std::uint64_t q = 0, int row = 0,
                  std::uint32_t n = 0) {
  FamilySpec s;
  s.tag = tag;
  s.p = p;
  s.q = q;
  s.row = row;
  s.n = n;
  return s;
}

FamilySpec cyclic_spec(std::uint64_t n) {
  FamilySpec s;
  s.tag = FamilyTag::Cyclic;
  s.factors = {n};
  return s;
}

}  // namespace

ClassificationList classification_list(Target target) {
  ClassificationList list{target, {}};
  auto& it = list.items;
  switch (target) {
    case Target::AtMost5:
      it.push_back({"subgroup of C_{p^4}", Kind::CyclicPrimePowers, {4}, std::nullopt});
      it.push_back(fixed_item("S_3", tagged(FamilyTag::NonabPQ, 2, 3)));
      it.push_back(fixed_item("C_3 x C_3", abelian({3, 3})));
      it.push_back(fixed_item("Q_8", tagged(FamilyTag::Quaternion8)));
      it.push_back(shape_item("C_{pq}", {1, 1}));
      it.push_back(fixed_item("C_2 x C_2", abelian({2, 2})));
      break;
    case Target::Six:
      it.push_back(shape_item("C_{p^5}", {5}));
      it.push_back(shape_item("C_{p^2 q}", {2, 1}));
      it.push_back(shape_item("C_{p q^2}", {1, 2}));
      it.push_back(fixed_item("C_2 x C_4", abelian({4, 2})));
      break;
    case Target::Seven:
      it.push_back(fixed_item("D_8", tagged(FamilyTag::Dihedral, 0, 0, 0, 4)));
      it.push_back(fixed_item("D_10", tagged(FamilyTag::Dihedral, 0, 0, 0, 5)));
      it.push_back(fixed_item("Z_3 x| Z_4", tagged(FamilyTag::Z3SemiZ4)));
      it.push_back(fixed_item("C_5 x C_5", abelian({5, 5})));
      it.push_back(shape_item("C_{p^6}", {6}));
      break;
    case Target::Eight:
      it.push_back(shape_item("(a) C_{pqr}", {1, 1, 1}));
      it.push_back(shape_item("(a) C_{p^3 q}", {3, 1}));
      it.push_back(shape_item("(a) C_{p q^3}", {1, 3}));
      it.push_back(shape_item("(a) C_{p^7}", {7}));
      it.push_back({"(a) abelian non-cyclic group of order 4q", Kind::AbelianNoncyclic4q, {},
                    std::nullopt});
      it.push_back(fixed_item("(b) C_{2^3} x C_2", abelian({8, 2})));
      it.push_back(fixed_item("(b) C_2 x C_2 x C_2", abelian({2, 2, 2})));
      it.push_back(fixed_item("(b) C_{3^2} x C_3", abelian({9, 3})));
      it.push_back(fixed_item("(c) G_11", tagged(FamilyTag::Table2Row, 2, 0, 11)));
      it.push_back(fixed_item("(c) G_14", tagged(FamilyTag::Table2Row, 2, 0, 14)));
      it.push_back(fixed_item("(c) <a, b | a^9 = b^3 = 1, ba = a^4 b>",
                              tagged(FamilyTag::Table1Row, 3, 0, 7)));
      it.push_back(fixed_item("(c) A_4", tagged(FamilyTag::A4)));
      break;
  }
  return list;
}

std::vector<FamilySpec> instantiate(const ClassificationItem& item, std::uint64_t max_order) {
  std::vector<FamilySpec> out;
  switch (item.kind) {
    case Kind::Fixed:
      if (item.fixed && family_order(*item.fixed) <= max_order) out.push_back(*item.fixed);
      break;
    case Kind::CyclicPrimePowers:
      out.push_back(cyclic_spec(1));
      for (auto p : primes_up_to(max_order)) {
        for (std::uint32_t k = 1; k <= item.shape.at(0); ++k) {
          const auto n = ipow(p, k);
          if (n > max_order) break;
          out.push_back(cyclic_spec(n));
        }
      }
      break;
    case Kind::CyclicShape:
      for (std::uint64_t n = 2; n <= max_order; ++n) {
        const auto f = factorize(n);
        if (f.size() != item.shape.size()) continue;
        bool match = true;
        for (std::size_t i = 0; i < f.size(); ++i) match = match && f[i].exponent == item.shape[i];
        if (match) out.push_back(cyclic_spec(n));
      }
      break;
    case Kind::AbelianNoncyclic4q:
      for (auto q : primes_up_to(max_order / 4)) {
        if (q != 2) out.push_back(abelian({2, 2, q}));
      }
      break;
  }
  std::sort(out.begin(), out.end(), [](const FamilySpec& a, const FamilySpec& b) {
    return family_order(a) < family_order(b);
  });
  return out;
}

std::vector<FamilySpec> instantiate(const ClassificationList& list, std::uint64_t max_order) {
  std::vector<FamilySpec> out;
  for (const auto& item : list.items) {
    auto part = instantiate(item, max_order);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace cycgrp
