#include "cycgrp/names.hpp"

#include <array>
#include <regex>

#include "cycgrp/numtheory.hpp"

namespace cycgrp {

namespace {

std::optional<std::uint64_t> number(const std::string& s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  return std::stoull(s);
}

FamilySpec tagged(FamilyTag tag, std::uint64_t p = 0, std::uint64_t q = 0, int row = 0) {
  FamilySpec s;
  s.tag = tag;
  s.p = p;
  s.q = q;
  s.row = row;
  return s;
}

// p with p^3 == n, if any.
std::optional<std::uint64_t> cube_root(std::uint64_t n) {
  for (std::uint64_t p = 1; p * p * p <= n; ++p) {
    if (p * p * p == n) return p;
  }
  return std::nullopt;
}

constexpr std::array<const char*, 10> kRoman{"vi", "vii", "viii", "ix", "x",
                                             "xi", "xii", "xiii", "xiv", "xv"};

}  // namespace

std::optional<FamilySpec> parse_group_name(const std::string& name) {
  static const std::regex cyclic_re(R"(C(\d+))");
  static const std::regex product_re(R"(C\d+(?:xC\d+)+)");
  static const std::regex dihedral_re(R"(D(\d+))");
  static const std::regex pq_re(R"(C(\d+):C(\d+))");
  static const std::regex order16_re(R"(G(\d+))");
  static const std::regex p4_re(R"(G([ivx]+)@p=(\d+))");
  static const std::regex p2q_re(R"(G([123])@p=(\d+),q=(\d+))");
  static const std::regex p3_re(R"((mod|heis)(\d+))");
  static const std::regex pq2_re(R"(pq2\.([1-6])@p=(\d+),q=(\d+)(?:,k=(\d+)|,(irr))?)");
  std::smatch m;

  if (name == "Q8") return tagged(FamilyTag::Quaternion8);
  if (name == "A4") return tagged(FamilyTag::A4);
  if (name == "S3") return tagged(FamilyTag::NonabPQ, 2, 3);
  if (name == "Z3:Z4") return tagged(FamilyTag::Z3SemiZ4);

  if (std::regex_match(name, m, cyclic_re)) {
    auto n = number(m[1]);
    if (!n || *n == 0) return std::nullopt;
    FamilySpec s;
    s.factors = {*n};
    return s;
  }
  if (std::regex_match(name, product_re)) {
    FamilySpec s;
    s.tag = FamilyTag::AbelianProduct;
    static const std::regex factor_re(R"(C(\d+))");
    for (auto it = std::sregex_iterator(name.begin(), name.end(), factor_re);
         it != std::sregex_iterator(); ++it) {
      auto f = number((*it)[1]);
      if (!f) return std::nullopt;
      s.factors.push_back(*f);
    }
    return s;
  }
  if (std::regex_match(name, m, dihedral_re)) {
    auto n = number(m[1]);
    if (!n || *n < 2 || *n % 2) return std::nullopt;
    FamilySpec s = tagged(FamilyTag::Dihedral);
    s.n = static_cast<std::uint32_t>(*n / 2);
    return s;
  }
  if (std::regex_match(name, m, pq_re)) {
    auto q = number(m[1]), p = number(m[2]);
    if (!q || !p) return std::nullopt;
    return tagged(FamilyTag::NonabPQ, *p, *q);
  }
  if (std::regex_match(name, m, order16_re)) {
    auto row = number(m[1]);
    if (!row || *row < 6 || *row > 14) return std::nullopt;
    return tagged(FamilyTag::Table2Row, 2, 0, static_cast<int>(*row));
  }
  if (std::regex_match(name, m, p4_re)) {
    for (std::size_t i = 0; i < kRoman.size(); ++i) {
      if (m[1] == kRoman[i]) {
        auto p = number(m[2]);
        if (!p) return std::nullopt;
        return tagged(FamilyTag::Table3Row, *p, 0, static_cast<int>(i + 1));
      }
    }
    return std::nullopt;
  }
  if (std::regex_match(name, m, p2q_re)) {
    auto p = number(m[2]), q = number(m[3]);
    if (!p || !q) return std::nullopt;
    const FamilyTag tags[] = {FamilyTag::P2QG1, FamilyTag::P2QG2, FamilyTag::P2QG3};
    return tagged(tags[m[1].str()[0] - '1'], *p, *q);
  }
  if (std::regex_match(name, m, p3_re)) {
    auto n = number(m[2]);
    if (!n) return std::nullopt;
    auto p = cube_root(*n);
    if (!p) return std::nullopt;
    return tagged(FamilyTag::Table1Row, *p, 0, m[1] == "mod" ? 7 : 6);
  }
  if (std::regex_match(name, m, pq2_re)) {
    auto p = number(m[2]), q = number(m[3]);
    if (!p || !q) return std::nullopt;
    FamilySpec s = tagged(FamilyTag::PQ2Case, *p, *q, m[1].str()[0] - '0');
    if (s.row == 4) {
      if (m[5].matched) {
        s.variant = 0;
      } else if (m[4].matched) {
        auto k = number(m[4]);
        if (!k || *k == 0) return std::nullopt;
        s.variant = static_cast<int>(*k);
      } else {
        s.variant = 1;
      }
    } else if (m[4].matched || m[5].matched) {
      return std::nullopt;
    }
    return s;
  }
  return std::nullopt;
}

std::vector<std::string> group_name_forms() {
  return {
      "C<n>                   cyclic group of order n",
      "C<a>xC<b>[xC<c>...]    direct product of cyclic groups",
      "D<2n>                  dihedral group of order 2n",
      "Q8, A4, S3, Z3:Z4      fixed small groups",
      "C<q>:C<p>              nonabelian group of order pq (p | q-1)",
      "G6 .. G14              nonabelian groups of order 16",
      "Gvi .. Gxv@p=<p>       nonabelian groups of order p^4, p odd",
      "G1|G2|G3@p=<p>,q=<q>   nonabelian groups of order p^2 q",
      "mod<p^3>, heis<p^3>    nonabelian groups of order p^3, p odd (e.g. mod27)",
      "pq2.<k>@p=<p>,q=<q>    order p q^2, count case k (case 4: ,k=<k> or ,irr)",
  };
}

}  // namespace cycgrp
