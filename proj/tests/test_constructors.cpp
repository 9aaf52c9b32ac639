#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycgrp/catalog.hpp"
#include "cycgrp/constructors.hpp"
#include "cycgrp/numtheory.hpp"
#include "support.hpp"

using namespace cycgrp;
using namespace testsupport;

namespace {

Elem gen(const PcPresentation& p, std::size_t i) {
  std::vector<std::uint32_t> e(p.size(), 0);
  e[i] = 1;
  return pc_index(p, e);
}

Elem eval(const Group& g, const PcPresentation& p, const Word& w) {
  Elem x = 0;
  for (const auto& s : w) x = g.mul(x, g.power(gen(p, s.gen), s.exp));
  return x;
}

// Every power and conjugation relation of `p` holds in `g`.
void check_relations(const Group& g, const PcPresentation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Elem gi = gen(p, i);
    REQUIRE(g.element_order(gi) % p.relative_orders()[i] == 0);
    CHECK(g.power(gi, p.relative_orders()[i]) == eval(g, p, p.power_word(i)));
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const Elem gj = gen(p, j);
      if (p.conjugate_word(j, i)) {
        CHECK(g.mul(g.mul(g.inverse(gi), gj), gi) == eval(g, p, *p.conjugate_word(j, i)));
      }
      if (p.left_conjugate_word(i, j)) {
        CHECK(g.mul(g.mul(gi, gj), g.inverse(gi)) == eval(g, p, *p.left_conjugate_word(i, j)));
      }
      if (!p.conjugate_word(j, i) && !p.left_conjugate_word(i, j)) CHECK(naive_commute(g, gi, gj));
    }
  }
}

std::vector<PcPresentation> all_presentations() {
  std::vector<PcPresentation> out{quaternion_8_presentation()};
  for (int row = 6; row <= 14; ++row) out.push_back(order16_presentation(row));
  for (std::uint64_t p : {3, 5}) {
    out.push_back(heisenberg_presentation(p));
    out.push_back(modular_p3_presentation(p));
    for (int label = 6; label <= 15; ++label) out.push_back(order_p4_presentation(label, p));
  }
  out.push_back(heisenberg_presentation(7));
  out.push_back(modular_p3_presentation(7));
  return out;
}

// C3 wr C3 on 9 points.
Group wreath_c3_c3() {
  return perm_group(9, {{1, 2, 0, 3, 4, 5, 6, 7, 8}, {3, 4, 5, 6, 7, 8, 0, 1, 2}}, "C3wrC3");
}

std::vector<FamilySpec> p2q_instances(FamilyTag tag) {
  std::vector<FamilySpec> out;
  for (const auto& s : catalog_specs(500)) {
    if (s.tag == tag) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("cyclic") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic_census(cyclic(12)).total == 6);
  CHECK(cyclic_census(cyclic(128)).total == 8);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const Group c = cyclic(n);
    REQUIRE(c.order() == n);
    REQUIRE(cyclic_census(c).total == divisor_count(n));
    REQUIRE(is_cyclic(c));
  }
}

TEST_CASE("direct_product") {
  const Group a = cyclic(2), b = cyclic(4);
  const Group ab = direct_product(a, b);
  CHECK(cyclic_census(ab).total == 6);
  for (Elem x = 0; x < 8; ++x) {
    for (Elem y = 0; y < 8; ++y) {
      const Elem expect = a.mul(x / 4, y / 4) * 4 + b.mul(x % 4, y % 4);
      REQUIRE(ab.mul(x, y) == expect);
    }
  }
  CHECK(cyclic_census(direct_product(cyclic(5), cyclic(5))).total == 7);
  CHECK(cyclic_census(direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2))).total == 8);
  CHECK_THROWS_AS(direct_product(cyclic(50), cyclic(50)), SizeOverflow);
}

TEST_CASE("elementary abelian counts") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      if (ipow(p, n) > 2000) continue;
      const std::vector<std::uint64_t> f(n, p);
      std::uint64_t expect = 2;
      for (std::uint32_t k = 1; k < n; ++k) expect += ipow(p, k);
      if (n == 1) expect = 2;
      CHECK(cyclic_census(abelian_product(f)).total == expect);
      if (ipow(p, n) <= 200) CHECK(naive_total(abelian_product(f)) == expect);
    }
  }
}

TEST_CASE("semidirect_cyclic") {
  CHECK(cyclic_census(semidirect_cyclic({3, 2, 2})).total == 5);
  CHECK(cyclic_census(semidirect_cyclic({3, 4, 2})).total == 7);
  CHECK(cyclic_census(semidirect_cyclic({5, 4, 2})).total == 12);
  CHECK_THROWS_AS(semidirect_cyclic({7, 2, 2}), std::invalid_argument);

  const Group g = semidirect_cyclic({7, 3, 2});
  for (Elem x = 0; x < 21; ++x) {
    for (Elem y = 0; y < 21; ++y) {
      const std::uint64_t r = x % 7, s = x / 7, r2 = y % 7, s2 = y / 7;
      const std::uint64_t rr = (r + pow_mod(2, s, 7) * r2) % 7, ss = (s + s2) % 3;
      REQUIRE(g.mul(x, y) == ss * 7 + rr);
    }
  }
}

TEST_CASE("trivial action gives the direct product") {
  for (auto [q, m] : {std::pair{3, 2}, {5, 4}, {7, 3}, {4, 6}, {9, 2}}) {
    const Group sd = semidirect_cyclic({static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(m), 1});
    const Group dp = direct_product(cyclic(q), cyclic(m));
    CHECK(fingerprint(sd) == fingerprint(dp));
  }
}

TEST_CASE("small named groups") {
  CHECK(cyclic_census(dihedral(4)).total == 7);
  CHECK(cyclic_census(dihedral(5)).total == 7);
  CHECK(cyclic_census(quaternion_8()).total == 5);
  CHECK(cyclic_census(alternating_4()).total == 8);
  CHECK(cyclic_census(symmetric_3()).total == 5);
  CHECK(center(dihedral(4)).size() == 2);
  for (std::uint64_t n = 3; n <= 30; ++n) {
    const Group d = dihedral(n);
    CHECK(d.order() == 2 * n);
    CHECK(naive_total(d) == cyclic_census(d).total);
  }
}

TEST_CASE("from_pc_presentation basics") {
  PcPresentation c4({2, 2});
  c4.power(0, {{1, 1}});
  const Group g = from_pc_presentation(c4);
  CHECK(g.order() == 4);
  CHECK(is_cyclic(g));

  PcPresentation pinned({2, 2});
  pinned.expect_order(8);
  CHECK_THROWS_AS(from_pc_presentation(pinned), OrderMismatch);

  // conjugation by g0 sending g1 to the identity is not an automorphism
  PcPresentation broken({3, 2});
  broken.conjugate(1, 0, {});
  CHECK_THROWS(from_pc_presentation(broken));
}

TEST_CASE("order 16 presentations") {
  const auto g6p = order16_presentation(6);
  const Group g6 = from_pc_presentation(g6p);
  CHECK(cyclic_census(g6).total == 14);
  const Elem y = gen(g6p, 0), x = gen(g6p, 1), z = gen(g6p, 2);
  CHECK(g6.power(x, 4) == 0);
  CHECK(g6.power(y, 2) == 0);
  CHECK(g6.power(z, 2) == 0);
  CHECK(g6.mul(g6.commutator(x, y), g6.power(x, 2)) == 0);
  CHECK(g6.commutator(x, z) == 0);
  CHECK(g6.commutator(y, z) == 0);
  const Elem zgens[] = {g6.power(x, 2), z};
  CHECK(center(g6) == generated_subgroup(g6, zgens));
  CHECK(center(g6).size() == 4);

  const auto g12p = order16_presentation(12);
  const Group g12 = from_pc_presentation(g12p);
  CHECK(cyclic_census(g12).total == 12);
  CHECK(nilpotency_class(g12) == 3u);
  const Elem y12 = gen(g12p, 0), x12 = gen(g12p, 1);
  CHECK(g12.power(x12, 8) == 0);
  CHECK(g12.power(y12, 2) == 0);
  CHECK(g12.mul(g12.commutator(x12, y12), g12.power(x12, 2)) == 0);
}

TEST_CASE("every presentation realizes its relations with full order") {
  for (const auto& p : all_presentations()) {
    const Group g = from_pc_presentation(p);
    REQUIRE(g.order() == p.expected_order());
    if (g.order() <= 243) CHECK(naive_associative(g));
    check_relations(g, p);
  }
}

TEST_CASE("modular group of order 27") {
  const Group g = from_pc_presentation(modular_p3_presentation(3));
  CHECK(cyclic_census(g).total == 8);
  CHECK(exponent(g) == 9);
}

TEST_CASE("order p^4 exponent of G(xii) at p=3") {
  const Group g = from_pc_presentation(order_p4_presentation(12, 3));
  CHECK(exponent(g) == 9);
  CHECK(cyclic_census(g).total == 17);
}

TEST_CASE("G(xi) at p=3 is C3 wr C3") {
  FamilySpec s;
  s.tag = FamilyTag::Table3Row;
  s.p = 3;
  s.row = 6;
  const Group gxi = construct(s);
  const Group w = wreath_c3_c3();
  CHECK(w.order() == 81);
  CHECK(fingerprint(gxi) == fingerprint(w));
  CHECK(naive_total(w) == 29);
  CHECK(cyclic_census(gxi).total == 29);
}

TEST_CASE("presented groups agree with independent enumeration") {
  for (const auto& p : all_presentations()) {
    const Group g = from_pc_presentation(p);
    if (g.order() > 200) continue;
    CHECK(naive_total(g) == cyclic_census(g).total);
  }
}

TEST_CASE("G2: b^p is central") {
  const auto specs = p2q_instances(FamilyTag::P2QG2);
  REQUIRE(!specs.empty());
  for (const auto& s : specs) {
    const Group g = construct(s);
    const Elem bp = static_cast<Elem>(s.p * s.q);  // (r, s) = (0, p) at s*q + r
    for (Elem x = 0; x < g.order(); ++x) REQUIRE(naive_commute(g, bp, x));
  }
}

TEST_CASE("G3: no element of order pq, but a subgroup of order pq") {
  const auto specs = p2q_instances(FamilyTag::P2QG3);
  REQUIRE(!specs.empty());
  for (const auto& s : specs) {
    const Group g = construct(s);
    const auto c = cyclic_census(g);
    CHECK(c.by_order.at(s.p * s.q) == 0);
    CHECK(has_subgroup_of_order(g, s.p * s.q));
  }
}

TEST_CASE("G1: number of elements of order p") {
  const auto specs = p2q_instances(FamilyTag::P2QG1);
  REQUIRE(!specs.empty());
  for (const auto& s : specs) {
    const Group g = construct(s);
    std::uint64_t k = 0;
    for (Elem x = 0; x < g.order(); ++x) k += g.element_order(x) == s.p;
    CHECK(k == s.p * s.p * s.q - s.p * s.q + s.p - 1);
  }
}

TEST_CASE("power law in G1, G2, G3") {
  for (auto tag : {FamilyTag::P2QG1, FamilyTag::P2QG2, FamilyTag::P2QG3}) {
    for (const auto& s : p2q_instances(tag)) {
      const Group g = construct(s);
      const std::uint64_t p = s.p, q = s.q;
      const std::uint64_t m = tag == FamilyTag::P2QG1 ? p : p * p;
      const std::uint64_t extra = tag == FamilyTag::P2QG1 ? p : 1;
      const std::uint64_t i = *find_element_of_order(q, tag == FamilyTag::P2QG3 ? p * p : p);
      auto idx = [&](std::uint64_t r, std::uint64_t sx, std::uint64_t t) {
        return static_cast<Elem>((sx * q + r) * extra + t);
      };
      const Elem a = idx(1, 0, 0), b = idx(0, 1, 0);
      REQUIRE(g.mul(g.mul(b, a), g.inverse(b)) == g.power(a, static_cast<std::int64_t>(i)));
      std::size_t mismatches = 0;
      for (std::uint64_t r = 0; r < q; ++r) {
        for (std::uint64_t sx = 0; sx < m; ++sx) {
          for (std::uint64_t t = 0; t < extra; ++t) {
            const Elem x = idx(r, sx, t);
            Elem acc = 0;
            for (std::uint64_t n = 1; n <= g.order(); ++n) {
              acc = g.mul(acc, x);
              const auto [ra, sb] = semidirect_power_exponent(r, sx, n, i, q);
              mismatches += acc != idx(ra, sb % m, n * t % extra);
            }
          }
        }
      }
      CHECK(mismatches == 0);
    }
  }
}
