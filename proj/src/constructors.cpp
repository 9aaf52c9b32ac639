#include "cycgrp/constructors.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "cycgrp/numtheory.hpp"

namespace cycgrp {

namespace {

void require_size(std::uint64_t n, const char* what) {
  if (n > kMaxGroupOrder) {
    throw SizeOverflow(std::string(what) + ": order " + std::to_string(n) + " exceeds limit " +
                       std::to_string(kMaxGroupOrder));
  }
}

std::string cyclic_name(std::uint64_t n) { return "C" + std::to_string(n); }

Mat2 mat_mul(const Mat2& a, const Mat2& b, std::uint64_t q) {
  return {(a[0] * b[0] + a[1] * b[2]) % q, (a[0] * b[1] + a[1] * b[3]) % q,
          (a[2] * b[0] + a[3] * b[2]) % q, (a[2] * b[1] + a[3] * b[3]) % q};
}

}  // namespace

Group cyclic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclic: n must be >= 1");
  require_size(n, "cyclic");
  std::vector<Elem> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) table[x * n + y] = static_cast<Elem>((x + y) % n);
  }
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return Group::from_table(n, std::move(table), cyclic_name(n), gens);
}

Group direct_product(const Group& a, const Group& b) {
  const std::size_t na = a.order(), nb = b.order();
  require_size(static_cast<std::uint64_t>(na) * nb, "direct_product");
  const std::size_t n = na * nb;
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Elem>(y / nb), yb = static_cast<Elem>(y % nb);
      table[x * n + y] = static_cast<Elem>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  std::vector<Elem> gens;
  for (Elem g : a.generators()) gens.push_back(static_cast<Elem>(g * nb));
  for (Elem g : b.generators()) gens.push_back(g);
  std::string name = a.name().empty() || b.name().empty() ? "" : a.name() + "x" + b.name();
  return Group::from_table(n, std::move(table), std::move(name), gens);
}

Group abelian_product(std::span<const std::uint64_t> factors) {
  if (factors.empty()) return cyclic(1);
  std::uint64_t total = 1;
  for (auto f : factors) total *= f;
  require_size(total, "abelian_product");
  Group g = cyclic(factors[0]);
  for (std::size_t k = 1; k < factors.size(); ++k) g = direct_product(g, cyclic(factors[k]));
  return g;
}

Group semidirect_by_automorphism(const Group& base, std::span<const Elem> sigma,
                                 std::uint64_t m) {
  const std::size_t nb = base.order();
  if (sigma.size() != nb || m == 0) {
    throw std::invalid_argument("semidirect: automorphism must be a map on the base group");
  }
  require_size(static_cast<std::uint64_t>(nb) * m, "semidirect");
  for (std::size_t x = 0; x < nb; ++x) {
    if (sigma[x] >= nb) throw std::invalid_argument("semidirect: automorphism out of range");
    for (std::size_t y = 0; y < nb; ++y) {
      if (sigma[base.mul(static_cast<Elem>(x), static_cast<Elem>(y))] !=
          base.mul(sigma[x], sigma[y])) {
        throw std::invalid_argument("semidirect: map is not a homomorphism");
      }
    }
  }
  // pw[s][y] = sigma^s(y)
  std::vector<std::vector<Elem>> pw(m, std::vector<Elem>(nb));
  for (std::size_t y = 0; y < nb; ++y) pw[0][y] = static_cast<Elem>(y);
  for (std::uint64_t s = 1; s < m; ++s) {
    for (std::size_t y = 0; y < nb; ++y) pw[s][y] = sigma[pw[s - 1][y]];
  }
  for (std::size_t y = 0; y < nb; ++y) {
    if (sigma[pw[m - 1][y]] != y) {
      throw std::invalid_argument("semidirect: automorphism order does not divide " +
                                  std::to_string(m));
    }
  }
  const std::size_t n = nb * m;
  std::vector<Elem> table(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto x = static_cast<Elem>(u % nb);
    const std::size_t s = u / nb;
    for (std::size_t v = 0; v < n; ++v) {
      const auto y = static_cast<Elem>(v % nb);
      const std::size_t t = v / nb;
      table[u * n + v] = static_cast<Elem>(((s + t) % m) * nb + base.mul(x, pw[s][y]));
    }
  }
  std::vector<Elem> gens(base.generators().begin(), base.generators().end());
  if (m > 1) gens.push_back(static_cast<Elem>(nb));
  return Group::from_table(n, std::move(table), {}, gens);
}

Group semidirect_cyclic(const Action& action) {
  const auto q = action.base_order, m = action.actor_order, i = action.exponent;
  if (q == 0 || m == 0) throw std::invalid_argument("semidirect_cyclic: orders must be >= 1");
  if (q > 1) {
    if (std::gcd(i, q) != 1 || m % multiplicative_order(i, q) != 0) {
      throw std::invalid_argument("semidirect_cyclic: ord_" + std::to_string(q) + "(" +
                                  std::to_string(i) + ") does not divide " + std::to_string(m));
    }
  }
  const Group base = cyclic(q);
  std::vector<Elem> sigma(q);
  for (std::uint64_t r = 0; r < q; ++r) sigma[r] = static_cast<Elem>(r * i % q);
  Group g = semidirect_by_automorphism(base, sigma, m);
  g.set_name("C" + std::to_string(q) + ":C" + std::to_string(m));
  return g;
}

Group semidirect_matrix(std::uint64_t q, const Mat2& mat, std::uint64_t m) {
  const Group base = direct_product(cyclic(q), cyclic(q));
  std::vector<Elem> sigma(q * q);
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t y = 0; y < q; ++y) {
      const std::uint64_t nx = (mat[0] * x + mat[1] * y) % q;
      const std::uint64_t ny = (mat[2] * x + mat[3] * y) % q;
      sigma[x * q + y] = static_cast<Elem>(nx * q + ny);
    }
  }
  return semidirect_by_automorphism(base, sigma, m);
}

std::optional<Mat2> irreducible_matrix_of_order(std::uint64_t q, std::uint64_t p) {
  const Mat2 id{1, 0, 0, 1};
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      for (std::uint64_t c = 0; c < q; ++c) {
        for (std::uint64_t d = 0; d < q; ++d) {
          const std::uint64_t det = (a * d + q * q - b * c % q) % q;
          if (det == 0) continue;
          const std::uint64_t tr = (a + d) % q;
          bool has_root = false;
          for (std::uint64_t r = 0; r < q && !has_root; ++r) {
            has_root = (r * r + q * q - tr * r % q + det) % q == 0;
          }
          if (has_root) continue;
          const Mat2 m{a, b, c, d};
          Mat2 pw = id;
          for (std::uint64_t k = 0; k < p; ++k) pw = mat_mul(pw, m, q);
          if (pw == id && m != id) return m;
        }
      }
    }
  }
  return std::nullopt;
}

Group dihedral(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("dihedral: n must be >= 1");
  require_size(2 * n, "dihedral");
  Group g = n == 1 ? cyclic(2) : semidirect_cyclic({n, 2, n - 1});
  g.set_name("D" + std::to_string(2 * n));
  return g;
}

Group symmetric_3() {
  Group g = semidirect_cyclic({3, 2, 2});
  g.set_name("S3");
  return g;
}

Group quaternion_8() { return from_pc_presentation(quaternion_8_presentation(), "Q8"); }

namespace {

struct PermHash {
  std::size_t operator()(const std::array<std::uint8_t, 4>& p) const noexcept {
    return static_cast<std::size_t>(p[0] | (p[1] << 2) | (p[2] << 4) | (p[3] << 6));
  }
};

}  // namespace

Group alternating_4() {
  using Perm = std::array<std::uint8_t, 4>;
  const Perm id{0, 1, 2, 3};
  const std::array<Perm, 2> gens{Perm{1, 2, 0, 3}, Perm{1, 0, 3, 2}};
  // (p * r)(k) = r(p(k)): apply p first.
  auto compose = [](const Perm& p, const Perm& r) {
    Perm out{};
    for (std::size_t k = 0; k < 4; ++k) out[k] = r[p[k]];
    return out;
  };
  return build_from_generators<Perm, decltype(compose), PermHash>(
      12, id, std::span<const Perm>(gens), compose, "A4");
}

// ---------------------------------------------------------------------------
// Presentations. Words are written over the pc generator indices.

PcPresentation quaternion_8_presentation() {
  // generators (i, j, z): i^2 = j^2 = z, i^-1 j i = j z, z central
  PcPresentation p({2, 2, 2});
  p.power(0, {{2, 1}}).power(1, {{2, 1}}).conjugate(1, 0, {{1, 1}, {2, 1}});
  return p;
}

PcPresentation heisenberg_presentation(std::uint64_t p) {
  const auto r = static_cast<std::uint32_t>(p);
  PcPresentation pres({r, r, r});  // (c, a, b)
  pres.left_conjugate(0, 1, {{1, 1}, {2, 1}});  // c a c^-1 = a b
  return pres;
}

PcPresentation modular_p3_presentation(std::uint64_t p) {
  const auto r = static_cast<std::uint32_t>(p);
  PcPresentation pres({r, r * r});  // (b, a)
  pres.left_conjugate(0, 1, {{1, r + 1}});  // b a b^-1 = a^{p+1}
  return pres;
}

PcPresentation order16_presentation(int row) {
  // [x, y] = x^-1 y^-1 x y, so x^y = x [x, y].
  switch (row) {
    case 6: {  // x^4, y^2, z^2, [x,y]x^2, [x,z], [y,z]; generators (y, x, z)
      PcPresentation p({2, 4, 2});
      p.conjugate(1, 0, {{1, 3}});
      return p;
    }
    case 7: {  // x^2 y^-2, z^2, [x,y]x^2, [x,z], [y,z]; generators (y, x, z)
      PcPresentation p({2, 4, 2});
      p.power(0, {{1, 2}}).conjugate(1, 0, {{1, 3}});
      return p;
    }
    case 8: {  // y^2, z^2, [y,z]x^2, [x,y], [x,z]; generators (y, z, x), x central
      PcPresentation p({2, 2, 4});
      p.conjugate(1, 0, {{1, 1}, {2, 2}});  // z^y = z [z,y] = z x^2
      return p;
    }
    case 9: {  // x^2, y^4, [x,y,x], [x,y,y]; generators (x, y, c = [x,y])
      PcPresentation p({2, 4, 2});
      p.conjugate(1, 0, {{1, 1}, {2, 1}});  // y^x = y c
      return p;
    }
    case 10: {  // x^4, y^4, [x,y]x^2; generators (y, x)
      PcPresentation p({4, 4});
      p.conjugate(1, 0, {{1, 3}});
      return p;
    }
    case 11: {  // x^2 y^-8, [x,y]y^4; forces y^8 = x^2 = 1, y^x = y^5. generators (x, y)
      PcPresentation p({2, 8});
      p.conjugate(1, 0, {{1, 5}});
      return p;
    }
    case 12: {  // x^8, y^2, [x,y]x^2; generators (y, x)
      PcPresentation p({2, 8});
      p.conjugate(1, 0, {{1, 7}});
      return p;
    }
    case 13: {  // y^2, [y,x]x^2 (x of order 8): x^y = x^3; generators (y, x)
      PcPresentation p({2, 8});
      p.conjugate(1, 0, {{1, 3}});
      return p;
    }
    case 14: {  // x^4 y^-2, [x,y]x^2: y^2 = x^4, x^y = x^-1; generators (y, x)
      PcPresentation p({2, 8});
      p.power(0, {{1, 4}}).conjugate(1, 0, {{1, 7}});
      return p;
    }
    default:
      throw std::invalid_argument("order16_presentation: row must be 6..14");
  }
}

PcPresentation order_p4_presentation(int label, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("order p^4 presentations need odd prime p");
  const auto r = static_cast<std::uint32_t>(p);
  const std::uint32_t r2 = r * r;
  switch (label) {
    case 6: {  // a^{p^3} = b^p = 1, ba = a^{1+p^2} b; generators (b, a)
      PcPresentation pres({r, r2 * r});
      pres.left_conjugate(0, 1, {{1, 1 + r2}});
      return pres;
    }
    case 7: {  // a^{p^2} = b^p = c^p = 1, a central, cb = a^p b c; generators (c, b, a)
      PcPresentation pres({r, r, r2});
      pres.left_conjugate(0, 1, {{2, r}, {1, 1}});
      return pres;
    }
    case 8: {  // a^{p^2} = b^{p^2} = 1, ba = a^{1+p} b; generators (b, a)
      PcPresentation pres({r2, r2});
      pres.left_conjugate(0, 1, {{1, 1 + r}});
      return pres;
    }
    case 9: {  // a^{p^2} = b^p = c^p = 1, ba = a^{1+p} b, c central; generators (b, a, c)
      PcPresentation pres({r, r2, r});
      pres.left_conjugate(0, 1, {{1, 1 + r}});
      return pres;
    }
    case 10: {  // a^{p^2} = b^p = c^p = 1, b central, ca = abc; generators (c, a, b)
      PcPresentation pres({r, r2, r});
      pres.left_conjugate(0, 1, {{1, 1}, {2, 1}});
      return pres;
    }
    case 11: {  // a^{p^2} = b^p = c^p = 1, ba = a^{1+p} b, ca = abc, bc = cb; (c, b, a)
      PcPresentation pres({r, r, r2});
      pres.left_conjugate(1, 2, {{2, 1 + r}});
      pres.left_conjugate(0, 2, {{2, 1}, {1, 1}});
      return pres;
    }
    case 12:
    case 13: {
      if (p == 3) {
        // a^9 = b^3 = 1, c^3 = a^{+-3}, ab = b a^4, ac = c a b^-1, cb = bc; (c, b, a)
        PcPresentation pres({3, 3, 9});
        pres.power(0, {{2, label == 12 ? 3U : 6U}});
        pres.conjugate(2, 1, {{2, 4}});
        pres.conjugate(2, 0, {{2, 1}, {1, 2}});
        return pres;
      }
      // a^{p^2} = b^p = c^p = 1, ba = a^{1+p} b, ca = a^{1+dp} b c, cb = a^{dp} b c
      // with d = 1 for (xii) and a non-residue for (xiii); (c, b, a)
      const auto d = static_cast<std::uint32_t>(label == 12 ? 1 : smallest_nonresidue(p));
      PcPresentation pres({r, r, r2});
      pres.left_conjugate(1, 2, {{2, 1 + r}});
      pres.left_conjugate(0, 2, {{2, 1 + d * r}, {1, 1}});
      pres.left_conjugate(0, 1, {{2, d * r}, {1, 1}});
      return pres;
    }
    case 14: {  // elementary generators, dc = acd, rest commute; (d, c, a, b)
      PcPresentation pres({r, r, r, r});
      pres.left_conjugate(0, 1, {{2, 1}, {1, 1}});
      return pres;
    }
    case 15: {
      if (p == 3) {
        // a^9 = b^3 = c^3 = 1, ab = ba, ac = c a b, bc = c a^-3 b; (c, a, b)
        PcPresentation pres({3, 9, 3});
        pres.conjugate(1, 0, {{1, 1}, {2, 1}});
        pres.conjugate(2, 0, {{1, 6}, {2, 1}});
        return pres;
      }
      // exponent p, a central, cb = bc, db = abd, dc = bcd; (d, c, b, a)
      PcPresentation pres({r, r, r, r});
      pres.left_conjugate(0, 2, {{3, 1}, {2, 1}});
      pres.left_conjugate(0, 1, {{2, 1}, {1, 1}});
      return pres;
    }
    default:
      throw std::invalid_argument("order_p4_presentation: label must be 6..15");
  }
}

}  // namespace cycgrp
