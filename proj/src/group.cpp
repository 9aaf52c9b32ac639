#include "cycgrp/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cycgrp/numtheory.hpp"

namespace cycgrp {

namespace {

std::string fmt_triple(Elem x, Elem y, Elem z) {
  std::ostringstream os;
  os << "(" << x << ", " << y << ", " << z << ")";
  return os.str();
}

// Right-multiplication closure of `gens` as a membership mask.
std::vector<bool> right_closure(std::size_t n, std::span<const Elem> table,
                                std::span<const Elem> gens) {
  std::vector<bool> seen(n, false);
  std::vector<Elem> queue{0};
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Elem x = queue[k];
    for (Elem g : gens) {
      const Elem y = table[static_cast<std::size_t>(x) * n + g];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

Group Group::from_table(std::size_t order, std::vector<Elem> table, std::string name,
                        std::span<const Elem> generators) {
  const std::size_t n = order;
  if (n == 0) throw AxiomViolation("group table is empty");
  if (n > kMaxGroupOrder) {
    throw SizeOverflow("group order " + std::to_string(n) + " exceeds limit " +
                       std::to_string(kMaxGroupOrder));
  }
  if (table.size() != n * n) {
    throw AxiomViolation("table has " + std::to_string(table.size()) + " entries, expected " +
                         std::to_string(n * n));
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] >= n) {
      const auto x = static_cast<Elem>(k / n), y = static_cast<Elem>(k % n);
      throw AxiomViolation("closure: entry " + std::to_string(table[k]) + " at row " +
                               std::to_string(x) + ", column " + std::to_string(y) +
                               " is out of range",
                           {x, y, 0});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x] != x || table[x * n] != x) {
      throw AxiomViolation("identity: index 0 is not a two-sided identity at " +
                               std::to_string(x),
                           {0, static_cast<Elem>(x), 0});
    }
  }
  // Latin square: every row and column is a permutation.
  std::vector<Elem> inverse(n, 0);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  for (std::size_t x = 0; x < n; ++x) {
    ++epoch;
    for (std::size_t y = 0; y < n; ++y) {
      const Elem v = table[x * n + y];
      if (stamp[v] == epoch) {
        throw AxiomViolation("inverses: row " + std::to_string(x) + " repeats element " +
                                 std::to_string(v),
                             {static_cast<Elem>(x), static_cast<Elem>(y), 0});
      }
      stamp[v] = epoch;
      if (v == 0) inverse[x] = static_cast<Elem>(y);
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    ++epoch;
    for (std::size_t x = 0; x < n; ++x) {
      const Elem v = table[x * n + y];
      if (stamp[v] == epoch) {
        throw AxiomViolation("inverses: column " + std::to_string(y) + " repeats element " +
                                 std::to_string(v),
                             {static_cast<Elem>(x), static_cast<Elem>(y), 0});
      }
      stamp[v] = epoch;
    }
  }

  // A right-multiplication generating set, extending the hint greedily.
  std::vector<Elem> gens;
  for (Elem g : generators) {
    if (g >= n) throw AxiomViolation("generator hint out of range");
    if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  auto reached = right_closure(n, table, gens);
  for (std::size_t x = 1; x < n; ++x) {
    if (!reached[x]) {
      gens.push_back(static_cast<Elem>(x));
      reached = right_closure(n, table, gens);
    }
  }

  auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  if (n <= kFullAssociativityLimit) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t xy = at(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          if (at(xy, z) != at(x, at(y, z))) {
            throw AxiomViolation(
                "associativity fails on " +
                    fmt_triple(static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)),
                {static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)});
          }
        }
      }
    }
  } else {
    // (x g) z == x (g z) for g in a generating set implies associativity.
    for (Elem g : gens) {
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t xg = at(x, g);
        for (std::size_t z = 0; z < n; ++z) {
          if (at(xg, z) != at(x, at(g, z))) {
            throw AxiomViolation(
                "associativity fails on " + fmt_triple(static_cast<Elem>(x), g,
                                                       static_cast<Elem>(z)),
                {static_cast<Elem>(x), g, static_cast<Elem>(z)});
          }
        }
      }
    }
  }

  std::vector<std::uint32_t> orders(n, 1);
  for (std::size_t x = 1; x < n; ++x) {
    std::uint32_t k = 1;
    Elem p = static_cast<Elem>(x);
    while (p != 0) {
      p = at(p, x);
      ++k;
    }
    orders[x] = k;
  }

  Group g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.orders_ = std::move(orders);
  g.generators_ = std::move(gens);
  g.name_ = std::move(name);
  return g;
}

Elem Group::power(Elem x, std::int64_t k) const {
  if (k < 0) {
    x = inverse(x);
    k = -k;
  }
  k %= orders_[x];
  Elem r = 0;
  Elem base = x;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

Elem Group::commutator(Elem x, Elem y) const {
  return mul(mul(inverse(x), inverse(y)), mul(x, y));
}

std::uint32_t Group::element_order(Elem x) const {
  if (x >= n_) {
    throw std::out_of_range("element index " + std::to_string(x) + " out of range for order " +
                            std::to_string(n_));
  }
  return orders_[x];
}

// ---------------------------------------------------------------------------

CyclicCensus cyclic_census(const Group& g) {
  CyclicCensus c;
  const auto n = static_cast<std::uint64_t>(g.order());
  for (std::uint64_t d : divisors(n)) {
    c.by_order[d] = 0;
    c.elements_by_order[d] = 0;
  }
  for (std::uint32_t o : g.element_orders()) ++c.elements_by_order[o];
  for (auto& [d, count] : c.by_order) {
    const std::uint64_t elems = c.elements_by_order[d];
    const std::uint64_t phi = euler_phi(d);
    if (elems % phi != 0) {
      throw std::logic_error("cyclic_census: phi(" + std::to_string(d) +
                             ") does not divide the element count");
    }
    count = elems / phi;
    c.total += count;
  }
  return c;
}

// ---------------------------------------------------------------------------

namespace {

Subgroup from_mask(const std::vector<bool>& mask) {
  Subgroup h;
  for (std::size_t x = 0; x < mask.size(); ++x) {
    if (mask[x]) h.elements.push_back(static_cast<Elem>(x));
  }
  return h;
}

struct Bits {
  std::vector<std::uint64_t> words;
  std::size_t count = 0;

  explicit Bits(std::size_t n = 0) : words((n + 63) / 64, 0) {}
  bool test(Elem x) const { return (words[x >> 6] >> (x & 63)) & 1U; }
  void set(Elem x) {
    if (!test(x)) {
      words[x >> 6] |= std::uint64_t{1} << (x & 63);
      ++count;
    }
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < words.size(); ++k) {
      if ((words[k] & ~o.words[k]) != 0) return false;
    }
    return true;
  }
  friend bool operator==(const Bits& a, const Bits& b) { return a.words == b.words; }
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : b.words) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ULL;
    return h;
  }
};

// Closure of gens; returns empty optional if it grows past `limit`.
std::optional<Bits> close(const Group& g, std::span<const Elem> gens, std::size_t limit) {
  Bits bits(g.order());
  std::vector<Elem> queue{0};
  bits.set(0);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (Elem s : gens) {
      const Elem y = g.mul(queue[k], s);
      if (!bits.test(y)) {
        bits.set(y);
        if (bits.count > limit) return std::nullopt;
        queue.push_back(y);
      }
    }
  }
  return bits;
}

Subgroup to_subgroup(const Bits& b, std::size_t n) {
  Subgroup h;
  h.elements.reserve(b.count);
  for (std::size_t x = 0; x < n; ++x) {
    if (b.test(static_cast<Elem>(x))) h.elements.push_back(static_cast<Elem>(x));
  }
  return h;
}

// Join-closure fixpoint over cyclic seeds whose orders divide m. A
// `stop_at` value > 0 ends the search once a subgroup of that order exists.
SubgroupSet lattice(const Group& g, std::uint64_t m, std::size_t size_cap,
                    std::uint64_t stop_at = 0) {
  const std::size_t n = g.order();
  if (n > size_cap) {
    throw CapExceeded("subgroup search: |G| = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(size_cap));
  }
  struct Node {
    Bits bits;
    std::vector<Elem> gens;
  };
  std::vector<Node> nodes;
  std::unordered_set<Bits, BitsHash> seen;
  std::vector<std::size_t> seeds;

  auto add = [&](Bits b, std::vector<Elem> gens) -> bool {
    if (!seen.insert(b).second) return false;
    nodes.push_back({std::move(b), std::move(gens)});
    return true;
  };

  add(*close(g, {}, n), {});
  bool done = stop_at == 1;
  for (std::size_t x = 1; x < n && !done; ++x) {
    if (m % g.element_orders()[x] != 0) continue;
    const Elem e = static_cast<Elem>(x);
    auto b = close(g, std::span<const Elem>(&e, 1), n);
    if (add(std::move(*b), {e})) {
      seeds.push_back(nodes.size() - 1);
      if (stop_at != 0 && nodes.back().bits.count == stop_at) done = true;
    }
  }
  for (std::size_t k = 0; k < nodes.size() && !done; ++k) {
    for (std::size_t s : seeds) {
      if (nodes[s].bits.subset_of(nodes[k].bits)) continue;
      std::vector<Elem> gens = nodes[k].gens;
      gens.push_back(nodes[s].gens.front());
      auto b = close(g, gens, static_cast<std::size_t>(std::min<std::uint64_t>(m, n)));
      if (!b || m % b->count != 0) continue;
      if (add(std::move(*b), std::move(gens)) && stop_at != 0 &&
          nodes.back().bits.count == stop_at) {
        done = true;
        break;
      }
    }
  }

  SubgroupSet out;
  out.reserve(nodes.size());
  for (const auto& node : nodes) out.push_back(to_subgroup(node.bits, n));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.elements < b.elements;
  });
  return out;
}

}  // namespace

Subgroup generated_subgroup(const Group& g, std::span<const Elem> gens) {
  return to_subgroup(*close(g, gens, g.order()), g.order());
}

bool is_closed_subgroup(const Group& g, const Subgroup& h) {
  if (h.elements.empty() || h.elements.front() != 0) return false;
  if (!std::is_sorted(h.elements.begin(), h.elements.end())) return false;
  std::vector<bool> in(g.order(), false);
  for (Elem x : h.elements) in[x] = true;
  for (Elem x : h.elements) {
    if (!in[g.inverse(x)]) return false;
    for (Elem y : h.elements) {
      if (!in[g.mul(x, y)]) return false;
    }
  }
  return g.order() % h.size() == 0;
}

bool is_cyclic_subgroup(const Group& g, const Subgroup& h) {
  return std::any_of(h.elements.begin(), h.elements.end(),
                     [&](Elem x) { return g.element_orders()[x] == h.size(); });
}

Subgroup centralizer(const Group& g, Elem x) {
  Subgroup h;
  for (std::size_t y = 0; y < g.order(); ++y) {
    if (g.mul(x, static_cast<Elem>(y)) == g.mul(static_cast<Elem>(y), x)) {
      h.elements.push_back(static_cast<Elem>(y));
    }
  }
  return h;
}

Subgroup center(const Group& g) {
  const std::size_t n = g.order();
  std::vector<bool> mask(n, false);
  for (std::size_t z = 0; z < n; ++z) {
    bool central = true;
    for (Elem gen : g.generators()) {
      if (g.mul(static_cast<Elem>(z), gen) != g.mul(gen, static_cast<Elem>(z))) {
        central = false;
        break;
      }
    }
    mask[z] = central;
  }
  return from_mask(mask);
}

Subgroup derived_subgroup(const Group& g) {
  const std::size_t n = g.order();
  std::vector<bool> is_comm(n, false);
  std::vector<Elem> comms;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem c = g.commutator(static_cast<Elem>(x), static_cast<Elem>(y));
      if (!is_comm[c]) {
        is_comm[c] = true;
        comms.push_back(c);
      }
    }
  }
  return generated_subgroup(g, comms);
}

std::optional<std::uint32_t> nilpotency_class(const Group& g) {
  const std::size_t n = g.order();
  std::vector<bool> zi(n, false);
  zi[0] = true;
  std::size_t size = 1;
  std::uint32_t cls = 0;
  while (size < n) {
    std::vector<bool> next(n, false);
    std::size_t next_size = 0;
    for (std::size_t x = 0; x < n; ++x) {
      bool ok = true;
      for (Elem gen : g.generators()) {
        if (!zi[g.commutator(static_cast<Elem>(x), gen)]) {
          ok = false;
          break;
        }
      }
      next[x] = ok;
      next_size += ok ? 1 : 0;
    }
    if (next_size == size) return std::nullopt;
    zi = std::move(next);
    size = next_size;
    ++cls;
  }
  return cls;
}

SubgroupSet all_subgroups(const Group& g, std::size_t size_cap) {
  return lattice(g, g.order(), size_cap);
}

SubgroupSet subgroups_dividing(const Group& g, std::uint64_t m, std::size_t size_cap) {
  if (m == 0) throw std::invalid_argument("subgroups_dividing: m must be >= 1");
  return lattice(g, std::gcd(m, static_cast<std::uint64_t>(g.order())), size_cap);
}

bool has_subgroup_of_order(const Group& g, std::uint64_t m, std::size_t size_cap) {
  const auto n = static_cast<std::uint64_t>(g.order());
  if (m == 0 || n % m != 0) return false;
  if (m == 1 || m == n) return true;
  const auto subs = lattice(g, m, size_cap, m);
  return std::any_of(subs.begin(), subs.end(), [&](const Subgroup& h) { return h.size() == m; });
}

std::uint64_t sylow_count(const Group& g, std::uint64_t p, std::size_t size_cap) {
  auto n = static_cast<std::uint64_t>(g.order());
  if (!is_prime(p) || n % p != 0) {
    throw std::invalid_argument("sylow_count: p must be a prime dividing |G|");
  }
  std::uint64_t pk = 1;
  while (n % p == 0) {
    n /= p;
    pk *= p;
  }
  const auto subs = lattice(g, pk, size_cap);
  return static_cast<std::uint64_t>(
      std::count_if(subs.begin(), subs.end(), [&](const Subgroup& h) { return h.size() == pk; }));
}

bool is_abelian(const Group& g) {
  for (Elem a : g.generators()) {
    for (Elem b : g.generators()) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

bool is_cyclic(const Group& g) {
  const auto orders = g.element_orders();
  return std::find(orders.begin(), orders.end(), g.order()) != orders.end();
}

std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (std::uint32_t o : g.element_orders()) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

// ---------------------------------------------------------------------------

Fingerprint fingerprint(const Group& g) {
  const std::size_t n = g.order();
  Fingerprint f;
  f.order = n;
  const auto census = cyclic_census(g);
  for (const auto& [d, count] : census.elements_by_order) {
    if (count > 0) f.order_histogram.emplace_back(d, count);
  }
  f.abelian = is_abelian(g);
  f.center_order = center(g).size();
  f.derived_order = derived_subgroup(g).size();
  f.cyclic_total = census.total;

  std::vector<std::uint64_t> primes;
  if (n > 1) {
    for (const auto& pp : factorize(n)) primes.push_back(pp.prime);
  }
  std::vector<std::vector<std::uint64_t>> roots(primes.size(), std::vector<std::uint64_t>(n, 0));
  for (std::size_t k = 0; k < primes.size(); ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      ++roots[k][g.power(static_cast<Elem>(x), static_cast<std::int64_t>(primes[k]))];
    }
  }
  std::vector<bool> in_derived(n, false);
  for (Elem x : derived_subgroup(g).elements) in_derived[x] = true;

  // Order of the normal closure of <x>, shared by a conjugacy class.
  std::vector<std::uint64_t> closure(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (closure[x] != 0) continue;
    if (f.abelian) {
      closure[x] = g.element_orders()[x];
      continue;
    }
    std::vector<Elem> cls;
    std::vector<bool> seen(n, false);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem c = g.mul(g.mul(static_cast<Elem>(y), static_cast<Elem>(x)), g.inverse(static_cast<Elem>(y)));
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    const auto size = generated_subgroup(g, cls).size();
    for (Elem c : cls) closure[c] = size;
  }

  f.element_profiles.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::uint64_t> profile{g.element_orders()[x], 0, in_derived[x] ? 1U : 0U, closure[x]};
    const auto row = g.row(static_cast<Elem>(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (row[y] == g.mul(static_cast<Elem>(y), static_cast<Elem>(x))) ++profile[1];
    }
    for (const auto& r : roots) profile.push_back(r[x]);
    f.element_profiles.push_back(std::move(profile));
  }
  std::sort(f.element_profiles.begin(), f.element_profiles.end());
  return f;
}

Group relabel(const Group& g, std::span<const Elem> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n || perm[0] != 0) {
    throw std::invalid_argument("relabel: permutation must fix 0 and have length |G|");
  }
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      table[static_cast<std::size_t>(perm[x]) * n + perm[y]] =
          perm[g.mul(static_cast<Elem>(x), static_cast<Elem>(y))];
    }
  }
  std::vector<Elem> gens;
  for (Elem x : g.generators()) gens.push_back(perm[x]);
  return Group::from_table(n, std::move(table), g.name(), gens);
}

}  // namespace cycgrp
