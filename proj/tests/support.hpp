#pragma once

// Helpers shared by the test binaries. Everything here is written against
// the raw table so it can serve as an oracle for the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cycgrp/group.hpp"

namespace testsupport {

using cycgrp::Elem;
using cycgrp::Group;

// Permutation group on `points` generated by the given images, built from
// permutations encoded as strings.
inline Group perm_group(std::size_t points, const std::vector<std::vector<int>>& gens,
                        std::string name = {}) {
  std::string id(points, 0);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::string> g;
  for (const auto& v : gens) g.emplace_back(v.begin(), v.end());
  auto compose = [](const std::string& x, const std::string& y) {
    std::string r(x.size(), 0);
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = x[static_cast<unsigned char>(y[k])];
    return r;
  };
  return cycgrp::build_from_generators<std::string>(cycgrp::kMaxGroupOrder, id, g, compose,
                                                    std::move(name));
}

inline std::uint64_t naive_order(const Group& g, Elem x) {
  Elem y = x;
  std::uint64_t k = 1;
  while (y != 0) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

inline std::vector<Elem> cyclic_closure(const Group& g, Elem x) {
  std::vector<Elem> s{0};
  for (Elem y = x; y != 0; y = g.mul(y, x)) s.push_back(y);
  std::sort(s.begin(), s.end());
  return s;
}

// order -> number of distinct cyclic subgroups, by collecting <x> as sets.
inline std::map<std::uint64_t, std::uint64_t> naive_cyclic_census(const Group& g) {
  std::set<std::vector<Elem>> subs;
  for (Elem x = 0; x < g.order(); ++x) subs.insert(cyclic_closure(g, x));
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& s : subs) ++out[s.size()];
  return out;
}

inline std::uint64_t naive_total(const Group& g) {
  std::uint64_t t = 0;
  for (const auto& [d, c] : naive_cyclic_census(g)) t += c;
  return t;
}

inline std::size_t naive_center(const Group& g) {
  std::size_t c = 0;
  for (Elem z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elem x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    c += central;
  }
  return c;
}

inline bool naive_commute(const Group& g, Elem a, Elem b) { return g.mul(a, b) == g.mul(b, a); }

inline bool naive_associative(const Group& g) {
  const auto n = static_cast<Elem>(g.order());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = g.mul(x, y);
      for (Elem z = 0; z < n; ++z) {
        if (g.mul(xy, z) != g.mul(x, g.mul(y, z))) return false;
      }
    }
  }
  return true;
}

// Random relabeling with 0 fixed.
inline std::vector<Elem> random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

}  // namespace testsupport
