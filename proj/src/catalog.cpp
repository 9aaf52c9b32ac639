#include "cycgrp/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "cycgrp/constructors.hpp"
#include "cycgrp/numtheory.hpp"
#include "parallel.hpp"

namespace cycgrp {

namespace {

FamilySpec make(FamilyTag tag, std::uint64_t p = 0, std::uint64_t q = 0, int row = 0) {
  FamilySpec s;
  s.tag = tag;
  s.p = p;
  s.q = q;
  s.row = row;
  return s;
}

FamilySpec abelian(std::vector<std::uint64_t> factors) {
  FamilySpec s;
  s.tag = FamilyTag::AbelianProduct;
  s.factors = std::move(factors);
  return s;
}

std::uint64_t lambda_of_order(std::uint64_t q, std::uint64_t p) {
  auto l = find_element_of_order(q, p);
  if (!l) throw NotRealizable("no element of order " + std::to_string(p) + " mod " + std::to_string(q));
  return *l;
}

Group construct_pq2(const FamilySpec& s) {
  const auto p = s.p, q = s.q;
  switch (s.row) {
    case 1: return cyclic(p * q * q);
    case 2: {
      const std::uint64_t f[] = {p, q, q};
      return abelian_product(f);
    }
    case 3: {
      auto i = find_unit_of_order(q * q, p);
      if (!i) throw NotRealizable("no unit of order p mod q^2");
      return semidirect_cyclic({q * q, p, *i});
    }
    case 4: {
      if (s.variant == 0) {
        auto m = irreducible_matrix_of_order(q, p);
        if (!m) throw NotRealizable("no irreducible matrix of order p over F_q");
        return semidirect_matrix(q, *m, p);
      }
      const auto l = lambda_of_order(q, p);
      const Mat2 m{l, 0, 0, pow_mod(l, static_cast<std::uint64_t>(s.variant), q)};
      return semidirect_matrix(q, m, p);
    }
    case 6: {
      const Mat2 m{lambda_of_order(q, p), 0, 0, 1};
      return semidirect_matrix(q, m, p);
    }
    default: throw NotRealizable("pq2 case 5 has no construction");
  }
}

Group construct_unnamed(const FamilySpec& s) {
  const auto p = s.p, q = s.q;
  switch (s.tag) {
    case FamilyTag::Cyclic: return cyclic(s.factors[0]);
    case FamilyTag::AbelianProduct: return abelian_product(s.factors);
    case FamilyTag::ElemAbelian: {
      const std::vector<std::uint64_t> f(s.n, p);
      return abelian_product(f);
    }
    case FamilyTag::NonabPQ: return semidirect_cyclic({q, p, lambda_of_order(q, p)});
    case FamilyTag::PQ2Case: return construct_pq2(s);
    case FamilyTag::P2QG1:
      return direct_product(semidirect_cyclic({q, p, lambda_of_order(q, p)}), cyclic(p));
    case FamilyTag::P2QG2: return semidirect_cyclic({q, p * p, lambda_of_order(q, p)});
    case FamilyTag::P2QG3: return semidirect_cyclic({q, p * p, lambda_of_order(q, p * p)});
    case FamilyTag::Table1Row:
      switch (s.row) {
        case 1: return cyclic(p * p * p);
        case 2: {
          const std::uint64_t f[] = {p * p, p};
          return abelian_product(f);
        }
        case 3: {
          const std::uint64_t f[] = {p, p, p};
          return abelian_product(f);
        }
        case 4: return dihedral(4);
        case 5: return quaternion_8();
        case 6: return from_pc_presentation(heisenberg_presentation(p));
        default: return from_pc_presentation(modular_p3_presentation(p));
      }
    case FamilyTag::Table2Row:
      switch (s.row) {
        case 1: return cyclic(ipow(p, 4));
        case 2: {
          const std::uint64_t f[] = {p * p * p, p};
          return abelian_product(f);
        }
        case 3: {
          const std::uint64_t f[] = {p * p, p * p};
          return abelian_product(f);
        }
        case 4: {
          const std::uint64_t f[] = {p * p, p, p};
          return abelian_product(f);
        }
        case 5: {
          const std::uint64_t f[] = {p, p, p, p};
          return abelian_product(f);
        }
        default: return from_pc_presentation(order16_presentation(s.row));
      }
    case FamilyTag::Table3Row: return from_pc_presentation(order_p4_presentation(s.row + 5, p));
    case FamilyTag::A4: return alternating_4();
    case FamilyTag::Dihedral: return dihedral(s.n);
    case FamilyTag::Quaternion8: return quaternion_8();
    case FamilyTag::Z3SemiZ4: return semidirect_cyclic({3, 4, 2});
  }
  throw std::invalid_argument("construct: unknown family");
}

// Canonical representatives k of {k, k^-1 mod p} for the diagonal actions.
std::vector<int> diagonal_variants(std::uint64_t p) {
  std::vector<int> out;
  for (std::uint64_t k = 1; k < p; ++k) {
    std::uint64_t inv = 1;
    while (inv * k % p != 1) ++inv;
    if (k <= inv) out.push_back(static_cast<int>(k));
  }
  return out;
}

}  // namespace

Group construct(const FamilySpec& spec) {
  if (!realizable(spec)) {
    throw NotRealizable(family_label(spec) + " " + family_name(spec) +
                        ": divisibility conditions fail");
  }
  Group g = construct_unnamed(spec);
  if (g.order() != family_order(spec)) {
    throw OrderMismatch(family_name(spec) + ": constructed order " + std::to_string(g.order()));
  }
  g.set_name(family_name(spec));
  return g;
}

std::vector<FamilySpec> catalog_specs(std::uint64_t max_order, std::uint64_t min_order,
                                      bool unrealizable) {
  std::vector<FamilySpec> out;
  auto emit = [&](FamilySpec s) {
    const auto n = family_order(s);
    if (n < min_order || n > max_order) return;
    if (realizable(s) != unrealizable) out.push_back(std::move(s));
  };

  for (std::uint64_t n = 1; n <= max_order; ++n) {
    FamilySpec s;
    s.factors = {n};
    emit(s);
  }
  const auto primes = primes_up_to(max_order);
  for (auto p : primes) {
    if (p * p > max_order) break;
    FamilySpec e = make(FamilyTag::ElemAbelian, p);
    e.n = 2;
    emit(e);
    if (p * p * p <= max_order) {
      for (int row : {1, 2, 3}) emit(make(FamilyTag::Table1Row, p, 0, row));
      if (p == 2) {
        emit(make(FamilyTag::Table1Row, p, 0, 4));
        emit(make(FamilyTag::Table1Row, p, 0, 5));
      } else {
        emit(make(FamilyTag::Table1Row, p, 0, 6));
        emit(make(FamilyTag::Table1Row, p, 0, 7));
      }
    }
    if (ipow(p, 4) <= max_order) {
      for (int row = 1; row <= 5; ++row) emit(make(FamilyTag::Table2Row, p, 0, row));
      if (p == 2) {
        for (int row = 6; row <= 14; ++row) emit(make(FamilyTag::Table2Row, p, 0, row));
      } else {
        for (int row = 1; row <= 10; ++row) emit(make(FamilyTag::Table3Row, p, 0, row));
      }
    }
    for (std::uint32_t k = 5; ipow(p, k) <= max_order; ++k) {
      for (std::uint32_t b = 1; 2 * b <= k; ++b) emit(abelian({ipow(p, k - b), ipow(p, b)}));
    }
  }

  for (auto p : primes) {
    for (auto q : primes) {
      if (q <= p) continue;
      if (p * q > max_order) break;
      emit(make(FamilyTag::NonabPQ, p, q));
      if (p * p * q <= max_order) {
        emit(abelian({p, p, q}));
        emit(make(FamilyTag::P2QG1, p, q));
        emit(make(FamilyTag::P2QG2, p, q));
        emit(make(FamilyTag::P2QG3, p, q));
        if (p == 2 && q == 3) emit(make(FamilyTag::A4));
      }
      if (p * q * q <= max_order) {
        for (int row : {1, 2, 3}) emit(make(FamilyTag::PQ2Case, p, q, row));
        std::vector<int> ks{1};
        if ((q - 1) % p == 0) ks = diagonal_variants(p);
        for (int k : ks) {
          FamilySpec s = make(FamilyTag::PQ2Case, p, q, 4);
          s.variant = k;
          emit(s);
        }
        FamilySpec irr = make(FamilyTag::PQ2Case, p, q, 4);
        irr.variant = 0;
        emit(irr);
        emit(make(FamilyTag::PQ2Case, p, q, 5));
        emit(make(FamilyTag::PQ2Case, p, q, 6));
      }
    }
  }
  return out;
}

bool catalog_complete_for(std::uint64_t order) {
  if (order == 1) return true;
  const auto f = factorize(order);
  if (f.size() == 1) return f[0].exponent <= 4;
  if (f.size() == 2) return f[0].exponent + f[1].exponent <= 3;
  return false;
}

std::size_t Catalog::distinct_fingerprints() const {
  std::vector<const Fingerprint*> fps;
  for (const auto& g : groups) fps.push_back(&g.fingerprint);
  std::sort(fps.begin(), fps.end(), [](auto a, auto b) { return *a < *b; });
  return static_cast<std::size_t>(
      std::unique(fps.begin(), fps.end(), [](auto a, auto b) { return *a == *b; }) - fps.begin());
}

const CatalogGroup* Catalog::find(const Fingerprint& fp) const {
  for (const auto& g : groups) {
    if (g.fingerprint == fp) return &g;
  }
  return nullptr;
}

const CatalogGroup* Catalog::find_name(const std::string& name) const {
  for (const auto& g : groups) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

Catalog paper_catalog(std::uint64_t max_order, std::uint64_t min_order,
                      std::uint64_t retain_up_to) {
  if (max_order > kMaxGroupOrder) {
    throw std::invalid_argument("paper_catalog: max_order exceeds " + std::to_string(kMaxGroupOrder));
  }
  Catalog cat;
  cat.min_order = min_order;
  cat.max_order = max_order;
  cat.unrealizable = catalog_specs(max_order, min_order, true);
  const auto specs = catalog_specs(max_order, min_order, false);

  std::map<std::string, std::vector<FamilySpec>> by_name;
  std::vector<std::string> names;
  for (const auto& s : specs) {
    auto name = family_name(s);
    auto& bucket = by_name[name];
    if (bucket.empty()) names.push_back(name);
    bucket.push_back(s);
  }

  struct Slot {
    std::optional<CatalogGroup> built;
    std::string error;
  };
  std::vector<Slot> slots(names.size());
  // Largest first so the pool stays balanced.
  std::vector<std::size_t> work(names.size());
  std::iota(work.begin(), work.end(), 0);
  std::stable_sort(work.begin(), work.end(), [&](std::size_t a, std::size_t b) {
    return family_order(by_name[names[a]].front()) > family_order(by_name[names[b]].front());
  });
  detail::parallel_for(work.size(), [&](std::size_t w) {
    const std::size_t i = work[w];
    const auto& first = by_name.at(names[i]).front();
    try {
      auto g = std::make_shared<const Group>(construct(first));
      CatalogGroup cg{names[i], g->order(), g, fingerprint(*g), cyclic_census(*g), {}};
      if (cg.order > retain_up_to) cg.group.reset();
      slots[i].built = std::move(cg);
    } catch (const std::exception& e) {
      slots[i].error = e.what();
    }
  });

  for (std::size_t i = 0; i < names.size(); ++i) {
    auto& bucket = by_name[names[i]];
    if (!slots[i].built) {
      for (const auto& s : bucket) cat.failures.push_back({s, slots[i].error});
      continue;
    }
    slots[i].built->specs = bucket;
    cat.groups.push_back(std::move(*slots[i].built));
  }
  std::sort(cat.groups.begin(), cat.groups.end(), [](const CatalogGroup& a, const CatalogGroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.name < b.name;
  });
  for (std::size_t gi = 0; gi < cat.groups.size(); ++gi) {
    for (const auto& s : cat.groups[gi].specs) cat.entries.push_back({s, gi});
  }

  std::vector<std::size_t> idx(cat.groups.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return cat.groups[a].fingerprint < cat.groups[b].fingerprint;
  });
  for (std::size_t k = 1; k < idx.size(); ++k) {
    if (cat.groups[idx[k - 1]].fingerprint == cat.groups[idx[k]].fingerprint) {
      cat.collisions.emplace_back(std::min(idx[k - 1], idx[k]), std::max(idx[k - 1], idx[k]));
    }
  }
  std::sort(cat.collisions.begin(), cat.collisions.end());
  return cat;
}

}  // namespace cycgrp
