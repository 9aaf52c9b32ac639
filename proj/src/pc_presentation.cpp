#include "cycgrp/pc_presentation.hpp"

#include <stdexcept>

namespace cycgrp {

PcPresentation::PcPresentation(std::vector<std::uint32_t> relative_orders)
    : rel_(std::move(relative_orders)) {
  if (rel_.empty()) throw std::invalid_argument("pc presentation needs at least one generator");
  for (auto r : rel_) {
    if (r < 2) throw std::invalid_argument("relative orders must be >= 2");
  }
  const std::size_t k = rel_.size();
  power_.resize(k);
  conj_.assign(k, std::vector<std::optional<Word>>(k));
  left_.assign(k, std::vector<std::optional<Word>>(k));
}

std::uint64_t PcPresentation::expected_order() const noexcept {
  std::uint64_t n = 1;
  for (auto r : rel_) n *= r;
  return n;
}

void PcPresentation::check_word(const Word& w, std::size_t above, const char* what) const {
  for (const auto& s : w) {
    if (s.gen >= rel_.size() || s.gen <= above) {
      throw std::invalid_argument(std::string(what) + ": word may only use generators after g" +
                                  std::to_string(above));
    }
  }
}

PcPresentation& PcPresentation::power(std::size_t i, Word w) {
  if (i >= rel_.size()) throw std::out_of_range("power: generator index");
  check_word(w, i, "power");
  power_[i] = std::move(w);
  return *this;
}

PcPresentation& PcPresentation::conjugate(std::size_t j, std::size_t i, Word w) {
  if (!(i < j && j < rel_.size())) throw std::out_of_range("conjugate: need i < j");
  check_word(w, i, "conjugate");
  bool has_left = false;
  for (const auto& l : left_[i]) has_left = has_left || l.has_value();
  if (has_left) throw std::invalid_argument("conjugate: g" + std::to_string(i) + " already uses left form");
  conj_[j][i] = std::move(w);
  return *this;
}

PcPresentation& PcPresentation::commutator(std::size_t j, std::size_t i, Word w) {
  Word image{{j, 1}};
  image.insert(image.end(), w.begin(), w.end());
  return conjugate(j, i, std::move(image));
}

PcPresentation& PcPresentation::left_conjugate(std::size_t i, std::size_t j, Word w) {
  if (!(i < j && j < rel_.size())) throw std::out_of_range("left_conjugate: need i < j");
  check_word(w, i, "left_conjugate");
  for (std::size_t jj = 0; jj < rel_.size(); ++jj) {
    if (conj_[jj][i]) {
      throw std::invalid_argument("left_conjugate: g" + std::to_string(i) + " already uses right form");
    }
  }
  left_[i][j] = std::move(w);
  return *this;
}

PcPresentation& PcPresentation::expect_order(std::uint64_t order) {
  pinned_order_ = order;
  return *this;
}

namespace {

// Collection from the left over exponent vectors, memoized on
// (element, generator).
class Collector {
 public:
  Collector(std::vector<std::uint32_t> rel, std::vector<Word> power,
            std::vector<std::vector<Word>> conj, std::uint64_t budget)
      : rel_(std::move(rel)), power_(std::move(power)), conj_(std::move(conj)), budget_(budget) {
    const std::size_t k = rel_.size();
    radix_.assign(k, 1);
    for (std::size_t i = k - 1; i-- > 0;) radix_[i] = radix_[i + 1] * rel_[i + 1];
    n_ = radix_[0] * rel_[0];
    if (n_ > kMaxGroupOrder) {
      throw SizeOverflow("pc presentation order " + std::to_string(n_) + " exceeds limit");
    }
    memo_.assign(n_ * k, -1);
  }

  std::size_t order() const { return n_; }
  std::size_t gens() const { return rel_.size(); }
  std::uint64_t radix(std::size_t i) const { return radix_[i]; }

  std::uint32_t exp(Elem x, std::size_t i) const {
    return static_cast<std::uint32_t>((x / radix_[i]) % rel_[i]);
  }

  Elem mul_gen(Elem x, std::size_t i) {
    auto& slot = memo_[static_cast<std::size_t>(x) * rel_.size() + i];
    if (slot >= 0) return static_cast<Elem>(slot);
    if (++steps_ > budget_) {
      throw CollectionDivergence("collection exceeded step budget of " + std::to_string(budget_));
    }
    const std::size_t k = rel_.size();
    // x = prefix * tail with tail over g_{i+1..}; x g_i = prefix g_i tail^{g_i}.
    Word pending;
    for (std::size_t j = i + 1; j < k; ++j) {
      const std::uint32_t e = exp(x, j);
      for (std::uint32_t t = 0; t < e; ++t) {
        pending.insert(pending.end(), conj_[j][i].begin(), conj_[j][i].end());
      }
    }
    std::uint64_t y = x - x % radix_[i];  // clear the tail
    const std::uint32_t ei = exp(x, i);
    if (ei + 1 == rel_[i]) {
      y -= static_cast<std::uint64_t>(ei) * radix_[i];
      pending.insert(pending.begin(), power_[i].begin(), power_[i].end());
    } else {
      y += radix_[i];
    }
    Elem cur = static_cast<Elem>(y);
    for (const auto& s : pending) {
      for (std::uint32_t t = 0; t < s.exp; ++t) cur = mul_gen(cur, s.gen);
    }
    slot = cur;
    return cur;
  }

  Elem mul(Elem x, Elem y) {
    for (std::size_t j = 0; j < rel_.size(); ++j) {
      for (std::uint32_t t = exp(y, j); t > 0; --t) x = mul_gen(x, j);
    }
    return x;
  }

  Elem eval(const Word& w) {
    Elem cur = 0;
    for (const auto& s : w) {
      for (std::uint32_t t = 0; t < s.exp; ++t) cur = mul_gen(cur, s.gen);
    }
    return cur;
  }

  Word normal_word(Elem x) const {
    Word w;
    for (std::size_t j = 0; j < rel_.size(); ++j) {
      if (auto e = exp(x, j); e > 0) w.push_back({j, e});
    }
    return w;
  }

 private:
  std::vector<std::uint32_t> rel_;
  std::vector<Word> power_;
  std::vector<std::vector<Word>> conj_;  // conj_[j][i], full image of g_j
  std::vector<std::uint64_t> radix_;
  std::size_t n_ = 0;
  std::vector<std::int64_t> memo_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

Word shift(const Word& w, std::size_t offset) {
  Word out;
  for (const auto& s : w) out.push_back({s.gen - offset, s.exp});
  return out;
}

Word unshift(const Word& w, std::size_t offset) {
  Word out;
  for (const auto& s : w) out.push_back({s.gen + offset, s.exp});
  return out;
}

// Right-conjugate images for every (j, i), resolving left-form relations.
std::vector<std::vector<Word>> resolve_conjugates(const PcPresentation& pres,
                                                  const std::vector<Word>& power,
                                                  std::uint64_t budget) {
  const std::size_t k = pres.size();
  const auto& rel = pres.relative_orders();
  std::vector<std::vector<Word>> conj(k, std::vector<Word>(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& w = pres.conjugate_word(j, i);
      conj[j][i] = w ? *w : Word{{j, 1}};
    }
  }
  for (std::size_t i = k - 1; i-- > 0;) {
    bool any_left = false;
    for (std::size_t j = i + 1; j < k; ++j) any_left = any_left || pres.left_conjugate_word(i, j);
    if (!any_left) continue;

    // Realize N = <g_{i+1}, ..., g_{k-1}> with the already-resolved relations.
    const std::size_t off = i + 1;
    std::vector<std::uint32_t> sub_rel(rel.begin() + static_cast<std::ptrdiff_t>(off), rel.end());
    std::vector<Word> sub_power;
    for (std::size_t a = off; a < k; ++a) sub_power.push_back(shift(power[a], off));
    std::vector<std::vector<Word>> sub_conj(k - off, std::vector<Word>(k - off));
    for (std::size_t b = off; b < k; ++b) {
      for (std::size_t a = off; a < b; ++a) sub_conj[b - off][a - off] = shift(conj[b][a], off);
    }
    Collector sub(sub_rel, sub_power, sub_conj, budget);
    const std::size_t n = sub.order();

    // sigma(x) = g_i x g_i^{-1}, extended from generator images.
    std::vector<Elem> gen_image(k - off);
    for (std::size_t j = off; j < k; ++j) {
      const auto& w = pres.left_conjugate_word(i, j);
      gen_image[j - off] = w ? sub.eval(shift(*w, off)) : static_cast<Elem>(sub.radix(j - off));
    }
    std::vector<Elem> sigma(n, 0);
    for (std::size_t x = 1; x < n; ++x) {
      std::size_t last = k - off;
      while (sub.exp(static_cast<Elem>(x), --last) == 0) {
      }
      const Elem prev = static_cast<Elem>(x - sub.radix(last));
      sigma[x] = sub.mul(sigma[prev], gen_image[last]);
    }
    std::vector<std::int64_t> inverse(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
      if (inverse[sigma[x]] >= 0) {
        throw AxiomViolation("left conjugation by g" + std::to_string(i) +
                             " does not define a bijection");
      }
      inverse[sigma[x]] = static_cast<std::int64_t>(x);
    }
    for (std::size_t j = off; j < k; ++j) {
      const auto pre = static_cast<Elem>(inverse[sub.radix(j - off)]);
      conj[j][i] = unshift(sub.normal_word(pre), off);
    }
  }
  return conj;
}

}  // namespace

Elem pc_index(const PcPresentation& pres, const std::vector<std::uint32_t>& exps) {
  const auto& rel = pres.relative_orders();
  if (exps.size() != rel.size()) throw std::invalid_argument("pc_index: wrong exponent count");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    if (exps[i] >= rel[i]) throw std::out_of_range("pc_index: exponent out of range");
    idx = idx * rel[i] + exps[i];
  }
  return static_cast<Elem>(idx);
}

Group from_pc_presentation(const PcPresentation& pres, std::string name,
                           std::uint64_t step_budget) {
  if (auto pinned = pres.pinned_order(); pinned && *pinned != pres.expected_order()) {
    throw OrderMismatch("presentation realizes order " + std::to_string(pres.expected_order()) +
                        " but " + std::to_string(*pinned) + " was expected");
  }
  const std::size_t k = pres.size();
  std::vector<Word> power(k);
  for (std::size_t i = 0; i < k; ++i) power[i] = pres.power_word(i);
  auto conj = resolve_conjugates(pres, power, step_budget);
  Collector col(pres.relative_orders(), power, std::move(conj), step_budget);

  const std::size_t n = col.order();
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    table[x * n] = static_cast<Elem>(x);
    for (std::size_t y = 1; y < n; ++y) {
      std::size_t last = k;
      while (col.exp(static_cast<Elem>(y), --last) == 0) {
      }
      const std::size_t prev = y - col.radix(last);
      table[x * n + y] = col.mul_gen(table[x * n + prev], last);
    }
  }
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(static_cast<Elem>(col.radix(i)));
  return Group::from_table(n, std::move(table), std::move(name), gens);
}

}  // namespace cycgrp
