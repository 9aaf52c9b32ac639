#pragma once

// Power-conjugate presentations realized by collection.
//
// Generators g_0..g_{k-1} have relative orders r_i; every element has the
// unique normal form g_0^{e_0} ... g_{k-1}^{e_{k-1}} with 0 <= e_i < r_i.
// The relations are
//   g_i^{r_i}            = word in g_{i+1..}
//   g_i^{-1} g_j g_i     = word in g_{i+1..}     (i < j)
// and everything not set defaults to trivial (g_i^{r_i} = 1, g_i g_j = g_j g_i).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycgrp/group.hpp"

namespace cycgrp {

struct Syllable {
  std::size_t gen;
  std::uint32_t exp;
};
using Word = std::vector<Syllable>;

class PcPresentation {
 public:
  explicit PcPresentation(std::vector<std::uint32_t> relative_orders);

  std::size_t size() const noexcept { return rel_.size(); }
  const std::vector<std::uint32_t>& relative_orders() const noexcept { return rel_; }
  std::uint64_t expected_order() const noexcept;

  /// g_i^{r_i} = w.
  PcPresentation& power(std::size_t i, Word w);
  /// g_i^{-1} g_j g_i = w, for i < j.
  PcPresentation& conjugate(std::size_t j, std::size_t i, Word w);
  /// g_j g_i = g_i g_j w, for i < j (commutator form; w = [g_j, g_i]).
  PcPresentation& commutator(std::size_t j, std::size_t i, Word w);
  /// g_i g_j g_i^{-1} = w, for i < j. Resolved into the right-conjugate form
  /// when the group is realized. A conjugating generator may use either the
  /// left or the right form, not both.
  PcPresentation& left_conjugate(std::size_t i, std::size_t j, Word w);

  /// Pins the order the presentation should realize; realization throws
  /// OrderMismatch when it differs from the product of relative orders.
  PcPresentation& expect_order(std::uint64_t order);

  const Word& power_word(std::size_t i) const { return power_[i]; }
  /// Right conjugate image g_j^{g_i}, if set.
  const std::optional<Word>& conjugate_word(std::size_t j, std::size_t i) const {
    return conj_[j][i];
  }
  const std::optional<Word>& left_conjugate_word(std::size_t i, std::size_t j) const {
    return left_[i][j];
  }
  std::optional<std::uint64_t> pinned_order() const noexcept { return pinned_order_; }

 private:
  void check_word(const Word& w, std::size_t above, const char* what) const;

  std::vector<std::uint32_t> rel_;
  std::vector<Word> power_;
  std::vector<std::vector<std::optional<Word>>> conj_;  // [j][i]
  std::vector<std::vector<std::optional<Word>>> left_;  // [i][j]
  std::optional<std::uint64_t> pinned_order_;
};

inline constexpr std::uint64_t kDefaultCollectionBudget = 200'000'000;

/// Builds the multiplication table by collection and runs the full group
/// axiom check. Element index = mixed-radix value of the exponent vector with
/// g_0 most significant, so generator g_i sits at index prod_{j>i} r_j.
/// Throws CollectionDivergence, AxiomViolation, OrderMismatch.
Group from_pc_presentation(const PcPresentation& pres, std::string name = {},
                           std::uint64_t step_budget = kDefaultCollectionBudget);

/// Index of the element with the given exponent vector.
Elem pc_index(const PcPresentation& pres, const std::vector<std::uint32_t>& exps);

}  // namespace cycgrp
