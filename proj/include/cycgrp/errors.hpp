#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cycgrp {

/// A multiplication table that is not a group. For associativity failures
/// `triple` holds (x, y, z) with (xy)z != x(yz).
class AxiomViolation : public std::runtime_error {
 public:
  AxiomViolation(const std::string& what, std::array<std::uint32_t, 3> triple = {0, 0, 0})
      : std::runtime_error(what), triple_(triple) {}
  const std::array<std::uint32_t, 3>& triple() const noexcept { return triple_; }

 private:
  std::array<std::uint32_t, 3> triple_;
};

class SizeOverflow : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by lattice searches when |G| exceeds the configured cap.
class CapExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CollectionDivergence : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class OrderMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cycgrp
