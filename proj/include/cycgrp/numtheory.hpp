#pragma once

// Exact integer helpers shared by the group constructors and the counting
// formulas. Everything here is trial-division scale (n up to ~10^6).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cycgrp {

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, sorted by strictly increasing prime.
using Factorization = std::vector<PrimePower>;

std::uint64_t divisor_count(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Requires n >= 2.
Factorization factorize(std::uint64_t n);

/// Sorted list of all positive divisors of n.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Primes in [2, bound], ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Least k >= 1 with i^k == 1 (mod q). Throws std::invalid_argument unless
/// gcd(i, q) == 1 and q >= 2.
std::uint64_t multiplicative_order(std::uint64_t i, std::uint64_t q);

/// Smallest i in 2..q-1 with multiplicative_order(i, q) == k for prime q;
/// empty when k does not divide q - 1. k == 1 yields the trivial action 1.
std::optional<std::uint64_t> find_element_of_order(std::uint64_t q, std::uint64_t k);

/// Same search for an arbitrary modulus (used for actions on C_{q^2}).
std::optional<std::uint64_t> find_unit_of_order(std::uint64_t modulus, std::uint64_t k);

/// Exponents of a and b in the normal form a^x b^y of (a^r b^s)^n inside
/// C_q x| C_m with b a b^-1 = a^i:  x = r (1 + i^s + ... + i^{(n-1)s}) mod q,
/// y = n s (not reduced mod m).
std::pair<std::uint64_t, std::uint64_t> semidirect_power_exponent(
    std::uint64_t r, std::uint64_t s, std::uint64_t n, std::uint64_t i,
    std::uint64_t q);

/// Smallest quadratic non-residue modulo an odd prime p.
std::uint64_t smallest_nonresidue(std::uint64_t p);

}  // namespace cycgrp
