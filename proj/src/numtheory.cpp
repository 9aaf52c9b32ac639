#include "cycgrp/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace cycgrp {

Factorization factorize(std::uint64_t n) {
  if (n <= 1) {
    throw std::invalid_argument("factorize: n must be >= 2");
  }
  Factorization out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t divisor_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisor_count: n must be >= 1");
  if (n == 1) return 1;
  std::uint64_t d = 1;
  for (const auto& pp : factorize(n)) d *= pp.exponent + 1;
  return d;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be >= 1");
  if (n == 1) return 1;
  std::uint64_t phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t k = p * p; k <= bound; k += p) composite[k] = true;
  }
  return out;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t r = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return r;
}

std::uint64_t multiplicative_order(std::uint64_t i, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
  if (std::gcd(i, q) != 1) {
    throw std::invalid_argument("multiplicative_order: gcd(i, q) != 1");
  }
  std::uint64_t x = i % q;
  std::uint64_t k = 1;
  while (x != 1) {
    x = x * i % q;
    ++k;
  }
  return k;
}

std::optional<std::uint64_t> find_unit_of_order(std::uint64_t modulus, std::uint64_t k) {
  if (k == 1) return 1;
  for (std::uint64_t i = 2; i < modulus; ++i) {
    if (std::gcd(i, modulus) == 1 && multiplicative_order(i, modulus) == k) return i;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> find_element_of_order(std::uint64_t q, std::uint64_t k) {
  if (k == 0 || (q - 1) % k != 0) return std::nullopt;
  return find_unit_of_order(q, k);
}

std::pair<std::uint64_t, std::uint64_t> semidirect_power_exponent(
    std::uint64_t r, std::uint64_t s, std::uint64_t n, std::uint64_t i,
    std::uint64_t q) {
  const std::uint64_t step = pow_mod(i, s, q);
  std::uint64_t term = 1 % q;
  std::uint64_t sum = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    sum = (sum + term) % q;
    term = term * step % q;
  }
  return {r % q * sum % q, n * s};
}

std::uint64_t smallest_nonresidue(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("smallest_nonresidue: p must be an odd prime");
  }
  for (std::uint64_t d = 2; d < p; ++d) {
    if (pow_mod(d, (p - 1) / 2, p) == p - 1) return d;
  }
  throw std::logic_error("smallest_nonresidue: unreachable");
}

}  // namespace cycgrp
