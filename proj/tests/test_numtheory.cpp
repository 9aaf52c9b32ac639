#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "cycgrp/numtheory.hpp"

using namespace cycgrp;

namespace {

std::uint64_t brute_divisors(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

std::uint64_t brute_phi(std::uint64_t n) {
  if (n == 1) return 1;
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k < n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

bool brute_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t brute_order(std::uint64_t i, std::uint64_t q) {
  std::uint64_t x = i % q;
  for (std::uint64_t k = 1;; ++k) {
    if (x == 1 % q) return k;
    x = x * i % q;
  }
}

}  // namespace

TEST_CASE("divisor_count examples") {
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(12) == brute_divisors(12));
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(32) == brute_divisors(32));
  CHECK_THROWS_AS(divisor_count(0), std::invalid_argument);
}

TEST_CASE("euler_phi examples") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(9) == brute_phi(9));
  CHECK(euler_phi(8) == brute_phi(8));
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("factorize examples") {
  CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
  CHECK(factorize(16) == Factorization{{2, 4}});
  CHECK(factorize(75) == Factorization{{3, 1}, {5, 2}});
  CHECK_THROWS_AS(factorize(1), std::invalid_argument);
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorization reconstructs n with increasing primes") {
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    const auto f = factorize(n);
    std::uint64_t prod = 1;
    for (std::size_t k = 0; k < f.size(); ++k) {
      REQUIRE(brute_prime(f[k].prime));
      if (k) REQUIRE(f[k - 1].prime < f[k].prime);
      prod *= ipow(f[k].prime, f[k].exponent);
    }
    REQUIRE(prod == n);
  }
}

TEST_CASE("divisor_count and euler_phi against enumeration up to 10^4") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    REQUIRE(divisor_count(n) == brute_divisors(n));
    REQUIRE(divisors(n).size() == divisor_count(n));
  }
  for (std::uint64_t n = 1; n <= 2000; ++n) REQUIRE(euler_phi(n) == brute_phi(n));
}

TEST_CASE("sum of phi over divisors is n") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    std::uint64_t s = 0;
    for (auto d : divisors(n)) s += euler_phi(d);
    REQUIRE(s == n);
  }
}

TEST_CASE("multiplicative_order") {
  CHECK(multiplicative_order(1, 7) == 1);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(2, 5) == 4);
  CHECK_THROWS_AS(multiplicative_order(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(multiplicative_order(3, 1), std::invalid_argument);
  for (std::uint64_t q = 2; q <= 150; ++q) {
    for (std::uint64_t i = 1; i < q; ++i) {
      if (std::gcd(i, q) != 1) continue;
      REQUIRE(multiplicative_order(i, q) == brute_order(i, q));
    }
  }
}

TEST_CASE("find_element_of_order") {
  CHECK(find_element_of_order(7, 3) == 2);
  CHECK(find_element_of_order(5, 4) == 2);
  CHECK_FALSE(find_element_of_order(5, 3).has_value());
  CHECK(find_element_of_order(13, 1) == 1);
}

TEST_CASE("find_element_of_order exists iff k divides q-1, and is minimal") {
  for (auto q : primes_up_to(200)) {
    for (std::uint64_t k = 1; k <= q - 1; ++k) {
      const auto i = find_element_of_order(q, k);
      REQUIRE(i.has_value() == ((q - 1) % k == 0));
      if (!i || k == 1) continue;
      REQUIRE(brute_order(*i, q) == k);
      for (std::uint64_t j = 2; j < *i; ++j) REQUIRE(brute_order(j, q) != k);
    }
  }
}

TEST_CASE("semidirect_power_exponent") {
  CHECK(semidirect_power_exponent(3, 2, 1, 2, 7) == std::pair<std::uint64_t, std::uint64_t>{3, 2});
  for (std::uint64_t n = 0; n < 20; ++n) {
    CHECK(semidirect_power_exponent(1, 0, n, 4, 11).first == n % 11);
    CHECK(semidirect_power_exponent(1, 0, n, 4, 11).second == 0);
  }
  CHECK(semidirect_power_exponent(1, 1, 3, 2, 7) == std::pair<std::uint64_t, std::uint64_t>{0, 3});
}

TEST_CASE("semidirect_power_exponent matches the geometric sum") {
  for (std::uint64_t q : {5, 7, 11, 13}) {
    for (std::uint64_t i = 1; i < q; ++i) {
      for (std::uint64_t r = 0; r < q; ++r) {
        for (std::uint64_t s = 0; s < 5; ++s) {
          for (std::uint64_t n = 0; n < 12; ++n) {
            std::uint64_t sum = 0, term = 1;
            const std::uint64_t step = pow_mod(i, s, q);
            for (std::uint64_t k = 0; k < n; ++k) {
              sum = (sum + term) % q;
              term = term * step % q;
            }
            const auto [x, y] = semidirect_power_exponent(r, s, n, i, q);
            REQUIRE(x == r * sum % q);
            REQUIRE(y == n * s);
          }
        }
      }
    }
  }
}

TEST_CASE("primes and small helpers") {
  for (std::uint64_t n = 0; n <= 500; ++n) REQUIRE(is_prime(n) == brute_prime(n));
  CHECK(primes_up_to(20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(ipow(3, 4) == 81);
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(smallest_nonresidue(3) == 2);
  CHECK(smallest_nonresidue(5) == 2);
  CHECK(smallest_nonresidue(7) == 3);
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    const auto d = smallest_nonresidue(p);
    for (std::uint64_t x = 1; x < p; ++x) REQUIRE(x * x % p != d);
    for (std::uint64_t e = 2; e < d; ++e) {
      bool residue = false;
      for (std::uint64_t x = 1; x < p; ++x) residue |= x * x % p == e;
      REQUIRE(residue);
    }
  }
}
