#include "etaeigen/arith.hpp"

#include <numeric>

#include "doctest.h"
#include "etaeigen/errors.hpp"
#include "oracles.hpp"

using namespace etaeigen;

namespace {

Factorization from_oracle(std::uint64_t n) {
  Factorization f;
  for (const auto& [p, e] : oracle::trial_division(n)) f.push_back({p, e});
  return f;
}

}  // namespace

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(576) == from_oracle(576));
  CHECK(factorize(576) == Factorization{{2, 6}, {3, 2}});
  CHECK(factorize(97) == Factorization{{97, 1}});
  CHECK_THROWS_AS(factorize(0), DomainError);

  for (std::uint64_t n = 1; n <= 1'000'000; n += 997) {
    const Factorization f = factorize(n);
    REQUIRE(reconstruct(f) == n);
    REQUIRE(f == from_oracle(n));
  }
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(1.5).empty());
  CHECK(primes_up_to(-3.0).empty());
  CHECK(primes_up_to(10.0) == std::vector<std::uint64_t>{2, 3, 5, 7});
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 0; n <= 26; ++n) {
    if (oracle::is_prime(n)) expected.push_back(n);
  }
  CHECK(primes_up_to(26.125) == expected);
  CHECK(primes_up_to(26.125) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23});
  CHECK(primes_up_to(std::uint64_t{2}) == std::vector<std::uint64_t>{2});
}

TEST_CASE("kronecker examples") {
  CHECK(kronecker(-1, 3) == -1);
  CHECK(kronecker(12, 5) == -1);
  CHECK(kronecker(-9, 5) == 1);
  for (std::int64_t d = -50; d <= 50; ++d) CHECK(kronecker(d, 1) == 1);
  CHECK_THROWS_AS(kronecker(0, 0), DomainError);

  SUBCASE("conventions at 2, -1 and 0") {
    CHECK(kronecker(4, 2) == 0);
    CHECK(kronecker(7, 2) == 1);
    CHECK(kronecker(9, 2) == 1);
    CHECK(kronecker(3, 2) == -1);
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(-5, -1) == -1);
    CHECK(kronecker(5, -1) == 1);
    CHECK(kronecker(1, 0) == 1);
    CHECK(kronecker(-1, 0) == 1);
    CHECK(kronecker(2, 0) == 0);
  }
}

TEST_CASE("kronecker agrees with the definition-based oracle") {
  for (std::int64_t d = -200; d <= 200; ++d) {
    for (std::int64_t n = -200; n <= 200; ++n) {
      if (d == 0 && n == 0) continue;
      REQUIRE_MESSAGE(kronecker(d, n) == oracle::kronecker(d, n), "d=" << d << " n=" << n);
    }
  }
}

TEST_CASE("kronecker is multiplicative in the denominator") {
  for (std::int64_t d = -60; d <= 60; ++d) {
    for (std::int64_t m = -60; m <= 60; ++m) {
      for (std::int64_t n = -60; n <= 60; ++n) {
        if (m == 0 || n == 0) continue;
        REQUIRE(kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n));
      }
    }
  }
}

TEST_CASE("kronecker ignores square factors coprime to n") {
  for (std::int64_t d = -100; d <= 100; ++d) {
    if (d == 0) continue;
    for (std::int64_t t = 1; t <= 100; t += 7) {
      for (std::int64_t n = -100; n <= 100; ++n) {
        if (n == 0 || std::gcd(n, t) != 1) continue;
        REQUIRE(kronecker(d * t * t, n) == kronecker(d, n));
      }
    }
  }
}

TEST_CASE("normalize_character") {
  CHECK(normalize_character(192) == 12);
  CHECK(normalize_character(std::int64_t{1} << 14) == 1);
  CHECK(normalize_character(1792) == 28);
  CHECK(normalize_character(384) == 24);
  CHECK(normalize_character(-4) == -4);
  CHECK(normalize_character(-3) == -3);
  CHECK(normalize_character(5) == 5);
  CHECK(normalize_character(-1) == -4);
  CHECK_THROWS_AS(normalize_character(0), DomainError);

  for (std::int64_t d = -300; d <= 300; ++d) {
    if (d == 0) continue;
    const std::int64_t fund = normalize_character(d);
    REQUIRE(normalize_character(fund) == fund);
    for (std::int64_t n = 1; n <= 1000; ++n) {
      if (std::gcd(n, 2 * d) != 1) continue;
      REQUIRE(kronecker(d, n) == kronecker(fund, n));
    }
  }
}

TEST_CASE("normalize_character from a factorization avoids overflow") {
  // 8 * 47^15 does not fit in 64 bits; its square class is 2 * 47.
  const Factorization big{{2, 3}, {47, 15}};
  CHECK(normalize_character(1, big) == 4 * 94);
}

TEST_CASE("gamma0_index") {
  CHECK(gamma0_index(1) == 1);
  CHECK(gamma0_index(16) == 24);
  CHECK(gamma0_index(64) == 96);
  for (std::uint64_t n = 1; n <= 64; ++n) REQUIRE(gamma0_index(n) == oracle::gamma0_index_by_cosets(n));
  for (std::uint64_t a = 1; a <= 10'000; a += 37) {
    for (std::uint64_t b = 1; a * b <= 10'000; b += 11) {
      if (std::gcd(a, b) != 1) continue;
      REQUIRE(gamma0_index(a * b) == gamma0_index(a) * gamma0_index(b));
    }
  }
}

TEST_CASE("Rational") {
  const Rational r(418, 16);
  CHECK(r.num() == 209);
  CHECK(r.den() == 8);
  CHECK(r.floor() == 26);
  CHECK(r.to_string() == "209/8");
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(6, -3) == Rational(-2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}
