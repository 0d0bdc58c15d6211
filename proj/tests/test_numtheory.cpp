#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rcchoice/error.hpp"
#include "rcchoice/numtheory.hpp"

using namespace rcchoice;

TEST_SUITE("numtheory") {
  TEST_CASE("is_prime examples") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(7));
  }

  TEST_CASE("is_prime agrees with a sieve below 200000") {
    const auto prime = oracle::sieve(200'000);
    for (std::uint64_t x = 0; x <= 200'000; ++x) REQUIRE(is_prime(x) == prime[x]);
  }

  TEST_CASE("is_prime on large inputs") {
    CHECK(is_prime(2'305'843'009'213'693'951ULL));   // 2^61 - 1
    CHECK(is_prime(9'223'372'036'854'775'783ULL));   // 2^63 - 25
    CHECK_FALSE(is_prime(3'215'031'751ULL));         // strong pseudoprime to 2, 3, 5, 7
    CHECK_FALSE(is_prime(3'825'123'056'546'413'051ULL));
    CHECK_FALSE(is_prime(1'000'000'007ULL * 998'244'353ULL));
    for (std::uint64_t x = 1'000'000'000'000ULL; x < 1'000'000'000'000ULL + 2000; ++x) {
      REQUIRE(is_prime(x) == oracle::trial_prime(x));
    }
  }

  TEST_CASE("gcd examples") {
    CHECK(gcd(6, 4) == 2);
    CHECK(gcd(13, 8) == 1);  // 3p - 2 and 2p - 2 at p = 5
    CHECK(gcd(8, 9) == 1);   // 2^k and m - 1 at m = 10, k = 3
    CHECK(gcd(0, 7) == 7);
  }

  TEST_CASE("gcd(3p - 2, 2p - 2) is 1 or p") {
    for (Integer p = 3; p < 2000; p += 2) {
      if (!is_prime(static_cast<std::uint64_t>(p))) continue;
      const Integer g = gcd(3 * p - 2, 2 * p - 2);
      REQUIRE((g == 1 || g == p));
    }
  }

  TEST_CASE("gcd matches Euclid") {
    for (Integer a = 0; a < 200; ++a) {
      for (Integer b = 0; b < 200; ++b) REQUIRE(gcd(a, b) == oracle::euclid(a, b));
    }
  }

  TEST_CASE("bertrand_prime examples") {
    CHECK(bertrand_prime(2) == 3);
    CHECK(bertrand_prime(3) == 5);
    CHECK(bertrand_prime(25) == 29);
    CHECK_THROWS_AS(bertrand_prime(1), Error);
  }

  TEST_CASE("bertrand_prime is the least prime in (m, 2m) up to 10^4") {
    const auto prime = oracle::sieve(20'000);
    for (Integer m = 2; m <= 10'000; ++m) {
      const Integer p = bertrand_prime(m);
      REQUIRE(m < p);
      REQUIRE(p < 2 * m);
      REQUIRE(prime[static_cast<std::size_t>(p)]);
      for (Integer q = m + 1; q < p; ++q) REQUIRE_FALSE(prime[static_cast<std::size_t>(q)]);
    }
  }

  TEST_CASE("prime_between, prime_divisors, exact_power") {
    CHECK(prime_between(7, 11) == std::optional<Integer>{});
    CHECK(prime_between(7, 12) == std::optional<Integer>{11});
    CHECK(prime_divisors(360) == std::vector<Integer>{2, 3, 5});
    CHECK(prime_divisors(97) == std::vector<Integer>{97});
    CHECK(exact_power(27, 3) == std::optional<int>{3});
    CHECK(exact_power(3, 3) == std::optional<int>{1});
    CHECK_FALSE(exact_power(12, 2).has_value());
  }

  TEST_CASE("goldbach examples") {
    CHECK(goldbach_triples(7, false) == std::vector<GoldbachTriple>{{2, 2, 3}});
    const auto nine = goldbach_triples(9, true);
    CHECK(std::find(nine.begin(), nine.end(), GoldbachTriple{3, 3, 3}) != nine.end());
    const auto eleven = goldbach_triples(11, true);
    CHECK(std::find(eleven.begin(), eleven.end(), GoldbachTriple{3, 3, 5}) != eleven.end());
    CHECK_THROWS_AS(goldbach_triples(5, true), Error);
    CHECK_THROWS_AS(goldbach_triples(12, true), Error);
  }

  TEST_CASE("goldbach triples match a brute-force listing for odd n <= 301") {
    for (Integer n = 7; n <= 301; n += 2) {
      std::vector<GoldbachTriple> expected;
      for (Integer a = 2; a <= n; ++a) {
        for (Integer b = a; a + b <= n; ++b) {
          const Integer c = n - a - b;
          if (c < b) continue;
          if (oracle::trial_prime(static_cast<std::uint64_t>(a)) && oracle::trial_prime(static_cast<std::uint64_t>(b)) &&
              oracle::trial_prime(static_cast<std::uint64_t>(c))) {
            expected.push_back({a, b, c});
          }
        }
      }
      REQUIRE(goldbach_triples(n, false) == expected);
      // all-odd-first is a stable partition of the same list
      std::stable_partition(expected.begin(), expected.end(), [](const GoldbachTriple& t) { return t.all_odd(); });
      REQUIRE(goldbach_triples(n, true) == expected);
    }
  }

  TEST_CASE("every odd n in [7, 20001] has a prime triple") {
    for (Integer n = 7; n <= 20'001; n += 2) {
      bool found = false;
      for_each_goldbach_triple(n, true, [&](const GoldbachTriple& t) {
        found = t.target() == n && is_prime(static_cast<std::uint64_t>(t.p1)) &&
                is_prime(static_cast<std::uint64_t>(t.p2)) && is_prime(static_cast<std::uint64_t>(t.p3));
        return false;
      });
      REQUIRE(found);
    }
  }
}
