#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace rcchoice {

using Integer = std::int64_t;

/// Largest odd target goldbach_triples() will search. Raising it is safe;
/// the enumeration is quadratic in the target.
inline constexpr Integer kGoldbachSearchBound = 200'000;

/// Exact for every 0 <= x <= 2^63. Small inputs use trial division, the
/// rest a strong-pseudoprime test over the first twelve prime bases, which
/// has no false positives below 3.3 * 10^24.
bool is_prime(std::uint64_t x) noexcept;

/// gcd(0, 0) == 0.
Integer gcd(Integer a, Integer b) noexcept;

/// Smallest prime p with m < p < 2m. Throws Error(Internal) if the scan comes
/// up empty, which would contradict Bertrand's postulate.
Integer bertrand_prime(Integer m);

/// Smallest prime strictly greater than `after` and strictly less than
/// `before`, if any.
std::optional<Integer> prime_between(Integer after, Integer before);

/// Distinct prime divisors in increasing order. n >= 1.
std::vector<Integer> prime_divisors(Integer n);

/// If n == base^k for some k >= 1, returns k.
std::optional<int> exact_power(Integer n, Integer base);

struct GoldbachTriple {
  Integer p1 = 0;
  Integer p2 = 0;
  Integer p3 = 0;

  Integer target() const noexcept { return p1 + p2 + p3; }
  bool all_odd() const noexcept { return p1 % 2 == 1 && p2 % 2 == 1 && p3 % 2 == 1; }
  friend bool operator==(const GoldbachTriple&, const GoldbachTriple&) = default;
};

/// Visits every triple p1 <= p2 <= p3 of primes summing to n. With
/// all_odd_first, triples of odd primes come first and triples containing 2
/// after, each group in lexicographic order; otherwise one lexicographic
/// pass. The visitor returns false to stop early.
///
/// n must be odd with 5 < n <= kGoldbachSearchBound.
void for_each_goldbach_triple(Integer n, bool all_odd_first,
                              const std::function<bool(const GoldbachTriple&)>& visit);

/// All triples in the order of for_each_goldbach_triple. Throws
/// Error(EmptyResult) if there are none, which would refute ternary
/// Goldbach at n.
std::vector<GoldbachTriple> goldbach_triples(Integer n, bool all_odd_preferred);

}  // namespace rcchoice
