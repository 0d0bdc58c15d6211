#include "rcchoice/numtheory.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "rcchoice/error.hpp"

namespace rcchoice {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// n odd, n > 3; odd_part * 2^twos == n - 1.
bool strong_probable_prime(u64 n, u64 a, u64 odd_part, int twos) {
  u64 x = pow_mod(a, odd_part, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < twos; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr u64 kTrialLimit = 10'000'000;

}  // namespace

bool is_prime(u64 x) noexcept {
  if (x < 2) return false;
  if (x < 4) return true;
  if (x % 2 == 0) return false;
  if (x < kTrialLimit) {
    for (u64 d = 3; d * d <= x; d += 2) {
      if (x % d == 0) return false;
    }
    return true;
  }
  static constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : kBases) {
    if (x % b == 0) return false;
  }
  u64 odd_part = x - 1;
  int twos = 0;
  while ((odd_part & 1) == 0) {
    odd_part >>= 1;
    ++twos;
  }
  for (u64 b : kBases) {
    if (!strong_probable_prime(x, b, odd_part, twos)) return false;
  }
  return true;
}

Integer gcd(Integer a, Integer b) noexcept { return std::gcd(a, b); }

std::optional<Integer> prime_between(Integer after, Integer before) {
  for (Integer p = std::max<Integer>(after + 1, 2); p < before; ++p) {
    if (is_prime(static_cast<u64>(p))) return p;
  }
  return std::nullopt;
}

Integer bertrand_prime(Integer m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "bertrand_prime needs m >= 2, got " + std::to_string(m));
  if (auto p = prime_between(m, 2 * m)) return *p;
  throw Error(ErrorKind::Internal, "no prime in (" + std::to_string(m) + ", " + std::to_string(2 * m) + ")");
}

std::vector<Integer> prime_divisors(Integer n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "prime_divisors needs n >= 1");
  std::vector<Integer> out;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<int> exact_power(Integer n, Integer base) {
  if (base < 2 || n < base) return std::nullopt;
  int k = 0;
  while (n % base == 0) {
    n /= base;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

void for_each_goldbach_triple(Integer n, bool all_odd_first,
                              const std::function<bool(const GoldbachTriple&)>& visit) {
  if (n <= 5 || n % 2 == 0) {
    throw Error(ErrorKind::InvalidArgument, "goldbach target must be odd and > 5, got " + std::to_string(n));
  }
  if (n > kGoldbachSearchBound) {
    throw Error(ErrorKind::BoundExceeded, "goldbach target " + std::to_string(n) + " exceeds search bound");
  }
  auto prime = [](Integer x) { return x >= 2 && is_prime(static_cast<u64>(x)); };
  // p1 <= p2 <= p3 means p1 <= n / 3 and p2 <= (n - p1) / 2.
  auto scan = [&](Integer p1_min, Integer p1_max) {
    for (Integer p1 = p1_min; p1 <= p1_max && 3 * p1 <= n; ++p1) {
      if (!prime(p1)) continue;
      for (Integer p2 = p1; 2 * p2 <= n - p1; ++p2) {
        if (!prime(p2)) continue;
        const Integer p3 = n - p1 - p2;
        if (prime(p3) && !visit(GoldbachTriple{p1, p2, p3})) return false;
      }
    }
    return true;
  };
  if (all_odd_first) {
    if (!scan(3, n)) return;
    scan(2, 2);
  } else {
    scan(2, n);
  }
}

std::vector<GoldbachTriple> goldbach_triples(Integer n, bool all_odd_preferred) {
  std::vector<GoldbachTriple> out;
  for_each_goldbach_triple(n, all_odd_preferred, [&](const GoldbachTriple& t) {
    out.push_back(t);
    return true;
  });
  if (out.empty()) {
    throw Error(ErrorKind::EmptyResult, "no prime triple sums to " + std::to_string(n));
  }
  return out;
}

}  // namespace rcchoice
