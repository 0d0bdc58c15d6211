#pragma once

// Independent reference implementations used to check the library. They are
// deliberately naive: no bitsets, no pruning, no shared code with src/.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

inline std::vector<bool> sieve(std::size_t limit) {
  std::vector<bool> prime(limit + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (std::size_t p = 2; p * p <= limit; ++p) {
    if (!prime[p]) continue;
    for (std::size_t q = p * p; q <= limit; q += p) prime[q] = false;
  }
  return prime;
}

inline bool trial_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

inline long euclid(long a, long b) {
  while (b != 0) {
    const long r = a % b;
    a = b;
    b = r;
  }
  return a < 0 ? -a : a;
}

// Every tuple (m_1, ..., m_k) with 0 <= m_i <= n_i, filtered by the gcd rule.
inline std::set<long> cartesian_sums(const std::vector<long>& parts) {
  std::set<long> sums;
  std::vector<long> m(parts.size(), 0);
  while (true) {
    bool ok = true;
    long total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (m[i] != 0 && euclid(parts[i], m[i]) <= 1) ok = false;
      total += m[i];
    }
    if (ok) sums.insert(total);
    std::size_t i = 0;
    while (i < parts.size() && m[i] == parts[i]) m[i++] = 0;
    if (i == parts.size()) break;
    ++m[i];
  }
  return sums;
}

inline void partitions_into(long n, long max_part, std::vector<long>& prefix, std::vector<std::vector<long>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (long p = std::min(n, max_part); p >= 2; --p) {
    prefix.push_back(p);
    partitions_into(n - p, p, prefix, out);
    prefix.pop_back();
  }
}

// Partitions of n into parts >= 2, non-increasing.
inline std::vector<std::vector<long>> partitions(long n) {
  std::vector<std::vector<long>> out;
  std::vector<long> prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

inline bool some_partition_blocks(long m, long n) {
  for (const auto& p : partitions(n)) {
    if (!cartesian_sums(p).count(m)) return true;
  }
  return false;
}

}  // namespace oracle
