#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcchoice/numtheory.hpp"

namespace rcchoice {

/// A multiset of parts >= 2, stored non-increasing. Two decompositions with
/// the same parts compare equal regardless of construction order.
class Decomposition {
 public:
  /// Throws Error(InvalidPart) on a part < 2 and Error(InvalidArgument) when
  /// parts is empty.
  explicit Decomposition(std::vector<Integer> parts);

  std::span<const Integer> parts() const noexcept { return parts_; }
  Integer total() const noexcept { return total_; }
  std::size_t size() const noexcept { return parts_.size(); }

  /// "{7,2}"
  std::string to_string() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
  friend auto operator<=>(const Decomposition& a, const Decomposition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<Integer> parts_;
  Integer total_ = 0;
};

/// Bit s is set iff s = sum m_i with 0 <= m_i <= n_i and m_i = 0 or
/// gcd(n_i, m_i) > 1.
class AdmissibleSumSet {
 public:
  explicit AdmissibleSumSet(boost::dynamic_bitset<> bits) : bits_(std::move(bits)) {}

  Integer total() const noexcept { return static_cast<Integer>(bits_.size()) - 1; }
  bool contains(Integer s) const noexcept {
    return s >= 0 && s <= total() && bits_.test(static_cast<std::size_t>(s));
  }
  std::vector<Integer> values() const;
  const boost::dynamic_bitset<>& bits() const noexcept { return bits_; }

  friend bool operator==(const AdmissibleSumSet&, const AdmissibleSumSet&) = default;

 private:
  boost::dynamic_bitset<> bits_;
};

/// {0} together with every 1 <= j <= part sharing a factor with part.
std::vector<Integer> allowed_contributions(Integer part);

/// Shift-or convolution of the per-part contribution sets.
AdmissibleSumSet admissible_sums(const Decomposition& d);

/// True iff m is not an admissible sum of d; any m > d.total() is blocked.
bool blocks(const Decomposition& d, Integer m);

inline constexpr Integer kDefaultExhaustiveBound = 64;
/// Admissible sets in the exhaustive search live in 128-bit masks.
inline constexpr Integer kMaxExhaustiveBound = 127;

/// Visits partitions of n into parts >= 2 in reverse-lexicographic order of
/// their non-increasing part lists ({n} first). The visitor returns false to
/// stop.
void for_each_partition(Integer n, const std::function<bool(std::span<const Integer>)>& visit);

/// First partition of n (in for_each_partition order) that blocks m, or
/// nullopt if every partition admits m. Subtrees whose prefix already admits
/// m are skipped, since appending parts only grows the admissible set.
///
/// Throws Error(BoundExceeded) if n > bound, and Error(InvalidArgument) if
/// bound > kMaxExhaustiveBound.
std::optional<Decomposition> find_blocking_decomposition(Integer m, Integer n,
                                                         Integer bound = kDefaultExhaustiveBound);

}  // namespace rcchoice
