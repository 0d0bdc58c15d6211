#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace rcchoice::rc24 {

using Element = int;

/// A choice function on the 2-subsets of a finite universe, stored as an
/// orientation: one bit per pair (pairs in lexicographic order), set when
/// the larger element is chosen.
class PairChoice {
 public:
  /// Throws Error(InvalidArgument) on duplicate elements, more than 11
  /// elements, or an orientation with bits beyond the pair count.
  PairChoice(std::vector<Element> universe, std::uint64_t orientation);

  /// Chooses the larger element of every pair.
  static PairChoice larger_wins(std::vector<Element> universe);

  std::span<const Element> universe() const noexcept { return universe_; }
  std::uint64_t orientation() const noexcept { return orientation_; }
  std::size_t pair_count() const noexcept;

  /// Throws Error(BadSubset) unless a != b are both in the universe.
  Element choose(Element a, Element b) const;

 private:
  std::size_t pair_index(Element a, Element b) const;

  std::vector<Element> universe_;
  std::uint64_t orientation_ = 0;
};

/// Tallies on one 4-subset z: nu[i] counts the pairs of z whose choice is
/// z[i]; min_score is the least tally and minimizers the elements attaining it.
struct ScoreProfile {
  std::array<Element, 4> z{};
  std::array<int, 4> nu{};
  int min_score = 0;
  std::vector<Element> minimizers;
};

/// z must hold 4 distinct universe elements; throws Error(BadSubset)
/// otherwise. z is reported sorted.
ScoreProfile score(std::array<Element, 4> z, const PairChoice& f2);

enum class Case { SingletonMin, TripleMin, PairMin };

struct Choice {
  Element element = 0;
  Case fired = Case::SingletonMin;
};

/// The choice on a 4-set built from a choice on its pairs:
///   one minimizer a              -> a
///   three minimizers, z \ M = {b} -> b
///   two minimizers M             -> f2(M)
/// Four minimizers would need 4 | 6; reaching that branch throws
/// Error(Internal).
Choice choose4_with_case(std::array<Element, 4> z, const PairChoice& f2);
Element choose4(std::array<Element, 4> z, const PairChoice& f2);

struct Census {
  std::size_t total = 0;
  std::size_t singleton_min = 0;
  std::size_t triple_min = 0;
  std::size_t pair_min = 0;
  std::size_t all_minimizers = 0;  // |M_z| = 4; must stay 0
  std::size_t equivariance_checks = 0;
  std::size_t failures = 0;
  bool all_pass = false;
};

/// Runs choose4 on all 64 orientations of {0,1,2,3}, checks membership and
/// that exactly one case fires, and checks
/// choose4(rho z, rho.f2.rho^-1) = rho(choose4(z, f2)) for all 24 rho.
Census verify_rc24();

}  // namespace rcchoice::rc24
