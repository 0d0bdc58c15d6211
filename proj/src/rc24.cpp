#include "rcchoice/rc24.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rcchoice/error.hpp"

namespace rcchoice::rc24 {

namespace {

constexpr std::size_t kMaxUniverse = 11;  // 55 pairs fit the 64-bit orientation

std::size_t index_in(std::span<const Element> universe, Element a) {
  auto it = std::lower_bound(universe.begin(), universe.end(), a);
  if (it == universe.end() || *it != a) {
    throw Error(ErrorKind::BadSubset, "element " + std::to_string(a) + " is not in the universe");
  }
  return static_cast<std::size_t>(it - universe.begin());
}

}  // namespace

PairChoice::PairChoice(std::vector<Element> universe, std::uint64_t orientation)
    : universe_(std::move(universe)), orientation_(orientation) {
  std::sort(universe_.begin(), universe_.end());
  if (std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end()) {
    throw Error(ErrorKind::InvalidArgument, "duplicate element in universe");
  }
  if (universe_.size() > kMaxUniverse) throw Error(ErrorKind::InvalidArgument, "universe too large for a 64-bit orientation");
  if (pair_count() < 64 && (orientation_ >> pair_count()) != 0) {
    throw Error(ErrorKind::InvalidArgument, "orientation has bits beyond the pair count");
  }
}

PairChoice PairChoice::larger_wins(std::vector<Element> universe) {
  const std::size_t n = universe.size();
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  return PairChoice(std::move(universe), pairs == 0 ? 0 : (~std::uint64_t{0} >> (64 - pairs)));
}

std::size_t PairChoice::pair_count() const noexcept { return universe_.size() * (universe_.size() - (universe_.empty() ? 0 : 1)) / 2; }

std::size_t PairChoice::pair_index(Element a, Element b) const {
  std::size_t i = index_in(universe_, a), j = index_in(universe_, b);
  if (i == j) throw Error(ErrorKind::BadSubset, "a pair needs two distinct elements");
  if (i > j) std::swap(i, j);
  // Pairs (i, j), i < j, in lexicographic order.
  const std::size_t n = universe_.size();
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Element PairChoice::choose(Element a, Element b) const {
  const bool larger = (orientation_ >> pair_index(a, b)) & 1;
  return larger ? std::max(a, b) : std::min(a, b);
}

ScoreProfile score(std::array<Element, 4> z, const PairChoice& f2) {
  std::sort(z.begin(), z.end());
  if (std::adjacent_find(z.begin(), z.end()) != z.end()) throw Error(ErrorKind::BadSubset, "4-subset repeats an element");
  for (Element a : z) index_in(f2.universe(), a);

  ScoreProfile p;
  p.z = z;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Element winner = f2.choose(z[i], z[j]);
      ++p.nu[winner == z[i] ? i : j];
    }
  }
  p.min_score = *std::min_element(p.nu.begin(), p.nu.end());
  for (std::size_t i = 0; i < 4; ++i) {
    if (p.nu[i] == p.min_score) p.minimizers.push_back(z[i]);
  }
  return p;
}

Choice choose4_with_case(std::array<Element, 4> z, const PairChoice& f2) {
  const ScoreProfile p = score(z, f2);
  switch (p.minimizers.size()) {
    case 1:
      return {p.minimizers[0], Case::SingletonMin};
    case 3:
      for (Element b : p.z) {
        if (std::find(p.minimizers.begin(), p.minimizers.end(), b) == p.minimizers.end()) {
          return {b, Case::TripleMin};
        }
      }
      break;
    case 2:
      return {f2.choose(p.minimizers[0], p.minimizers[1]), Case::PairMin};
    default:
      break;
  }
  throw Error(ErrorKind::Internal, "all four elements share the minimum tally; the pair tallies cannot sum to 6");
}

Element choose4(std::array<Element, 4> z, const PairChoice& f2) { return choose4_with_case(z, f2).element; }

Census verify_rc24() {
  Census census;
  const std::vector<Element> universe{0, 1, 2, 3};
  const std::array<Element, 4> z{0, 1, 2, 3};
  std::array<Element, 4> rho{0, 1, 2, 3};

  for (std::uint64_t orientation = 0; orientation < 64; ++orientation) {
    ++census.total;
    const PairChoice f2(universe, orientation);
    const ScoreProfile profile = score(z, f2);
    const int tally = std::accumulate(profile.nu.begin(), profile.nu.end(), 0);
    if (profile.minimizers.size() == 4) ++census.all_minimizers;

    Choice choice;
    try {
      choice = choose4_with_case(z, f2);
    } catch (const Error&) {
      ++census.failures;
      continue;
    }
    const bool member = std::find(z.begin(), z.end(), choice.element) != z.end();
    const auto expected_case = profile.minimizers.size() == 1   ? Case::SingletonMin
                               : profile.minimizers.size() == 3 ? Case::TripleMin
                                                                : Case::PairMin;
    if (!member || tally != 6 || choice.fired != expected_case) ++census.failures;
    switch (choice.fired) {
      case Case::SingletonMin: ++census.singleton_min; break;
      case Case::TripleMin: ++census.triple_min; break;
      case Case::PairMin: ++census.pair_min; break;
    }

    // Relabel: the pair {rho a, rho b} chooses rho(f2{a, b}).
    std::sort(rho.begin(), rho.end());
    do {
      std::uint64_t moved = 0;
      for (Element a = 0; a < 4; ++a) {
        for (Element b = a + 1; b < 4; ++b) {
          const Element ra = rho[static_cast<std::size_t>(a)], rb = rho[static_cast<std::size_t>(b)];
          const Element chosen = rho[static_cast<std::size_t>(f2.choose(a, b))];
          const Element lo = std::min(ra, rb), hi = std::max(ra, rb);
          const std::size_t index = static_cast<std::size_t>(lo * (7 - lo) / 2 + (hi - lo - 1));
          if (chosen == hi) moved |= std::uint64_t{1} << index;
        }
      }
      ++census.equivariance_checks;
      const PairChoice relabeled(universe, moved);
      if (choose4(z, relabeled) != rho[static_cast<std::size_t>(choice.element)]) ++census.failures;
    } while (std::next_permutation(rho.begin(), rho.end()));
  }
  census.all_pass = census.failures == 0 && census.all_minimizers == 0 &&
                    census.singleton_min + census.triple_min + census.pair_min == census.total;
  return census;
}

}  // namespace rcchoice::rc24
