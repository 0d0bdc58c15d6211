#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rcchoice/decomposition.hpp"
#include "rcchoice/selector_model.hpp"

namespace rcchoice {

/// A selector model together with a permutation sigma that fixes `fixed`
/// pointwise and cycles the remaining atoms. Cycles are stored in cycle
/// order: sigma maps cycle[i] to cycle[(i + 1) % length].
class CyclicAutomorphism {
 public:
  /// Throws Error(InvalidArgument) unless the fixed set and the cycles
  /// partition the domain and every cycle has length >= 2. Does not check
  /// that sigma preserves the selector; see verify_equivariance().
  CyclicAutomorphism(SelectorModel model, std::vector<Atom> fixed, std::vector<std::vector<Atom>> cycles);

  const SelectorModel& model() const noexcept { return model_; }
  const std::vector<Atom>& fixed() const noexcept { return fixed_; }
  const std::vector<std::vector<Atom>>& cycles() const noexcept { return cycles_; }

  /// sigma^power(a); power may be any non-negative integer.
  Atom apply(Atom a, std::size_t power = 1) const;
  /// lcm of the cycle lengths (1 when there are none).
  std::size_t order() const noexcept { return order_; }

  /// Copy with a different selector on the same domain.
  CyclicAutomorphism with_model(SelectorModel model) const;

  /// "S={0} cycles=[(1,2,3);(4,5)]"
  std::string cycle_line() const;
  /// Model header, the cycle line, then the subset lines.
  std::string dump() const;

 private:
  SelectorModel model_;
  std::vector<Atom> fixed_;
  std::vector<std::vector<Atom>> cycles_;
  // Per domain position: (cycle index, offset), cycle index -1 for fixed atoms.
  std::vector<std::pair<int, std::size_t>> where_;
  std::size_t order_ = 1;
};

/// Builds the selector on fixed_size + d.total() atoms {0, 1, ...}: atoms
/// below fixed_size are fixed, then one cycle of consecutive atoms per part
/// of d in stored order. Subsets are visited in lexicographic order; the
/// first unassigned subset of each sigma-orbit picks the least atom it shares
/// with the fixed set, or else the least atom of its first cycle C_j with
/// gcd(|P cap C_j|, |C_j|) = 1, and the choice is carried along the orbit.
///
/// With arity > domain size the selector is vacuous and the build succeeds.
/// Throws Error(NotBlocking) when a subset avoiding the fixed set has no
/// such cycle (which happens iff d admits `arity`) and Error(OrbitConflict)
/// if carrying a choice around an orbit ever contradicts itself.
CyclicAutomorphism build_cyclic_model(int arity, std::size_t fixed_size, const Decomposition& d);

struct EquivarianceReport {
  bool ok = true;
  std::size_t checked = 0;
  // First violation: sel(sigma^power P) != sigma^power(sel P).
  std::vector<Atom> subset;
  std::size_t power = 0;
  std::optional<Atom> expected;
  std::optional<Atom> actual;
};

/// Checks sel(sigma^t P) = sigma^t(sel P) for every subset P and every
/// 1 <= t < order().
EquivarianceReport verify_equivariance(const CyclicAutomorphism& c);

/// True iff the non-fixed atoms number n, sigma maps them onto themselves
/// and fixes none of them; then no sigma-invariant choice from that n-set
/// exists.
bool witness_no_invariant_choice(const CyclicAutomorphism& c, Integer n);

struct GcdClaimRow {
  int q = 0;
  std::size_t powers = 0;             // non-identity powers pi^r, 1 <= r < q
  std::size_t invariant_subsets = 0;  // pairs (r, P') with P' nonempty, proper, pi^r(P') = P'
  std::size_t violations = 0;
};

struct GcdClaimReport {
  bool holds = true;
  std::vector<GcdClaimRow> rows;
};

/// For each 2 <= q <= q_max, every power pi^r != id of the q-cycle pi and
/// every nonempty proper subset P' with pi^r(P') = P' (found by testing all
/// 2^q subsets), checks gcd(|P'|, q) > 1. q_max must lie in [2, 20].
GcdClaimReport verify_gcd_claim(int q_max);

}  // namespace rcchoice
