#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rcchoice {

using Atom = int;

/// Guard on the number of m-subsets a model may index.
inline constexpr std::uint64_t kMaxSubsets = 1u << 24;

/// A finite structure with a selector: sel picks one member of each
/// `arity`-element subset of the domain. A model under construction may
/// leave some subsets unassigned; is_total() tells whether it is a model of
/// the selector theory yet.
///
/// Subsets are passed as spans of atoms in any order; they are stored by
/// colexicographic rank of their sorted domain positions.
class SelectorModel {
 public:
  /// Throws Error(InvalidArgument) for arity < 1 or duplicate atoms, and
  /// Error(BoundExceeded) when C(|domain|, arity) > kMaxSubsets.
  SelectorModel(int arity, std::vector<Atom> domain);

  /// Domain {0, ..., size - 1}.
  static SelectorModel on_initial_segment(int arity, std::size_t size);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return domain_.size(); }
  std::span<const Atom> domain() const noexcept { return domain_; }
  bool contains(Atom a) const noexcept;
  std::uint64_t subset_count() const noexcept { return selection_.size(); }

  /// Throws Error(BadSubset) unless subset is `arity` distinct atoms of the
  /// domain.
  std::optional<Atom> select(std::span<const Atom> subset) const;
  /// Also throws Error(BadSubset) if chosen is not in subset. Overwrites.
  void assign(std::span<const Atom> subset, Atom chosen);
  bool is_assigned(std::span<const Atom> subset) const;

  bool is_total() const noexcept;

  /// Visits every `arity`-subset in lexicographic order of its sorted atoms.
  void for_each_subset(const std::function<void(std::span<const Atom>, std::optional<Atom>)>& visit) const;

  /// The substructure on the given atoms (all must be in the domain).
  SelectorModel restrict_to(std::vector<Atom> atoms) const;

  /// "m=<arity> domain=<size>" then one "P={a,b} sel=x" line per subset.
  std::string dump() const;

  friend bool operator==(const SelectorModel&, const SelectorModel&) = default;

 private:
  std::uint64_t rank_of(std::span<const Atom> subset) const;

  int arity_ = 1;
  std::vector<Atom> domain_;
  // binomial_[i][j] = C(i, j) for i <= size, j <= arity.
  std::vector<std::vector<std::uint64_t>> binomial_;
  // Position in domain_ of the chosen atom, or -1.
  std::vector<std::int32_t> selection_;
};

/// Every subset assigned and every choice a member of its subset.
bool is_valid_model(const SelectorModel& model);

/// Steps `indices` (strictly increasing, values < n) to the next k-subset in
/// lexicographic order; false after the last one.
bool next_combination(std::vector<std::size_t>& indices, std::size_t n);

/// "{1,2,3}"
std::string format_atoms(std::span<const Atom> atoms);

}  // namespace rcchoice
