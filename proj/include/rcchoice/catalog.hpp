#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rcchoice/selector_model.hpp"

namespace rcchoice {

/// Enumeration guards: at most this many arity-subsets, and at most
/// kMaxCatalogSelectors selectors in total.
inline constexpr std::uint64_t kMaxCatalogSubsets = 20;
inline constexpr std::uint64_t kMaxCatalogSelectors = std::uint64_t{1} << 24;

/// The selector table: chosen atom per subset, subsets in lexicographic order.
std::vector<Atom> selector_table(const SelectorModel& model);

/// Lexicographically least selector table over all relabelings of a total
/// model onto {0, ..., size - 1}.
std::vector<Atom> canonical_table(const SelectorModel& model);

/// One representative per isomorphism class of total selectors of the given
/// arity on {0, ..., size - 1}, each in canonical form, sorted by table.
/// Throws Error(BoundExceeded) past the enumeration guards.
std::vector<SelectorModel> catalog_models(int arity, std::size_t size);

/// Class count via Burnside's lemma: the average over all relabelings of
/// the number of selectors they fix.
std::uint64_t count_classes_burnside(int arity, std::size_t size);

/// Some sel-preserving injection from small into big, if one exists.
/// Returned as the images of small's domain atoms, in domain order.
std::optional<std::vector<Atom>> find_embedding(const SelectorModel& small, const SelectorModel& big);

bool isomorphic(const SelectorModel& a, const SelectorModel& b);

}  // namespace rcchoice
