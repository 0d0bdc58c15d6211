#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rcchoice/selector_model.hpp"

namespace rcchoice {

/// Limits on one stage. Finite stages are all we build; the union over all
/// stages is not computed.
struct FraisseCaps {
  /// Atoms in the resulting model.
  std::size_t max_atoms = 256;
  /// Largest catalogued model used as an extension target.
  std::size_t max_extension_size = 4;
};

/// One step F_level -> F_{level + 1}. prev must be a total model on
/// {0, ..., |prev| - 1}. For every ground A subset of prev with |A| <= level
/// (by size, then lexicographically), every catalogued model R with
/// 1 <= |R| = |A| + 1 <= level + 1 (catalog order) and every embedding
/// j: prev|A -> R (lexicographic in its images), a fresh atom a is appended
/// so that A + {a} realises R through j. Every subset still unassigned then
/// selects its largest atom.
///
/// Throws Error(CapExceeded), reporting how many witnesses were planned, if
/// the result would exceed caps.max_atoms or need a catalogue larger than
/// caps.max_extension_size.
SelectorModel build_fraisse_stage(int arity, const SelectorModel& prev, std::size_t level,
                                  const FraisseCaps& caps = {});

/// F_0, F_1, ..., F_stages, starting from the empty model.
std::vector<SelectorModel> build_fraisse_stages(int arity, std::size_t stages, const FraisseCaps& caps = {});

struct MissingExtension {
  std::vector<Atom> ground;
  std::size_t catalog_index = 0;  // into catalog_models(arity, |ground| + 1)
  std::vector<Atom> embedding;    // images of the ground atoms in that model
};

struct ExtensionReport {
  bool complete = true;
  std::size_t checked = 0;
  std::vector<MissingExtension> missing;
};

/// For every ground A of size < k among the first base_size atoms of the
/// domain (all atoms by default), every catalogued R with |R| = |A| + 1 and
/// every embedding j: model|A -> R, looks for an atom a outside A such that
/// model|A + {a} realises R through j. An empty model passes vacuously.
ExtensionReport check_one_point_extension(const SelectorModel& model, std::size_t k,
                                          std::optional<std::size_t> base_size = std::nullopt);

/// Every catalogued model with at most max_size atoms embeds into model.
bool embeds_all_small_models(const SelectorModel& model, std::size_t max_size);

}  // namespace rcchoice
