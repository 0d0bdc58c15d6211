#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcchoice/decomposition.hpp"
#include "rcchoice/numtheory.hpp"

namespace rcchoice {

/// Which case of the non-implication argument produced a certificate.
enum class Recipe {
  GreaterCase,
  PrimeDivisorCase,
  PrimePowerCase,
  OddCase,
  FermatShiftCase,
  EvenGapCase,
  EvenDenseCase,
  ExhaustiveFallback,
};

/// Snake-case wire name, e.g. "prime_divisor".
std::string_view to_string(Recipe recipe) noexcept;
std::optional<Recipe> recipe_from_string(std::string_view name) noexcept;

/// A decomposition of n that blocks m, plus the steps that led to it. Every
/// trace returned by the functions below has been checked with blocks().
struct RecipeTrace {
  Integer m = 0;
  Integer n = 0;
  Recipe recipe = Recipe::ExhaustiveFallback;
  Decomposition decomposition{{2}};
  std::vector<std::string> narrative;

  friend bool operator==(const RecipeTrace&, const RecipeTrace&) = default;
};

// Each recipe throws Error(PreconditionViolated) or Error(NoSuchPrime) when
// its hypotheses fail and Error(BranchExhausted) when none of its branches
// yields a decomposition that blocks m.

/// m > n >= 2: the single part {n}.
RecipeTrace recipe_greater(Integer m, Integer n);

/// n/p copies of the smallest prime p dividing n but not m.
RecipeTrace recipe_prime_divisor(Integer m, Integer n);

/// m prime and n = m^k, k > 1: {p, n - p} with p the least prime in (m, 2m).
RecipeTrace recipe_prime_power(Integer m, Integer n);

/// n odd and at least 7, m != n. Walks prime triples of n (all-odd first).
/// A prime m is handed to the prime-divisor / prime-power recipes.
RecipeTrace recipe_odd(Integer m, Integer n);
/// Same, restricted to one triple.
RecipeTrace recipe_odd(Integer m, Integer n, const GoldbachTriple& triple);

/// m even > 2, n = m + 2^k with 2^k + 1 prime: {m - 1, 2^k + 1}.
RecipeTrace recipe_fermat_shift(Integer m, Integer n);

/// m, n even with an odd prime m < p < n - 1. Tries each such p in
/// increasing order.
RecipeTrace recipe_even_gap(Integer m, Integer n);
/// Same, for one given p.
RecipeTrace recipe_even_gap(Integer m, Integer n, Integer p);

/// m, n even with 3 <= n/2 <= m < n.
RecipeTrace recipe_even_dense(Integer m, Integer n);

struct CertificateOptions {
  /// Largest n the exhaustive fallback may search.
  Integer exhaustive_bound = kDefaultExhaustiveBound;
};

/// Tries the recipes in the order of the classification argument (greater,
/// odd, prime divisor, prime power, even gap, even dense, Fermat shift) and
/// returns the first that succeeds. If all fail, searches exhaustively and
/// tags the trace ExhaustiveFallback; the narrative records every skipped
/// recipe.
///
/// Requires m, n >= 1, n >= 2, m != n and (m, n) != (2, 4). Throws
/// Error(CertificateSearchFailed) if nothing blocks m.
RecipeTrace build_certificate(Integer m, Integer n, const CertificateOptions& options = {});

}  // namespace rcchoice
