#include "rcchoice/certificates.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "rcchoice/error.hpp"

namespace rcchoice {

namespace {

constexpr std::array<std::pair<Recipe, std::string_view>, 8> kRecipeNames{{
    {Recipe::GreaterCase, "greater"},
    {Recipe::PrimeDivisorCase, "prime_divisor"},
    {Recipe::PrimePowerCase, "prime_power"},
    {Recipe::OddCase, "odd"},
    {Recipe::FermatShiftCase, "fermat_shift"},
    {Recipe::EvenGapCase, "even_gap"},
    {Recipe::EvenDenseCase, "even_dense"},
    {Recipe::ExhaustiveFallback, "exhaustive_fallback"},
}};

std::string pair_label(Integer m, Integer n) {
  return "(" + std::to_string(m) + ", " + std::to_string(n) + ")";
}

std::string triple_label(const GoldbachTriple& t) {
  std::ostringstream out;
  out << '(' << t.p1 << ',' << t.p2 << ',' << t.p3 << ')';
  return out.str();
}

bool prime(Integer x) { return x >= 2 && is_prime(static_cast<std::uint64_t>(x)); }

[[noreturn]] void precondition(Integer m, Integer n, const std::string& what) {
  throw Error(ErrorKind::PreconditionViolated, pair_label(m, n) + ": " + what);
}

/// The trace if the parts form a decomposition blocking m, else nullopt.
std::optional<RecipeTrace> try_emit(Integer m, Integer n, Recipe recipe, std::vector<Integer> parts,
                                    std::vector<std::string> narrative) {
  if (std::any_of(parts.begin(), parts.end(), [](Integer p) { return p < 2; })) return std::nullopt;
  Decomposition d(std::move(parts));
  if (d.total() != n) throw Error(ErrorKind::Internal, "candidate " + d.to_string() + " does not sum to n");
  if (!blocks(d, m)) return std::nullopt;
  narrative.push_back("verified: " + d.to_string() + " blocks m = " + std::to_string(m));
  return RecipeTrace{m, n, recipe, std::move(d), std::move(narrative)};
}

RecipeTrace prepend(RecipeTrace trace, std::vector<std::string> head) {
  head.insert(head.end(), trace.narrative.begin(), trace.narrative.end());
  trace.narrative = std::move(head);
  return trace;
}

/// Cor.-3.3 first, then the prime-power construction, for prime m.
RecipeTrace prime_case(Integer m, Integer n) {
  try {
    return recipe_prime_divisor(m, n);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoSuchPrime) throw;
  }
  return recipe_prime_power(m, n);
}

std::optional<RecipeTrace> odd_with_triple(Integer m, Integer n, const GoldbachTriple& t) {
  const std::string label = "triple " + triple_label(t);
  if (auto out = try_emit(m, n, Recipe::OddCase, {t.p1, t.p2, t.p3}, {label, "branch: the triple itself"})) {
    return out;
  }
  if (t.p1 == t.p2 && t.p2 == t.p3) {
    const Integer p = t.p1;
    if (p != 2 && m == 2 * p) {
      return try_emit(m, n, Recipe::OddCase, {3 * p - 2, 2},
                      {label, "branch: p1 = p2 = p3 = " + std::to_string(p) + ", parts {3p-2, 2}"});
    }
    return std::nullopt;
  }
  // m is a pair sum of the triple. Try each labelling with p1 + p2 = m.
  const std::array<Integer, 3> v{t.p1, t.p2, t.p3};
  static constexpr std::array<std::array<int, 3>, 6> kOrders{
      {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0}}};
  for (const auto& o : kOrders) {
    const Integer p1 = v[o[0]], p2 = v[o[1]], p3 = v[o[2]];
    if (p1 + p2 != m) continue;
    const std::string labelling = "p1 = " + std::to_string(p1) + ", p2 = " + std::to_string(p2) +
                                  ", p3 = " + std::to_string(p3);
    if (m % p3 != 0) {
      if (auto out = try_emit(m, n, Recipe::OddCase, {n}, {label, labelling, "branch: p3 does not divide m, parts {n}"})) {
        return out;
      }
    } else if (p3 < p1) {
      if (auto out = try_emit(m, n, Recipe::OddCase, {p2 + p3, p1},
                              {label, labelling, "branch: p3 < p1 and p3 | p1 + p2, parts {p2 + p3, p1}"})) {
        return out;
      }
    }
  }
  return std::nullopt;
}

void require_odd_case(Integer m, Integer n) {
  if (n < 7 || n % 2 == 0) precondition(m, n, "odd case needs odd n >= 7");
  if (m == n || m < 1) precondition(m, n, "odd case needs 1 <= m != n");
}

std::optional<int> power_of_two_exponent(Integer x) {
  if (x < 2 || (x & (x - 1)) != 0) return std::nullopt;
  int k = 0;
  while ((Integer{1} << k) != x) ++k;
  return k;
}

bool fermat_shift_applies(Integer m, Integer n) {
  if (m <= 2 || m % 2 != 0) return false;
  auto k = power_of_two_exponent(n - m);
  return k.has_value() && prime(n - m + 1);
}

std::vector<std::string> with_tail(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

std::string_view to_string(Recipe recipe) noexcept {
  for (const auto& [r, name] : kRecipeNames) {
    if (r == recipe) return name;
  }
  return "unknown";
}

std::optional<Recipe> recipe_from_string(std::string_view name) noexcept {
  for (const auto& [r, text] : kRecipeNames) {
    if (text == name) return r;
  }
  return std::nullopt;
}

RecipeTrace recipe_greater(Integer m, Integer n) {
  if (!(m > n && n >= 2)) precondition(m, n, "greater case needs m > n >= 2");
  auto out = try_emit(m, n, Recipe::GreaterCase, {n}, {"m > n: single part {n}, every admissible sum is <= n"});
  if (!out) throw Error(ErrorKind::Internal, "{n} failed to block m > n");
  return *out;
}

RecipeTrace recipe_prime_divisor(Integer m, Integer n) {
  if (n < 2 || m < 1) precondition(m, n, "prime divisor case needs m >= 1, n >= 2");
  for (Integer p : prime_divisors(n)) {
    if (m % p == 0) continue;
    std::vector<Integer> parts(static_cast<std::size_t>(n / p), p);
    auto out = try_emit(m, n, Recipe::PrimeDivisorCase, std::move(parts),
                        {"p = " + std::to_string(p) + " divides n but not m: n/p copies of p"});
    if (!out) throw Error(ErrorKind::Internal, "prime divisor certificate failed to block");
    return *out;
  }
  throw Error(ErrorKind::NoSuchPrime, pair_label(m, n) + ": every prime divisor of n divides m");
}

RecipeTrace recipe_prime_power(Integer m, Integer n) {
  if (!prime(m)) precondition(m, n, "prime power case needs m prime");
  auto k = exact_power(n, m);
  if (!k || *k < 2) precondition(m, n, "prime power case needs n = m^k with k > 1");
  const Integer p = bertrand_prime(m);
  if (n - p < 2) precondition(m, n, "n - p = " + std::to_string(n - p) + " is not a valid part");
  std::vector<std::string> steps{"n = " + std::to_string(m) + "^" + std::to_string(*k),
                                 "p = " + std::to_string(p) + " is the least prime in (m, 2m)",
                                 "m does not divide n - p = " + std::to_string(n - p)};
  auto out = try_emit(m, n, Recipe::PrimePowerCase, {p, n - p}, std::move(steps));
  if (!out) throw Error(ErrorKind::BranchExhausted, pair_label(m, n) + ": {p, n - p} admits m");
  return *out;
}

RecipeTrace recipe_odd(Integer m, Integer n, const GoldbachTriple& triple) {
  require_odd_case(m, n);
  if (triple.target() != n) precondition(m, n, "triple " + triple_label(triple) + " does not sum to n");
  if (prime(m)) {
    return prepend(prime_case(m, n), {"m = " + std::to_string(m) + " is prime: prime case"});
  }
  if (auto out = odd_with_triple(m, n, triple)) return *out;
  throw Error(ErrorKind::BranchExhausted, pair_label(m, n) + ": no branch applies to " + triple_label(triple));
}

RecipeTrace recipe_odd(Integer m, Integer n) {
  require_odd_case(m, n);
  if (prime(m)) {
    return prepend(prime_case(m, n), {"m = " + std::to_string(m) + " is prime: prime case"});
  }
  std::optional<RecipeTrace> found;
  std::vector<std::string> tried;
  for_each_goldbach_triple(n, true, [&](const GoldbachTriple& t) {
    found = odd_with_triple(m, n, t);
    if (!found) tried.push_back("triple " + triple_label(t) + ": no branch applies");
    return !found.has_value();
  });
  if (!found) throw Error(ErrorKind::BranchExhausted, pair_label(m, n) + ": no prime triple yields a certificate");
  return prepend(std::move(*found), std::move(tried));
}

RecipeTrace recipe_fermat_shift(Integer m, Integer n) {
  if (m <= 2 || m % 2 != 0) precondition(m, n, "Fermat shift needs even m > 2");
  auto k = power_of_two_exponent(n - m);
  if (!k) precondition(m, n, "n - m is not a power of two");
  if (!prime(n - m + 1)) precondition(m, n, "2^k + 1 = " + std::to_string(n - m + 1) + " is not prime");
  std::vector<std::string> steps{"n = m + 2^" + std::to_string(*k) + ", 2^k + 1 = " + std::to_string(n - m + 1) +
                                 " is prime: parts {m - 1, 2^k + 1}"};
  auto out = try_emit(m, n, Recipe::FermatShiftCase, {m - 1, n - m + 1}, std::move(steps));
  if (!out) throw Error(ErrorKind::BranchExhausted, pair_label(m, n) + ": {m - 1, 2^k + 1} admits m");
  return *out;
}

RecipeTrace recipe_even_gap(Integer m, Integer n, Integer p) {
  if (m < 1 || m % 2 != 0 || n % 2 != 0) precondition(m, n, "even gap case needs m, n even");
  if (!(p > 2 && prime(p) && m < p && p + 1 < n)) {
    precondition(m, n, "p = " + std::to_string(p) + " is not an odd prime with m < p < n - 1");
  }
  const Integer rest = n - p;
  const std::string chosen = "p = " + std::to_string(p) + ", n - p = " + std::to_string(rest);
  if (rest == 3 || rest == 5) {
    if (auto out = try_emit(m, n, Recipe::EvenGapCase, {p, rest}, {chosen, "branch: parts {p, n - p}"})) return *out;
    throw Error(ErrorKind::BranchExhausted, pair_label(m, n) + ": {p, n - p} admits m");
  }
  std::optional<RecipeTrace> found;
  std::vector<std::string> tried{chosen};
  for_each_goldbach_triple(rest, true, [&](const GoldbachTriple& t) {
    found = try_emit(m, n, Recipe::EvenGapCase, {p, t.p1, t.p2, t.p3},
                     {chosen, "branch: n - p = " + triple_label(t) + ", parts {p, p1, p2, p3}"});
    if (!found) tried.push_back("n - p = " + triple_label(t) + ": {p, p1, p2, p3} admits m");
    return !found.has_value();
  });
  if (found) return *found;
  if (rest >= m) {
    // p > m only ever contributes 0, so a certificate for (m, n - p) extends by p.
    tried.push_back("n - p >= m: odd case on (m, n - p)");
    try {
      RecipeTrace inner = recipe_odd(m, rest);
      std::vector<Integer> parts(inner.decomposition.parts().begin(), inner.decomposition.parts().end());
      parts.push_back(p);
      if (auto out = try_emit(m, n, Recipe::EvenGapCase, std::move(parts), with_tail(tried, inner.narrative))) {
        return *out;
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Internal) throw;
    }
  }
  throw Error(ErrorKind::BranchExhausted, pair_label(m, n) + ": no branch applies for p = " + std::to_string(p));
}

RecipeTrace recipe_even_gap(Integer m, Integer n) {
  if (m < 1 || m % 2 != 0 || n % 2 != 0) precondition(m, n, "even gap case needs m, n even");
  bool any_prime = false;
  for (Integer p = m + 1; p + 1 < n; ++p) {
    if (p <= 2 || !prime(p)) continue;
    any_prime = true;
    try {
      return recipe_even_gap(m, n, p);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BranchExhausted) throw;
    }
  }
  if (!any_prime) throw Error(ErrorKind::NoSuchPrime, pair_label(m, n) + ": no odd prime in (m, n - 1)");
  throw Error(ErrorKind::BranchExhausted, pair_label(m, n) + ": no prime p in (m, n - 1) yields a certificate");
}

RecipeTrace recipe_even_dense(Integer m, Integer n) {
  if (m % 2 != 0 || n % 2 != 0) precondition(m, n, "even dense case needs m, n even");
  if (!(3 <= n / 2 && n / 2 <= m && m < n)) precondition(m, n, "even dense case needs 3 <= n/2 <= m < n");

  std::vector<std::string> steps;
  Integer p = bertrand_prime(n / 2);
  steps.push_back("p = " + std::to_string(p) + " is the least prime in (n/2, n)");
  if (p == n - 1) {
    p = bertrand_prime(n / 2 - 1);
    steps.push_back("p = n - 1, reselect p = " + std::to_string(p) + " in (n/2 - 1, n - 2)");
  }
  if (n - m <= 4) {
    steps.push_back("n - m <= 4: Fermat shift");
    return prepend(recipe_fermat_shift(m, n), std::move(steps));
  }
  const Integer rest = n - p;
  if (rest < 7) {
    auto out = try_emit(m, n, Recipe::EvenDenseCase, {p, rest}, with_tail(steps, {"branch: parts {p, n - p}"}));
    if (out) return *out;
    throw Error(ErrorKind::BranchExhausted, pair_label(m, n) + ": {p, n - p} admits m");
  }

  std::vector<GoldbachTriple> triples = goldbach_triples(rest, true);
  for (const auto& t : triples) {
    if (auto out = try_emit(m, n, Recipe::EvenDenseCase, {p, t.p1, t.p2, t.p3},
                            with_tail(steps, {"n - p = " + triple_label(t) + ": parts {p, p1, p2, p3}"}))) {
      return *out;
    }
  }
  steps.push_back("every {p, p1, p2, p3} admits m");
  if (fermat_shift_applies(m, n)) {
    steps.push_back("n - m is a power of two with 2^k + 1 prime: Fermat shift");
    return prepend(recipe_fermat_shift(m, n), std::move(steps));
  }
  const Integer q = m - p;
  if (!(q > 2 && prime(q))) {
    throw Error(ErrorKind::BranchExhausted, pair_label(m, n) + ": m - p = " + std::to_string(q) + " is not an odd prime");
  }
  steps.push_back("p' = m - p = " + std::to_string(q) + " is an odd prime");
  if (auto out = try_emit(m, n, Recipe::EvenDenseCase, {p, rest}, with_tail(steps, {"branch: parts {p, n - p}"}))) {
    return *out;
  }
  steps.push_back("p' divides n - p");
  if (!exact_power(rest, q)) {
    for (Integer r : prime_divisors(rest)) {
      if (r == q) continue;
      std::vector<Integer> parts(static_cast<std::size_t>(rest / r), r);
      parts.push_back(p);
      if (auto out = try_emit(m, n, Recipe::EvenDenseCase, std::move(parts),
                              with_tail(steps, {"branch: p'' = " + std::to_string(r) +
                                                " divides n - p, parts {p, p'' x (n - p)/p''}"}))) {
        return *out;
      }
    }
  } else {
    steps.push_back("n - p is a power of p'");
    for (const auto& t : triples) {
      std::array<Integer, 3> v{t.p1, t.p2, t.p3};
      auto it = std::find(v.begin(), v.end(), q);
      if (it == v.end()) continue;
      std::array<Integer, 2> others{};
      std::size_t j = 0;
      for (auto k = v.begin(); k != v.end(); ++k) {
        if (k != it) others[j++] = *k;
      }
      for (int swap = 0; swap < 2; ++swap) {
        const Integer p2 = others[swap], p3 = others[1 - swap];
        if (p2 <= q) continue;
        if (auto out = try_emit(m, n, Recipe::EvenDenseCase, {p, p2, q + p3},
                                with_tail(steps, {"triple " + triple_label(t) + ": parts {p, p2, p1 + p3}"}))) {
          return *out;
        }
      }
    }
  }
  throw Error(ErrorKind::BranchExhausted, pair_label(m, n) + ": even dense cascade found no certificate");
}

RecipeTrace build_certificate(Integer m, Integer n, const CertificateOptions& options) {
  if (m < 1 || n < 2) throw Error(ErrorKind::InvalidArgument, pair_label(m, n) + ": need m >= 1 and n >= 2");
  if (m == n) throw Error(ErrorKind::InvalidArgument, pair_label(m, n) + ": m = n is provable");
  if (m == 2 && n == 4) throw Error(ErrorKind::InvalidArgument, "(2, 4) is provable");

  std::vector<std::string> dispatch;
  auto attempt = [&](std::string_view name, auto&& recipe) -> std::optional<RecipeTrace> {
    try {
      return prepend(recipe(), {"dispatch: " + std::string(name)});
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Internal) throw;
      dispatch.push_back("skipped " + std::string(name) + ": " + e.what());
      return std::nullopt;
    }
  };
  auto finish = [&](RecipeTrace trace) {
    if (!blocks(trace.decomposition, m)) {
      throw Error(ErrorKind::Internal, "emitted certificate " + trace.decomposition.to_string() + " admits m");
    }
    return prepend(std::move(trace), dispatch);
  };

  const bool m_even = m % 2 == 0, n_even = n % 2 == 0;
  if (m > n) {
    if (auto t = attempt("greater", [&] { return recipe_greater(m, n); })) return finish(*t);
  }
  if (!n_even && n >= 7) {
    if (auto t = attempt("odd", [&] { return recipe_odd(m, n); })) return finish(*t);
  }
  if (auto t = attempt("prime_divisor", [&] { return recipe_prime_divisor(m, n); })) return finish(*t);
  if (prime(m)) {
    if (auto t = attempt("prime_power", [&] { return recipe_prime_power(m, n); })) return finish(*t);
  }
  if (m_even && n_even) {
    if (auto t = attempt("even_gap", [&] { return recipe_even_gap(m, n); })) return finish(*t);
    if (3 <= n / 2 && n / 2 <= m && m < n) {
      if (auto t = attempt("even_dense", [&] { return recipe_even_dense(m, n); })) return finish(*t);
    }
    if (fermat_shift_applies(m, n)) {
      if (auto t = attempt("fermat_shift", [&] { return recipe_fermat_shift(m, n); })) return finish(*t);
    }
  }

  if (n <= options.exhaustive_bound) {
    if (auto d = find_blocking_decomposition(m, n, options.exhaustive_bound)) {
      dispatch.push_back("every recipe failed: exhaustive search");
      return finish(RecipeTrace{m, n, Recipe::ExhaustiveFallback, *d,
                                {"first blocking partition in reverse-lexicographic order"}});
    }
  }
  throw Error(ErrorKind::CertificateSearchFailed, pair_label(m, n) + ": no recipe or search produced a certificate");
}

}  // namespace rcchoice
