#include <doctest.h>

#include "oracles.hpp"
#include "rcchoice/certificates.hpp"
#include "rcchoice/classify.hpp"
#include "rcchoice/error.hpp"

using namespace rcchoice;

namespace {

Decomposition D(std::vector<Integer> parts) { return Decomposition(std::move(parts)); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_SUITE("certificates") {
  TEST_CASE("recipe names round-trip") {
    for (Recipe r : {Recipe::GreaterCase, Recipe::PrimeDivisorCase, Recipe::PrimePowerCase, Recipe::OddCase,
                     Recipe::FermatShiftCase, Recipe::EvenGapCase, Recipe::EvenDenseCase, Recipe::ExhaustiveFallback}) {
      CHECK(recipe_from_string(to_string(r)) == r);
    }
    CHECK(to_string(Recipe::PrimeDivisorCase) == "prime_divisor");
    CHECK_FALSE(recipe_from_string("nope").has_value());
  }

  TEST_CASE("greater") {
    CHECK(recipe_greater(7, 5).decomposition == D({5}));
    CHECK(recipe_greater(10, 2).decomposition == D({2}));
    CHECK(recipe_greater(6, 4).decomposition == D({4}));
    CHECK_THROWS_AS(recipe_greater(4, 6), Error);
  }

  TEST_CASE("prime_divisor") {
    CHECK(recipe_prime_divisor(2, 3).decomposition == D({3}));
    CHECK(recipe_prime_divisor(4, 6).decomposition == D({3, 3}));
    CHECK(recipe_prime_divisor(9, 10).decomposition == D({2, 2, 2, 2, 2}));
    CHECK(kind_of([] { recipe_prime_divisor(6, 12); }) == ErrorKind::NoSuchPrime);
  }

  TEST_CASE("prime_power") {
    CHECK(recipe_prime_power(2, 8).decomposition == D({5, 3}));
    CHECK(recipe_prime_power(3, 9).decomposition == D({5, 4}));
    CHECK_THROWS_AS(recipe_prime_power(2, 4), Error);
    CHECK_THROWS_AS(recipe_prime_power(4, 16), Error);
  }

  TEST_CASE("odd") {
    CHECK(recipe_odd(6, 9, GoldbachTriple{3, 3, 3}).decomposition == D({7, 2}));
    CHECK(recipe_odd(6, 9).recipe == Recipe::OddCase);
    CHECK_THROWS_AS(recipe_odd(4, 5), Error);
    CHECK_THROWS_AS(recipe_odd(4, 10), Error);
  }

  TEST_CASE("fermat_shift") {
    CHECK(recipe_fermat_shift(4, 6).decomposition == D({3, 3}));
    CHECK(recipe_fermat_shift(6, 10).decomposition == D({5, 5}));
    CHECK(recipe_fermat_shift(8, 12).decomposition == D({7, 5}));
    CHECK_THROWS_AS(recipe_fermat_shift(4, 11), Error);  // 7 is not a power of two
    CHECK_THROWS_AS(recipe_fermat_shift(4, 12), Error);  // 2^3 + 1 = 9 is not prime
  }

  TEST_CASE("even_gap") {
    CHECK(recipe_even_gap(4, 10, 7).decomposition == D({7, 3}));
    CHECK(recipe_even_gap(2, 10, 5).decomposition == D({5, 5}));
    CHECK_FALSE(blocks(D({7, 3, 3, 3}), 6));
    const auto six_sixteen = recipe_even_gap(6, 16);
    CHECK(blocks(six_sixteen.decomposition, 6));
    CHECK(six_sixteen.decomposition != D({7, 3, 3, 3}));
  }

  TEST_CASE("even_dense") {
    const auto t = recipe_even_dense(6, 8);
    CHECK(t.decomposition == D({5, 3}));
    CHECK(blocks(recipe_even_dense(8, 14).decomposition, 8));
    CHECK_THROWS_AS(recipe_even_dense(2, 10), Error);
  }

  TEST_CASE("build_certificate examples") {
    const auto a = build_certificate(3, 5);
    CHECK(a.recipe == Recipe::PrimeDivisorCase);
    CHECK(a.decomposition == D({5}));
    const auto b = build_certificate(2, 8);
    CHECK(b.recipe == Recipe::PrimePowerCase);
    CHECK(b.decomposition == D({5, 3}));
    const auto c = build_certificate(12, 14);
    CHECK(blocks(c.decomposition, 12));
    CHECK(find_blocking_decomposition(12, 14).has_value());
    CHECK(build_certificate(6, 9).decomposition == D({7, 2}));
    CHECK_THROWS_AS(build_certificate(2, 4), Error);
    CHECK_THROWS_AS(build_certificate(5, 5), Error);
  }

  TEST_CASE("every recipe output blocks m") {
    for (Integer n = 2; n <= 60; ++n) {
      for (Integer m = 1; m <= 62; ++m) {
        if (m == n || (m == 2 && n == 4)) continue;
        const auto t = build_certificate(m, n);
        REQUIRE(t.m == m);
        REQUIRE(t.n == n);
        REQUIRE(t.decomposition.total() == n);
        REQUIRE(blocks(t.decomposition, m));
        REQUIRE(!t.narrative.empty());
      }
    }
  }

  TEST_CASE("recipes alone suffice beyond the exhaustive range") {
    CertificateOptions options;
    options.exhaustive_bound = 2;
    for (Integer n = 2; n <= 400; ++n) {
      for (Integer m = 1; m < n; ++m) {
        if (m == 2 && n == 4) continue;
        const auto t = build_certificate(m, n, options);
        REQUIRE(t.recipe != Recipe::ExhaustiveFallback);
        REQUIRE(blocks(t.decomposition, m));
      }
    }
  }

  TEST_CASE("classify examples") {
    const auto diag = classify(5, 5);
    CHECK(diag.verdict == Verdict::Provable);
    CHECK(diag.reason == Reason::Diagonal);
    const auto rc24 = classify(2, 4);
    CHECK(rc24.verdict == Verdict::Provable);
    CHECK(rc24.reason == Reason::RC24);
    const auto c = classify(4, 6);
    CHECK(c.verdict == Verdict::NotProvable);
    CHECK(c.certificate == D({3, 3}));
    CHECK(c.achievable->values() == std::vector<Integer>{0, 3, 6});
    CHECK(classify(1, 1).reason == Reason::Diagonal);
    CHECK(classify(1, 7).verdict == Verdict::NotProvable);
    CHECK_THROWS_AS(classify(3, 1), Error);
    CHECK_THROWS_AS(classify(0, 4), Error);
  }

  TEST_CASE("classify with the oracle agrees with the brute-force partition oracle") {
    ClassifyOptions options;
    options.oracle = true;
    for (Integer n = 2; n <= 14; ++n) {
      for (Integer m = 1; m <= 16; ++m) {
        const auto c = classify(m, n, options);
        REQUIRE((c.verdict == Verdict::NotProvable) == oracle::some_partition_blocks(m, n));
        REQUIRE(c.exhaustive_checked);
        REQUIRE((c.verdict == Verdict::Provable) == predicted_provable(m, n));
      }
    }
  }
}
