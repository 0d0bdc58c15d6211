#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "rcchoice/error.hpp"
#include "rcchoice/rc24.hpp"

using namespace rcchoice;
using namespace rcchoice::rc24;

namespace {

std::array<int, 4> sorted_nu(const ScoreProfile& p) {
  auto nu = p.nu;
  std::sort(nu.begin(), nu.end());
  return nu;
}

}  // namespace

TEST_SUITE("rc24") {
  TEST_CASE("PairChoice") {
    const auto larger = PairChoice::larger_wins({1, 2, 3, 4});
    CHECK(larger.pair_count() == 6);
    CHECK(larger.choose(3, 1) == 3);
    const PairChoice smaller({1, 2, 3, 4}, 0);
    CHECK(smaller.choose(3, 1) == 1);
    CHECK_THROWS_AS(smaller.choose(1, 1), Error);
    CHECK_THROWS_AS(smaller.choose(1, 9), Error);
    CHECK_THROWS_AS(PairChoice({1, 2, 3}, 8), Error);
    CHECK_THROWS_AS(PairChoice({1, 1}, 0), Error);
  }

  TEST_CASE("transitive choice") {
    const auto f2 = PairChoice::larger_wins({1, 2, 3, 4});
    const auto p = score({1, 2, 3, 4}, f2);
    CHECK(p.nu == std::array<int, 4>{0, 1, 2, 3});
    CHECK(p.min_score == 0);
    CHECK(p.minimizers == std::vector<Element>{1});
    const auto c = choose4_with_case({4, 2, 3, 1}, f2);
    CHECK(c.element == 1);
    CHECK(c.fired == Case::SingletonMin);
  }

  TEST_CASE("every orientation: tallies, cases and membership") {
    bool saw_pair = false, saw_triple = false;
    for (std::uint64_t o = 0; o < 64; ++o) {
      const PairChoice f2({0, 1, 2, 3}, o);
      const auto p = score({0, 1, 2, 3}, f2);
      REQUIRE(std::accumulate(p.nu.begin(), p.nu.end(), 0) == 6);
      REQUIRE(p.minimizers.size() != 4);
      const auto c = choose4_with_case({0, 1, 2, 3}, f2);
      REQUIRE((0 <= c.element && c.element <= 3));
      if (sorted_nu(p) == std::array<int, 4>{1, 1, 2, 2}) {
        saw_pair = true;
        CHECK(c.fired == Case::PairMin);
        CHECK(c.element == f2.choose(p.minimizers[0], p.minimizers[1]));
      }
      if (sorted_nu(p) == std::array<int, 4>{1, 1, 1, 3}) {
        saw_triple = true;
        CHECK(c.fired == Case::TripleMin);
        const auto top = std::max_element(p.nu.begin(), p.nu.end()) - p.nu.begin();
        CHECK(c.element == p.z[static_cast<std::size_t>(top)]);
      }
    }
    CHECK(saw_pair);
    CHECK(saw_triple);
  }

  TEST_CASE("census") {
    const auto census = verify_rc24();
    CHECK(census.total == 64);
    CHECK(census.singleton_min == 32);
    CHECK(census.pair_min == 24);
    CHECK(census.triple_min == 8);
    CHECK(census.all_minimizers == 0);
    CHECK(census.equivariance_checks == 64 * 24);
    CHECK(census.failures == 0);
    CHECK(census.all_pass);
  }

  TEST_CASE("equivariance on a six-element universe") {
    // Orientation on {0..5} and its image under a relabeling rho; every
    // 4-subset must choose compatibly.
    const std::vector<Element> universe{0, 1, 2, 3, 4, 5};
    const std::array<Element, 6> rho{3, 0, 5, 1, 4, 2};
    for (std::uint64_t o = 0; o < (std::uint64_t{1} << 15); o += 97) {
      const PairChoice f2(universe, o);
      std::uint64_t moved = 0;
      std::size_t bit = 0;
      for (Element a = 0; a < 6; ++a) {
        for (Element b = a + 1; b < 6; ++b, ++bit) {
          // pair {a, b} of the image comes from {rho^-1 a, rho^-1 b}
          const auto pa = static_cast<Element>(std::find(rho.begin(), rho.end(), a) - rho.begin());
          const auto pb = static_cast<Element>(std::find(rho.begin(), rho.end(), b) - rho.begin());
          if (rho[static_cast<std::size_t>(f2.choose(pa, pb))] == b) moved |= std::uint64_t{1} << bit;
        }
      }
      const PairChoice g2(universe, moved);
      for (Element a = 0; a < 6; ++a) {
        for (Element b = a + 1; b < 6; ++b) {
          for (Element c = b + 1; c < 6; ++c) {
            for (Element d = c + 1; d < 6; ++d) {
              const auto r = [&](Element x) { return rho[static_cast<std::size_t>(x)]; };
              REQUIRE(choose4({r(a), r(b), r(c), r(d)}, g2) == r(choose4({a, b, c, d}, f2)));
            }
          }
        }
      }
    }
  }

  TEST_CASE("bad subsets") {
    const auto f2 = PairChoice::larger_wins({0, 1, 2, 3, 4});
    CHECK_THROWS_AS(score({0, 1, 1, 2}, f2), Error);
    CHECK_THROWS_AS(score({0, 1, 2, 7}, f2), Error);
  }
}
