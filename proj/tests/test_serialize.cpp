#include <doctest.h>

#include "rcchoice/error.hpp"
#include "rcchoice/serialize.hpp"

using namespace rcchoice;

TEST_SUITE("serialize") {
  TEST_CASE("classification JSON") {
    const auto c = classify(3, 5);
    const Json j = to_json(c);
    CHECK(j.dump() ==
          R"({"m":3,"n":5,"verdict":"not_provable","reason":"certificate","certificate":{"parts":[5],"recipe":"prime_divisor"},"achievable_sums":[0,5]})");
    const auto back = classification_from_json(Json::parse(j.dump()));
    CHECK(back.m == 3);
    CHECK(back.verdict == c.verdict);
    CHECK(back.certificate == c.certificate);
    CHECK(back.achievable == c.achievable);
    CHECK(to_json(back).at("achievable_sums") == j.at("achievable_sums"));

    const auto p = to_json(classify(2, 4));
    CHECK(p.dump() == R"({"m":2,"n":4,"verdict":"provable","reason":"rc24"})");
    CHECK_THROWS_AS(classification_from_json(Json::parse(R"({"m":2})")), Error);
    CHECK_THROWS_AS(classification_from_json(Json::parse(R"({"m":2,"n":4,"verdict":"maybe","reason":"rc24"})")), Error);
  }

  TEST_CASE("trace JSON round-trip") {
    const auto t = build_certificate(6, 9);
    const Json j = to_json(t);
    CHECK(j.at("parts") == Json::array({7, 2}));
    CHECK(j.at("verified") == true);
    CHECK(trace_from_json(Json::parse(j.dump())) == t);
  }

  TEST_CASE("census JSON round-trip") {
    const auto c = rc24::verify_rc24();
    const Json j = to_json(c);
    CHECK(j.at("total") == 64);
    CHECK(j.at("all_pass") == true);
    const auto back = census_from_json(j);
    CHECK(back.singleton_min == c.singleton_min);
    CHECK(back.pair_min == c.pair_min);
    CHECK(to_json(back) == j);
  }

  TEST_CASE("scan CSV and JSON round-trip") {
    ScanOptions options;
    options.m_max = 12;
    options.n_max = 12;
    const auto report = scan(options);
    CHECK(report.rows.size() == 121);
    CHECK(report.counts.agreeing == 121);
    CHECK(report.rows[0].m == 2);
    CHECK(report.rows[1].n == 3);

    const auto csv = to_csv(report);
    CHECK(csv.rfind("m,n,verdict,recipe,parts\n2,2,provable,diagonal,\n2,3,not_provable,", 0) == 0);
    CHECK(scan_from_csv(csv).same_results(report));
    CHECK(scan_from_json(Json::parse(to_json(report).dump())).same_results(report));
    CHECK_THROWS_AS(scan_from_csv("m,n\n"), Error);
    CHECK_THROWS_AS(scan_from_csv("m,n,verdict,recipe,parts\n2,x,provable,diagonal,\n"), Error);
  }

  TEST_CASE("scan is deterministic across thread counts") {
    ScanOptions options;
    options.m_max = 20;
    options.n_max = 20;
    options.threads = 1;
    const auto one = scan(options);
    options.threads = 4;
    const auto four = scan(options);
    CHECK(one.same_results(four));
    CHECK(to_csv(one) == to_csv(four));
  }

  TEST_CASE("scan bounds") {
    ScanOptions options;
    options.m_max = 10;
    options.n_max = 70;
    CHECK_THROWS_AS(scan(options), Error);
    options.constructive_only = true;
    CHECK(scan(options).counts.agreeing == 9 * 69);
  }
}
