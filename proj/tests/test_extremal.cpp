#include <doctest.h>

#include <set>

#include "kgraphic/decider.hpp"
#include "kgraphic/errors.hpp"
#include "kgraphic/extremal.hpp"
#include "support.hpp"

using namespace kgraphic;

TEST_CASE("enumerate_graphic_sequences examples") {
  const auto three = enumerate_graphic_sequences(3);
  REQUIRE(three.size() == 2);
  CHECK(three[0].vector() == std::vector<int>{2, 2, 2});
  CHECK(three[1].vector() == std::vector<int>{2, 1, 1});
  const auto top = enumerate_graphic_sequences(4, 12);
  REQUIRE(top.size() == 1);
  CHECK(top[0].vector() == std::vector<int>{3, 3, 3, 3});
  CHECK_THROWS_AS(enumerate_graphic_sequences(0), InvalidInput);
}

TEST_CASE("enumeration equals the positive degree sets of all labeled graphs, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<int>> truth;
    for (const auto& d : kgtest::realizable_by_brute_force(n)) {
      if (d.back() > 0) truth.insert(d);
    }
    std::set<std::vector<int>> got;
    for (const auto& p : enumerate_graphic_sequences(n)) got.insert(p.vector());
    INFO("n=" << n);
    CHECK(got == truth);
  }
  CHECK(enumerate_graphic_sequences(7).size() == 240);
}

TEST_CASE("enumeration order is sigma descending then lexicographic descending") {
  const auto all = enumerate_graphic_sequences(8);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto& a = all[i - 1];
    const auto& b = all[i];
    CHECK((a.sigma() > b.sigma() || (a.sigma() == b.sigma() && a > b)));
  }
}

TEST_CASE("small sweeps") {
  const auto seven = sigma_extremal_k25(7, SweepMode::Both);
  CHECK(seven.total == 240);
  CHECK(seven.clean());
  REQUIRE(seven.sigma_extremal.has_value());
  CHECK(*seven.sigma_extremal == 34);
  CHECK(seven.potentially + seven.not_potentially.size() == seven.total);

  const auto eight = sigma_extremal_k25(8, SweepMode::Decider);
  const auto eight_oracle = sigma_extremal_k25(8, SweepMode::Oracle);
  REQUIRE(eight.sigma_extremal.has_value());
  CHECK(*eight.sigma_extremal == 38);
  CHECK(eight.sigma_extremal == eight_oracle.sigma_extremal);
  CHECK(eight.potentially == eight_oracle.potentially);
}

TEST_CASE("sweep ceilings") {
  CHECK_THROWS_AS(sigma_extremal_k25(13, SweepMode::Decider), InvalidInput);
  CHECK_THROWS_AS(sigma_extremal_k25(37, SweepMode::Decider), InvalidInput);
  CHECK_THROWS_AS(sigma_extremal_k25(10, SweepMode::Oracle), InvalidInput);
  CHECK_THROWS_AS(sigma_extremal_k25(6, SweepMode::Decider), InvalidInput);
  CHECK(parse_sweep_mode("both") == SweepMode::Both);
  CHECK_FALSE(parse_sweep_mode("all").has_value());
}

TEST_CASE("witness examples") {
  const auto a = witness_check(37);
  CHECK(a.ok);
  CHECK(a.lower_bound == 182);
  const auto b = witness_check(38);
  CHECK(b.ok);
  CHECK(b.lower_bound == 188);
  const auto c = witness_check(9);
  CHECK(render(c.seq) == "8,5,4^6,3");
  CHECK(c.sigma == 40);
  CHECK(c.ok);
}

TEST_CASE("witnesses hold for every n in 7..101") {
  for (int n = 7; n <= 101; ++n) {
    const auto w = witness_check(n);
    INFO("n=" << n);
    CHECK(w.graphic);
    CHECK(w.sigma == (n % 2 ? 5 * n - 5 : 5 * n - 4));
    CHECK_FALSE(w.decider_decision);
    CHECK(w.failed_condition == 2);
    CHECK(w.lower_bound == (n % 2 ? 5 * n - 3 : 5 * n - 2));
    CHECK(w.ok);
  }
}

TEST_CASE("formula consistency for n in 37..60") {
  for (int n = 37; n <= 60; ++n) {
    const auto r = sigma_formula_consistency(n);
    INFO("n=" << n);
    for (const auto& f : r.failures) INFO(f);
    CHECK(r.ok());
    CHECK(r.max_exception_sigma < r.threshold);
    CHECK(r.max_condition3_sigma < r.threshold);
    CHECK(r.bound_small_d2 == 5 * n - 5);
    CHECK(r.bound_small_d7 == 2 * n + 18);
    CHECK(r.bound_small_d3 == 5 * n - 4);
    CHECK(r.bound_small_d7_star == 3 * n + 12);
  }
  CHECK_THROWS_AS(sigma_formula_consistency(36), InvalidInput);
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (int h : hits) CHECK(h == 1);
}
