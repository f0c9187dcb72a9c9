#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "segal/segal_checker.hpp"

using namespace segal;

TEST_SUITE("segal_checker") {
  TEST_CASE("nerves are strict") {
    auto const z2 = corpus::monoid_nerve(cyclic_monoid(2), 4, 1);
    auto const r  = segal_map(z2, 2);
    CHECK(r.verdict == Verdict::bijective);
    CHECK(r.levels[0].domain == 4);
    CHECK(r.levels[0].codomain == 4);
    for (auto const& m : corpus::monoids(10, 5, corpus::kSeed)) {
      auto const check = strict_segal_check(corpus::monoid_nerve(m, 4, 1), 4);
      CHECK(check.passed);
    }
    auto const lin = nerve_space(nerve_category(free_category(linear_graph({0, 1, 2}, 3), 2), 3),
                                 corpus::names(3), 1);
    auto const l2  = segal_map(lin, 2);
    CHECK(l2.verdict == Verdict::bijective);
    CHECK(l2.levels[0].domain == 10);
    CHECK(l2.levels[0].codomain == 10);
  }

  TEST_CASE("codomains match composable tuples") {
    for (auto const& g : corpus::dags(6, corpus::kSeed)) {
      auto const nerve = nerve_category(free_category(g, 4), 4);
      auto const x     = nerve_space(nerve, corpus::names(g.objects), 0);
      auto const& set  = nerve.set;
      for (std::size_t k = 2; k <= 3; ++k) {
        // chains e_1 .. e_k of 1-simplices with d_0 e_i = d_1 e_{i+1}
        std::size_t chains = 0;
        std::vector<Id> pick(k, 0);
        auto rec = [&](auto&& self, std::size_t i) -> void {
          if (i == k) {
            ++chains;
            return;
          }
          for (Id e = 0; e < set.size(1); ++e) {
            if (i > 0 && set.face(1, 0)[pick[i - 1]] != set.face(1, 1)[e]) {
              continue;
            }
            pick[i] = e;
            self(self, i + 1);
          }
        };
        rec(rec, 0);
        CHECK(segal_map(x, k).levels[0].codomain == chains);
      }
    }
  }

  TEST_CASE("the reduced 2-simplex is not Segal") {
    auto const r = segal_map(labeled_simplex(2, {0, 0, 0}, point_object(), 2, 0), 2);
    CHECK(r.verdict == Verdict::injective_only);
    CHECK(r.levels[0].domain == 8);
    CHECK(r.levels[0].codomain == 16);
    CHECK_FALSE(r.levels[0].witness.empty());
  }

  TEST_CASE("reduced spines fail at the top level") {
    for (std::size_t k = 2; k <= 3; ++k) {
      auto const g = g_object(k, std::vector<Id>(k + 1, 0), point_object(), k, 0).object;
      for (std::size_t j = 1; j <= k; ++j) {
        CHECK(g.space.size(j, 0) == 1 + k * j);
      }
      auto const r = segal_map(g, k);
      CHECK(r.verdict != Verdict::bijective);
      CHECK(r.levels[0].codomain == oracle::power(k + 1, k));
    }
    auto const g2 = g_object(2, {0, 1, 0}, corpus::names(2), 2, 0).object;
    CHECK_FALSE(strict_segal_check(g2, 2).passed);
  }

  TEST_CASE("truncation artifacts are told apart by a grading") {
    std::size_t const L = 2;
    auto const nerve = nerve_free_monoid(2, 3, L);
    auto const x     = nerve_space(nerve, point_object(), 0);
    auto const words = free_monoid_tuples(2, 3, L);
    Grading    grading;
    grading.bound = L;
    grading.degree.emplace_back();
    for (auto const& t : words[1]) {
      grading.degree[0].push_back(t[0].size());
    }
    auto const raw = strict_segal_check(x, 3);
    CHECK_FALSE(raw.passed);
    auto const graded = strict_segal_check(x, 3, grading);
    CHECK(graded.truncation_artifact);
    std::size_t graded_rows = 0;
    for (auto const& row : graded.rows) {
      if (row.k < 2) {
        continue;
      }
      ++graded_rows;
      REQUIRE(row.graded_verdict);
      CHECK(*row.graded_verdict == Verdict::bijective);
      CHECK(row.graded_codomain == oracle::word_tuples(2, row.k, L));
      REQUIRE(row.power_ok);
      CHECK_FALSE(*row.power_ok);
    }
    CHECK(graded_rows == 2);
    auto const g2 = strict_segal_check(g_object(2, {0, 0, 0}, point_object(), 2, 0).object, 2);
    CHECK_FALSE(g2.truncation_artifact);
  }

  TEST_CASE("projections restrict to the spine") {
    for (std::size_t k = 0; k <= 3; ++k) {
      auto const r = projection_shadow(k, 3);
      CHECK_MESSAGE(r.passed(), r.detail);
    }
  }
}
