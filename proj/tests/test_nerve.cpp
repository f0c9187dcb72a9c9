#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "segal/nerve.hpp"

using namespace segal;

TEST_SUITE("nerve") {
  TEST_CASE("nerves of finite monoids") {
    auto const t = nerve_monoid(trivial_monoid(), 3).set;
    for (std::size_t k = 0; k <= 3; ++k) {
      CHECK(t.size(k) == 1);
    }
    auto const m = cyclic_monoid(2);
    auto const z = nerve_monoid(m, 3).set;
    CHECK(z.sizes() == std::vector<std::size_t>{1, 2, 4, 8});
    for (Id a = 0; a < 2; ++a) {
      for (Id b = 0; b < 2; ++b) {
        CHECK(z.face(2, 1)[encode_tuple({a, b}, 2)] == m.multiply(a, b));
        CHECK(z.face(2, 0)[encode_tuple({a, b}, 2)] == b);
        CHECK(z.face(2, 2)[encode_tuple({a, b}, 2)] == a);
      }
    }
    for (auto const& r : corpus::monoids(10, 5, corpus::kSeed)) {
      auto const x = nerve_monoid(r, 3).set;
      CHECK(validate(x).ok());
      for (std::size_t k = 0; k <= 3; ++k) {
        CHECK(x.size(k) == oracle::power(r.size, k));
      }
    }
  }

  TEST_CASE("nerves of truncated free monoids") {
    auto const x = nerve_free_monoid(1, 2, 2).set;
    CHECK(x.size(2) == 6);
    for (std::size_t L = 0; L <= 4; ++L) {
      auto const y = nerve_free_monoid(1, 4, L).set;
      CHECK(validate(y).ok());
      for (std::size_t j = 0; j <= 4; ++j) {
        CHECK(y.size(j) == oracle::binomial(j + L, j));
      }
    }
    auto const p = nerve_free_monoid(0, 3, 2).set;
    for (std::size_t j = 0; j <= 3; ++j) {
      CHECK(p.size(j) == 1);
    }
    auto const f3 = nerve_free_monoid(3, 4, 4).set;
    for (std::size_t j = 0; j <= 4; ++j) {
      CHECK(f3.size(j) == oracle::word_tuples(3, j, 4));
    }
  }

  TEST_CASE("nerves of free categories") {
    auto const lin = nerve_category(free_category(linear_graph({0, 1, 2}, 3), 2), 3).set;
    CHECK(lin.size(1) == 6);
    CHECK(lin.size(2) == 10);
    CHECK(validate(lin).ok());

    auto const discrete_nerve = nerve_category(free_category({3, {}}, 2), 3).set;
    CHECK(discrete_nerve.sizes() == std::vector<std::size_t>{3, 3, 3, 3});

    for (std::size_t L = 0; L <= 3; ++L) {
      auto const loop = nerve_category(free_category({1, {{0, 0}}}, L), 3).set;
      CHECK(iso_check(loop, nerve_free_monoid(1, 3, L).set).map);
    }
    for (auto const& g : corpus::dags(10, corpus::kSeed)) {
      CHECK(validate(nerve_category(free_category(g, 3), 3).set).ok());
    }
  }

  TEST_CASE("composable pairs match the path enumeration") {
    for (auto const& g : corpus::dags(10, corpus::kSeed)) {
      auto const c = free_category(g, 3);
      auto const x = nerve_category(c, 2).set;
      std::size_t pairs = 0;
      for (auto const& f : c.morphisms) {
        for (auto const& h : c.morphisms) {
          pairs += f.target == h.source && f.edges.size() + h.edges.size() <= 3;
        }
      }
      CHECK(x.size(2) == pairs);
    }
  }
}
