#include <doctest.h>

#include <random>

#include "segal/cells.hpp"
#include "segal/errors.hpp"

using namespace segal;

namespace {

  // one cell, one endomap
  CellComplex endo(Mapping f) {
    CellComplex c;
    c.sizes = {f.size()};
    c.ops   = {{0, 0, std::move(f)}};
    return c;
  }

  Mapping rotation(std::size_t n) {
    Mapping m(n);
    for (Id i = 0; i < n; ++i) {
      m[i] = static_cast<Id>((i + 1) % n);
    }
    return m;
  }

}  // namespace

TEST_SUITE("cells") {
  TEST_CASE("union-find keeps the smallest representative") {
    DisjointSet s(6);
    s.unite(4, 2);
    s.unite(5, 4);
    CHECK(s.find(5) == 2);
    CHECK_FALSE(s.unite(2, 5));
    CHECK(s.find(3) == 3);
  }

  TEST_CASE("quotient closes under the operators") {
    auto const x = endo({1, 1, 3, 3});
    auto const q = cells::quotient(x, {{0, 0, 2}});
    CHECK(q.object.sizes[0] == 2);
    CHECK(q.projection[0] == Mapping{0, 1, 0, 1});
    CHECK(cells::is_homomorphism(x, q.object, q.projection));
  }

  TEST_CASE("limit of a discrete pair is the product") {
    auto const a = endo({0, 1});
    auto const b = endo({0, 1, 2});
    auto const l = cells::limit({&a, &b}, {});
    CHECK(l.object.sizes[0] == 6);
  }

  TEST_CASE("equalizer and coequalizer of two rotations") {
    auto const z3 = endo(rotation(3));
    auto const id = cells::identity(z3);
    CellMap    r{rotation(3)};
    auto const eq = cells::limit({&z3, &z3}, {{0, 1, id}, {0, 1, r}});
    CHECK(eq.object.sizes[0] == 0);
    auto const co = cells::colimit({&z3, &z3}, {{0, 1, id}, {0, 1, r}});
    CHECK(co.object.sizes[0] == 1);
  }

  TEST_CASE("homomorphisms between cyclic actions") {
    // maps Z/a -> Z/b of free orbits exist iff b divides a
    for (std::size_t a = 1; a <= 6; ++a) {
      for (std::size_t b = 1; b <= 4; ++b) {
        auto const n = cells::count_homomorphisms(endo(rotation(a)), endo(rotation(b)));
        CHECK(n == (a % b == 0 ? b : 0));
      }
    }
  }

  TEST_CASE("partial source operators impose nothing") {
    auto src  = endo({1, UNASSIGNED});
    auto tgt  = endo(rotation(3));
    // 0 is free, 1 is forced to its successor
    CHECK(cells::count_homomorphisms(src, tgt) == 3);
    auto full = endo({1, 0});
    CHECK(cells::count_homomorphisms(full, tgt) == 0);
    auto holes = endo({0, UNASSIGNED});
    CHECK(cells::count_homomorphisms(endo({0}), holes) == 1);
    CHECK(cells::count_homomorphisms(endo({0, 1}), endo({1, UNASSIGNED})) == 0);
  }

  TEST_CASE("isomorphism search recovers a random relabelling") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
      std::size_t const n = 1 + rng() % 7;
      Mapping           f(n), g(n);
      for (auto& v : f) {
        v = static_cast<Id>(rng() % n);
      }
      for (auto& v : g) {
        v = static_cast<Id>(rng() % n);
      }
      CellComplex x;
      x.sizes = {n};
      x.ops   = {{0, 0, f}, {0, 0, g}};
      Mapping perm(n);
      for (Id i = 0; i < n; ++i) {
        perm[i] = i;
      }
      std::shuffle(perm.begin(), perm.end(), rng);
      auto const y   = cells::permute(x, {perm});
      auto const iso = cells::find_isomorphism(x, y);
      REQUIRE(iso);
      CHECK(cells::is_bijective(x, y, *iso));
    }
    CHECK_FALSE(cells::find_isomorphism(endo(rotation(4)), endo({1, 0, 3, 2})));
  }

  TEST_CASE("sub-objects must be closed") {
    auto const x = endo({1, 1, 0});
    CHECK_THROWS_AS(cells::sub_object(x, {{true, false, false}}), ArgumentError);
    auto const c = cells::closure(x, {{false, false, true}});
    CHECK(c[0] == std::vector<bool>{true, true, true});
    auto const s = cells::sub_object(x, {{false, true, false}});
    CHECK(s.object.sizes[0] == 1);
  }
}
