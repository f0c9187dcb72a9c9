#include <doctest.h>

#include "corpus.hpp"
#include "segal/comparison.hpp"
#include "segal/errors.hpp"

using namespace segal;

TEST_SUITE("comparison") {
  TEST_CASE("J is cosimplicial") {
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(cosimplicial_violations(build_J(n)).empty());
    }
    CHECK_THROWS_AS(build_J(3, CofaceReading::swapped), ConstructionError);
    CHECK_FALSE(cosimplicial_violations(build_J(3, CofaceReading::swapped, false)).empty());
  }

  TEST_CASE("coface and codegeneracy formulas") {
    auto const j = build_J(3);
    CHECK(j.coface[2][1] == TheoryMorphism{2, 1, {{0, 1}}});
    CHECK(j.coface[2][2] == TheoryMorphism{2, 1, {{0}}});
    CHECK(j.coface[2][0] == TheoryMorphism{2, 1, {{1}}});
    CHECK(j.codegeneracy[1][0] == TheoryMorphism{1, 2, {{}, {0}}});
  }

  TEST_CASE("codegeneracies are the unique short solutions") {
    // every assignment of generator images of length <= 1, kept only when
    // precomposition reproduces the nerve degeneracies on the idempotent
    // monoid and the identities hold
    std::size_t const n_max = 3;
    auto const        base  = build_J(n_max);
    auto const        m     = corpus::idempotent_monoid();
    for (std::size_t n = 0; n < n_max; ++n) {
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<TheoryMorphism> solutions;
        for (auto const& cand : enumerate_morphisms(n, n + 1, 1, LengthBound::per_entry)) {
          auto j = base;
          j.codegeneracy[n][i] = cand;
          if (!cosimplicial_violations(j).empty()) {
            continue;
          }
          auto const nerve = nerve_monoid(m, n_max).set;
          bool       same  = true;
          for (Id x = 0; x < nerve.size(n); ++x) {
            auto const t = decode_tuple(x, n, m.size);
            std::vector<Id> image;
            for (auto const& w : cand.components) {
              image.push_back(evaluate(m, w, t));
            }
            same = same && nerve.degeneracy(n, i)[x] == encode_tuple(image, m.size);
          }
          if (same) {
            solutions.push_back(cand);
          }
        }
        REQUIRE(solutions.size() == 1);
        CHECK(solutions[0] == base.codegeneracy[n][i]);
      }
    }
  }

  TEST_CASE("J_of agrees with composites") {
    std::size_t const m = 3;
    auto const        j = build_J(m);
    CHECK(J_of({0, 1, 2, 3}, m) == identity_morphism(m));
    for (std::size_t i = 0; i <= m; ++i) {
      std::vector<std::size_t> delta;
      for (std::size_t v = 0; v <= m; ++v) {
        if (v != i) {
          delta.push_back(v);
        }
      }
      CHECK(J_of(delta, m) == j.coface[m][i]);
    }
    // δ^1: [1] -> [2] followed by δ^0: [2] -> [3]
    CHECK(J_of({1, 3}, 3) == compose_theory(j.coface[3][0], j.coface[2][1]));
  }

  TEST_CASE("Yoneda pairing") {
    auto const j = build_J(3);
    for (auto const& m : {trivial_monoid(), cyclic_monoid(2), corpus::idempotent_monoid()}) {
      auto const r = yoneda_compat(m, j);
      CHECK(r.orientation == "identity");
    }
  }

  TEST_CASE("restriction along J") {
    auto const j = build_J(3);
    for (auto const& m : {trivial_monoid(), cyclic_monoid(2), cyclic_monoid(3), corpus::idempotent_monoid()}) {
      auto const x = restrict(algebra_of_monoid(m, 3, 1), j, 3);
      CHECK(validate(x).ok());
      CHECK(iso_check(x, transpose(nerve_monoid(m, 3).set, 1)).map);
    }
    for (std::size_t k = 0; k <= 2; ++k) {
      auto const mk = represented_diagram_M(k, 3, LengthBound::total, 3);
      auto const x  = restrict(mk.diagram, j, 3);
      CHECK(iso_check(x, transpose(nerve_free_monoid(k, 3, 3).set, 0)).map);
    }
    auto const terminal_space = restrict(algebra_of_monoid(trivial_monoid(), 3), j, 3);
    CHECK(iso_check(terminal_space, transpose(terminal(3), 0)).map);
  }

  TEST_CASE("Kan extension of the point") {
    auto const k = kan_extend(corpus::point(2, 1), {2, 2, 2});
    CHECK(k.certified);
    for (auto const& v : k.values) {
      for (std::size_t n = 0; n <= v.truncation(); ++n) {
        CHECK(v.size(n) == 1);
      }
    }
  }

  TEST_CASE("Kan extension structure") {
    KanBounds const b{2, 2, 2};
    auto const      j = build_J(2);
    for (auto const& [name, x] : corpus::reduced_objects(2, 0)) {
      CAPTURE(name);
      auto const k = kan_extend(x, b);
      CHECK(k.partition_stable);
      for (std::size_t m = 0; m <= 2; ++m) {
        CHECK(is_simplicial_map(x.space.column(m), k.values[m], k.unit_component(m)));
      }
      auto const id = kan_map(k, k, {cells::identity(x.space.cells())});
      for (std::size_t d = 0; d <= 2; ++d) {
        for (std::size_t n = 0; n < id[d].size(); ++n) {
          for (Id c = 0; c < id[d][n].size(); ++c) {
            CHECK(id[d][n][c] == c);
          }
        }
      }
    }
  }

  TEST_CASE("adjunction on small pairs") {
    KanBounds const b{2, 2, 2};
    auto const      j = build_J(2);
    for (auto const& [name, x] : corpus::reduced_objects(2, 0)) {
      for (auto const& m : {cyclic_monoid(2), cyclic_monoid(3)}) {
        auto const r = adjunction_check(x, algebra_of_monoid(m, 2, 0), b, j);
        CHECK_MESSAGE(r.bijective(), name, ": ", r.detail);
        CHECK(r.families == r.space_maps);
      }
    }
  }

  TEST_CASE("colimit commutation on a span") {
    auto const objs = corpus::reduced_objects(2, 0);
    auto const& x0  = objs[0].second;
    std::size_t spans = 0;
    for (std::size_t a = 1; a < objs.size(); ++a) {
      auto const& x1 = objs[a].second;
      auto const& x2 = objs[(a % (objs.size() - 1)) + 1].second;
      auto const f1  = corpus::maps_over_O(x0, x1);
      auto const f2  = corpus::maps_over_O(x0, x2);
      if (f1.empty() || f2.empty()) {
        continue;
      }
      auto const r = colimit_commutation(x0, x1, x2, {f1[0]}, {f2[0]}, {2, 2, 2});
      CHECK_MESSAGE(r.bijective, r.detail);
      ++spans;
    }
    CHECK(spans >= 3);
  }

  TEST_CASE("the many-object version") {
    auto const one = build_J_O(1, 3);
    auto const j   = build_J(3);
    CHECK(one.words.coface == j.coface);
    CHECK(one.words.codegeneracy == j.codegeneracy);

    auto const jo = build_J_O(3, 2);
    for (std::vector<Id> x : {std::vector<Id>{0, 1}, {0, 1, 2}, {0, 0, 1}}) {
      std::size_t const n = x.size() - 1;
      auto const c = represented_diagram_C(n, x, 3, 2);
      auto const r = restrict_O(c, jo, 2, 0);
      auto const nerve = nerve_space(nerve_category(free_category(linear_graph(x, 3), 2), 2),
                                     corpus::names(3), 0);
      CHECK(iso_check(r.space, nerve.space).map);
    }
    // d_1 on a composable pair of edges a -> b -> c is their composite a -> c
    auto const c  = represented_diagram_C(2, {0, 1, 2}, 3, 2);
    auto const r  = restrict_O(c, jo, 2, 0);
    std::size_t pairs = 0;
    for (Id e = 0; e < r.space.size(2, 0); ++e) {
      auto const v = outer_vertices(r.space, 2, 0, e);
      if (v == std::vector<Id>{0, 1, 2}) {
        ++pairs;
        auto const composite = r.space.outer_face(2, 0, 1)[e];
        CHECK(outer_vertices(r.space, 1, 0, composite) == std::vector<Id>{0, 2});
      }
    }
    CHECK(pairs == 1);
  }
}
