#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "segal/errors.hpp"
#include "segal/theory.hpp"

using namespace segal;

namespace {

  TheoryMorphism random_morphism(std::mt19937_64& rng, std::size_t m, std::size_t n, std::size_t len) {
    TheoryMorphism f{m, n, {}};
    for (std::size_t j = 0; j < n; ++j) {
      Word w(m == 0 ? 0 : rng() % (len + 1));
      for (auto& l : w) {
        l = static_cast<Id>(rng() % m);
      }
      f.components.push_back(w);
    }
    return f;
  }

}  // namespace

TEST_SUITE("theory") {
  TEST_CASE("word enumeration") {
    auto const one = enumerate_words(1, 3);
    CHECK(one.size() == 4);
    CHECK(format_word(one[3], 1) == "x^3");
    CHECK(enumerate_words(2, 2).size() == 7);
    CHECK(enumerate_words(0, 5).size() == 1);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t L = 0; L <= 3; ++L) {
        std::size_t expected = 0;
        for (std::size_t l = 0; l <= L; ++l) {
          expected += oracle::power(n, l);
        }
        CHECK(enumerate_words(n, L).size() == expected);
      }
    }
  }

  TEST_CASE("composition by substitution") {
    TheoryMorphism const diag{1, 2, {{0}, {0}}};
    TheoryMorphism const mult{2, 1, {{0, 1}}};
    CHECK(compose_theory(diag, mult) == TheoryMorphism{1, 1, {{0, 0}}});

    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
      auto const w = random_morphism(rng, 3, 2, 3);
      CHECK(compose_theory(w, projection(2, 1)).components == std::vector<Word>{w.components[0]});
      CHECK(compose_theory(identity_morphism(3), w) == w);
      CHECK(compose_theory(w, identity_morphism(2)) == w);
      auto const f = random_morphism(rng, 2, 3, 2);
      auto const g = random_morphism(rng, 3, 2, 2);
      auto const h = random_morphism(rng, 2, 2, 2);
      CHECK(compose_theory(compose_theory(f, g), h) == compose_theory(f, compose_theory(g, h)));
    }
  }

  TEST_CASE("hom-set enumeration") {
    CHECK(enumerate_morphisms(1, 2, 2, LengthBound::per_entry).size() == 3 * 3);
    CHECK(enumerate_morphisms(1, 2, 2, LengthBound::total).size() == oracle::word_tuples(1, 2, 2));
    CHECK(enumerate_morphisms(2, 2, 2, LengthBound::total).size() == oracle::word_tuples(2, 2, 2));
  }

  TEST_CASE("monoid tables") {
    CHECK_THROWS(make_monoid({{0, 1}, {1, 1}, {0, 0}}));
    CHECK_THROWS_AS(make_monoid({{0, 1, 2}, {1, 2, 0}, {2, 2, 2}}), ValidationError);
    for (auto const& m : corpus::monoids(10, 5, corpus::kSeed)) {
      CHECK(m.size <= 5);
      CHECK_NOTHROW(validate_monoid(m));
    }
  }

  TEST_CASE("algebras of monoids") {
    auto const triv = algebra_of_monoid(trivial_monoid(), 3);
    for (auto const& v : triv.values) {
      CHECK(v.size(0) == 1);
    }
    auto const m = cyclic_monoid(2);
    auto const a = algebra_of_monoid(m, 3);
    CHECK(a.values[2].size(0) == 4);
    TheoryMorphism const mult{2, 1, {{0, 1}}};
    for (Id x = 0; x < 2; ++x) {
      for (Id y = 0; y < 2; ++y) {
        CHECK(a.act(mult, 0, encode_tuple({x, y}, 2)) == m.multiply(x, y));
      }
    }
    for (auto const& r : corpus::monoids(10, 5, corpus::kSeed)) {
      auto const report = check_product_preservation(algebra_of_monoid(r, 4));
      CHECK_MESSAGE(report.ok, report.detail);
    }
  }

  TEST_CASE("represented diagrams M[k]") {
    auto const m0 = represented_diagram_M(0, 3, LengthBound::total, 3);
    for (auto const& v : m0.diagram.values) {
      CHECK(v.size(0) == 1);
    }
    auto const per   = represented_diagram_M(1, 2, LengthBound::per_entry, 2);
    auto const total = represented_diagram_M(1, 2, LengthBound::total, 2);
    CHECK(per.elements[2].size() == 9);
    CHECK(total.elements[2].size() == 6);
    for (std::size_t k = 0; k <= 2; ++k) {
      for (std::size_t L = 0; L <= 3; ++L) {
        auto const r = represented_diagram_M(k, L, LengthBound::per_entry, 3);
        CHECK(check_product_preservation(r.diagram).ok);
        for (std::size_t n = 0; n <= 3; ++n) {
          CHECK(r.elements[n].size() == oracle::power(r.elements[1].size(), n));
        }
      }
    }
  }

  TEST_CASE("functoriality of M[k]") {
    auto const r = represented_diagram_M(2, 3, LengthBound::per_entry, 2);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
      auto const f = random_morphism(rng, 2, 1, 1);
      auto const g = random_morphism(rng, 1, 2, 1);
      for (Id x = 0; x < r.elements[2].size(); ++x) {
        auto const fx = r.diagram.act(f, 0, x);
        if (!fx) {
          continue;
        }
        auto const gfx = r.diagram.act(g, 0, *fx);
        auto const direct = r.diagram.act(compose_theory(f, g), 0, x);
        if (gfx && direct) {
          CHECK(*gfx == *direct);
        }
      }
      for (Id x = 0; x < r.elements[2].size(); ++x) {
        CHECK(r.diagram.act(identity_morphism(2), 0, x) == x);
      }
    }
  }

  TEST_CASE("free categories") {
    auto const none = free_category({3, {}}, 3);
    CHECK(none.morphisms.size() == 3);
    auto const lin = free_category(linear_graph({0, 1, 2}, 3), 2);
    CHECK(lin.morphisms.size() == 6);
    CHECK(lin.hom(0, 2).size() == 1);
    CHECK(lin.hom(2, 0).empty());
    auto const loop = free_category({1, {{0, 0}}}, 3);
    CHECK(loop.morphisms.size() == enumerate_words(1, 3).size());
  }

  TEST_CASE("represented diagrams C[n]") {
    auto const c0 = represented_diagram_C(0, {0}, 2, 2);
    CHECK(c0.value({{0, 0}}).size() == 1);
    CHECK(c0.value({{0, 1}}).empty());
    auto const c1 = represented_diagram_C(1, {0, 1}, 2, 2);
    CHECK(c1.value({{0, 1}}).size() == 1);
    for (std::size_t L = 0; L <= 3; ++L) {
      auto const one = represented_diagram_C(1, {0, 0}, 1, L);
      auto const m   = represented_diagram_M(1, L, LengthBound::total, 2);
      CHECK(one.value({{0, 0}}).size() == m.elements[1].size());
      CHECK(one.value({{0, 0}, {0, 0}}).size() == m.elements[2].size());
    }
  }
}
