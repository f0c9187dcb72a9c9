#include <doctest.h>

#include "corpus.hpp"
#include "segal/nerve.hpp"
#include "segal/simplicial_space.hpp"

using namespace segal;

namespace {

  std::size_t nondegenerate_outer(SegalPrecategory const& x, std::size_t m) {
    return x.space.row(0).nondegenerate_counts().at(m);
  }

}  // namespace

TEST_SUITE("simplicial_space") {
  TEST_CASE("transposes") {
    auto const pt = transpose(generate(StandardKind::simplex, 0, std::nullopt, 3), 2);
    for (std::size_t m = 0; m <= 3; ++m) {
      for (std::size_t n = 0; n <= 2; ++n) {
        CHECK(pt.size(m, n) == 1);
      }
    }
    auto const d1 = generate(StandardKind::simplex, 1, std::nullopt, 3);
    auto const t  = transpose(d1, 2);
    CHECK(validate(t).ok());
    for (std::size_t m = 0; m <= 3; ++m) {
      for (std::size_t n = 0; n <= 2; ++n) {
        CHECK(t.size(m, n) == d1.size(m));
      }
    }
    CHECK(t.row(1) == d1);
    auto const z2 = transpose(nerve_monoid(cyclic_monoid(2), 3).set, 3);
    for (std::size_t n = 0; n <= 3; ++n) {
      CHECK(z2.size(2, n) == 4);
    }
  }

  TEST_CASE("labelled simplices") {
    auto const pt = labeled_simplex(0, {0}, point_object(), 2, 1);
    CHECK(iso_check(pt.space, corpus::point(2, 1).space).map);

    auto const e = labeled_simplex(1, {0, 1}, corpus::names(3), 2, 1);
    CHECK(validate(e.space).ok());
    for (std::size_t n = 0; n <= 1; ++n) {
      CHECK(e.space.size(0, n) == 3);
    }
    CHECK(nondegenerate_outer(e, 1) == 1);

    auto const d2 = labeled_simplex(2, {0, 0, 0}, point_object(), 2, 1);
    CHECK(d2.reduced());
    CHECK(d2.space.row(0).nondegenerate_counts() == std::vector<std::size_t>{1, 3, 1});
  }

  TEST_CASE("spines") {
    auto const g1 = g_object(1, {0, 1}, corpus::names(2), 2, 1).object;
    CHECK(iso_check(g1.space, labeled_simplex(1, {0, 1}, corpus::names(2), 2, 1).space).map);

    auto const g2 = g_object(2, {0, 0, 0}, point_object(), 2, 1);
    CHECK(nondegenerate_outer(g2.object, 1) == 2);
    CHECK(nondegenerate_outer(g2.object, 2) == 0);
    CHECK(is_space_map(g2.object.space, labeled_simplex(2, {0, 0, 0}, point_object(), 2, 1).space,
                       g2.inclusion));

    auto const g3   = g_object(3, {0, 1, 0, 1}, corpus::names(2), 3, 0).object;
    auto const row  = g3.space.row(0);
    auto const mask = row.degenerate_mask();
    std::size_t edges = 0;
    for (Id e = 0; e < row.size(1); ++e) {
      if (!mask[1][e]) {
        ++edges;
        auto const v = outer_vertices(g3.space, 1, 0, e);
        CHECK(v[0] != v[1]);
      }
    }
    CHECK(edges == 3);
  }

  TEST_CASE("reduction") {
    auto const c = reduce(constant_space(generate(StandardKind::simplex, 1, std::nullopt, 2), 2));
    CHECK(c.object.objects.size() == 1);
    CHECK(c.object.space.size(0, 0) == 1);

    auto const n = corpus::monoid_nerve(cyclic_monoid(3), 3, 1);
    CHECK(iso_check(reduce(n.space).object.space, n.space).map);

    auto const d1 = generate(StandardKind::simplex, 1, std::nullopt, 2);
    auto const b  = reduce(box(d1, d1));
    CHECK(b.object.objects.size() == 2);
    CHECK(validate(b.object.space).ok());
  }

  TEST_CASE("generating objects") {
    auto const q00 = generating_object(GeneratingKind::Q, 0, 0, std::nullopt, {0}, point_object(), 2, 1);
    CHECK(iso_check(q00.space, corpus::point(2, 1).space).map);

    auto const O   = corpus::names(2);
    auto const p11 = generating_object(GeneratingKind::P, 1, 1, std::nullopt, {0, 1}, O, 2, 2);
    for (std::size_t n = 0; n <= 2; ++n) {
      CHECK(p11.space.size(0, n) == O.size());
    }
    // levelwise: Δ[1]_1 × (Δ[1]_{a,b})_1 has 3 × 3 pairs; the 3 × 2 pairs
    // over a degenerate vertex collapse onto the 2 objects
    std::size_t const pairs     = 3 * 3;
    std::size_t const collapsed = 3 * 2;
    auto const q11 = generating_object(GeneratingKind::Q, 1, 1, std::nullopt, {0, 1}, O, 2, 2);
    CHECK(validate(q11.space).ok());
    CHECK(q11.space.size(1, 1) == pairs - collapsed + O.size());
  }

  TEST_CASE("limits and colimits over a fixed object set") {
    auto const O  = corpus::names(2);
    auto const ab = labeled_simplex(1, {0, 1}, O, 2, 1);
    auto const lim = limit_O({{ab, ab}, {}});
    for (std::size_t n = 0; n <= 1; ++n) {
      CHECK(lim.object.space.size(0, n) == O.size());
    }
    auto const colim = colimit_O({{ab, ab}, {}});
    CHECK(colim.object.space.size(0, 0) == O.size());
    CHECK(nondegenerate_outer(colim.object, 1) == 2);

    auto const one = limit_O({{ab}, {}});
    CHECK(iso_check(one.object.space, ab.space).map);
    auto const one_c = colimit_O({{ab}, {}});
    CHECK(iso_check(one_c.object.space, ab.space).map);
  }

  TEST_CASE("universal properties on seeded diagrams") {
    auto const tests = corpus::over_ab(2, 0);
    std::size_t checked = 0;
    for (auto const& c : corpus::diagrams(corpus::kSeed, 2, 0)) {
      auto const lim   = limit_O(c.diagram);
      auto const colim = colimit_O(c.diagram);
      CHECK(validate(lim.object.space).ok());
      CHECK(validate(colim.object.space).ok());
      for (auto const& w : tests) {
        CHECK(corpus::check_limit(c.diagram, lim, w).ok);
        CHECK(corpus::check_colimit(c.diagram, colim, w).ok);
      }
      ++checked;
    }
    CHECK(checked >= 20);
  }

  TEST_CASE("span colimit with matching degree zero is the levelwise pushout") {
    auto const O  = corpus::names(2);
    auto const a  = labeled_simplex(0, {0}, O, 2, 0);
    auto const e  = labeled_simplex(1, {0, 1}, O, 2, 0);
    auto const f  = corpus::maps_over_O(a, e).at(0);
    auto const po = colimit_O({{a, e, e}, {{0, 1, f}, {0, 2, f}}});
    auto const direct = pushout(a.space.row(0), e.space.row(0), e.space.row(0), {f}, {f});
    CHECK(iso_check(po.object.space.row(0), direct.object).map);
  }
}
