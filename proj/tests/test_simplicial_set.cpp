#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "segal/nerve.hpp"
#include "segal/simplicial_set.hpp"

using namespace segal;

namespace {

  // The vertex inclusion of Δ[0] into Δ[1] hitting vertex v.
  SimplicialMap vertex_of_edge(std::size_t trunc, Id v) {
    auto const maps = cells::homomorphisms(generate(StandardKind::simplex, 0, std::nullopt, trunc).cells(),
                                           generate(StandardKind::simplex, 1, std::nullopt, trunc).cells());
    for (auto const& m : maps) {
      if (m[0][0] == v) {
        return {m};
      }
    }
    FAIL("no vertex inclusion");
    return {};
  }

}  // namespace

TEST_SUITE("simplicial_set") {
  TEST_CASE("level sizes of the standard simplex") {
    for (std::size_t n = 0; n <= 3; ++n) {
      auto const x = generate(StandardKind::simplex, n, std::nullopt, 4);
      for (std::size_t k = 0; k <= 4; ++k) {
        CHECK(x.size(k) == oracle::monotone(k + 1, n));
        CHECK(x.size(k) == oracle::binomial(n + k + 1, k + 1));
      }
    }
  }

  TEST_CASE("nondegenerate counts") {
    using V = std::vector<std::size_t>;
    CHECK(generate(StandardKind::simplex, 2, std::nullopt, 3).nondegenerate_counts() == V{3, 3, 1, 0});
    CHECK(generate(StandardKind::boundary, 2, std::nullopt, 3).nondegenerate_counts() == V{3, 3, 0, 0});
    CHECK(generate(StandardKind::horn, 2, 1, 3).nondegenerate_counts() == V{3, 2, 0, 0});
  }

  TEST_CASE("generated objects and nerves satisfy the identities") {
    for (std::size_t n = 0; n <= 3; ++n) {
      CHECK(validate(generate(StandardKind::simplex, n, std::nullopt, 4)).ok());
      if (n > 0) {
        CHECK(validate(generate(StandardKind::boundary, n, std::nullopt, 4)).ok());
        for (std::size_t k = 0; k <= n; ++k) {
          CHECK(validate(generate(StandardKind::horn, n, k, 4)).ok());
        }
      }
    }
    CHECK(validate(nerve_monoid(cyclic_monoid(2), 3).set).ok());
    for (auto const& m : corpus::monoids(5, 5, corpus::kSeed)) {
      CHECK(validate(nerve_monoid(m, 3).set).ok());
    }
  }

  TEST_CASE("a corrupted face is reported with its witness") {
    auto       x = generate(StandardKind::simplex, 2, std::nullopt, 3);
    auto       c = x.cells();
    auto&      f = c.ops[SimplicialSet::face_op(2, 0)].map;
    f[5]         = f[5] == 0 ? 1 : 0;
    auto const r = validate(SimplicialSet(3, c));
    REQUIRE_FALSE(r.ok());
    bool named = false;
    for (auto const& v : r.violations) {
      named = named || (v.level >= 2 && !v.describe().empty());
    }
    CHECK(named);
  }

  TEST_CASE("pushouts and pullbacks") {
    auto const e   = generate(StandardKind::simplex, 1, std::nullopt, 2);
    auto const pt  = generate(StandardKind::simplex, 0, std::nullopt, 2);
    auto const v0  = vertex_of_edge(2, 0);
    auto const v1  = vertex_of_edge(2, 1);
    auto const w   = pushout(pt, e, e, v1, v0);
    CHECK(w.object.nondegenerate_counts() == std::vector<std::size_t>{3, 2, 0});
    CHECK(validate(w.object).ok());

    auto const empty = discrete(0, 2);
    CellMap    none(3);
    auto const sum   = pushout(empty, e, pt, {none}, {none});
    CHECK(sum.object.sizes() == coproduct({e, pt}).sizes());

    auto const pb = pullback(pt, pt, e, v0, v1);
    for (std::size_t k = 0; k <= 2; ++k) {
      CHECK(pb.object.size(k) == 0);
    }
    auto const prod = pullback(e, e, terminal(2), {cells::homomorphisms(e.cells(), terminal(2).cells())[0]},
                               {cells::homomorphisms(e.cells(), terminal(2).cells())[0]});
    CHECK(prod.object.sizes() == product(e, e).sizes());
  }

  TEST_CASE("components") {
    CHECK(pi0(generate(StandardKind::simplex, 3, std::nullopt, 3)).count == 1);
    CHECK(pi0(coproduct({generate(StandardKind::simplex, 0, std::nullopt, 2),
                         generate(StandardKind::simplex, 1, std::nullopt, 2)}))
              .count
          == 2);
    CHECK(pi0(generate(StandardKind::boundary, 2, std::nullopt, 2)).count == 1);
    CHECK(pi0(generate(StandardKind::boundary, 1, std::nullopt, 2)).count == 2);
  }

  TEST_CASE("isomorphism check") {
    auto const x = nerve_monoid(cyclic_monoid(2), 3).set;
    auto const self = iso_check(x, x);
    REQUIRE(self.map);
    CHECK(is_simplicial_map(x, x, *self.map));

    auto const r = iso_check(generate(StandardKind::simplex, 1, std::nullopt, 2),
                             generate(StandardKind::boundary, 2, std::nullopt, 2));
    CHECK_FALSE(r.map);
    CHECK_FALSE(r.witness.empty());

    CellMap perm;
    for (std::size_t k = 0; k <= 3; ++k) {
      Mapping p(x.size(k));
      for (Id i = 0; i < p.size(); ++i) {
        p[i] = static_cast<Id>(p.size() - 1 - i);
      }
      perm.push_back(p);
    }
    auto const y = SimplicialSet(3, cells::permute(x.cells(), perm));
    auto const found = iso_check(x, y);
    REQUIRE(found.map);
    CHECK(is_simplicial_map(x, y, *found.map));
  }

  TEST_CASE("monotone action and normal form") {
    auto const d2 = generate(StandardKind::simplex, 2, std::nullopt, 3);
    auto const s  = standard_simplices(StandardKind::simplex, 2, std::nullopt, 3);
    auto const top = static_cast<Id>(std::find(s[2].begin(), s[2].end(), std::vector<std::size_t>{0, 1, 2})
                                     - s[2].begin());
    for (std::vector<std::size_t> theta : {std::vector<std::size_t>{0, 2}, {1, 2}, {0, 0, 1, 2}, {2}}) {
      auto const got = apply_monotone(d2, 2, theta, top);
      CHECK(s[theta.size() - 1][got] == theta);
    }
    auto const d1  = generate(StandardKind::simplex, 1, std::nullopt, 3);
    auto const s1  = standard_simplices(StandardKind::simplex, 1, std::nullopt, 3);
    for (Id x = 0; x < d1.size(3); ++x) {
      auto const ez = decompose(d1, 3, x);
      auto const& seq = s1[3][x];
      std::size_t distinct = 1;
      for (std::size_t i = 1; i < seq.size(); ++i) {
        distinct += seq[i] != seq[i - 1];
      }
      CHECK(ez.core_level == distinct - 1);
      CHECK(apply_monotone(d1, ez.core_level, ez.surjection, ez.core) == x);
    }
  }
}
