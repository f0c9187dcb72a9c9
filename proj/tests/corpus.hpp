// Seeded test objects and brute-force oracles shared by the unit tests and
// the acceptance runner.

#ifndef SEGAL_TESTS_CORPUS_HPP_
#define SEGAL_TESTS_CORPUS_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "segal/cells.hpp"
#include "segal/filtration.hpp"
#include "segal/nerve.hpp"
#include "segal/simplicial_space.hpp"
#include "segal/theory.hpp"

namespace corpus {

  using namespace segal;

  inline constexpr std::uint64_t kSeed = 20240611;

  inline std::vector<Monoid> monoids(std::size_t count, std::size_t max_size, std::uint64_t seed) {
    std::mt19937_64     rng(seed);
    std::vector<Monoid> out;
    while (out.size() < count) {
      out.push_back(random_monoid(rng, max_size));
    }
    return out;
  }

  // {1, a, b} with xy = x for x, y in {a, b}
  inline Monoid idempotent_monoid() {
    return make_monoid({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, {"1", "a", "b"});
  }

  // Edges only go from lower to higher objects.
  inline std::vector<Graph> dags(std::size_t count, std::uint64_t seed) {
    std::mt19937_64    rng(seed);
    std::vector<Graph> out;
    while (out.size() < count) {
      Graph g;
      g.objects          = 2 + rng() % 3;
      std::size_t edges  = 1 + rng() % 6;
      for (std::size_t e = 0; e < edges; ++e) {
        Id a = static_cast<Id>(rng() % g.objects);
        Id b = static_cast<Id>(rng() % g.objects);
        if (a == b) {
          continue;
        }
        g.edges.emplace_back(std::min(a, b), std::max(a, b));
      }
      if (!g.edges.empty()) {
        out.push_back(g);
      }
    }
    return out;
  }

  inline std::vector<std::string> names(std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    return out;
  }

  inline SegalPrecategory point(std::size_t outer, std::size_t inner) {
    return make_precategory(transpose(terminal(outer), inner), point_object());
  }

  inline SegalPrecategory monoid_nerve(Monoid const& m, std::size_t outer, std::size_t inner) {
    return nerve_space(nerve_monoid(m, outer), point_object(), inner);
  }

  // Small reduced precategories for the Kan extension checks.
  inline std::vector<std::pair<std::string, SegalPrecategory>> reduced_objects(std::size_t outer,
                                                                              std::size_t inner) {
    std::vector<std::pair<std::string, SegalPrecategory>> out;
    out.emplace_back("point", point(outer, inner));
    out.emplace_back("Psi_1(1)", as_space(psi_pushout(1, 1, outer).stages[1], inner));
    out.emplace_back("G(2)", g_object(2, {0, 0, 0}, point_object(), outer, inner).object);
    out.emplace_back("Delta[2]_*", labeled_simplex(2, {0, 0, 0}, point_object(), outer, inner));
    out.emplace_back("N(Z/2)", monoid_nerve(cyclic_monoid(2), outer, inner));
    out.emplace_back("N(Z/3)", monoid_nerve(cyclic_monoid(3), outer, inner));
    out.emplace_back("N(idem)", monoid_nerve(idempotent_monoid(), outer, inner));
    return out;
  }

  // Precategories over O = {a, b}.
  inline std::vector<SegalPrecategory> over_ab(std::size_t outer, std::size_t inner) {
    auto const O = names(2);
    std::vector<SegalPrecategory> out;
    out.push_back(labeled_simplex(0, {0}, O, outer, inner));
    out.push_back(labeled_simplex(1, {0, 1}, O, outer, inner));
    out.push_back(labeled_simplex(1, {1, 0}, O, outer, inner));
    out.push_back(labeled_simplex(1, {0, 0}, O, outer, inner));
    out.push_back(g_object(2, {0, 1, 0}, O, outer, inner).object);
    out.push_back(nerve_space(nerve_category(free_category({2, {{0, 1}}}, 2), outer), O, inner));
    return out;
  }

  inline SimplicialMap as_map(CellMap m) {
    return {std::move(m)};
  }

  // Maps of precategories over O.
  inline std::vector<CellMap> maps_over_O(SegalPrecategory const& source,
                                          SegalPrecategory const& target) {
    auto fixed = fixed_objects(source);
    return cells::homomorphisms(source.space.cells(), target.space.cells(), &fixed);
  }

  struct Universal {
    std::size_t cones = 0;
    bool        ok = true;
  };

  // Every cone from W over the diagram factors through the limit exactly
  // once.  Cones are enumerated leg by leg, independently of the limit.
  inline Universal check_limit(PrecategoryDiagram const& d,
                               LimitO const&             lim,
                               SegalPrecategory const&   w) {
    std::vector<std::vector<CellMap>> legs;
    for (auto const& x : d.objects) {
      legs.push_back(maps_over_O(w, x));
    }
    std::vector<CellMap> mediators = maps_over_O(w, lim.object);
    std::map<std::vector<CellMap>, std::size_t> hits;
    for (auto const& u : mediators) {
      std::vector<CellMap> cone;
      for (auto const& p : lim.projections) {
        cone.push_back(cells::compose(p.components, u));
      }
      ++hits[cone];
    }
    Universal r;
    std::vector<std::size_t> pick(legs.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == legs.size()) {
        std::vector<CellMap> cone;
        for (std::size_t a = 0; a < legs.size(); ++a) {
          cone.push_back(legs[a][pick[a]]);
        }
        for (auto const& arrow : d.arrows) {
          if (cells::compose(arrow.map, cone[arrow.source]) != cone[arrow.target]) {
            return;
          }
        }
        ++r.cones;
        auto it = hits.find(cone);
        if (it == hits.end() || it->second != 1) {
          r.ok = false;
        }
        return;
      }
      for (pick[i] = 0; pick[i] < legs[i].size(); ++pick[i]) {
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    std::size_t total = 0;
    for (auto const& [cone, count] : hits) {
      total += count;
    }
    r.ok = r.ok && total == r.cones;
    return r;
  }

  inline Universal check_colimit(PrecategoryDiagram const& d,
                                 ColimitO const&           colim,
                                 SegalPrecategory const&   w) {
    std::vector<std::vector<CellMap>> legs;
    for (auto const& x : d.objects) {
      legs.push_back(maps_over_O(x, w));
    }
    std::vector<CellMap> mediators = maps_over_O(colim.object, w);
    std::map<std::vector<CellMap>, std::size_t> hits;
    for (auto const& u : mediators) {
      std::vector<CellMap> cocone;
      for (auto const& i : colim.injections) {
        cocone.push_back(cells::compose(u, i.components));
      }
      ++hits[cocone];
    }
    Universal r;
    std::vector<std::size_t> pick(legs.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == legs.size()) {
        std::vector<CellMap> cocone;
        for (std::size_t a = 0; a < legs.size(); ++a) {
          cocone.push_back(legs[a][pick[a]]);
        }
        for (auto const& arrow : d.arrows) {
          if (cells::compose(cocone[arrow.target], arrow.map) != cocone[arrow.source]) {
            return;
          }
        }
        ++r.cones;
        auto it = hits.find(cocone);
        if (it == hits.end() || it->second != 1) {
          r.ok = false;
        }
        return;
      }
      for (pick[i] = 0; pick[i] < legs[i].size(); ++pick[i]) {
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    std::size_t total = 0;
    for (auto const& [cocone, count] : hits) {
      total += count;
    }
    r.ok = r.ok && total == r.cones;
    return r;
  }

  // Seeded diagrams over O = {a, b}: products, pullbacks, equalizers and
  // their duals, with arrows found by exhaustive search.
  struct DiagramCase {
    std::string        name;
    PrecategoryDiagram diagram;
  };

  inline std::vector<DiagramCase> diagrams(std::uint64_t seed, std::size_t outer, std::size_t inner) {
    std::mt19937_64 rng(seed);
    auto const      objs = over_ab(outer, inner);
    std::vector<DiagramCase> out;
    auto pick_map = [&](std::size_t a, std::size_t b) -> std::optional<CellMap> {
      auto all = maps_over_O(objs[a], objs[b]);
      if (all.empty()) {
        return std::nullopt;
      }
      return all[rng() % all.size()];
    };
    for (std::size_t a = 0; a < objs.size(); ++a) {
      for (std::size_t b = a; b < objs.size(); ++b) {
        if ((a + b) % 2 == 0) {
          out.push_back({"pair " + std::to_string(a) + "," + std::to_string(b),
                         {{objs[a], objs[b]}, {}}});
        }
      }
    }
    for (std::size_t t = 0; t < objs.size(); ++t) {
      for (std::size_t a = 0; a < objs.size(); ++a) {
        auto f = pick_map(a, t);
        auto g = pick_map((a + 1) % objs.size(), t);
        std::size_t const c = (a + 1) % objs.size();
        if (f && g) {
          out.push_back({"cospan into " + std::to_string(t),
                         {{objs[a], objs[c], objs[t]}, {{0, 2, *f}, {1, 2, *g}}}});
        }
        auto h = pick_map(t, a);
        auto k = pick_map(t, c);
        if (h && k) {
          out.push_back({"span from " + std::to_string(t),
                         {{objs[t], objs[a], objs[c]}, {{0, 1, *h}, {0, 2, *k}}}});
        }
      }
    }
    for (std::size_t a = 0; a < objs.size(); ++a) {
      for (std::size_t b = 0; b < objs.size(); ++b) {
        auto all = maps_over_O(objs[a], objs[b]);
        if (all.size() >= 2) {
          out.push_back({"parallel " + std::to_string(a) + "->" + std::to_string(b),
                         {{objs[a], objs[b]}, {{0, 1, all[0]}, {0, 1, all[1]}}}});
        }
      }
    }
    return out;
  }

}  // namespace corpus

#endif  // SEGAL_TESTS_CORPUS_HPP_
