#include "segal/segal_checker.hpp"

#include <map>
#include <sstream>

#include "segal/comparison.hpp"
#include "segal/errors.hpp"
#include "segal/nerve.hpp"
#include "segal/theory.hpp"

namespace segal {

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::bijective: return "bijective";
      case Verdict::injective_only: return "injective_only";
      case Verdict::surjective_only: return "surjective_only";
      case Verdict::neither: return "neither";
    }
    return "?";
  }

  namespace {

    Verdict verdict_of(bool injective, bool surjective) {
      if (injective && surjective) {
        return Verdict::bijective;
      }
      if (injective) {
        return Verdict::injective_only;
      }
      return surjective ? Verdict::surjective_only : Verdict::neither;
    }

    std::string tuple_string(std::vector<Id> const& t) {
      std::string s = "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        s += (i ? "," : "") + std::to_string(t[i]);
      }
      return s + ")";
    }

    SimplicialMap compose_maps(SimplicialMap const& second, SimplicialMap const& first) {
      return {cells::compose(second.components, first.components)};
    }

  }  // namespace

  SegalMapResult segal_map(SegalPrecategory const& x, std::size_t k) {
    auto const&       s = x.space;
    std::size_t const N = s.inner_truncation();
    if (k == 0 || k > s.outer_truncation()) {
      throw ArgumentError("segal_map: k must lie in 1.." + std::to_string(s.outer_truncation()));
    }
    SegalMapResult r;
    r.k            = k;
    r.domain       = s.column(k);
    auto const col0 = s.column(0);
    auto const col1 = s.column(1);
    SimplicialMap source, target, last;
    for (std::size_t n = 0; n <= N; ++n) {
      source.components.push_back(s.outer_face(1, n, 1));
      target.components.push_back(s.outer_face(1, n, 0));
    }
    last.components = cells::identity(col1.cells());
    SimplicialSet fiber = col1;
    r.edges.resize(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
      for (Id e = 0; e < col1.size(n); ++e) {
        r.edges[n].push_back({e});
      }
    }
    for (std::size_t j = 2; j <= k; ++j) {
      auto pb = pullback(fiber, col1, col0, compose_maps(target, last), source);
      std::vector<std::vector<std::vector<Id>>> edges(N + 1);
      for (std::size_t n = 0; n <= N; ++n) {
        for (Id p = 0; p < pb.object.size(n); ++p) {
          auto t = r.edges[n][pb.to_x.components[n][p]];
          t.push_back(pb.to_y.components[n][p]);
          edges[n].push_back(std::move(t));
        }
      }
      r.edges = std::move(edges);
      last    = pb.to_y;
      fiber   = std::move(pb.object);
    }
    r.codomain = fiber;

    bool all_inj = true;
    bool all_sur = true;
    for (std::size_t n = 0; n <= N; ++n) {
      auto const                    row = s.row(n);
      std::map<std::vector<Id>, Id> index;
      for (Id p = 0; p < r.edges[n].size(); ++p) {
        index.emplace(r.edges[n][p], p);
      }
      Mapping          comp;
      std::vector<Id>  preimage(r.codomain.size(n), UNASSIGNED);
      SegalLevel       level{n, r.domain.size(n), r.codomain.size(n), Verdict::bijective, ""};
      bool             inj = true;
      for (Id e = 0; e < r.domain.size(n); ++e) {
        std::vector<Id> spine;
        for (std::size_t i = 0; i < k; ++i) {
          spine.push_back(apply_monotone(row, k, {i, i + 1}, e));
        }
        auto it = index.find(spine);
        if (it == index.end()) {
          throw ConstructionError("segal_map: spine " + tuple_string(spine)
                                  + " is not composable");
        }
        comp.push_back(it->second);
        if (preimage[it->second] != UNASSIGNED) {
          if (inj) {
            level.witness = "elements " + std::to_string(preimage[it->second]) + " and "
                            + std::to_string(e) + " share the spine " + tuple_string(spine);
          }
          inj = false;
        } else {
          preimage[it->second] = e;
        }
      }
      bool sur = true;
      for (Id p = 0; p < preimage.size(); ++p) {
        if (preimage[p] == UNASSIGNED) {
          if (sur && inj) {
            level.witness = "spine " + tuple_string(r.edges[n][p]) + " has no filler";
          }
          sur = false;
        }
      }
      level.verdict = verdict_of(inj, sur);
      if (level.witness.empty() && !(inj && sur)) {
        level.witness = "sizes " + std::to_string(level.domain) + " vs "
                        + std::to_string(level.codomain);
      }
      all_inj = all_inj && inj;
      all_sur = all_sur && sur;
      r.map.components.push_back(std::move(comp));
      r.levels.push_back(std::move(level));
    }
    r.verdict = verdict_of(all_inj, all_sur);
    return r;
  }

  SegalCheck strict_segal_check(SegalPrecategory const&       x,
                                std::size_t                   k_max,
                                std::optional<Grading> const& grading) {
    if (k_max > x.space.outer_truncation()) {
      throw ArgumentError("strict_segal_check: k_max beyond the outer truncation");
    }
    SegalCheck check;
    bool       raw_ok = true;
    for (std::size_t k = 1; k <= k_max; ++k) {
      auto const r = segal_map(x, k);
      for (auto const& level : r.levels) {
        std::size_t const n = level.inner;
        SegalRow row{k, n, level.domain, level.codomain, level.verdict,
                     std::nullopt, std::nullopt, std::nullopt, level.witness};
        if (grading) {
          auto const&       deg = grading->degree.at(n);
          std::size_t       graded = 0;
          std::vector<bool> hit(r.codomain.size(n), false);
          for (Id y : r.map.components[n]) {
            hit[y] = true;
          }
          bool sur = true;
          for (Id p = 0; p < r.edges[n].size(); ++p) {
            std::size_t sum = 0;
            for (Id e : r.edges[n][p]) {
              sum += deg.at(e);
            }
            if (sum <= grading->bound) {
              ++graded;
              if (!hit[p] && sur) {
                sur = false;
                if (row.witness.empty()) {
                  row.witness = "graded spine " + tuple_string(r.edges[n][p]) + " has no filler";
                }
              }
            }
          }
          bool const inj = level.verdict == Verdict::bijective
                           || level.verdict == Verdict::injective_only;
          row.graded_codomain = graded;
          row.graded_verdict  = verdict_of(inj, sur);
        }
        if (x.reduced()) {
          std::size_t p = 1;
          for (std::size_t i = 0; i < k; ++i) {
            p *= x.space.size(1, n);
          }
          row.power_ok = x.space.size(k, n) == p;
        }
        raw_ok = raw_ok && row.verdict == Verdict::bijective;
        Verdict const effective = row.graded_verdict.value_or(row.verdict);
        check.passed = check.passed && effective == Verdict::bijective;
        check.rows.push_back(std::move(row));
      }
    }
    check.truncation_artifact = grading.has_value() && !raw_ok && check.passed;
    return check;
  }

  ShadowReport projection_shadow(std::size_t k, std::size_t L) {
    ShadowReport r;
    r.k = k;
    r.L = L;
    std::size_t const outer = k;
    if (k <= 1) {
      // M[0] is terminal and p_{1,1} is the identity; both sides agree trivially
      auto const m = represented_diagram_M(k, L, LengthBound::total, std::max<std::size_t>(outer, 1));
      auto const j = build_J(std::max<std::size_t>(outer, 1));
      auto const x = restrict(m.diagram, j, std::max<std::size_t>(outer, 1));
      auto const n = nerve_free_monoid(k, std::max<std::size_t>(outer, 1), L);
      bool       same = true;
      for (std::size_t a = 0; a <= std::max<std::size_t>(outer, 1); ++a) {
        same = same && x.size(a, 0) == n.set.size(a);
      }
      r.maps_agree = same;
      r.detail     = k == 0 ? "k=0: both sides terminal" : "k=1: identity";
      return r;
    }
    auto const j  = build_J(outer);
    auto const m1 = represented_diagram_M(1, L, LengthBound::total, outer);
    auto const mk = represented_diagram_M(k, L, LengthBound::total, outer);
    auto const x1 = restrict(m1.diagram, j, outer);
    auto const xk = restrict(mk.diagram, j, outer);
    auto const n1 = free_monoid_tuples(1, outer, L);
    auto const nk = free_monoid_tuples(k, outer, L);
    std::ostringstream detail;
    for (std::size_t n = 0; n <= outer; ++n) {
      for (Id e = 0; e < m1.elements[n].size(); ++e) {
        if (m1.elements[n][e].components != n1[n][e]) {
          r.maps_agree = false;
          detail << "M[1](T_" << n << ") and the nerve disagree at " << e << "; ";
        }
      }
      for (Id e = 0; e < mk.elements[n].size(); ++e) {
        if (mk.elements[n][e].components != nk[n][e]) {
          r.maps_agree = false;
          detail << "M[" << k << "](T_" << n << ") and the nerve disagree at " << e << "; ";
        }
      }
    }
    std::vector<std::map<TheoryMorphism, Id>> index(outer + 1);
    for (std::size_t n = 0; n <= outer; ++n) {
      for (Id e = 0; e < mk.elements[n].size(); ++e) {
        index[n].emplace(mk.elements[n][e], e);
      }
    }
    std::vector<SimplicialMap> restricted(k + 1);
    for (std::size_t i = 1; i <= k; ++i) {
      auto const     p = projection(k, i);
      SimplicialMap& f = restricted[i];
      for (std::size_t n = 0; n <= outer; ++n) {
        Mapping comp;
        for (Id e = 0; e < m1.elements[n].size(); ++e) {
          auto const h   = compose_theory(p, m1.elements[n][e]);
          auto const img = index[n].at(h);
          comp.push_back(img);
          // ι_i on the nerve side: letter x becomes x_i
          std::vector<Word> expected = n1[n][e];
          for (auto& w : expected) {
            for (auto& l : w) {
              l = static_cast<Id>(i - 1);
            }
          }
          if (nk[n][img] != expected) {
            r.maps_agree = false;
            detail << "p^(" << i << ") at level " << n << " element " << e << "; ";
          }
        }
        f.components.push_back(std::move(comp));
      }
      if (!is_space_map(x1, xk, f)) {
        r.simplicial = false;
        detail << "restricted p^(" << i << ") is not simplicial; ";
      }
    }
    // the spine (x_1|...|x_k) of the k-simplex
    std::vector<Word> top;
    for (std::size_t i = 0; i < k; ++i) {
      top.push_back({static_cast<Id>(i)});
    }
    auto const it = index[k].find(TheoryMorphism{k, k, top});
    if (it == index[k].end()) {
      r.spine_agrees = false;
      detail << "(x_1|...|x_" << k << ") exceeds L=" << L << "; ";
    } else {
      auto const row = xk.row(0);
      Id const   x   = [&] {
        for (Id e = 0; e < n1[1].size(); ++e) {
          if (n1[1][e] == std::vector<Word>{Word{0}}) {
            return e;
          }
        }
        return UNASSIGNED;
      }();
      for (std::size_t i = 0; i < k; ++i) {
        Id const edge = apply_monotone(row, k, {i, i + 1}, it->second);
        Id const want = restricted[i + 1].components[1][x];
        if (edge != want) {
          r.spine_agrees = false;
          detail << "edge " << i << " of the spine; ";
        }
      }
    }
    r.detail = detail.str().empty() ? "all components agree" : detail.str();
    return r;
  }

}  // namespace segal
