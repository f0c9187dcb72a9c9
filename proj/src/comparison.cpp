#include "segal/comparison.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

#include "segal/builder.hpp"
#include "segal/errors.hpp"

namespace segal {

  namespace {

    std::vector<std::vector<std::size_t>> monotone_maps(std::size_t from, std::size_t to) {
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t>              cur;
      auto rec = [&](auto&& self, std::size_t lo) -> void {
        if (cur.size() == from + 1) {
          out.push_back(cur);
          return;
        }
        for (std::size_t v = lo; v <= to; ++v) {
          cur.push_back(v);
          self(self, v);
          cur.pop_back();
        }
      };
      rec(rec, 0);
      return out;
    }

    std::string str(std::size_t v) {
      return std::to_string(v);
    }

    std::size_t power_of(std::size_t b, std::size_t e) {
      std::size_t r = 1;
      while (e-- > 0) {
        r *= b;
      }
      return r;
    }

  }  // namespace

  TheoryMorphism J_of(std::vector<std::size_t> const& theta, std::size_t m) {
    if (theta.empty()) {
      throw ArgumentError("J_of: empty map");
    }
    for (std::size_t a = 0; a < theta.size(); ++a) {
      if (theta[a] > m || (a > 0 && theta[a] < theta[a - 1])) {
        throw ArgumentError("J_of: not a monotone map into [" + str(m) + "]");
      }
    }
    TheoryMorphism f{m, theta.size() - 1, {}};
    for (std::size_t j = 1; j < theta.size(); ++j) {
      Word w;
      for (std::size_t l = theta[j - 1]; l < theta[j]; ++l) {
        w.push_back(static_cast<Id>(l));
      }
      f.components.push_back(std::move(w));
    }
    return f;
  }

  std::vector<std::string> cosimplicial_violations(CosimplicialTheoryObject const& j) {
    std::vector<std::string> out;
    auto const& d = j.coface;
    auto const& s = j.codegeneracy;
    auto check = [&](TheoryMorphism const& lhs, TheoryMorphism const& rhs, std::string what) {
      if (lhs != rhs) {
        out.push_back(what + ": " + lhs.to_string() + " vs " + rhs.to_string());
      }
    };
    // A composite θ ∘ φ in Δ is sent to J(φ) ∘ J(θ) = compose_theory(J(θ), J(φ)).
    for (std::size_t n = 2; n <= j.n_max; ++n) {
      for (std::size_t jj = 1; jj <= n; ++jj) {
        for (std::size_t i = 0; i < jj; ++i) {
          check(compose_theory(d[n][jj], d[n - 1][i]),
                compose_theory(d[n][i], d[n - 1][jj - 1]),
                "d^" + str(jj) + " d^" + str(i) + " = d^" + str(i) + " d^" + str(jj - 1)
                    + " at n=" + str(n));
        }
      }
    }
    for (std::size_t n = 0; n + 2 <= j.n_max; ++n) {
      for (std::size_t jj = 0; jj <= n; ++jj) {
        for (std::size_t i = 0; i <= jj; ++i) {
          check(compose_theory(s[n][jj], s[n + 1][i]),
                compose_theory(s[n][i], s[n + 1][jj + 1]),
                "s^" + str(jj) + " s^" + str(i) + " = s^" + str(i) + " s^" + str(jj + 1)
                    + " at n=" + str(n));
        }
      }
    }
    for (std::size_t n = 1; n <= j.n_max; ++n) {
      for (std::size_t jj = 0; jj + 1 <= n; ++jj) {
        for (std::size_t i = 0; i <= n; ++i) {
          auto const  lhs  = compose_theory(s[n - 1][jj], d[n][i]);
          std::string name = "s^" + str(jj) + " d^" + str(i) + " at n=" + str(n);
          if (i == jj || i == jj + 1) {
            check(lhs, identity_morphism(n - 1), name + " = id");
          } else if (i < jj) {
            check(lhs, compose_theory(d[n - 1][i], s[n - 2][jj - 1]), name);
          } else {
            check(lhs, compose_theory(d[n - 1][i - 1], s[n - 2][jj]), name);
          }
        }
      }
    }
    return out;
  }

  CosimplicialTheoryObject build_J(std::size_t n_max, CofaceReading reading, bool verify) {
    CosimplicialTheoryObject j;
    j.n_max = n_max;
    j.coface.resize(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (std::size_t i = 0; i <= n; ++i) {
        TheoryMorphism f{n, n - 1, {}};
        for (std::size_t k = 1; k < n; ++k) {
          Id const a = static_cast<Id>(k - 1);
          bool     below = reading == CofaceReading::standard ? k < i : k > i;
          if (k == i) {
            f.components.push_back({a, a + 1});
          } else if (below) {
            f.components.push_back({a});
          } else {
            f.components.push_back({a + 1});
          }
        }
        j.coface[n].push_back(std::move(f));
      }
    }
    j.codegeneracy.resize(n_max);
    for (std::size_t n = 0; n < n_max; ++n) {
      for (std::size_t i = 0; i <= n; ++i) {
        TheoryMorphism f{n, n + 1, {}};
        for (std::size_t k = 1; k <= n + 1; ++k) {
          if (k <= i) {
            f.components.push_back({static_cast<Id>(k - 1)});
          } else if (k == i + 1) {
            f.components.push_back({});
          } else {
            f.components.push_back({static_cast<Id>(k - 2)});
          }
        }
        j.codegeneracy[n].push_back(std::move(f));
      }
    }
    if (verify) {
      auto v = cosimplicial_violations(j);
      if (!v.empty()) {
        std::string msg = "build_J: " + str(v.size()) + " cosimplicial identities fail";
        for (std::size_t a = 0; a < v.size() && a < 5; ++a) {
          msg += "; " + v[a];
        }
        throw ConstructionError(msg);
      }
    }
    return j;
  }

  YonedaReport yoneda_compat(Monoid const& m, CosimplicialTheoryObject const& j) {
    auto const nerve = nerve_monoid(m, j.n_max);
    auto const& x    = nerve.set;
    YonedaReport r;
    std::ostringstream table;
    bool               all_identity = true;
    bool               all_reversed = true;
    bool               missing      = false;
    auto induced = [&](TheoryMorphism const& f) {
      Mapping out;
      for (Id c = 0; c < power_of(m.size, f.source); ++c) {
        auto const      a = decode_tuple(c, f.source, m.size);
        std::vector<Id> b;
        for (auto const& w : f.components) {
          b.push_back(evaluate(m, w, a));
        }
        out.push_back(encode_tuple(b, m.size));
      }
      return out;
    };
    auto pair_up = [&](char kind, std::size_t n, std::size_t i, Mapping const& target,
                       std::vector<TheoryMorphism> const& candidates) -> std::size_t {
      std::vector<std::size_t> match;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (induced(candidates[c]) == target) {
          match.push_back(c);
        }
      }
      table << kind << "_" << i << " at level " << n << ": ";
      if (match.empty()) {
        table << "no match\n";
        missing = true;
        return candidates.size();
      }
      for (std::size_t c : match) {
        table << kind << "^" << c << " ";
      }
      table << "\n";
      std::size_t const rev    = n - i;
      std::size_t       chosen = match.front();
      if (std::find(match.begin(), match.end(), i) != match.end()) {
        chosen = i;
      } else if (std::find(match.begin(), match.end(), rev) != match.end()) {
        chosen = rev;
      }
      all_identity = all_identity && chosen == i;
      all_reversed = all_reversed && chosen == rev;
      return chosen;
    };
    r.face_pairing.resize(j.n_max + 1);
    for (std::size_t n = 1; n <= j.n_max; ++n) {
      for (std::size_t i = 0; i <= n; ++i) {
        r.face_pairing[n].push_back(pair_up('d', n, i, x.face(n, i), j.coface[n]));
      }
    }
    r.degeneracy_pairing.resize(j.n_max);
    for (std::size_t n = 0; n < j.n_max; ++n) {
      for (std::size_t i = 0; i <= n; ++i) {
        r.degeneracy_pairing[n].push_back(
            pair_up('s', n, i, x.degeneracy(n, i), j.codegeneracy[n]));
      }
    }
    r.table = table.str();
    if (missing) {
      throw ValidationError("yoneda_compat: no consistent pairing\n" + r.table);
    }
    r.orientation = all_identity ? "identity" : all_reversed ? "reversed" : "mixed";
    return r;
  }

  SimplicialSpace restrict(TheoryDiagram const&            a,
                           CosimplicialTheoryObject const& j,
                           std::size_t                     outer) {
    if (outer > a.max_arity || outer > j.n_max) {
      throw ArgumentError("restrict: outer truncation " + str(outer)
                          + " exceeds the diagram or J range");
    }
    std::vector<SimplicialSet> columns(a.values.begin(),
                                       a.values.begin() + static_cast<std::ptrdiff_t>(outer + 1));
    std::size_t const inner = columns[0].truncation();
    for (auto const& c : columns) {
      if (c.truncation() != inner) {
        throw ArgumentError("restrict: values have different inner truncations");
      }
    }
    auto apply = [&](TheoryMorphism const& f, std::size_t n) {
      Mapping out;
      for (Id x = 0; x < a.values[f.source].size(n); ++x) {
        auto y = a.act(f, n, x);
        if (!y) {
          throw ArgumentError("restrict: A(" + f.to_string() + ") leaves the bounds ("
                              + a.bounds + ")");
        }
        out.push_back(*y);
      }
      return out;
    };
    std::vector<SimplicialSet> rows;
    for (std::size_t n = 0; n <= inner; ++n) {
      std::vector<std::size_t>          sizes;
      std::vector<std::vector<Mapping>> faces(outer + 1), degens(outer);
      for (std::size_t m = 0; m <= outer; ++m) {
        sizes.push_back(columns[m].size(n));
        if (m >= 1) {
          for (std::size_t i = 0; i <= m; ++i) {
            faces[m].push_back(apply(j.coface[m][i], n));
          }
        }
        if (m < outer) {
          for (std::size_t i = 0; i <= m; ++i) {
            degens[m].push_back(apply(j.codegeneracy[m][i], n));
          }
        }
      }
      rows.emplace_back(outer, sizes, faces, degens);
    }
    return SimplicialSpace::assemble(columns, rows);
  }

  std::string KanBounds::to_string() const {
    return "m<=" + str(m_max) + " L<=" + str(L) + " d<=" + str(d_max);
  }

  namespace {

    void compute_core(SegalPrecategory const& x, KanBounds const& b, KanExtension& k) {
      auto const&       s     = x.space;
      std::size_t const N     = s.inner_truncation();
      k.bounds                = b;
      k.inner                 = N;
      std::vector<SimplicialSet> columns, rows;
      for (std::size_t m = 0; m <= b.m_max; ++m) {
        columns.push_back(s.column(m));
      }
      for (std::size_t n = 0; n <= N; ++n) {
        rows.push_back(s.row(n));
      }
      // θ^* tables: theta_star[m'][m] = list of (θ, per-level map X_m -> X_m')
      struct ThetaTable {
        TheoryMorphism       j;  // J(θ): T_m -> T_m'
        std::vector<Mapping> pull;
        bool                 identity;
      };
      std::vector<std::vector<std::vector<ThetaTable>>> theta(b.m_max + 1);
      for (std::size_t mp = 0; mp <= b.m_max; ++mp) {
        theta[mp].resize(b.m_max + 1);
        for (std::size_t m = 0; m <= b.m_max; ++m) {
          for (auto const& t : monotone_maps(mp, m)) {
            ThetaTable tt{J_of(t, m), {}, false};
            tt.identity = mp == m;
            for (std::size_t a = 0; a < t.size() && tt.identity; ++a) {
              tt.identity = t[a] == a;
            }
            for (std::size_t n = 0; n <= N; ++n) {
              Mapping p;
              for (Id e = 0; e < s.size(m, n); ++e) {
                p.push_back(apply_monotone(rows[n], m, t, e));
              }
              tt.pull.push_back(std::move(p));
            }
            theta[mp][m].push_back(std::move(tt));
          }
        }
      }
      CellComplex const shape = SimplicialSet::shape(N);
      for (std::size_t d = 0; d <= b.d_max; ++d) {
        std::vector<TheoryMorphism>           comma;
        std::map<TheoryMorphism, std::size_t> lookup;
        for (std::size_t m = 0; m <= b.m_max; ++m) {
          for (auto& f : enumerate_morphisms(m, d, b.L, LengthBound::total)) {
            lookup.emplace(f, comma.size());
            comma.push_back(std::move(f));
          }
        }
        std::vector<std::vector<std::size_t>> offset(N + 1);
        CellComplex                           g = shape;
        for (std::size_t n = 0; n <= N; ++n) {
          std::size_t total = 0;
          for (auto const& f : comma) {
            offset[n].push_back(total);
            total += s.size(f.source, n);
          }
          g.sizes[n] = total;
        }
        for (std::size_t o = 0; o < g.ops.size(); ++o) {
          auto& op = g.ops[o];
          for (std::size_t c = 0; c < comma.size(); ++c) {
            auto const& src = columns[comma[c].source].cells().ops[o].map;
            for (Id e : src) {
              op.map.push_back(static_cast<Id>(offset[op.target][c] + e));
            }
          }
        }
        std::vector<cells::Pair> pairs;
        for (std::size_t cp = 0; cp < comma.size(); ++cp) {
          auto const&       fp = comma[cp];
          std::size_t const mp = fp.source;
          for (std::size_t m = 0; m <= b.m_max; ++m) {
            for (auto const& tt : theta[mp][m]) {
              if (tt.identity) {
                continue;
              }
              auto h = compose_theory(tt.j, fp);
              if (h.total_length() > b.L) {
                continue;
              }
              std::size_t const c = lookup.at(h);
              for (std::size_t n = 0; n <= N; ++n) {
                for (Id e = 0; e < s.size(m, n); ++e) {
                  pairs.push_back({n, static_cast<Id>(offset[n][c] + e),
                                   static_cast<Id>(offset[n][cp] + tt.pull[n][e])});
                }
              }
            }
          }
        }
        auto q = cells::quotient(g, pairs);
        std::vector<std::vector<std::size_t>> reps(N + 1);
        for (std::size_t n = 0; n <= N; ++n) {
          reps[n].assign(q.object.sizes[n], 0);
          for (std::size_t gen = q.projection[n].size(); gen-- > 0;) {
            reps[n][q.projection[n][gen]] = gen;
          }
        }
        k.comma.push_back(std::move(comma));
        k.comma_lookup.push_back(std::move(lookup));
        k.offset.push_back(std::move(offset));
        k.class_of.push_back(std::move(q.projection));
        k.representative.push_back(std::move(reps));
        k.values.emplace_back(N, std::move(q.object));
      }
    }

    // Per class, the sorted distinct classes of (x, φ ∘ f) over its members.
    std::vector<std::vector<Id>> all_images(KanExtension const&   k,
                                            TheoryMorphism const& phi,
                                            std::size_t           n) {
      std::size_t const d  = phi.source;
      std::size_t const dp = phi.target;
      if (d > k.bounds.d_max || dp > k.bounds.d_max) {
        throw ArgumentError("KanExtension: arity beyond d_max");
      }
      std::vector<std::vector<Id>> out(k.values[d].size(n));
      auto const&                  comma = k.comma[d];
      for (std::size_t c = 0; c < comma.size(); ++c) {
        auto h = compose_theory(comma[c], phi);
        if (h.total_length() > k.bounds.L) {
          continue;
        }
        std::size_t const cp    = k.comma_lookup[dp].at(h);
        std::size_t const begin = k.offset[d][n][c];
        std::size_t const end   = c + 1 < comma.size() ? k.offset[d][n][c + 1]
                                                       : k.class_of[d][n].size();
        for (std::size_t gen = begin; gen < end; ++gen) {
          Id const img = k.class_of[dp][n][k.offset[dp][n][cp] + (gen - begin)];
          out[k.class_of[d][n][gen]].push_back(img);
        }
      }
      for (auto& v : out) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
      }
      return out;
    }

  }  // namespace

  std::size_t KanExtension::comma_index(TheoryMorphism const& f) const {
    if (f.target >= comma_lookup.size()) {
      return std::string::npos;
    }
    auto it = comma_lookup[f.target].find(f);
    return it == comma_lookup[f.target].end() ? std::string::npos : it->second;
  }

  std::pair<std::size_t, Id> KanExtension::generator(std::size_t d,
                                                     std::size_t n,
                                                     std::size_t g) const {
    auto const& off = offset.at(d).at(n);
    auto        it  = std::upper_bound(off.begin(), off.end(), g);
    std::size_t c = static_cast<std::size_t>(it - off.begin()) - 1;
    return {c, static_cast<Id>(g - off[c])};
  }

  std::optional<Id> KanExtension::class_of_pair(std::size_t           n,
                                                Id                    x,
                                                TheoryMorphism const& f) const {
    std::size_t c = comma_index(f);
    if (c == std::string::npos) {
      return std::nullopt;
    }
    return class_of[f.target][n][offset[f.target][n][c] + x];
  }

  std::vector<Id> KanExtension::images(TheoryMorphism const& phi, std::size_t n, Id cls) const {
    return all_images(*this, phi, n).at(cls);
  }

  std::optional<Id> KanExtension::act(TheoryMorphism const& phi, std::size_t n, Id cls) const {
    auto v = images(phi, n, cls);
    if (v.size() != 1) {
      return std::nullopt;
    }
    return v[0];
  }

  TheoryDiagram KanExtension::diagram() const {
    TheoryDiagram a;
    a.max_arity = bounds.d_max;
    a.values    = values;
    auto self   = std::make_shared<KanExtension>(*this);
    a.act       = [self](TheoryMorphism const& f, std::size_t n, Id x) {
      return self->act(f, n, x);
    };
    a.bounds = "J_* " + bounds.to_string();
    return a;
  }

  SimplicialMap KanExtension::unit_component(std::size_t m) const {
    if (m > bounds.m_max || m > bounds.d_max || m > bounds.L) {
      throw ArgumentError("unit_component: degree " + str(m) + " outside " + bounds.to_string());
    }
    std::size_t const c = comma_index(identity_morphism(m));
    SimplicialMap     u;
    for (std::size_t n = 0; n <= inner; ++n) {
      std::size_t const begin = offset[m][n][c];
      std::size_t const end =
          c + 1 < comma[m].size() ? offset[m][n][c + 1] : class_of[m][n].size();
      Mapping comp;
      for (std::size_t g = begin; g < end; ++g) {
        comp.push_back(class_of[m][n][g]);
      }
      u.components.push_back(std::move(comp));
    }
    return u;
  }

  KanExtension kan_extend(SegalPrecategory const& x, KanBounds bounds, bool certify) {
    if (!x.reduced()) {
      throw ArgumentError("kan_extend: the precategory must be reduced");
    }
    std::size_t const M = x.space.outer_truncation();
    if (bounds.m_max > M) {
      throw ArgumentError("kan_extend: m_max exceeds the outer truncation " + str(M));
    }
    KanExtension k;
    compute_core(x, bounds, k);
    if (!certify) {
      k.certificate = "not requested";
      return k;
    }
    KanBounds wider{std::min(bounds.m_max + 1, M), bounds.L + 1, bounds.d_max};
    KanExtension w;
    compute_core(x, wider, w);
    bool        stable = true;
    std::size_t fresh  = 0;
    std::ostringstream detail;
    detail << "rerun at " << wider.to_string();
    if (wider.m_max == bounds.m_max) {
      detail << " (m_max already at the outer truncation)";
    }
    for (std::size_t d = 0; d <= bounds.d_max; ++d) {
      for (std::size_t n = 0; n <= k.inner; ++n) {
        std::vector<Id> old_of_new(w.values[d].size(n), UNASSIGNED);
        for (std::size_t g = 0; g < k.class_of[d][n].size(); ++g) {
          auto [c, e]   = k.generator(d, n, g);
          std::size_t c2 = w.comma_lookup[d].at(k.comma[d][c]);
          Id const    nc = w.class_of[d][n][w.offset[d][n][c2] + e];
          Id const    oc = k.class_of[d][n][g];
          if (old_of_new[nc] == UNASSIGNED) {
            old_of_new[nc] = oc;
          } else if (old_of_new[nc] != oc) {
            if (stable) {
              detail << "; classes " << old_of_new[nc] << " and " << oc << " merge at d=" << d
                     << " n=" << n;
            }
            stable = false;
          }
        }
        std::size_t const extra =
            static_cast<std::size_t>(std::count(old_of_new.begin(), old_of_new.end(), UNASSIGNED));
        if (extra > 0) {
          detail << "; " << extra << " new classes at d=" << d << " n=" << n;
        }
        fresh += extra;
      }
    }
    k.partition_stable = stable;
    k.certified        = stable && fresh == 0;
    k.certificate      = (k.certified ? "certified: " : "uncertified: ") + detail.str();
    return k;
  }

  std::vector<CellMap> kan_map(KanExtension const&  source,
                               KanExtension const&  target,
                               SimplicialMap const& f) {
    if (source.bounds.m_max != target.bounds.m_max || source.bounds.L != target.bounds.L
        || source.bounds.d_max != target.bounds.d_max || source.inner != target.inner) {
      throw ArgumentError("kan_map: extensions computed with different bounds");
    }
    std::size_t const N = source.inner;
    std::vector<CellMap> out;
    for (std::size_t d = 0; d <= source.bounds.d_max; ++d) {
      CellMap level;
      for (std::size_t n = 0; n <= N; ++n) {
        Mapping comp(source.values[d].size(n), UNASSIGNED);
        for (std::size_t g = 0; g < source.class_of[d][n].size(); ++g) {
          auto [c, e]       = source.generator(d, n, g);
          std::size_t const m = source.comma[d][c].source;
          Id const fe = f.components.at(m * (N + 1) + n).at(e);
          Id const img = target.class_of[d][n][target.offset[d][n][c] + fe];
          Id&      slot = comp[source.class_of[d][n][g]];
          if (slot == UNASSIGNED) {
            slot = img;
          } else if (slot != img) {
            throw ConstructionError("kan_map: image depends on the representative at d="
                                    + str(d) + " n=" + str(n));
          }
        }
        level.push_back(std::move(comp));
      }
      out.push_back(std::move(level));
    }
    return out;
  }

  AdjunctionReport adjunction_check(SegalPrecategory const&         x,
                                    TheoryDiagram const&            a,
                                    KanBounds const&                b,
                                    CosimplicialTheoryObject const& j) {
    std::size_t const M = x.space.outer_truncation();
    std::size_t const N = x.space.inner_truncation();
    if (b.m_max != M || b.d_max < M || b.L < M || a.max_arity < b.d_max || j.n_max < M) {
      throw ArgumentError("adjunction_check: need m_max = outer truncation <= d_max, L and "
                          "the arity range of A");
    }
    if (a.values.at(0).truncation() != N) {
      throw ArgumentError("adjunction_check: inner truncations differ");
    }
    auto const k = kan_extend(x, b, false);

    CellComplex source, target;
    for (std::size_t d = 0; d <= b.d_max; ++d) {
      for (std::size_t n = 0; n <= N; ++n) {
        source.sizes.push_back(k.values[d].size(n));
        target.sizes.push_back(a.values[d].size(n));
      }
      std::size_t const base = d * (N + 1);
      for (std::size_t o = 0; o < SimplicialSet::op_count(N); ++o) {
        auto s = k.values[d].cells().ops[o];
        auto t = a.values[d].cells().ops[o];
        s.source += base;
        s.target += base;
        t.source += base;
        t.target += base;
        source.ops.push_back(std::move(s));
        target.ops.push_back(std::move(t));
      }
    }
    for (std::size_t d = 0; d <= b.d_max; ++d) {
      for (std::size_t dp = 0; dp <= b.d_max; ++dp) {
        for (auto const& phi : enumerate_morphisms(d, dp, b.L, LengthBound::total)) {
          for (std::size_t n = 0; n <= N; ++n) {
            auto const  imgs   = all_images(k, phi, n);
            std::size_t copies = 1;
            for (auto const& v : imgs) {
              copies = std::max(copies, v.size());
            }
            Mapping tmap;
            for (Id y = 0; y < a.values[d].size(n); ++y) {
              tmap.push_back(a.act(phi, n, y).value_or(UNASSIGNED));
            }
            for (std::size_t r = 0; r < copies; ++r) {
              Mapping smap;
              for (auto const& v : imgs) {
                smap.push_back(r < v.size() ? v[r] : UNASSIGNED);
              }
              std::size_t const from = d * (N + 1) + n;
              std::size_t const to   = dp * (N + 1) + n;
              source.ops.push_back({from, to, std::move(smap)});
              target.ops.push_back({from, to, tmap});
            }
          }
        }
      }
    }
    auto const families = cells::homomorphisms(source, target);
    auto const r        = restrict(a, j, M);
    auto const maps     = cells::homomorphisms(x.space.cells(), r.cells());

    AdjunctionReport rep;
    rep.families   = families.size();
    rep.space_maps = maps.size();
    std::set<CellMap> targets(maps.begin(), maps.end());
    std::set<CellMap> hit;
    rep.injective = true;
    for (auto const& eta : families) {
      CellMap g;
      for (std::size_t m = 0; m <= M; ++m) {
        auto const u = k.unit_component(m);
        for (std::size_t n = 0; n <= N; ++n) {
          Mapping comp;
          for (Id cls : u.components[n]) {
            comp.push_back(eta[m * (N + 1) + n][cls]);
          }
          g.push_back(std::move(comp));
        }
      }
      if (!targets.count(g)) {
        rep.detail += "a natural family restricts to a non-map; ";
        rep.injective = false;
      }
      if (!hit.insert(std::move(g)).second) {
        rep.injective = false;
      }
    }
    rep.surjective = hit.size() >= targets.size()
                     && std::includes(hit.begin(), hit.end(), targets.begin(), targets.end());
    rep.detail += str(rep.families) + " natural families, " + str(rep.space_maps)
                  + " maps of spaces, at " + b.to_string();
    return rep;
  }

  ColimitReport colimit_commutation(SegalPrecategory const& x0,
                                    SegalPrecategory const& x1,
                                    SegalPrecategory const& x2,
                                    SimplicialMap const&    f1,
                                    SimplicialMap const&    f2,
                                    KanBounds const&        b) {
    PrecategoryDiagram diag{{x0, x1, x2}, {{0, 1, f1.components}, {0, 2, f2.components}}};
    auto const         p  = colimit_O(diag);
    auto const         k0 = kan_extend(x0, b, false);
    auto const         k1 = kan_extend(x1, b, false);
    auto const         k2 = kan_extend(x2, b, false);
    auto const         kp = kan_extend(p.object, b, false);
    auto const         g1 = kan_map(k0, k1, f1);
    auto const         g2 = kan_map(k0, k2, f2);
    auto const         h1 = kan_map(k1, kp, p.injections[1]);
    auto const         h2 = kan_map(k2, kp, p.injections[2]);

    ColimitReport      rep;
    std::ostringstream detail;
    for (std::size_t d = 0; d <= b.d_max; ++d) {
      auto po = cells::colimit(
          {&k0.values[d].cells(), &k1.values[d].cells(), &k2.values[d].cells()},
          {{0, 1, g1[d]}, {0, 2, g2[d]}});
      for (std::size_t n = 0; n <= k0.inner; ++n) {
        Mapping canon(po.object.sizes[n], UNASSIGNED);
        bool    consistent = true;
        auto    put        = [&](Mapping const& inj, Mapping const& h) {
          for (Id e = 0; e < inj.size(); ++e) {
            Id& slot = canon[inj[e]];
            if (slot != UNASSIGNED && slot != h[e]) {
              consistent = false;
            }
            slot = h[e];
          }
        };
        put(po.injections[1][n], h1[d][n]);
        put(po.injections[2][n], h2[d][n]);
        std::set<Id> seen(canon.begin(), canon.end());
        bool const   bij = consistent && !seen.count(UNASSIGNED) && seen.size() == canon.size()
                         && canon.size() == kp.values[d].size(n);
        detail << "d=" << d << " n=" << n << ": " << canon.size() << " -> "
               << kp.values[d].size(n) << (bij ? "" : " (not bijective)") << "; ";
        rep.bijective = rep.bijective && bij;
      }
    }
    rep.detail = detail.str();
    return rep;
  }

  CosimplicialOObject build_J_O(std::size_t objects, std::size_t n_max) {
    if (objects == 0) {
      throw ArgumentError("build_J_O: empty object set");
    }
    CosimplicialOObject j{objects, build_J(n_max)};
    // a word in the edges of y is well typed from a to b when consecutive
    // edges chain and the endpoints match
    auto typed = [](Word const& w, std::vector<Id> const& y, Id a, Id b) {
      Id at = a;
      for (Id l : w) {
        if (y[l] != at) {
          return false;
        }
        at = y[l + 1];
      }
      return at == b;
    };
    for (std::size_t n = 0; n <= n_max; ++n) {
      std::size_t count = 1;
      for (std::size_t a = 0; a <= n; ++a) {
        count *= objects;
      }
      for (Id code = 0; code < count; ++code) {
        auto const y = decode_tuple(code, n + 1, objects);
        for (std::size_t i = 0; n >= 1 && i <= n; ++i) {
          auto z = y;
          z.erase(z.begin() + static_cast<std::ptrdiff_t>(i));
          auto const& f = j.words.coface[n][i];
          for (std::size_t c = 0; c < f.components.size(); ++c) {
            if (!typed(f.components[c], y, z[c], z[c + 1])) {
              throw ConstructionError("build_J_O: d^" + str(i) + " component " + str(c + 1)
                                      + " ill-typed at n=" + str(n));
            }
          }
        }
        for (std::size_t i = 0; n < n_max && i <= n; ++i) {
          auto z = y;
          z.insert(z.begin() + static_cast<std::ptrdiff_t>(i), y[i]);
          auto const& f = j.words.codegeneracy[n][i];
          for (std::size_t c = 0; c < f.components.size(); ++c) {
            if (!typed(f.components[c], y, z[c], z[c + 1])) {
              throw ConstructionError("build_J_O: s^" + str(i) + " component " + str(c + 1)
                                      + " ill-typed at n=" + str(n));
            }
          }
        }
      }
    }
    return j;
  }

  SegalPrecategory restrict_O(RepresentedC const&        c,
                              CosimplicialOObject const& j,
                              std::size_t                outer,
                              std::size_t                inner) {
    if (outer > j.words.n_max) {
      throw ArgumentError("restrict_O: outer truncation beyond J_O");
    }
    if (c.category.graph.objects != j.objects) {
      throw ArgumentError("restrict_O: object sets differ");
    }
    auto const levels = category_tuples(c.category, outer);
    auto vertices     = [](CategoryTuple const& t) {
      std::vector<Id> v{t.start};
      for (auto const& p : t.paths) {
        v.push_back(p.target);
      }
      return v;
    };
    auto apply = [&](TheoryMorphism const& f, std::vector<Id> const& z, CategoryTuple const& t) {
      std::vector<Sort> beta;
      for (std::size_t a = 0; a + 1 < z.size(); ++a) {
        beta.emplace_back(z[a], z[a + 1]);
      }
      auto paths = c.act(f, beta, t.paths);
      if (!paths) {
        throw ConstructionError("restrict_O: " + f.to_string() + " leaves C[n]_x");
      }
      return CategoryTuple{z[0], std::move(*paths)};
    };
    auto set = build_simplicial_set(
        levels,
        [&](std::size_t k, std::size_t i, CategoryTuple const& t) {
          auto z = vertices(t);
          z.erase(z.begin() + static_cast<std::ptrdiff_t>(i));
          return apply(j.words.coface[k][i], z, t);
        },
        [&](std::size_t k, std::size_t i, CategoryTuple const& t) {
          auto z = vertices(t);
          Id const v = z[i];
          z.insert(z.begin() + static_cast<std::ptrdiff_t>(i), v);
          return apply(j.words.codegeneracy[k][i], z, t);
        });
    std::vector<std::string> names;
    for (std::size_t o = 0; o < j.objects; ++o) {
      names.push_back(str(o));
    }
    return make_precategory(transpose(set, inner), names);
  }

}  // namespace segal
