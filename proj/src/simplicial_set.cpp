#include "segal/simplicial_set.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "segal/builder.hpp"
#include "segal/errors.hpp"

namespace segal {

  std::size_t SimplicialSet::face_op(std::size_t k, std::size_t i) {
    return (k - 1) * (k + 2) / 2 + i;
  }

  std::size_t SimplicialSet::degeneracy_op(std::size_t truncation,
                                           std::size_t k,
                                           std::size_t i) {
    return truncation * (truncation + 3) / 2 + k * (k + 1) / 2 + i;
  }

  std::size_t SimplicialSet::op_count(std::size_t truncation) {
    return truncation * (truncation + 2);
  }

  CellComplex SimplicialSet::shape(std::size_t truncation) {
    CellComplex c;
    c.sizes.assign(truncation + 1, 0);
    for (std::size_t k = 1; k <= truncation; ++k) {
      for (std::size_t i = 0; i <= k; ++i) {
        c.ops.push_back({k, k - 1, {}});
      }
    }
    for (std::size_t k = 0; k < truncation; ++k) {
      for (std::size_t i = 0; i <= k; ++i) {
        c.ops.push_back({k, k + 1, {}});
      }
    }
    return c;
  }

  SimplicialSet::SimplicialSet() : _trunc(0), _cells(shape(0)) {}

  SimplicialSet::SimplicialSet(std::size_t truncation, CellComplex cells)
      : _trunc(truncation), _cells(std::move(cells)) {
    if (!cells::same_shape(_cells, shape(truncation))) {
      throw ArgumentError("SimplicialSet: operator layout does not match "
                          "truncation "
                          + std::to_string(truncation));
    }
    for (auto const& op : _cells.ops) {
      if (op.map.size() != _cells.sizes[op.source]) {
        throw ArgumentError("SimplicialSet: a structure map has the wrong "
                            "domain size");
      }
      for (Id y : op.map) {
        if (y >= _cells.sizes[op.target]) {
          throw ArgumentError("SimplicialSet: a structure map leaves its "
                              "codomain");
        }
      }
    }
  }

  SimplicialSet::SimplicialSet(std::size_t                              truncation,
                               std::vector<std::size_t>                 sizes,
                               std::vector<std::vector<Mapping>> const& faces,
                               std::vector<std::vector<Mapping>> const& degeneracies)
      : _trunc(truncation) {
    if (sizes.size() != truncation + 1) {
      throw ArgumentError("SimplicialSet: expected "
                          + std::to_string(truncation + 1) + " levels");
    }
    CellComplex c = shape(truncation);
    c.sizes       = std::move(sizes);
    for (std::size_t k = 1; k <= truncation; ++k) {
      for (std::size_t i = 0; i <= k; ++i) {
        if (k >= faces.size() || i >= faces[k].size()) {
          throw ArgumentError("SimplicialSet: missing face d_" + std::to_string(i)
                              + " at level " + std::to_string(k));
        }
        c.ops[face_op(k, i)].map = faces[k][i];
      }
    }
    for (std::size_t k = 0; k < truncation; ++k) {
      for (std::size_t i = 0; i <= k; ++i) {
        if (k >= degeneracies.size() || i >= degeneracies[k].size()) {
          throw ArgumentError("SimplicialSet: missing degeneracy s_"
                              + std::to_string(i) + " at level "
                              + std::to_string(k));
        }
        c.ops[degeneracy_op(truncation, k, i)].map = degeneracies[k][i];
      }
    }
    *this = SimplicialSet(truncation, std::move(c));
  }

  Mapping const& SimplicialSet::face(std::size_t k, std::size_t i) const {
    if (k == 0 || k > _trunc || i > k) {
      throw ArgumentError("face d_" + std::to_string(i) + " at level "
                          + std::to_string(k) + " is undefined");
    }
    return _cells.ops[face_op(k, i)].map;
  }

  Mapping const& SimplicialSet::degeneracy(std::size_t k, std::size_t i) const {
    if (k >= _trunc || i > k) {
      throw ArgumentError("degeneracy s_" + std::to_string(i) + " at level "
                          + std::to_string(k) + " is undefined");
    }
    return _cells.ops[degeneracy_op(_trunc, k, i)].map;
  }

  std::vector<std::vector<bool>> SimplicialSet::degenerate_mask() const {
    std::vector<std::vector<bool>> mask(_trunc + 1);
    for (std::size_t k = 0; k <= _trunc; ++k) {
      mask[k].assign(size(k), false);
    }
    for (std::size_t k = 0; k < _trunc; ++k) {
      for (std::size_t i = 0; i <= k; ++i) {
        for (Id y : degeneracy(k, i)) {
          mask[k + 1][y] = true;
        }
      }
    }
    return mask;
  }

  std::vector<std::size_t> SimplicialSet::nondegenerate_counts() const {
    auto                     mask = degenerate_mask();
    std::vector<std::size_t> result;
    for (auto const& level : mask) {
      result.push_back(static_cast<std::size_t>(
          std::count(level.begin(), level.end(), false)));
    }
    return result;
  }

  bool SimplicialSet::operator==(SimplicialSet const& other) const {
    if (_trunc != other._trunc || _cells.sizes != other._cells.sizes) {
      return false;
    }
    for (std::size_t o = 0; o < _cells.ops.size(); ++o) {
      if (_cells.ops[o].map != other._cells.ops[o].map) {
        return false;
      }
    }
    return true;
  }

  bool is_simplicial_map(SimplicialSet const& source,
                         SimplicialSet const& target,
                         SimplicialMap const& f) {
    return source.truncation() == target.truncation()
           && cells::is_homomorphism(source.cells(), target.cells(), f.components);
  }

  std::vector<std::vector<std::vector<std::size_t>>> standard_simplices(
      StandardKind               kind,
      std::size_t                n,
      std::optional<std::size_t> k,
      std::size_t                trunc) {
    if (kind == StandardKind::horn) {
      if (n == 0) {
        throw ArgumentError("horn: n must be at least 1");
      }
      if (!k || *k > n) {
        throw ArgumentError("horn: k must satisfy 0 <= k <= n");
      }
    }
    std::vector<std::vector<std::vector<std::size_t>>> levels(trunc + 1);
    for (std::size_t j = 0; j <= trunc; ++j) {
      std::vector<std::size_t>                 seq(j + 1, 0);
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                              std::size_t lo) {
        if (pos == j + 1) {
          std::vector<bool> hit(n + 1, false);
          for (auto v : seq) {
            hit[v] = true;
          }
          std::size_t missing = static_cast<std::size_t>(
              std::count(hit.begin(), hit.end(), false));
          bool keep = true;
          if (kind == StandardKind::boundary) {
            keep = missing > 0;
          } else if (kind == StandardKind::horn) {
            keep = missing > 1 || (missing == 1 && hit[*k]);
          }
          if (keep) {
            levels[j].push_back(seq);
          }
          return;
        }
        for (std::size_t v = lo; v <= n; ++v) {
          seq[pos] = v;
          rec(pos + 1, v);
        }
      };
      rec(0, 0);
    }
    return levels;
  }

  SimplicialSet generate(StandardKind               kind,
                         std::size_t                n,
                         std::optional<std::size_t> k,
                         std::size_t                trunc) {
    auto levels = standard_simplices(kind, n, k, trunc);
    return build_simplicial_set(
        levels,
        [](std::size_t, std::size_t i, std::vector<std::size_t> s) {
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
          return s;
        },
        [](std::size_t, std::size_t i, std::vector<std::size_t> s) {
          s.insert(s.begin() + static_cast<std::ptrdiff_t>(i), s[i]);
          return s;
        });
  }

  std::string Violation::describe() const {
    std::ostringstream out;
    out << identity << " at level " << level << " (i=" << i << ", j=" << j
        << ") on simplex " << simplex;
    return out.str();
  }

  namespace {
    // inverse[k][i][y] = x with s_i x = y at level k+1, or UNASSIGNED
    std::vector<std::vector<Mapping>> degeneracy_inverses(SimplicialSet const& x) {
      std::vector<std::vector<Mapping>> inv(x.truncation());
      for (std::size_t k = 0; k < x.truncation(); ++k) {
        inv[k].resize(k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
          inv[k][i].assign(x.size(k + 1), UNASSIGNED);
          auto const& s = x.degeneracy(k, i);
          for (Id a = 0; a < s.size(); ++a) {
            inv[k][i][s[a]] = a;
          }
        }
      }
      return inv;
    }

    std::vector<std::size_t> codegeneracy(std::size_t k, std::size_t i) {
      std::vector<std::size_t> sigma(k + 1);
      for (std::size_t j = 0; j <= k; ++j) {
        sigma[j] = j <= i ? j : j - 1;
      }
      return sigma;
    }

    struct EzTable {
      std::vector<std::vector<Decomposition>> decomposition;
      std::vector<Violation>                  violations;
    };

    EzTable ez_table(SimplicialSet const& x) {
      auto    inv = degeneracy_inverses(x);
      EzTable t;
      t.decomposition.resize(x.truncation() + 1);
      for (std::size_t k = 0; k <= x.truncation(); ++k) {
        for (Id s = 0; s < x.size(k); ++s) {
          std::optional<Decomposition> found;
          std::size_t                  found_i = 0;
          bool                         reported = false;
          for (std::size_t i = 0; k > 0 && i < k; ++i) {
            Id y = inv[k - 1][i][s];
            if (y == UNASSIGNED) {
              continue;
            }
            auto const&   dy = t.decomposition[k - 1][y];
            Decomposition d{dy.core_level, dy.core, {}};
            for (auto v : codegeneracy(k, i)) {
              d.surjection.push_back(dy.surjection[v]);
            }
            if (!found) {
              found   = d;
              found_i = i;
            } else if (!reported
                       && (found->core_level != d.core_level
                           || found->core != d.core
                           || found->surjection != d.surjection)) {
              t.violations.push_back({"Eilenberg-Zilber uniqueness", k, found_i, i, s});
              reported = true;
            }
          }
          if (!found) {
            std::vector<std::size_t> id(k + 1);
            std::iota(id.begin(), id.end(), std::size_t(0));
            found = Decomposition{k, s, id};
          }
          t.decomposition[k].push_back(*found);
        }
      }
      return t;
    }
  }  // namespace

  ValidationReport validate(SimplicialSet const& x) {
    ValidationReport r;
    auto&            v = r.violations;
    std::size_t const n = x.truncation();
    for (std::size_t k = 2; k <= n; ++k) {
      for (std::size_t j = 1; j <= k; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          for (Id s = 0; s < x.size(k); ++s) {
            if (x.face(k - 1, i)[x.face(k, j)[s]]
                != x.face(k - 1, j - 1)[x.face(k, i)[s]]) {
              v.push_back({"d_i d_j = d_{j-1} d_i", k, i, j, s});
            }
          }
        }
      }
    }
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      for (std::size_t j = 0; j <= k; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
          for (Id s = 0; s < x.size(k); ++s) {
            if (x.degeneracy(k + 1, i)[x.degeneracy(k, j)[s]]
                != x.degeneracy(k + 1, j + 1)[x.degeneracy(k, i)[s]]) {
              v.push_back({"s_i s_j = s_{j+1} s_i", k, i, j, s});
            }
          }
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j <= k; ++j) {
        for (Id s = 0; s < x.size(k); ++s) {
          Id t = x.degeneracy(k, j)[s];
          if (x.face(k + 1, j)[t] != s) {
            v.push_back({"d_j s_j = id", k, j, j, s});
          }
          if (x.face(k + 1, j + 1)[t] != s) {
            v.push_back({"d_{j+1} s_j = id", k, j + 1, j, s});
          }
          for (std::size_t i = 0; i < j; ++i) {
            if (x.face(k + 1, i)[t] != x.degeneracy(k - 1, j - 1)[x.face(k, i)[s]]) {
              v.push_back({"d_i s_j = s_{j-1} d_i", k, i, j, s});
            }
          }
          for (std::size_t i = j + 2; i <= k + 1; ++i) {
            if (x.face(k + 1, i)[t] != x.degeneracy(k - 1, j)[x.face(k, i - 1)[s]]) {
              v.push_back({"d_i s_j = s_j d_{i-1}", k, i, j, s});
            }
          }
        }
        std::vector<Id> seen(x.size(k + 1), UNASSIGNED);
        auto const&     sj = x.degeneracy(k, j);
        for (Id s = 0; s < sj.size(); ++s) {
          if (seen[sj[s]] != UNASSIGNED) {
            v.push_back({"degeneracy injective", k, j, j, s});
          }
          seen[sj[s]] = s;
        }
      }
    }
    if (v.empty()) {
      auto t = ez_table(x);
      v.insert(v.end(), t.violations.begin(), t.violations.end());
    }
    return r;
  }

  Decomposition decompose(SimplicialSet const& x, std::size_t k, Id simplex) {
    if (k > x.truncation() || simplex >= x.size(k)) {
      throw ArgumentError("decompose: simplex out of range");
    }
    auto                     inv = degeneracy_inverses(x);
    std::vector<std::size_t> sigma(k + 1);
    std::iota(sigma.begin(), sigma.end(), std::size_t(0));
    Id          s     = simplex;
    std::size_t level = k;
    // σ accumulates the surjection [k] -> [level]
    while (level > 0) {
      std::size_t i = 0;
      while (i < level && inv[level - 1][i][s] == UNASSIGNED) {
        ++i;
      }
      if (i == level) {
        break;
      }
      s = inv[level - 1][i][s];
      for (auto& v : sigma) {
        v = v <= i ? v : v - 1;
      }
      --level;
    }
    return {level, s, sigma};
  }

  Id apply_monotone(SimplicialSet const&            x,
                    std::size_t                     n,
                    std::vector<std::size_t> const& theta,
                    Id                              simplex) {
    if (theta.empty()) {
      throw ArgumentError("apply_monotone: empty map");
    }
    std::size_t const m = theta.size() - 1;
    if (m > x.truncation() || n > x.truncation()) {
      throw ArgumentError("apply_monotone: degree beyond truncation");
    }
    if (simplex >= x.size(n)) {
      throw ArgumentError("apply_monotone: simplex out of range");
    }
    for (std::size_t a = 0; a <= m; ++a) {
      if (theta[a] > n || (a > 0 && theta[a] < theta[a - 1])) {
        throw ArgumentError("apply_monotone: not a monotone map into [n]");
      }
    }
    // θ = δ ∘ σ with σ surjective onto the image and δ injective, so
    // θ^* = σ^* δ^*; δ^* is a string of faces, σ^* a string of degeneracies.
    std::vector<std::size_t> image(theta.begin(), theta.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    Id                       s     = simplex;
    std::size_t              level = n;
    for (std::size_t v = n + 1; v-- > 0;) {
      if (!std::binary_search(image.begin(), image.end(), v)) {
        s = x.face(level, v)[s];
        --level;
      }
    }
    // σ: [m] -> [level], σ(a) = position of θ(a) in the image
    std::vector<std::size_t> sigma(m + 1);
    for (std::size_t a = 0; a <= m; ++a) {
      sigma[a] = static_cast<std::size_t>(
          std::lower_bound(image.begin(), image.end(), theta[a]) - image.begin());
    }
    std::vector<std::size_t> repeats;
    for (std::size_t a = 0; a < m; ++a) {
      if (sigma[a] == sigma[a + 1]) {
        repeats.push_back(a);
      }
    }
    // σ^* = s_{j_r} ... s_{j_1} with j_1 < ... < j_r the repeat positions
    for (std::size_t j : repeats) {
      s = x.degeneracy(level, j)[s];
      ++level;
    }
    return s;
  }

  Pushout pushout(SimplicialSet const& a,
                  SimplicialSet const& x,
                  SimplicialSet const& y,
                  SimplicialMap const& f,
                  SimplicialMap const& g) {
    if (a.truncation() != x.truncation() || a.truncation() != y.truncation()) {
      throw ArgumentError("pushout: truncation levels differ");
    }
    auto c = cells::colimit({&a.cells(), &x.cells(), &y.cells()},
                            {{0, 1, f.components}, {0, 2, g.components}});
    return {SimplicialSet(a.truncation(), std::move(c.object)),
            {std::move(c.injections[1])},
            {std::move(c.injections[2])}};
  }

  Pullback pullback(SimplicialSet const& x,
                    SimplicialSet const& y,
                    SimplicialSet const& z,
                    SimplicialMap const& f,
                    SimplicialMap const& g) {
    if (x.truncation() != z.truncation() || y.truncation() != z.truncation()) {
      throw ArgumentError("pullback: truncation levels differ");
    }
    auto l = cells::limit({&x.cells(), &y.cells(), &z.cells()},
                          {{0, 2, f.components}, {1, 2, g.components}});
    return {SimplicialSet(z.truncation(), std::move(l.object)),
            {std::move(l.projections[0])},
            {std::move(l.projections[1])}};
  }

  SimplicialSet coproduct(std::vector<SimplicialSet> const& parts) {
    if (parts.empty()) {
      throw ArgumentError("coproduct: no parts");
    }
    std::vector<CellComplex const*> ptrs;
    for (auto const& p : parts) {
      if (p.truncation() != parts[0].truncation()) {
        throw ArgumentError("coproduct: truncation levels differ");
      }
      ptrs.push_back(&p.cells());
    }
    return SimplicialSet(parts[0].truncation(), cells::coproduct(ptrs).object);
  }

  SimplicialSet product(SimplicialSet const& x, SimplicialSet const& y) {
    if (x.truncation() != y.truncation()) {
      throw ArgumentError("product: truncation levels differ");
    }
    return SimplicialSet(x.truncation(),
                         cells::limit({&x.cells(), &y.cells()}, {}).object);
  }

  SimplicialSet discrete(std::size_t points, std::size_t trunc) {
    CellComplex c = SimplicialSet::shape(trunc);
    c.sizes.assign(trunc + 1, points);
    Mapping id(points);
    std::iota(id.begin(), id.end(), Id(0));
    for (auto& op : c.ops) {
      op.map = id;
    }
    return SimplicialSet(trunc, std::move(c));
  }

  SimplicialSet terminal(std::size_t trunc) {
    return discrete(1, trunc);
  }

  Components pi0(SimplicialSet const& x) {
    if (x.truncation() < 1) {
      throw ArgumentError("pi0: truncation 0 has no edges");
    }
    DisjointSet uf(x.size(0));
    for (Id e = 0; e < x.size(1); ++e) {
      uf.unite(x.face(1, 0)[e], x.face(1, 1)[e]);
    }
    Components        c{0, Mapping(x.size(0))};
    std::vector<Id>   number(x.size(0), UNASSIGNED);
    for (Id v = 0; v < x.size(0); ++v) {
      auto r = uf.find(v);
      if (number[r] == UNASSIGNED) {
        number[r] = static_cast<Id>(c.count++);
      }
      c.of_vertex[v] = number[r];
    }
    return c;
  }

  IsoResult iso_check(SimplicialSet const& x, SimplicialSet const& y) {
    if (x.truncation() != y.truncation()) {
      return {std::nullopt,
              "truncation levels " + std::to_string(x.truncation()) + " vs "
                  + std::to_string(y.truncation())};
    }
    auto describe = [](char const* what, std::vector<std::size_t> const& a,
                       std::vector<std::size_t> const& b) {
      std::ostringstream out;
      out << what << " differ:";
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k]) {
          out << " level " << k << ": " << a[k] << " vs " << b[k] << ";";
        }
      }
      auto s = out.str();
      s.pop_back();
      return s;
    };
    auto nx = x.nondegenerate_counts();
    auto ny = y.nondegenerate_counts();
    if (nx != ny) {
      return {std::nullopt, describe("nondegenerate counts", nx, ny)};
    }
    if (x.sizes() != y.sizes()) {
      return {std::nullopt, describe("level sizes", x.sizes(), y.sizes())};
    }
    // degeneracy profile: number of simplices lying in exactly d degeneracy
    // images, per level
    auto profile = [](SimplicialSet const& s) {
      std::vector<std::size_t> p;
      for (std::size_t k = 1; k <= s.truncation(); ++k) {
        std::vector<std::size_t> hits(s.size(k), 0);
        for (std::size_t i = 0; i < k; ++i) {
          for (Id t : s.degeneracy(k - 1, i)) {
            ++hits[t];
          }
        }
        std::vector<std::size_t> histogram(k + 1, 0);
        for (auto h : hits) {
          ++histogram[h];
        }
        p.insert(p.end(), histogram.begin(), histogram.end());
      }
      return p;
    };
    if (profile(x) != profile(y)) {
      return {std::nullopt, "degeneracy profiles differ"};
    }
    if (auto m = cells::find_isomorphism(x.cells(), y.cells())) {
      return {SimplicialMap{std::move(*m)}, ""};
    }
    return {std::nullopt, "no structure-preserving bijection exists"};
  }

  SubSet sub_object(SimplicialSet const& x, cells::Mask const& keep) {
    auto s = cells::sub_object(x.cells(), keep);
    return {SimplicialSet(x.truncation(), std::move(s.object)),
            {std::move(s.inclusion)}};
  }

  cells::Mask generated_by(SimplicialSet const&                           x,
                           std::vector<std::pair<std::size_t, Id>> const& seeds) {
    cells::Mask m(x.truncation() + 1);
    for (std::size_t k = 0; k <= x.truncation(); ++k) {
      m[k].assign(x.size(k), false);
    }
    for (auto [k, s] : seeds) {
      m.at(k).at(s) = true;
    }
    return cells::closure(x.cells(), std::move(m));
  }

}  // namespace segal
