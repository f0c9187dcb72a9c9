#include "segal/simplicial_space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "segal/errors.hpp"

namespace segal {

  CellComplex SimplicialSpace::shape(std::size_t outer, std::size_t inner) {
    CellComplex c;
    c.sizes.assign((outer + 1) * (inner + 1), 0);
    auto const in  = SimplicialSet::shape(inner);
    auto const out = SimplicialSet::shape(outer);
    for (std::size_t m = 0; m <= outer; ++m) {
      for (auto const& op : in.ops) {
        c.ops.push_back({m * (inner + 1) + op.source, m * (inner + 1) + op.target, {}});
      }
    }
    for (std::size_t n = 0; n <= inner; ++n) {
      for (auto const& op : out.ops) {
        c.ops.push_back({op.source * (inner + 1) + n, op.target * (inner + 1) + n, {}});
      }
    }
    return c;
  }

  SimplicialSpace::SimplicialSpace() : _outer(0), _inner(0), _cells(shape(0, 0)) {}

  SimplicialSpace::SimplicialSpace(std::size_t outer, std::size_t inner, CellComplex cells)
      : _outer(outer), _inner(inner), _cells(std::move(cells)) {
    if (!cells::same_shape(_cells, shape(outer, inner))) {
      throw ArgumentError("SimplicialSpace: operator layout does not match the "
                          "truncations");
    }
    for (auto const& op : _cells.ops) {
      if (op.map.size() != _cells.sizes[op.source]) {
        throw ArgumentError("SimplicialSpace: a structure map has the wrong "
                            "domain size");
      }
      for (Id y : op.map) {
        if (y >= _cells.sizes[op.target]) {
          throw ArgumentError("SimplicialSpace: a structure map leaves its "
                              "codomain");
        }
      }
    }
  }

  SimplicialSpace SimplicialSpace::assemble(std::vector<SimplicialSet> const& columns,
                                            std::vector<SimplicialSet> const& rows) {
    if (columns.empty() || rows.empty()) {
      throw ArgumentError("assemble: no columns or rows");
    }
    std::size_t const outer = columns.size() - 1;
    std::size_t const inner = rows.size() - 1;
    CellComplex       c     = shape(outer, inner);
    for (std::size_t m = 0; m <= outer; ++m) {
      if (columns[m].truncation() != inner) {
        throw ArgumentError("assemble: column truncation mismatch");
      }
    }
    for (std::size_t n = 0; n <= inner; ++n) {
      if (rows[n].truncation() != outer) {
        throw ArgumentError("assemble: row truncation mismatch");
      }
      for (std::size_t m = 0; m <= outer; ++m) {
        if (rows[n].size(m) != columns[m].size(n)) {
          throw ArgumentError("assemble: row and column sizes disagree");
        }
        c.sizes[m * (inner + 1) + n] = columns[m].size(n);
      }
    }
    std::size_t const in_ops  = SimplicialSet::op_count(inner);
    std::size_t const out_ops = SimplicialSet::op_count(outer);
    for (std::size_t m = 0; m <= outer; ++m) {
      for (std::size_t l = 0; l < in_ops; ++l) {
        c.ops[m * in_ops + l].map = columns[m].cells().ops[l].map;
      }
    }
    for (std::size_t n = 0; n <= inner; ++n) {
      for (std::size_t l = 0; l < out_ops; ++l) {
        c.ops[(outer + 1) * in_ops + n * out_ops + l].map = rows[n].cells().ops[l].map;
      }
    }
    return SimplicialSpace(outer, inner, std::move(c));
  }

  std::size_t SimplicialSpace::inner_op(std::size_t m, std::size_t local) const {
    return m * SimplicialSet::op_count(_inner) + local;
  }

  std::size_t SimplicialSpace::outer_op(std::size_t n, std::size_t local) const {
    return (_outer + 1) * SimplicialSet::op_count(_inner)
           + n * SimplicialSet::op_count(_outer) + local;
  }

  Mapping const& SimplicialSpace::inner_face(std::size_t m, std::size_t n, std::size_t i) const {
    if (m > _outer || n == 0 || n > _inner || i > n) {
      throw ArgumentError("inner face out of range");
    }
    return _cells.ops[inner_op(m, SimplicialSet::face_op(n, i))].map;
  }

  Mapping const& SimplicialSpace::inner_degeneracy(std::size_t m,
                                                   std::size_t n,
                                                   std::size_t i) const {
    if (m > _outer || n >= _inner || i > n) {
      throw ArgumentError("inner degeneracy out of range");
    }
    return _cells.ops[inner_op(m, SimplicialSet::degeneracy_op(_inner, n, i))].map;
  }

  Mapping const& SimplicialSpace::outer_face(std::size_t m, std::size_t n, std::size_t i) const {
    if (n > _inner || m == 0 || m > _outer || i > m) {
      throw ArgumentError("outer face out of range");
    }
    return _cells.ops[outer_op(n, SimplicialSet::face_op(m, i))].map;
  }

  Mapping const& SimplicialSpace::outer_degeneracy(std::size_t m,
                                                   std::size_t n,
                                                   std::size_t i) const {
    if (n > _inner || m >= _outer || i > m) {
      throw ArgumentError("outer degeneracy out of range");
    }
    return _cells.ops[outer_op(n, SimplicialSet::degeneracy_op(_outer, m, i))].map;
  }

  SimplicialSet SimplicialSpace::column(std::size_t m) const {
    CellComplex c = SimplicialSet::shape(_inner);
    for (std::size_t n = 0; n <= _inner; ++n) {
      c.sizes[n] = size(m, n);
    }
    for (std::size_t l = 0; l < c.ops.size(); ++l) {
      c.ops[l].map = _cells.ops[inner_op(m, l)].map;
    }
    return SimplicialSet(_inner, std::move(c));
  }

  SimplicialSet SimplicialSpace::row(std::size_t n) const {
    CellComplex c = SimplicialSet::shape(_outer);
    for (std::size_t m = 0; m <= _outer; ++m) {
      c.sizes[m] = size(m, n);
    }
    for (std::size_t l = 0; l < c.ops.size(); ++l) {
      c.ops[l].map = _cells.ops[outer_op(n, l)].map;
    }
    return SimplicialSet(_outer, std::move(c));
  }

  bool SimplicialSpace::operator==(SimplicialSpace const& other) const {
    if (_outer != other._outer || _inner != other._inner
        || _cells.sizes != other._cells.sizes) {
      return false;
    }
    for (std::size_t o = 0; o < _cells.ops.size(); ++o) {
      if (_cells.ops[o].map != other._cells.ops[o].map) {
        return false;
      }
    }
    return true;
  }

  ValidationReport validate(SimplicialSpace const& x) {
    ValidationReport r;
    for (std::size_t m = 0; m <= x.outer_truncation(); ++m) {
      for (auto v : validate(x.column(m)).violations) {
        v.identity = "column " + std::to_string(m) + ": " + v.identity;
        r.violations.push_back(std::move(v));
      }
    }
    for (std::size_t n = 0; n <= x.inner_truncation(); ++n) {
      for (auto v : validate(x.row(n)).violations) {
        v.identity = "row " + std::to_string(n) + ": " + v.identity;
        r.violations.push_back(std::move(v));
      }
    }
    auto const in  = SimplicialSet::shape(x.inner_truncation());
    auto const out = SimplicialSet::shape(x.outer_truncation());
    for (std::size_t p = 0; p < in.ops.size(); ++p) {
      std::size_t const n0 = in.ops[p].source;
      std::size_t const n1 = in.ops[p].target;
      for (std::size_t q = 0; q < out.ops.size(); ++q) {
        std::size_t const m0 = out.ops[q].source;
        std::size_t const m1 = out.ops[q].target;
        auto inner_at = [&](std::size_t m) -> Mapping const& {
          return x.cells().ops[m * in.ops.size() + p].map;
        };
        auto outer_at = [&](std::size_t n) -> Mapping const& {
          return x.cells()
              .ops[(x.outer_truncation() + 1) * in.ops.size() + n * out.ops.size() + q]
              .map;
        };
        auto const& a = inner_at(m0);
        auto const& b = outer_at(n1);
        auto const& c = outer_at(n0);
        auto const& d = inner_at(m1);
        for (Id e = 0; e < x.size(m0, n0); ++e) {
          if (b[a[e]] != d[c[e]]) {
            r.violations.push_back({"outer/inner commutation", m0, p, q, e});
          }
        }
      }
    }
    return r;
  }

  IsoResult iso_check(SimplicialSpace const& x, SimplicialSpace const& y) {
    if (x.outer_truncation() != y.outer_truncation()
        || x.inner_truncation() != y.inner_truncation()) {
      return {std::nullopt, "truncations differ"};
    }
    for (std::size_t m = 0; m <= x.outer_truncation(); ++m) {
      for (std::size_t n = 0; n <= x.inner_truncation(); ++n) {
        if (x.size(m, n) != y.size(m, n)) {
          return {std::nullopt,
                  "cell (" + std::to_string(m) + "," + std::to_string(n) + ") sizes "
                      + std::to_string(x.size(m, n)) + " vs "
                      + std::to_string(y.size(m, n))};
        }
      }
    }
    for (std::size_t n = 0; n <= x.inner_truncation(); ++n) {
      auto nx = x.row(n).nondegenerate_counts();
      auto ny = y.row(n).nondegenerate_counts();
      if (nx != ny) {
        return {std::nullopt,
                "outer nondegenerate counts differ at inner level " + std::to_string(n)};
      }
    }
    if (auto m = cells::find_isomorphism(x.cells(), y.cells())) {
      return {SimplicialMap{std::move(*m)}, ""};
    }
    return {std::nullopt, "no structure-preserving bijection exists"};
  }

  bool is_space_map(SimplicialSpace const& source,
                    SimplicialSpace const& target,
                    SimplicialMap const&   f) {
    return source.outer_truncation() == target.outer_truncation()
           && source.inner_truncation() == target.inner_truncation()
           && cells::is_homomorphism(source.cells(), target.cells(), f.components);
  }

  SimplicialSpace transpose(SimplicialSet const& x, std::size_t inner) {
    std::vector<SimplicialSet> columns;
    for (std::size_t m = 0; m <= x.truncation(); ++m) {
      columns.push_back(discrete(x.size(m), inner));
    }
    return SimplicialSpace::assemble(columns, std::vector<SimplicialSet>(inner + 1, x));
  }

  SimplicialMap transpose(SimplicialMap const& f, std::size_t outer, std::size_t inner) {
    SimplicialMap g;
    for (std::size_t m = 0; m <= outer; ++m) {
      for (std::size_t n = 0; n <= inner; ++n) {
        g.components.push_back(f.components.at(m));
      }
    }
    return g;
  }

  SimplicialSpace constant_space(SimplicialSet const& k, std::size_t outer) {
    std::vector<SimplicialSet> rows;
    for (std::size_t n = 0; n <= k.truncation(); ++n) {
      rows.push_back(discrete(k.size(n), outer));
    }
    return SimplicialSpace::assemble(std::vector<SimplicialSet>(outer + 1, k), rows);
  }

  SpaceProduct product(SimplicialSpace const& a, SimplicialSpace const& b) {
    if (a.outer_truncation() != b.outer_truncation()
        || a.inner_truncation() != b.inner_truncation()) {
      throw ArgumentError("product: truncations differ");
    }
    auto l = cells::limit({&a.cells(), &b.cells()}, {});
    return {SimplicialSpace(a.outer_truncation(), a.inner_truncation(), std::move(l.object)),
            {std::move(l.projections[0])},
            {std::move(l.projections[1])}};
  }

  SimplicialSpace box(SimplicialSet const& k, SimplicialSet const& l) {
    return product(constant_space(k, l.truncation()), transpose(l, k.truncation())).object;
  }

  std::optional<std::string> precategory_defect(SimplicialSpace const& x,
                                                std::size_t            objects) {
    if (x.size(0, 0) != objects) {
      return "degree zero has " + std::to_string(x.size(0, 0)) + " vertices but "
             + std::to_string(objects) + " objects are declared";
    }
    Mapping cur(objects);
    std::iota(cur.begin(), cur.end(), Id(0));
    for (std::size_t n = 1; n <= x.inner_truncation(); ++n) {
      auto const& s = x.inner_degeneracy(0, n - 1, 0);
      for (auto& v : cur) {
        v = s[v];
      }
      if (x.size(0, n) != objects) {
        return "degree zero is not discrete: level " + std::to_string(n) + " has "
               + std::to_string(x.size(0, n)) + " simplices";
      }
      std::vector<bool> hit(objects, false);
      for (auto v : cur) {
        if (hit[v]) {
          return "degree zero is not discrete at level " + std::to_string(n);
        }
        hit[v] = true;
      }
    }
    return std::nullopt;
  }

  SegalPrecategory make_precategory(SimplicialSpace          x,
                                    std::vector<std::string> objects,
                                    CellMap*                 renumbering) {
    if (auto defect = precategory_defect(x, objects.size())) {
      throw ValidationError("not a Segal precategory: " + *defect);
    }
    CellMap perm = cells::identity(x.cells());
    Mapping cur(objects.size());
    std::iota(cur.begin(), cur.end(), Id(0));
    for (std::size_t n = 1; n <= x.inner_truncation(); ++n) {
      auto const& s = x.inner_degeneracy(0, n - 1, 0);
      for (auto& v : cur) {
        v = s[v];
      }
      for (Id o = 0; o < cur.size(); ++o) {
        perm[x.cell(0, n)][cur[o]] = o;
      }
    }
    SimplicialSpace y(x.outer_truncation(),
                      x.inner_truncation(),
                      cells::permute(x.cells(), perm));
    if (renumbering != nullptr) {
      *renumbering = std::move(perm);
    }
    return {std::move(y), std::move(objects)};
  }

  std::vector<std::string> point_object() {
    return {"*"};
  }

  std::vector<Id> outer_vertices(SimplicialSpace const& x,
                                 std::size_t            m,
                                 std::size_t            n,
                                 Id                     e) {
    std::vector<Id> result;
    for (std::size_t j = 0; j <= m; ++j) {
      Id          s     = e;
      std::size_t level = m;
      for (std::size_t v = m + 1; v-- > 0;) {
        if (v != j) {
          s = x.outer_face(level, n, v)[s];
          --level;
        }
      }
      result.push_back(s);
    }
    return result;
  }

  SimplicialMap vertex_inclusion(SimplicialSet const& x) {
    SimplicialMap f;
    Mapping       cur(x.size(0));
    std::iota(cur.begin(), cur.end(), Id(0));
    f.components.push_back(cur);
    for (std::size_t j = 1; j <= x.truncation(); ++j) {
      auto const& s = x.degeneracy(j - 1, 0);
      for (auto& v : cur) {
        v = s[v];
      }
      f.components.push_back(cur);
    }
    return f;
  }

  namespace {
    void check_labels(std::size_t n, std::vector<Id> const& x, std::size_t objects) {
      if (x.size() != n + 1) {
        throw ArgumentError("object tuple has length " + std::to_string(x.size())
                            + ", expected " + std::to_string(n + 1));
      }
      for (Id o : x) {
        if (o >= objects) {
          throw ArgumentError("label " + std::to_string(o)
                              + " is outside the object set");
        }
      }
    }
  }  // namespace

  LabeledSimplexSet labeled_simplex_set(std::size_t            n,
                                        std::vector<Id> const& x,
                                        std::size_t            objects,
                                        std::size_t            trunc) {
    check_labels(n, x, objects);
    auto const simplex = generate(StandardKind::simplex, n, std::nullopt, trunc);
    auto const points  = discrete(n + 1, trunc);
    auto const labels  = discrete(objects, trunc);
    CellMap    to_labels(trunc + 1, Mapping(x.begin(), x.end()));
    auto       c = cells::colimit({&labels.cells(), &points.cells(), &simplex.cells()},
                            {{1, 0, to_labels}, {1, 2, vertex_inclusion(simplex).components}});
    return {SimplicialSet(trunc, std::move(c.object)), {std::move(c.injections[2])}};
  }

  SegalPrecategory labeled_simplex(std::size_t                     n,
                                   std::vector<Id> const&          x,
                                   std::vector<std::string> const& objects,
                                   std::size_t                     outer,
                                   std::size_t                     inner) {
    auto l = labeled_simplex_set(n, x, objects.size(), outer);
    return make_precategory(transpose(l.object, inner), objects);
  }

  GObject g_object(std::size_t                     k,
                   std::vector<Id> const&          x,
                   std::vector<std::string> const& objects,
                   std::size_t                     outer,
                   std::size_t                     inner) {
    if (k == 0) {
      throw ArgumentError("g_object: k must be at least 1");
    }
    auto l = labeled_simplex_set(k, x, objects.size(), outer);
    std::vector<std::pair<std::size_t, Id>> seeds;
    for (Id v = 0; v < l.object.size(0); ++v) {
      seeds.emplace_back(0, v);
    }
    if (outer >= 1) {
      auto const edges = standard_simplices(StandardKind::simplex, k, std::nullopt, 1)[1];
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> e{i, i + 1};
        auto idx = static_cast<Id>(std::find(edges.begin(), edges.end(), e) - edges.begin());
        seeds.emplace_back(1, l.from_simplex.components[1][idx]);
      }
    }
    auto sub = sub_object(l.object, generated_by(l.object, seeds));
    return {make_precategory(transpose(sub.object, inner), objects),
            transpose(sub.inclusion, outer, inner)};
  }

  Reduction reduce(SimplicialSpace const& x) {
    if (x.inner_truncation() < 1) {
      throw ArgumentError("reduce: inner truncation must be at least 1");
    }
    auto const col   = x.column(0);
    auto const comps = pi0(col);
    Mapping    rep(comps.count, UNASSIGNED);
    for (Id v = 0; v < col.size(0); ++v) {
      if (rep[comps.of_vertex[v]] == UNASSIGNED) {
        rep[comps.of_vertex[v]] = v;
      }
    }
    std::vector<cells::Pair> pairs;
    Mapping                  target = rep;  // s_0^n of the representative vertex
    for (std::size_t n = 0; n <= x.inner_truncation(); ++n) {
      if (n > 0) {
        for (auto& t : target) {
          t = col.degeneracy(n - 1, 0)[t];
        }
      }
      for (Id e = 0; e < col.size(n); ++e) {
        Id v = e;
        for (std::size_t l = n; l > 0; --l) {
          v = col.face(l, l)[v];
        }
        pairs.push_back({x.cell(0, n), e, target[comps.of_vertex[v]]});
      }
    }
    auto                     q = cells::quotient(x.cells(), pairs);
    std::vector<std::string> names;
    for (Id c = 0; c < comps.count; ++c) {
      names.push_back("v" + std::to_string(rep[c]));
    }
    CellMap renumber;
    auto    p = make_precategory(
        SimplicialSpace(x.outer_truncation(), x.inner_truncation(), std::move(q.object)),
        std::move(names),
        &renumber);
    return {std::move(p), {cells::compose(renumber, q.projection)}};
  }

  SegalPrecategory generating_object(GeneratingKind                  kind,
                                     std::size_t                     m,
                                     std::size_t                     n,
                                     std::optional<std::size_t>      k,
                                     std::vector<Id> const&          x,
                                     std::vector<std::string> const& objects,
                                     std::size_t                     outer,
                                     std::size_t                     inner) {
    check_labels(n, x, objects.size());
    SimplicialSet base;
    switch (kind) {
      case GeneratingKind::P:
        base = generate(StandardKind::boundary, m, std::nullopt, inner);
        break;
      case GeneratingKind::Q:
        base = generate(StandardKind::simplex, m, std::nullopt, inner);
        break;
      case GeneratingKind::R:
        if (m < 1 || n < 1) {
          throw ArgumentError("R_{m,n,k} needs m, n >= 1");
        }
        if (!k || *k > m) {
          throw ArgumentError("R_{m,n,k} needs 0 <= k <= m");
        }
        base = generate(StandardKind::horn, m, k, inner);
        break;
    }
    std::size_t const nobj  = objects.size();
    auto const        label = labeled_simplex_set(n, x, nobj, outer).object;
    auto const        big   = box(base, label);
    // base × (vertices of the labelled simplex): the pairs whose second
    // entry is a degenerate vertex, which has id < nobj in every degree
    cells::Mask keep(big.cells().sizes.size());
    for (std::size_t a = 0; a <= outer; ++a) {
      for (std::size_t b = 0; b <= inner; ++b) {
        auto& mask = keep[big.cell(a, b)];
        mask.assign(big.size(a, b), false);
        for (Id e = 0; e < big.size(a, b); ++e) {
          mask[e] = e % label.size(a) < nobj;
        }
      }
    }
    auto const sub  = cells::sub_object(big.cells(), keep);
    auto const disc = transpose(discrete(nobj, outer), inner);
    CellMap    collapse(sub.inclusion.size());
    for (std::size_t a = 0; a <= outer; ++a) {
      for (std::size_t b = 0; b <= inner; ++b) {
        for (Id e : sub.inclusion[big.cell(a, b)]) {
          collapse[big.cell(a, b)].push_back(static_cast<Id>(e % label.size(a)));
        }
      }
    }
    auto c = cells::colimit({&disc.cells(), &sub.object, &big.cells()},
                            {{1, 0, collapse}, {1, 2, sub.inclusion}});
    return make_precategory(SimplicialSpace(outer, inner, std::move(c.object)), objects);
  }

  namespace {
    void check_diagram(PrecategoryDiagram const& d) {
      if (d.objects.empty()) {
        throw ArgumentError("diagram has no objects");
      }
      auto const& o = d.objects[0];
      for (auto const& x : d.objects) {
        if (x.objects != o.objects) {
          throw ArgumentError("diagram objects have different object sets");
        }
        if (x.space.outer_truncation() != o.space.outer_truncation()
            || x.space.inner_truncation() != o.space.inner_truncation()) {
          throw ArgumentError("diagram objects have different truncations");
        }
      }
      for (auto const& a : d.arrows) {
        if (a.source >= d.objects.size() || a.target >= d.objects.size()) {
          throw ArgumentError("arrow endpoint out of range");
        }
        if (!is_space_map(d.objects[a.source].space, d.objects[a.target].space, {a.map})) {
          throw ArgumentError("arrow is not a map of simplicial spaces");
        }
        auto const& v = a.map[0];
        for (Id i = 0; i < v.size(); ++i) {
          if (v[i] != i) {
            throw ArgumentError("arrow is not the identity on objects");
          }
        }
      }
    }
  }  // namespace

  LimitO limit_O(PrecategoryDiagram const& d) {
    check_diagram(d);
    std::vector<CellComplex const*> parts;
    for (auto const& x : d.objects) {
      parts.push_back(&x.space.cells());
    }
    auto              l     = cells::limit(parts, d.arrows);
    std::size_t const outer = d.objects[0].space.outer_truncation();
    std::size_t const inner = d.objects[0].space.inner_truncation();
    SimplicialSpace   full(outer, inner, l.object);
    cells::Mask       keep(l.object.sizes.size());
    for (std::size_t m = 0; m <= outer; ++m) {
      for (std::size_t n = 0; n <= inner; ++n) {
        std::size_t c = full.cell(m, n);
        keep[c].assign(full.size(m, n), true);
        for (Id t = 0; t < full.size(m, n); ++t) {
          auto first = outer_vertices(d.objects[0].space, m, n, l.projections[0][c][t]);
          for (std::size_t a = 1; a < d.objects.size() && keep[c][t]; ++a) {
            if (outer_vertices(d.objects[a].space, m, n, l.projections[a][c][t]) != first) {
              keep[c][t] = false;
            }
          }
        }
      }
    }
    auto    sub = cells::sub_object(l.object, keep);
    CellMap renumber;
    auto    p = make_precategory(SimplicialSpace(outer, inner, std::move(sub.object)),
                              d.objects[0].objects,
                              &renumber);
    LimitO  result{std::move(p), {}};
    // projections from the renumbered sub-object
    CellMap back(renumber.size());
    for (std::size_t c = 0; c < renumber.size(); ++c) {
      back[c].resize(renumber[c].size());
      for (Id e = 0; e < renumber[c].size(); ++e) {
        back[c][renumber[c][e]] = e;
      }
    }
    for (auto const& proj : l.projections) {
      result.projections.push_back({cells::compose(proj, cells::compose(sub.inclusion, back))});
    }
    return result;
  }

  ColimitO colimit_O(PrecategoryDiagram const& d) {
    check_diagram(d);
    std::vector<CellComplex const*> parts;
    for (auto const& x : d.objects) {
      parts.push_back(&x.space.cells());
    }
    auto                     sum   = cells::coproduct(parts);
    auto const&              first = d.objects[0].space;
    std::vector<cells::Pair> pairs;
    for (auto const& a : d.arrows) {
      for (std::size_t c = 0; c < a.map.size(); ++c) {
        for (Id e = 0; e < a.map[c].size(); ++e) {
          pairs.push_back(
              {c, sum.injections[a.source][c][e], sum.injections[a.target][c][a.map[c][e]]});
        }
      }
    }
    for (std::size_t a = 1; a < d.objects.size(); ++a) {
      for (std::size_t n = 0; n <= first.inner_truncation(); ++n) {
        std::size_t c = first.cell(0, n);
        for (Id o = 0; o < first.size(0, n); ++o) {
          pairs.push_back({c, sum.injections[0][c][o], sum.injections[a][c][o]});
        }
      }
    }
    auto    q = cells::quotient(sum.object, pairs);
    CellMap renumber;
    auto    p = make_precategory(
        SimplicialSpace(first.outer_truncation(), first.inner_truncation(), std::move(q.object)),
        d.objects[0].objects,
        &renumber);
    ColimitO result{std::move(p), {}};
    for (auto const& inj : sum.injections) {
      result.injections.push_back({cells::compose(renumber, cells::compose(q.projection, inj))});
    }
    return result;
  }

  CellMap fixed_objects(SegalPrecategory const& source) {
    auto const& x = source.space;
    CellMap     f(x.cells().sizes.size());
    for (std::size_t c = 0; c < f.size(); ++c) {
      f[c].assign(x.cells().sizes[c], UNASSIGNED);
    }
    for (std::size_t n = 0; n <= x.inner_truncation(); ++n) {
      auto& col = f[x.cell(0, n)];
      std::iota(col.begin(), col.end(), Id(0));
    }
    return f;
  }

  std::string to_dot(SegalPrecategory const& x) {
    std::ostringstream out;
    out << "digraph outer_skeleton {\n";
    for (std::size_t o = 0; o < x.objects.size(); ++o) {
      out << "  o" << o << " [label=\"" << x.objects[o] << "\"];\n";
    }
    auto const& s = x.space;
    if (s.outer_truncation() >= 1) {
      std::vector<bool> degenerate(s.size(1, 0), false);
      for (Id v : s.outer_degeneracy(0, 0, 0)) {
        degenerate[v] = true;
      }
      for (Id e = 0; e < s.size(1, 0); ++e) {
        if (!degenerate[e]) {
          out << "  o" << s.outer_face(1, 0, 1)[e] << " -> o" << s.outer_face(1, 0, 0)[e]
              << " [label=\"e" << e << "\"];\n";
        }
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace segal
