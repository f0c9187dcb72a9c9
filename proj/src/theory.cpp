#include "segal/theory.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "segal/errors.hpp"

namespace segal {

  std::vector<Word> enumerate_words(std::size_t n, std::size_t L) {
    std::vector<Word> result{Word{}};
    if (n == 0) {
      return result;
    }
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= L; ++len) {
      std::size_t end = result.size();
      for (std::size_t w = begin; w < end; ++w) {
        for (Id a = 0; a < n; ++a) {
          Word next = result[w];
          next.push_back(a);
          result.push_back(std::move(next));
        }
      }
      begin = end;
    }
    return result;
  }

  std::string format_word(Word const& w, std::size_t letters) {
    if (w.empty()) {
      return "e";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      out << 'x';
      if (letters > 1) {
        out << (w[i] + 1);
      }
      if (j - i > 1) {
        out << '^' << (j - i);
      }
      i = j;
    }
    return out.str();
  }

  std::size_t TheoryMorphism::total_length() const {
    std::size_t s = 0;
    for (auto const& w : components) {
      s += w.size();
    }
    return s;
  }

  std::size_t TheoryMorphism::max_length() const {
    std::size_t s = 0;
    for (auto const& w : components) {
      s = std::max(s, w.size());
    }
    return s;
  }

  std::string TheoryMorphism::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (j > 0) {
        out << ", ";
      }
      out << format_word(components[j], source);
    }
    out << ')';
    return out.str();
  }

  TheoryMorphism identity_morphism(std::size_t n) {
    TheoryMorphism f{n, n, {}};
    for (Id j = 0; j < n; ++j) {
      f.components.push_back({j});
    }
    return f;
  }

  TheoryMorphism projection(std::size_t n, std::size_t i) {
    if (i < 1 || i > n) {
      throw ArgumentError("projection p_{n,i} needs 1 <= i <= n");
    }
    return {n, 1, {{static_cast<Id>(i - 1)}}};
  }

  TheoryMorphism compose_theory(TheoryMorphism const& f, TheoryMorphism const& g) {
    if (f.target != g.source) {
      throw ArgumentError("compose_theory: arities do not chain (" + std::to_string(f.target)
                          + " vs " + std::to_string(g.source) + ")");
    }
    if (f.components.size() != f.target || g.components.size() != g.target) {
      throw ArgumentError("compose_theory: component count differs from arity");
    }
    TheoryMorphism h{f.source, g.target, {}};
    for (auto const& w : g.components) {
      Word out;
      for (Id letter : w) {
        if (letter >= f.components.size()) {
          throw ArgumentError("compose_theory: letter out of range");
        }
        auto const& sub = f.components[letter];
        out.insert(out.end(), sub.begin(), sub.end());
      }
      h.components.push_back(std::move(out));
    }
    return h;
  }

  bool within_bound(TheoryMorphism const& f, std::size_t L, LengthBound mode) {
    return mode == LengthBound::total ? f.total_length() <= L : f.max_length() <= L;
  }

  std::vector<TheoryMorphism> enumerate_morphisms(std::size_t m,
                                                  std::size_t n,
                                                  std::size_t L,
                                                  LengthBound mode) {
    auto const                  words = enumerate_words(m, L);
    std::vector<TheoryMorphism> result;
    TheoryMorphism              cur{m, n, {}};
    auto rec = [&](auto&& self, std::size_t budget) -> void {
      if (cur.components.size() == n) {
        result.push_back(cur);
        return;
      }
      for (auto const& w : words) {
        if (w.size() > budget) {
          continue;
        }
        cur.components.push_back(w);
        self(self, mode == LengthBound::total ? budget - w.size() : budget);
        cur.components.pop_back();
      }
    };
    rec(rec, L);
    std::sort(result.begin(), result.end());
    return result;
  }

  void validate_monoid(Monoid const& m) {
    if (m.size == 0) {
      throw ValidationError("monoid: empty carrier");
    }
    if (m.table.size() != m.size) {
      throw ValidationError("monoid: table has " + std::to_string(m.table.size())
                            + " rows, expected " + std::to_string(m.size));
    }
    for (std::size_t a = 0; a < m.size; ++a) {
      if (m.table[a].size() != m.size) {
        throw ValidationError("monoid: row " + std::to_string(a) + " has the wrong length");
      }
      for (Id v : m.table[a]) {
        if (v >= m.size) {
          throw ValidationError("monoid: entry in row " + std::to_string(a)
                                + " is outside the carrier");
        }
      }
    }
    if (m.identity >= m.size) {
      throw ValidationError("monoid: identity is outside the carrier");
    }
    for (Id a = 0; a < m.size; ++a) {
      if (m.table[m.identity][a] != a || m.table[a][m.identity] != a) {
        throw ValidationError("monoid: element " + std::to_string(m.identity)
                              + " is not a two-sided identity (fails at "
                              + std::to_string(a) + ")");
      }
    }
    for (Id a = 0; a < m.size; ++a) {
      for (Id b = 0; b < m.size; ++b) {
        for (Id c = 0; c < m.size; ++c) {
          if (m.table[m.table[a][b]][c] != m.table[a][m.table[b][c]]) {
            throw ValidationError("monoid: not associative at (" + std::to_string(a) + ", "
                                  + std::to_string(b) + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
    if (!m.names.empty() && m.names.size() != m.size) {
      throw ValidationError("monoid: wrong number of element names");
    }
  }

  Monoid make_monoid(std::vector<std::vector<Id>> table, std::vector<std::string> names) {
    Monoid m;
    m.size  = table.size();
    m.table = std::move(table);
    m.names = std::move(names);
    bool found = false;
    for (Id e = 0; e < m.size && !found; ++e) {
      bool ok = m.table[e].size() == m.size;
      for (Id a = 0; a < m.size && ok; ++a) {
        ok = m.table[a].size() == m.size && m.table[e][a] == a && m.table[a][e] == a;
      }
      if (ok) {
        m.identity = e;
        found      = true;
      }
    }
    if (!found) {
      throw ValidationError("monoid: no two-sided identity");
    }
    validate_monoid(m);
    return m;
  }

  Monoid trivial_monoid() {
    return Monoid{};
  }

  Monoid cyclic_monoid(std::size_t n) {
    if (n == 0) {
      throw ArgumentError("cyclic_monoid: order must be positive");
    }
    std::vector<std::vector<Id>> t(n, std::vector<Id>(n));
    for (Id a = 0; a < n; ++a) {
      for (Id b = 0; b < n; ++b) {
        t[a][b] = static_cast<Id>((a + b) % n);
      }
    }
    return make_monoid(std::move(t));
  }

  Monoid random_monoid(std::mt19937_64& rng, std::size_t max_size) {
    if (max_size == 0) {
      throw ArgumentError("random_monoid: max_size must be positive");
    }
    using Transformation = std::vector<Id>;
    while (true) {
      std::size_t const points = 2 + rng() % 2;
      std::size_t const gens   = 1 + rng() % 2;
      Transformation    id(points);
      for (Id i = 0; i < points; ++i) {
        id[i] = i;
      }
      std::vector<Transformation> generators;
      for (std::size_t g = 0; g < gens; ++g) {
        Transformation t(points);
        for (auto& v : t) {
          v = static_cast<Id>(rng() % points);
        }
        generators.push_back(t);
      }
      std::vector<Transformation>          elements{id};
      std::map<Transformation, Id>         index{{id, 0}};
      bool                                 too_big = false;
      for (std::size_t i = 0; i < elements.size() && !too_big; ++i) {
        for (auto const& g : generators) {
          Transformation c(points);
          for (Id p = 0; p < points; ++p) {
            c[p] = g[elements[i][p]];
          }
          if (!index.count(c)) {
            index.emplace(c, static_cast<Id>(elements.size()));
            elements.push_back(c);
            if (elements.size() > max_size) {
              too_big = true;
              break;
            }
          }
        }
      }
      if (too_big) {
        continue;
      }
      std::size_t const            n = elements.size();
      std::vector<std::vector<Id>> t(n, std::vector<Id>(n));
      for (Id a = 0; a < n; ++a) {
        for (Id b = 0; b < n; ++b) {
          Transformation c(points);
          for (Id p = 0; p < points; ++p) {
            c[p] = elements[a][elements[b][p]];
          }
          t[a][b] = index.at(c);
        }
      }
      return make_monoid(std::move(t));
    }
  }

  Id evaluate(Monoid const& m, Word const& w, std::vector<Id> const& values) {
    Id r = m.identity;
    for (Id letter : w) {
      r = m.multiply(r, values.at(letter));
    }
    return r;
  }

  Id encode_tuple(std::vector<Id> const& t, std::size_t base) {
    std::uint64_t code = 0;
    for (Id v : t) {
      code = code * base + v;
    }
    return static_cast<Id>(code);
  }

  std::vector<Id> decode_tuple(Id code, std::size_t length, std::size_t base) {
    std::vector<Id> t(length);
    for (std::size_t j = length; j-- > 0;) {
      t[j] = static_cast<Id>(code % base);
      code = static_cast<Id>(code / base);
    }
    return t;
  }

  namespace {
    std::size_t power(std::size_t b, std::size_t e) {
      std::size_t r = 1;
      while (e-- > 0) {
        r *= b;
      }
      return r;
    }
  }  // namespace

  TheoryDiagram algebra_of_monoid(Monoid const& m, std::size_t max_arity, std::size_t inner) {
    validate_monoid(m);
    TheoryDiagram a;
    a.max_arity = max_arity;
    for (std::size_t n = 0; n <= max_arity; ++n) {
      a.values.push_back(discrete(power(m.size, n), inner));
    }
    a.act = [m, max_arity](TheoryMorphism const& f, std::size_t, Id x) -> std::optional<Id> {
      if (f.source > max_arity || f.target > max_arity) {
        throw ArgumentError("algebra_of_monoid: arity beyond the stored range");
      }
      auto const      in = decode_tuple(x, f.source, m.size);
      std::vector<Id> out;
      for (auto const& w : f.components) {
        out.push_back(evaluate(m, w, in));
      }
      return encode_tuple(out, m.size);
    };
    a.bounds = "arity<=" + std::to_string(max_arity);
    return a;
  }

  ProductReport check_product_preservation(TheoryDiagram const& a) {
    ProductReport r;
    auto const&   t0 = a.values.at(0);
    for (std::size_t l = 0; l <= t0.truncation(); ++l) {
      if (t0.size(l) != 1) {
        return {false, "A(T_0) is not a point at level " + std::to_string(l)};
      }
    }
    for (std::size_t n = 1; n <= a.max_arity; ++n) {
      auto const& tn = a.values[n];
      auto const& t1 = a.values[1];
      for (std::size_t l = 0; l <= tn.truncation(); ++l) {
        std::set<std::vector<Id>> seen;
        for (Id x = 0; x < tn.size(l); ++x) {
          std::vector<Id> coords;
          for (std::size_t i = 1; i <= n; ++i) {
            auto y = a.act(projection(n, i), l, x);
            if (!y) {
              return {false, "projection undefined on A(T_" + std::to_string(n) + ")"};
            }
            coords.push_back(*y);
          }
          if (!seen.insert(coords).second) {
            return {false, "A(T_" + std::to_string(n) + ") -> A(T_1)^" + std::to_string(n)
                               + " is not injective at level " + std::to_string(l)};
          }
        }
        if (seen.size() != power(t1.size(l), n)) {
          return {false, "A(T_" + std::to_string(n) + ") has " + std::to_string(seen.size())
                             + " elements at level " + std::to_string(l) + ", A(T_1)^"
                             + std::to_string(n) + " has " + std::to_string(power(t1.size(l), n))};
        }
      }
    }
    return r;
  }

  RepresentedM represented_diagram_M(std::size_t k,
                                     std::size_t L,
                                     LengthBound mode,
                                     std::size_t max_arity,
                                     std::size_t inner) {
    RepresentedM r;
    auto index = std::make_shared<std::vector<std::map<TheoryMorphism, Id>>>();
    for (std::size_t n = 0; n <= max_arity; ++n) {
      r.elements.push_back(enumerate_morphisms(k, n, L, mode));
      std::map<TheoryMorphism, Id> idx;
      for (Id e = 0; e < r.elements[n].size(); ++e) {
        idx.emplace(r.elements[n][e], e);
      }
      index->push_back(std::move(idx));
      r.diagram.values.push_back(discrete(r.elements[n].size(), inner));
    }
    r.diagram.max_arity = max_arity;
    auto elements       = std::make_shared<std::vector<std::vector<TheoryMorphism>>>(r.elements);
    r.diagram.act = [index, elements, L, mode](TheoryMorphism const& f,
                                               std::size_t,
                                               Id x) -> std::optional<Id> {
      auto const& h = elements->at(f.source).at(x);
      auto        g = compose_theory(h, f);
      if (!within_bound(g, L, mode) || g.target >= index->size()) {
        return std::nullopt;
      }
      auto it = (*index)[g.target].find(g);
      if (it == (*index)[g.target].end()) {
        return std::nullopt;
      }
      return it->second;
    };
    r.diagram.bounds = "k=" + std::to_string(k) + " L=" + std::to_string(L)
                       + (mode == LengthBound::total ? " total" : " per-entry");
    return r;
  }

  Graph linear_graph(std::vector<Id> const& x, std::size_t objects) {
    Graph g{objects, {}};
    for (Id o : x) {
      if (o >= objects) {
        throw ArgumentError("linear_graph: label outside the object set");
      }
    }
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      g.edges.emplace_back(x[i], x[i + 1]);
    }
    return g;
  }

  std::optional<Path> concatenate(Graph const&, Path const& first, Path const& second) {
    if (first.target != second.source) {
      return std::nullopt;
    }
    Path p{first.source, second.target, first.edges};
    p.edges.insert(p.edges.end(), second.edges.begin(), second.edges.end());
    return p;
  }

  std::vector<Path> FreeCategory::hom(Id a, Id b) const {
    std::vector<Path> r;
    for (auto const& p : morphisms) {
      if (p.source == a && p.target == b) {
        r.push_back(p);
      }
    }
    return r;
  }

  FreeCategory free_category(Graph const& g, std::size_t L) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e].first >= g.objects || g.edges[e].second >= g.objects) {
        throw ArgumentError("free_category: edge " + std::to_string(e)
                            + " has an endpoint outside the object set");
      }
    }
    FreeCategory c{g, L, {}};
    std::vector<Path> layer;
    for (Id o = 0; o < g.objects; ++o) {
      layer.push_back({o, o, {}});
    }
    c.morphisms = layer;
    for (std::size_t len = 1; len <= L; ++len) {
      std::vector<Path> next;
      for (Id o = 0; o < g.objects; ++o) {
        for (auto const& p : layer) {
          if (p.source != o) {
            continue;
          }
          for (Id e = 0; e < g.edges.size(); ++e) {
            if (g.edges[e].first == p.target) {
              Path q = p;
              q.edges.push_back(e);
              q.target = g.edges[e].second;
              next.push_back(std::move(q));
            }
          }
        }
      }
      c.morphisms.insert(c.morphisms.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return c;
  }

  std::vector<PathTuple> RepresentedC::value(std::vector<Sort> sorts) const {
    std::sort(sorts.begin(), sorts.end());
    std::vector<PathTuple> result;
    PathTuple              cur;
    auto rec = [&](auto&& self, std::size_t budget) -> void {
      if (cur.size() == sorts.size()) {
        result.push_back(cur);
        return;
      }
      auto [a, b] = sorts[cur.size()];
      for (auto const& p : category.morphisms) {
        if (p.source == a && p.target == b && p.edges.size() <= budget) {
          cur.push_back(p);
          self(self, budget - p.edges.size());
          cur.pop_back();
        }
      }
    };
    rec(rec, category.bound);
    return result;
  }

  std::optional<PathTuple> RepresentedC::act(TheoryMorphism const&    f,
                                             std::vector<Sort> const& beta,
                                             PathTuple const&         element) const {
    if (f.source != element.size() || f.target != beta.size()) {
      throw ArgumentError("RepresentedC::act: arity mismatch");
    }
    PathTuple   out;
    std::size_t total = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      Path p{beta[j].first, beta[j].first, {}};
      for (Id letter : f.components[j]) {
        auto q = concatenate(category.graph, p, element.at(letter));
        if (!q) {
          return std::nullopt;
        }
        p = std::move(*q);
      }
      if (p.target != beta[j].second) {
        return std::nullopt;
      }
      total += p.edges.size();
      out.push_back(std::move(p));
    }
    if (total > category.bound) {
      return std::nullopt;
    }
    return out;
  }

  RepresentedC represented_diagram_C(std::size_t            n,
                                     std::vector<Id> const& x,
                                     std::size_t            objects,
                                     std::size_t            L) {
    if (x.size() != n + 1) {
      throw ArgumentError("represented_diagram_C: object tuple must have n+1 entries");
    }
    return {n, x, free_category(linear_graph(x, objects), L)};
  }

}  // namespace segal
