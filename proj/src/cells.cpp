#include "segal/cells.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "segal/errors.hpp"

namespace segal {

  std::size_t CellComplex::total_size() const noexcept {
    return std::accumulate(sizes.begin(), sizes.end(), std::size_t(0));
  }

  DisjointSet::DisjointSet(std::size_t n) : _parent(n) {
    std::iota(_parent.begin(), _parent.end(), std::size_t(0));
  }

  std::size_t DisjointSet::find(std::size_t x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  bool DisjointSet::unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (y < x) {
      std::swap(x, y);
    }
    _parent[y] = x;
    return true;
  }

  namespace cells {

    namespace {
      std::vector<std::vector<std::size_t>> ops_by_source(CellComplex const& x) {
        std::vector<std::vector<std::size_t>> result(x.sizes.size());
        for (std::size_t o = 0; o < x.ops.size(); ++o) {
          result[x.ops[o].source].push_back(o);
        }
        return result;
      }

      std::vector<std::size_t> offsets(std::vector<std::size_t> const& sizes) {
        std::vector<std::size_t> result(sizes.size() + 1, 0);
        for (std::size_t c = 0; c < sizes.size(); ++c) {
          result[c + 1] = result[c] + sizes[c];
        }
        return result;
      }
    }  // namespace

    bool same_shape(CellComplex const& a, CellComplex const& b) {
      if (a.sizes.size() != b.sizes.size() || a.ops.size() != b.ops.size()) {
        return false;
      }
      for (std::size_t o = 0; o < a.ops.size(); ++o) {
        if (a.ops[o].source != b.ops[o].source
            || a.ops[o].target != b.ops[o].target) {
          return false;
        }
      }
      return true;
    }

    bool is_homomorphism(CellComplex const& source,
                         CellComplex const& target,
                         CellMap const&     map) {
      if (!same_shape(source, target) || map.size() != source.sizes.size()) {
        return false;
      }
      for (std::size_t c = 0; c < source.sizes.size(); ++c) {
        if (map[c].size() != source.sizes[c]) {
          return false;
        }
        for (Id y : map[c]) {
          if (y >= target.sizes[c]) {
            return false;
          }
        }
      }
      for (std::size_t o = 0; o < source.ops.size(); ++o) {
        auto const& s  = source.ops[o];
        auto const& t  = target.ops[o];
        for (Id x = 0; x < source.sizes[s.source]; ++x) {
          if (s.map[x] == UNASSIGNED) {
            continue;
          }
          Id y = t.map[map[s.source][x]];
          if (y == UNASSIGNED || map[s.target][s.map[x]] != y) {
            return false;
          }
        }
      }
      return true;
    }

    CellMap identity(CellComplex const& x) {
      CellMap result(x.sizes.size());
      for (std::size_t c = 0; c < x.sizes.size(); ++c) {
        result[c].resize(x.sizes[c]);
        std::iota(result[c].begin(), result[c].end(), Id(0));
      }
      return result;
    }

    CellMap compose(CellMap const& second, CellMap const& first) {
      CellMap result(first.size());
      for (std::size_t c = 0; c < first.size(); ++c) {
        result[c].reserve(first[c].size());
        for (Id x : first[c]) {
          result[c].push_back(second[c][x]);
        }
      }
      return result;
    }

    bool is_bijective(CellComplex const& source,
                      CellComplex const& target,
                      CellMap const&     map) {
      if (source.sizes != target.sizes) {
        return false;
      }
      for (std::size_t c = 0; c < source.sizes.size(); ++c) {
        std::vector<bool> hit(target.sizes[c], false);
        for (Id y : map[c]) {
          if (hit[y]) {
            return false;
          }
          hit[y] = true;
        }
      }
      return true;
    }

    Injected coproduct(std::vector<CellComplex const*> const& parts) {
      if (parts.empty()) {
        throw ArgumentError("coproduct: at least one part is required");
      }
      Injected result;
      auto&    obj = result.object;
      obj.sizes.assign(parts[0]->sizes.size(), 0);
      obj.ops = parts[0]->ops;
      for (auto& op : obj.ops) {
        op.map.clear();
      }
      for (auto const* part : parts) {
        if (!same_shape(*part, *parts[0])) {
          throw ArgumentError("coproduct: parts have different shapes");
        }
        CellMap inj(obj.sizes.size());
        for (std::size_t c = 0; c < obj.sizes.size(); ++c) {
          inj[c].resize(part->sizes[c]);
          std::iota(inj[c].begin(), inj[c].end(), Id(obj.sizes[c]));
        }
        for (std::size_t o = 0; o < obj.ops.size(); ++o) {
          auto const& op = part->ops[o];
          for (Id y : op.map) {
            obj.ops[o].map.push_back(static_cast<Id>(y + obj.sizes[op.target]));
          }
        }
        for (std::size_t c = 0; c < obj.sizes.size(); ++c) {
          obj.sizes[c] += part->sizes[c];
        }
        result.injections.push_back(std::move(inj));
      }
      return result;
    }

    Quotient quotient(CellComplex const& x, std::vector<Pair> const& pairs) {
      auto const  off = offsets(x.sizes);
      auto const  by  = ops_by_source(x);
      DisjointSet uf(off.back());

      std::vector<Pair> queue(pairs.begin(), pairs.end());
      while (!queue.empty()) {
        Pair p = queue.back();
        queue.pop_back();
        if (uf.unite(off[p.cell] + p.first, off[p.cell] + p.second)) {
          for (std::size_t o : by[p.cell]) {
            auto const& op = x.ops[o];
            queue.push_back({op.target, op.map[p.first], op.map[p.second]});
          }
        }
      }

      Quotient result;
      result.object.sizes.assign(x.sizes.size(), 0);
      result.projection.resize(x.sizes.size());
      for (std::size_t c = 0; c < x.sizes.size(); ++c) {
        std::vector<Id> class_id(x.sizes[c], UNASSIGNED);
        auto&           proj = result.projection[c];
        proj.resize(x.sizes[c]);
        for (Id e = 0; e < x.sizes[c]; ++e) {
          std::size_t root = uf.find(off[c] + e) - off[c];
          if (class_id[root] == UNASSIGNED) {
            class_id[root] = static_cast<Id>(result.object.sizes[c]++);
          }
          proj[e] = class_id[root];
        }
      }
      for (auto const& op : x.ops) {
        CellOperator q{op.source, op.target, Mapping(result.object.sizes[op.source])};
        for (Id e = 0; e < x.sizes[op.source]; ++e) {
          q.map[result.projection[op.source][e]]
              = result.projection[op.target][op.map[e]];
        }
        result.object.ops.push_back(std::move(q));
      }
      return result;
    }

    Mask closure(CellComplex const& x, Mask seed) {
      auto const                                    by = ops_by_source(x);
      std::vector<std::pair<std::size_t, Id>> stack;
      for (std::size_t c = 0; c < seed.size(); ++c) {
        for (Id e = 0; e < seed[c].size(); ++e) {
          if (seed[c][e]) {
            stack.emplace_back(c, e);
          }
        }
      }
      while (!stack.empty()) {
        auto [c, e] = stack.back();
        stack.pop_back();
        for (std::size_t o : by[c]) {
          auto const& op = x.ops[o];
          Id          t  = op.map[e];
          if (!seed[op.target][t]) {
            seed[op.target][t] = true;
            stack.emplace_back(op.target, t);
          }
        }
      }
      return seed;
    }

    Mask image(CellComplex const& target, CellMap const& map) {
      Mask result(target.sizes.size());
      for (std::size_t c = 0; c < target.sizes.size(); ++c) {
        result[c].assign(target.sizes[c], false);
        for (Id y : map[c]) {
          result[c][y] = true;
        }
      }
      return result;
    }

    Sub sub_object(CellComplex const& x, Mask const& keep) {
      if (keep.size() != x.sizes.size()) {
        throw ArgumentError("sub_object: mask has the wrong number of cells");
      }
      Sub                  result;
      std::vector<Mapping> new_id(x.sizes.size());
      result.object.sizes.assign(x.sizes.size(), 0);
      result.inclusion.resize(x.sizes.size());
      for (std::size_t c = 0; c < x.sizes.size(); ++c) {
        if (keep[c].size() != x.sizes[c]) {
          throw ArgumentError("sub_object: mask has the wrong cell size");
        }
        new_id[c].assign(x.sizes[c], UNASSIGNED);
        for (Id e = 0; e < x.sizes[c]; ++e) {
          if (keep[c][e]) {
            new_id[c][e] = static_cast<Id>(result.object.sizes[c]++);
            result.inclusion[c].push_back(e);
          }
        }
      }
      for (auto const& op : x.ops) {
        CellOperator s{op.source, op.target, {}};
        for (Id e : result.inclusion[op.source]) {
          Id t = new_id[op.target][op.map[e]];
          if (t == UNASSIGNED) {
            throw ArgumentError("sub_object: selection is not closed under the "
                                "structure maps (cell "
                                + std::to_string(op.source) + ", element "
                                + std::to_string(e) + ")");
          }
          s.map.push_back(t);
        }
        result.object.ops.push_back(std::move(s));
      }
      return result;
    }

    Limit limit(std::vector<CellComplex const*> const& objects,
                std::vector<Arrow> const&               arrows) {
      if (objects.empty()) {
        throw ArgumentError("limit: the diagram has no objects");
      }
      std::size_t const k      = objects.size();
      std::size_t const ncells = objects[0]->sizes.size();
      for (auto const* o : objects) {
        if (!same_shape(*o, *objects[0])) {
          throw ArgumentError("limit: objects have different shapes");
        }
      }
      for (auto const& a : arrows) {
        if (a.source >= k || a.target >= k
            || !is_homomorphism(*objects[a.source], *objects[a.target], a.map)) {
          throw ArgumentError("limit: an arrow is not a map between diagram "
                              "objects");
        }
      }

      // Join order: start from the object receiving most arrows, then prefer
      // objects whose value is determined by (or bucketed over) assigned ones.
      std::vector<std::size_t> order;
      std::vector<bool>        placed(k, false);
      {
        std::vector<std::size_t> indeg(k, 0);
        for (auto const& a : arrows) {
          ++indeg[a.target];
        }
        std::size_t first = static_cast<std::size_t>(
            std::max_element(indeg.begin(), indeg.end()) - indeg.begin());
        order.push_back(first);
        placed[first] = true;
        while (order.size() < k) {
          std::size_t best = k;
          int         best_score = -1;
          for (std::size_t b = 0; b < k; ++b) {
            if (placed[b]) {
              continue;
            }
            int score = 0;
            for (auto const& a : arrows) {
              if (a.target == b && placed[a.source]) {
                score = std::max(score, 2);
              } else if (a.source == b && placed[a.target]) {
                score = std::max(score, 1);
              }
            }
            if (score > best_score) {
              best_score = score;
              best       = b;
            }
          }
          order.push_back(best);
          placed[best] = true;
        }
      }

      Limit result;
      result.object.sizes.assign(ncells, 0);
      result.projections.assign(k, CellMap(ncells));
      std::vector<std::vector<std::vector<Id>>> tuples(ncells);

      for (std::size_t c = 0; c < ncells; ++c) {
        // preimage buckets per arrow
        std::vector<std::vector<std::vector<Id>>> pre(arrows.size());
        for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
          auto const& a = arrows[ai];
          pre[ai].resize(objects[a.target]->sizes[c]);
          for (Id x = 0; x < objects[a.source]->sizes[c]; ++x) {
            pre[ai][a.map[c][x]].push_back(x);
          }
        }
        std::vector<std::vector<Id>> partial{std::vector<Id>(k, UNASSIGNED)};
        std::vector<bool>            assigned(k, false);
        for (std::size_t b : order) {
          std::vector<std::vector<Id>> next;
          for (auto const& t : partial) {
            std::vector<Id>        all;
            std::vector<Id> const* cand = nullptr;
            std::vector<Id>        single;
            for (std::size_t ai = 0; ai < arrows.size() && cand == nullptr;
                 ++ai) {
              auto const& a = arrows[ai];
              if (a.target == b && a.source != b && assigned[a.source]) {
                single = {a.map[c][t[a.source]]};
                cand   = &single;
              }
            }
            for (std::size_t ai = 0; ai < arrows.size() && cand == nullptr;
                 ++ai) {
              auto const& a = arrows[ai];
              if (a.source == b && a.target != b && assigned[a.target]) {
                cand = &pre[ai][t[a.target]];
              }
            }
            if (cand == nullptr) {
              all.resize(objects[b]->sizes[c]);
              std::iota(all.begin(), all.end(), Id(0));
              cand = &all;
            }
            for (Id y : *cand) {
              bool ok = true;
              for (auto const& a : arrows) {
                Id src = a.source == b ? y
                         : assigned[a.source] ? t[a.source]
                                              : UNASSIGNED;
                Id tgt = a.target == b ? y
                         : assigned[a.target] ? t[a.target]
                                              : UNASSIGNED;
                if (src != UNASSIGNED && tgt != UNASSIGNED
                    && a.map[c][src] != tgt) {
                  ok = false;
                  break;
                }
              }
              if (ok) {
                auto u = t;
                u[b]   = y;
                next.push_back(std::move(u));
              }
            }
          }
          partial = std::move(next);
          assigned[b] = true;
        }
        std::sort(partial.begin(), partial.end());
        result.object.sizes[c] = partial.size();
        for (std::size_t i = 0; i < k; ++i) {
          result.projections[i][c].reserve(partial.size());
          for (auto const& t : partial) {
            result.projections[i][c].push_back(t[i]);
          }
        }
        tuples[c] = std::move(partial);
      }
      for (std::size_t o = 0; o < objects[0]->ops.size(); ++o) {
        std::size_t  s = objects[0]->ops[o].source;
        std::size_t  t = objects[0]->ops[o].target;
        CellOperator op{s, t, {}};
        op.map.reserve(tuples[s].size());
        std::vector<Id> image_tuple(k);
        for (auto const& tup : tuples[s]) {
          for (std::size_t i = 0; i < k; ++i) {
            image_tuple[i] = objects[i]->ops[o].map[tup[i]];
          }
          auto it = std::lower_bound(tuples[t].begin(), tuples[t].end(), image_tuple);
          op.map.push_back(static_cast<Id>(it - tuples[t].begin()));
        }
        result.object.ops.push_back(std::move(op));
      }
      return result;
    }

    Colimit colimit(std::vector<CellComplex const*> const& objects,
                    std::vector<Arrow> const&               arrows) {
      auto              sum = coproduct(objects);
      std::vector<Pair> pairs;
      for (auto const& a : arrows) {
        if (a.source >= objects.size() || a.target >= objects.size()
            || !is_homomorphism(*objects[a.source], *objects[a.target], a.map)) {
          throw ArgumentError("colimit: an arrow is not a map between diagram "
                              "objects");
        }
        for (std::size_t c = 0; c < a.map.size(); ++c) {
          for (Id x = 0; x < a.map[c].size(); ++x) {
            pairs.push_back({c,
                             sum.injections[a.source][c][x],
                             sum.injections[a.target][c][a.map[c][x]]});
          }
        }
      }
      auto    q = quotient(sum.object, pairs);
      Colimit result;
      result.object = std::move(q.object);
      for (auto const& inj : sum.injections) {
        result.injections.push_back(compose(q.projection, inj));
      }
      return result;
    }

    namespace {
      class HomSearch {
       public:
        HomSearch(CellComplex const& s, CellComplex const& t, std::size_t max)
            : _s(s), _t(t), _by(ops_by_source(s)), _max(max) {
          _assign.resize(s.sizes.size());
          for (std::size_t c = 0; c < s.sizes.size(); ++c) {
            _assign[c].assign(s.sizes[c], UNASSIGNED);
            for (Id e = 0; e < s.sizes[c]; ++e) {
              _order.emplace_back(c, e);
            }
          }
          std::stable_sort(_order.begin(), _order.end(), [](auto const& a, auto const& b) {
            return a.first > b.first;
          });
        }

        bool fix(CellMap const& fixed) {
          for (std::size_t c = 0; c < fixed.size(); ++c) {
            for (Id e = 0; e < fixed[c].size(); ++e) {
              if (fixed[c][e] != UNASSIGNED && !set(c, e, fixed[c][e])) {
                return false;
              }
            }
          }
          return true;
        }

        void run(std::size_t pos = 0) {
          if (_found.size() >= _max) {
            return;
          }
          while (pos < _order.size()
                 && _assign[_order[pos].first][_order[pos].second] != UNASSIGNED) {
            ++pos;
          }
          if (pos == _order.size()) {
            _found.push_back(_assign);
            return;
          }
          auto [c, e] = _order[pos];
          for (Id y = 0; y < _t.sizes[c]; ++y) {
            std::size_t mark = _trail.size();
            if (set(c, e, y)) {
              run(pos + 1);
            }
            undo(mark);
            if (_found.size() >= _max) {
              return;
            }
          }
        }

        std::vector<CellMap>& found() {
          return _found;
        }

       private:
        bool set(std::size_t c0, Id e0, Id y0) {
          _stack.clear();
          _stack.push_back({c0, e0, y0});
          while (!_stack.empty()) {
            Pair p = _stack.back();
            _stack.pop_back();
            Id& slot = _assign[p.cell][p.first];
            if (slot != UNASSIGNED) {
              if (slot != p.second) {
                return false;
              }
              continue;
            }
            slot = p.second;
            _trail.emplace_back(p.cell, p.first);
            for (std::size_t o : _by[p.cell]) {
              Id from = _s.ops[o].map[p.first];
              if (from == UNASSIGNED) {
                continue;
              }
              Id to = _t.ops[o].map[p.second];
              if (to == UNASSIGNED) {
                return false;
              }
              _stack.push_back({_s.ops[o].target, from, to});
            }
          }
          return true;
        }

        void undo(std::size_t mark) {
          while (_trail.size() > mark) {
            auto [c, e]   = _trail.back();
            _assign[c][e] = UNASSIGNED;
            _trail.pop_back();
          }
        }

        CellComplex const&                       _s;
        CellComplex const&                       _t;
        std::vector<std::vector<std::size_t>>    _by;
        std::size_t                              _max;
        CellMap                                  _assign;
        std::vector<std::pair<std::size_t, Id>>  _order;
        std::vector<std::pair<std::size_t, Id>>  _trail;
        std::vector<Pair>                        _stack;
        std::vector<CellMap>                     _found;
      };
    }  // namespace

    std::vector<CellMap> homomorphisms(CellComplex const& source,
                                       CellComplex const& target,
                                       CellMap const*     fixed,
                                       std::size_t        max_count) {
      if (!same_shape(source, target)) {
        throw ArgumentError("homomorphisms: source and target have different "
                            "shapes");
      }
      HomSearch search(source, target, max_count);
      if (fixed != nullptr && !search.fix(*fixed)) {
        return {};
      }
      search.run();
      return std::move(search.found());
    }

    std::size_t count_homomorphisms(CellComplex const& source,
                                    CellComplex const& target,
                                    CellMap const*     fixed) {
      return homomorphisms(source, target, fixed).size();
    }

    namespace {
      class IsoSearch {
       public:
        IsoSearch(CellComplex const& a, CellComplex const& b) : _a(a), _b(b) {
          _na = a.total_size();
          auto offa = offsets(a.sizes);
          auto offb = offsets(b.sizes);
          std::size_t n = _na + b.total_size();
          _cell.resize(n);
          _id.resize(n);
          for (std::size_t c = 0; c < a.sizes.size(); ++c) {
            for (Id e = 0; e < a.sizes[c]; ++e) {
              _cell[offa[c] + e] = c;
              _id[offa[c] + e]   = e;
            }
            for (Id e = 0; e < b.sizes[c]; ++e) {
              _cell[_na + offb[c] + e] = c;
              _id[_na + offb[c] + e]   = e;
            }
          }
          // operator edges in global numbering
          for (std::size_t o = 0; o < a.ops.size(); ++o) {
            auto const& oa = a.ops[o];
            auto const& ob = b.ops[o];
            for (Id e = 0; e < a.sizes[oa.source]; ++e) {
              _edges.push_back({offa[oa.source] + e, offa[oa.target] + oa.map[e], o});
            }
            for (Id e = 0; e < b.sizes[ob.source]; ++e) {
              _edges.push_back(
                  {_na + offb[ob.source] + e, _na + offb[ob.target] + ob.map[e], o});
            }
          }
          _offa = offa;
          _offb = offb;
        }

        std::optional<CellMap> run() {
          std::vector<std::uint32_t> colours(_cell.size());
          for (std::size_t g = 0; g < _cell.size(); ++g) {
            colours[g] = static_cast<std::uint32_t>(_cell[g]);
          }
          return search(colours);
        }

       private:
        struct Edge {
          std::size_t from;
          std::size_t to;
          std::size_t op;
        };

        std::size_t refine(std::vector<std::uint32_t>& colours) const {
          std::size_t n     = colours.size();
          std::size_t count = 1 + *std::max_element(colours.begin(), colours.end());
          while (true) {
            std::vector<std::vector<std::uint64_t>> sig(n);
            std::vector<std::vector<std::uint64_t>> in(n);
            for (std::size_t g = 0; g < n; ++g) {
              sig[g].push_back(colours[g]);
            }
            for (auto const& e : _edges) {
              sig[e.from].push_back((std::uint64_t(e.op) << 32) | colours[e.to]);
              in[e.to].push_back((std::uint64_t(e.op) << 32) | colours[e.from]);
            }
            for (std::size_t g = 0; g < n; ++g) {
              std::sort(in[g].begin(), in[g].end());
              sig[g].push_back(~std::uint64_t(0));
              sig[g].insert(sig[g].end(), in[g].begin(), in[g].end());
            }
            std::vector<std::size_t> idx(n);
            std::iota(idx.begin(), idx.end(), std::size_t(0));
            std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
              return sig[x] < sig[y];
            });
            std::uint32_t next = 0;
            std::vector<std::uint32_t> fresh(n);
            for (std::size_t i = 0; i < n; ++i) {
              if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) {
                ++next;
              }
              fresh[idx[i]] = next;
            }
            std::size_t new_count = n == 0 ? 0 : next + 1;
            colours               = std::move(fresh);
            if (new_count == count) {
              return count;
            }
            count = new_count;
          }
        }

        std::optional<CellMap> search(std::vector<std::uint32_t> colours) {
          std::size_t count = refine(colours);
          std::vector<std::size_t> ca(count, 0), cb(count, 0);
          for (std::size_t g = 0; g < colours.size(); ++g) {
            (g < _na ? ca : cb)[colours[g]]++;
          }
          if (ca != cb) {
            return std::nullopt;
          }
          std::size_t pick = count;
          for (std::size_t c = 0; c < count; ++c) {
            if (ca[c] > 1 && (pick == count || ca[c] < ca[pick])) {
              pick = c;
            }
          }
          if (pick == count) {
            std::vector<std::size_t> owner(count);
            for (std::size_t g = _na; g < colours.size(); ++g) {
              owner[colours[g]] = g;
            }
            CellMap map(_a.sizes.size());
            for (std::size_t c = 0; c < _a.sizes.size(); ++c) {
              map[c].resize(_a.sizes[c]);
            }
            for (std::size_t g = 0; g < _na; ++g) {
              map[_cell[g]][_id[g]] = _id[owner[colours[g]]];
            }
            if (is_homomorphism(_a, _b, map)) {
              return map;
            }
            return std::nullopt;
          }
          std::size_t x = 0;
          while (colours[x] != pick) {
            ++x;
          }
          for (std::size_t y = _na; y < colours.size(); ++y) {
            if (colours[y] != pick) {
              continue;
            }
            auto next = colours;
            next[x]   = static_cast<std::uint32_t>(count);
            next[y]   = static_cast<std::uint32_t>(count);
            if (auto r = search(std::move(next))) {
              return r;
            }
          }
          return std::nullopt;
        }

        CellComplex const&       _a;
        CellComplex const&       _b;
        std::size_t              _na;
        std::vector<std::size_t> _cell;
        std::vector<Id>          _id;
        std::vector<Edge>        _edges;
        std::vector<std::size_t> _offa, _offb;
      };
    }  // namespace

    std::optional<CellMap> find_isomorphism(CellComplex const& a,
                                            CellComplex const& b) {
      if (!same_shape(a, b) || a.sizes != b.sizes) {
        return std::nullopt;
      }
      if (a.total_size() == 0) {
        return identity(a);
      }
      return IsoSearch(a, b).run();
    }

    CellComplex permute(CellComplex const& x, CellMap const& perm) {
      CellComplex result;
      result.sizes = x.sizes;
      for (auto const& op : x.ops) {
        CellOperator p{op.source, op.target, Mapping(op.map.size())};
        for (Id e = 0; e < op.map.size(); ++e) {
          p.map[perm[op.source][e]] = perm[op.target][op.map[e]];
        }
        result.ops.push_back(std::move(p));
      }
      return result;
    }

  }  // namespace cells
}  // namespace segal
