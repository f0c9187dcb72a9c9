#include "segal/nerve.hpp"

#include <algorithm>
#include <sstream>

#include "segal/builder.hpp"
#include "segal/errors.hpp"

namespace segal {

  namespace {
    template <class T, class Show>
    std::string bar_string(std::vector<T> const& entries, Show show) {
      std::ostringstream out;
      out << '(';
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) {
          out << '|';
        }
        out << show(entries[i]);
      }
      out << ')';
      return out.str();
    }
  }  // namespace

  NerveObject nerve_monoid(Monoid const& m, std::size_t N) {
    validate_monoid(m);
    std::vector<std::vector<std::vector<Id>>> levels(N + 1);
    for (std::size_t k = 0; k <= N; ++k) {
      std::size_t count = 1;
      for (std::size_t j = 0; j < k; ++j) {
        count *= m.size;
      }
      for (Id c = 0; c < count; ++c) {
        levels[k].push_back(decode_tuple(c, k, m.size));
      }
    }
    NerveObject nerve;
    nerve.set = build_simplicial_set(
        levels,
        [&m](std::size_t k, std::size_t i, std::vector<Id> t) {
          if (i == 0) {
            t.erase(t.begin());
          } else if (i == k) {
            t.pop_back();
          } else {
            t[i - 1] = m.multiply(t[i - 1], t[i]);
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
          }
          return t;
        },
        [&m](std::size_t, std::size_t i, std::vector<Id> t) {
          t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), m.identity);
          return t;
        });
    nerve.provenance = "monoid of order " + std::to_string(m.size);
    for (auto const& level : levels) {
      nerve.bar.emplace_back();
      for (auto const& t : level) {
        nerve.bar.back().push_back(bar_string(t, [&m](Id a) {
          return m.names.empty() ? std::to_string(a) : m.names[a];
        }));
      }
    }
    return nerve;
  }

  std::vector<std::vector<std::vector<Word>>> free_monoid_tuples(std::size_t n,
                                                                 std::size_t N,
                                                                 std::size_t L) {
    std::vector<std::vector<std::vector<Word>>> levels(N + 1);
    for (std::size_t j = 0; j <= N; ++j) {
      for (auto& f : enumerate_morphisms(n, j, L, LengthBound::total)) {
        levels[j].push_back(std::move(f.components));
      }
    }
    return levels;
  }

  NerveObject nerve_free_monoid(std::size_t n, std::size_t N, std::size_t L) {
    auto        levels = free_monoid_tuples(n, N, L);
    NerveObject nerve;
    nerve.set = build_simplicial_set(
        levels,
        [](std::size_t k, std::size_t i, std::vector<Word> t) {
          if (i == 0) {
            t.erase(t.begin());
          } else if (i == k) {
            t.pop_back();
          } else {
            t[i - 1].insert(t[i - 1].end(), t[i].begin(), t[i].end());
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
          }
          return t;
        },
        [](std::size_t, std::size_t i, std::vector<Word> t) {
          t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), Word{});
          return t;
        });
    nerve.provenance = "free monoid on " + std::to_string(n) + " letters, total length <= "
                       + std::to_string(L);
    for (auto const& level : levels) {
      nerve.bar.emplace_back();
      for (auto const& t : level) {
        nerve.bar.back().push_back(
            bar_string(t, [n](Word const& w) { return format_word(w, n); }));
      }
    }
    return nerve;
  }

  std::string format_path(Path const& p) {
    if (p.edges.empty()) {
      return "1_" + std::to_string(p.source);
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      out << (i > 0 ? "." : "") << 'g' << p.edges[i];
    }
    return out.str();
  }

  std::vector<std::vector<CategoryTuple>> category_tuples(FreeCategory const& c, std::size_t N) {
    std::vector<std::vector<CategoryTuple>> levels(N + 1);
    for (Id o = 0; o < c.graph.objects; ++o) {
      levels[0].push_back({o, {}});
    }
    for (std::size_t k = 1; k <= N; ++k) {
      CategoryTuple cur;
      auto rec = [&](auto&& self, std::size_t budget) -> void {
        if (cur.paths.size() == k) {
          levels[k].push_back(cur);
          return;
        }
        for (auto const& p : c.morphisms) {
          if (p.edges.size() > budget
              || (!cur.paths.empty() && p.source != cur.paths.back().target)) {
            continue;
          }
          if (cur.paths.empty()) {
            cur.start = p.source;
          }
          cur.paths.push_back(p);
          self(self, budget - p.edges.size());
          cur.paths.pop_back();
        }
      };
      rec(rec, c.bound);
      std::sort(levels[k].begin(), levels[k].end());
    }
    return levels;
  }

  NerveObject nerve_category(FreeCategory const& c, std::size_t N) {
    auto        levels = category_tuples(c, N);
    NerveObject nerve;
    nerve.set = build_simplicial_set(
        levels,
        [&c](std::size_t k, std::size_t i, CategoryTuple t) {
          if (i == 0) {
            t.start = t.paths.front().target;
            t.paths.erase(t.paths.begin());
          } else if (i == k) {
            t.paths.pop_back();
          } else {
            t.paths[i - 1] = *concatenate(c.graph, t.paths[i - 1], t.paths[i]);
            t.paths.erase(t.paths.begin() + static_cast<std::ptrdiff_t>(i));
          }
          if (!t.paths.empty()) {
            t.start = t.paths.front().source;
          }
          return t;
        },
        [](std::size_t, std::size_t i, CategoryTuple t) {
          Id o = i == 0 ? t.start : t.paths[i - 1].target;
          t.paths.insert(t.paths.begin() + static_cast<std::ptrdiff_t>(i), Path{o, o, {}});
          return t;
        });
    nerve.provenance = "free category on " + std::to_string(c.graph.edges.size())
                       + " edges, total length <= " + std::to_string(c.bound);
    for (auto const& level : levels) {
      nerve.bar.emplace_back();
      for (auto const& t : level) {
        nerve.bar.back().push_back(t.paths.empty() ? "(" + std::to_string(t.start) + ")"
                                                   : bar_string(t.paths, format_path));
      }
    }
    return nerve;
  }

  SegalPrecategory nerve_space(NerveObject const&              nerve,
                               std::vector<std::string> const& objects,
                               std::size_t                     inner) {
    return make_precategory(transpose(nerve.set, inner), objects);
  }

}  // namespace segal
