#include "segal/serialization.hpp"

#include "segal/errors.hpp"

namespace segal {

  namespace {

    Json const& field(Json const& j, char const* name) {
      if (!j.is_object() || !j.contains(name)) {
        throw ArgumentError(std::string("missing field '") + name + "'");
      }
      return j.at(name);
    }

    template <class T>
    T get(Json const& j, char const* name) {
      try {
        return field(j, name).get<T>();
      } catch (nlohmann::json::exception const&) {
        throw ArgumentError(std::string("field '") + name + "' has the wrong type");
      }
    }

    void expect_kind(Json const& j, std::string const& kind) {
      auto k = get<std::string>(j, "kind");
      if (k != kind) {
        throw ArgumentError("field 'kind': expected " + kind + ", found " + k);
      }
    }

    std::string key(std::size_t k, std::size_t i) {
      return std::to_string(k) + "," + std::to_string(i);
    }

    Json set_body(SimplicialSet const& x) {
      Json       j;
      auto const N = x.truncation();
      j["truncation"] = N;
      Json levels     = Json::array();
      for (std::size_t k = 0; k <= N; ++k) {
        Json ids = Json::array();
        for (std::size_t e = 0; e < x.size(k); ++e) {
          ids.push_back(e);
        }
        levels.push_back(std::move(ids));
      }
      j["levels"] = std::move(levels);
      Json faces  = Json::object();
      Json degens = Json::object();
      for (std::size_t k = 1; k <= N; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
          faces[key(k, i)] = x.face(k, i);
        }
      }
      for (std::size_t k = 0; k < N; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
          degens[key(k, i)] = x.degeneracy(k, i);
        }
      }
      j["faces"]        = std::move(faces);
      j["degeneracies"] = std::move(degens);
      return j;
    }

    SimplicialSet set_from_body(Json const& j) {
      auto const N      = get<std::size_t>(j, "truncation");
      auto const levels = field(j, "levels");
      if (!levels.is_array() || levels.size() != N + 1) {
        throw ArgumentError("field 'levels' must have truncation + 1 entries");
      }
      std::vector<std::size_t> sizes;
      for (std::size_t k = 0; k <= N; ++k) {
        auto const& ids = levels[k];
        if (!ids.is_array()) {
          throw ArgumentError("field 'levels' entry " + std::to_string(k) + " is not a list");
        }
        for (std::size_t e = 0; e < ids.size(); ++e) {
          if (!ids[e].is_number_unsigned() || ids[e].get<std::size_t>() != e) {
            throw ArgumentError("field 'levels': ids at level " + std::to_string(k)
                                + " must be 0, 1, 2, ...");
          }
        }
        sizes.push_back(ids.size());
      }
      auto const& faces  = field(j, "faces");
      auto const& degens = field(j, "degeneracies");
      auto mapping = [](Json const& table, char const* name, std::string const& k) {
        if (!table.is_object() || !table.contains(k)) {
          throw ArgumentError(std::string("field '") + name + "' lacks entry " + k);
        }
        try {
          return table.at(k).get<Mapping>();
        } catch (nlohmann::json::exception const&) {
          throw ArgumentError(std::string("field '") + name + "' entry " + k
                              + " is not a list of ids");
        }
      };
      std::vector<std::vector<Mapping>> f(N + 1), d(N);
      for (std::size_t k = 1; k <= N; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
          f[k].push_back(mapping(faces, "faces", key(k, i)));
        }
      }
      for (std::size_t k = 0; k < N; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
          d[k].push_back(mapping(degens, "degeneracies", key(k, i)));
        }
      }
      return SimplicialSet(N, sizes, f, d);
    }

  }  // namespace

  Json to_json(SimplicialSet const& x) {
    Json j    = set_body(x);
    j["kind"] = "simplicial_set";
    return j;
  }

  SimplicialSet simplicial_set_from_json(Json const& j) {
    expect_kind(j, "simplicial_set");
    return set_from_body(j);
  }

  Json to_json(SegalPrecategory const& x) {
    auto const& s = x.space;
    Json        j;
    j["kind"]             = "simplicial_space";
    j["outer_truncation"] = s.outer_truncation();
    j["inner_truncation"] = s.inner_truncation();
    j["object_set"]       = x.objects;
    Json columns          = Json::array();
    Json rows             = Json::array();
    for (std::size_t m = 0; m <= s.outer_truncation(); ++m) {
      columns.push_back(set_body(s.column(m)));
    }
    for (std::size_t n = 0; n <= s.inner_truncation(); ++n) {
      rows.push_back(set_body(s.row(n)));
    }
    j["columns"] = std::move(columns);
    j["rows"]    = std::move(rows);
    return j;
  }

  SegalPrecategory precategory_from_json(Json const& j) {
    expect_kind(j, "simplicial_space");
    auto const M       = get<std::size_t>(j, "outer_truncation");
    auto const N       = get<std::size_t>(j, "inner_truncation");
    auto const objects = get<std::vector<std::string>>(j, "object_set");
    auto const& cols   = field(j, "columns");
    auto const& rws    = field(j, "rows");
    if (!cols.is_array() || cols.size() != M + 1) {
      throw ArgumentError("field 'columns' must have outer_truncation + 1 entries");
    }
    if (!rws.is_array() || rws.size() != N + 1) {
      throw ArgumentError("field 'rows' must have inner_truncation + 1 entries");
    }
    std::vector<SimplicialSet> columns, rows;
    for (auto const& c : cols) {
      columns.push_back(set_from_body(c));
    }
    for (auto const& r : rws) {
      rows.push_back(set_from_body(r));
    }
    auto space = SimplicialSpace::assemble(columns, rows);
    auto bad   = validate(space);
    if (!bad.ok()) {
      throw ArgumentError("field 'rows': " + bad.violations.front().describe());
    }
    if (auto defect = precategory_defect(space, objects.size())) {
      throw ArgumentError("field 'object_set': " + *defect);
    }
    return make_precategory(std::move(space), objects);
  }

  Json to_json(Monoid const& m) {
    Json j;
    j["kind"]     = "monoid";
    j["identity"] = m.identity;
    j["table"]    = m.table;
    j["names"]    = m.names;
    return j;
  }

  Monoid monoid_from_json(Json const& j) {
    expect_kind(j, "monoid");
    auto table = get<std::vector<std::vector<Id>>>(j, "table");
    std::vector<std::string> names;
    if (j.contains("names")) {
      names = get<std::vector<std::string>>(j, "names");
    }
    Monoid m;
    try {
      m = make_monoid(std::move(table), std::move(names));
    } catch (ValidationError const& e) {
      throw ArgumentError(std::string("field 'table': ") + e.what());
    }
    if (j.contains("identity") && get<Id>(j, "identity") != m.identity) {
      throw ArgumentError("field 'identity' is not the identity of the table");
    }
    return m;
  }

  Json to_json(Graph const& g) {
    Json j;
    j["kind"]    = "graph";
    j["objects"] = g.objects;
    Json edges   = Json::array();
    for (auto [a, b] : g.edges) {
      edges.push_back({a, b});
    }
    j["edges"] = std::move(edges);
    return j;
  }

  Graph graph_from_json(Json const& j) {
    expect_kind(j, "graph");
    Graph g;
    g.objects = get<std::size_t>(j, "objects");
    for (auto const& e : get<std::vector<std::vector<Id>>>(j, "edges")) {
      if (e.size() != 2 || e[0] >= g.objects || e[1] >= g.objects) {
        throw ArgumentError("field 'edges': each edge is [source, target] with valid objects");
      }
      g.edges.emplace_back(e[0], e[1]);
    }
    return g;
  }

  std::string canonical_dump(Json const& j) {
    return j.dump(2) + "\n";
  }

  Json parse_document(std::string const& text) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ArgumentError(std::string("malformed JSON: ") + e.what());
    }
  }

}  // namespace segal
