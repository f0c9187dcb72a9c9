// JSON documents for simplicial sets, simplicial spaces, monoids and
// graphs.  Every document carries a "kind" field.  Objects are
// nlohmann::json values with sorted keys, so dump() is canonical.

#ifndef SEGAL_SERIALIZATION_HPP_
#define SEGAL_SERIALIZATION_HPP_

#include <string>

#include <json.hpp>

#include "segal/simplicial_set.hpp"
#include "segal/simplicial_space.hpp"
#include "segal/theory.hpp"

namespace segal {

  using Json = nlohmann::json;

  // {kind, truncation, levels, faces: {"k,i": mapping}, degeneracies}
  Json          to_json(SimplicialSet const& x);
  SimplicialSet simplicial_set_from_json(Json const& j);

  // {kind, outer_truncation, inner_truncation, object_set, columns, rows};
  // columns and rows are simplicial set documents without "kind".
  Json             to_json(SegalPrecategory const& x);
  SegalPrecategory precategory_from_json(Json const& j);

  // {kind, identity, table, names}
  Json   to_json(Monoid const& m);
  Monoid monoid_from_json(Json const& j);

  // {kind, objects, edges: [[source, target]]}
  Json  to_json(Graph const& g);
  Graph graph_from_json(Json const& j);

  // Two-space indentation and a trailing newline.
  std::string canonical_dump(Json const& j);

  // Parse errors and missing fields become ArgumentError naming the field.
  Json parse_document(std::string const& text);

}  // namespace segal

#endif  // SEGAL_SERIALIZATION_HPP_
