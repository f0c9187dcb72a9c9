// Building a SimplicialSet from keyed simplices.  levels[k] lists the keys
// of X_k; face(k, i, key) and degeneracy(k, i, key) must return keys that
// occur in the adjacent level.

#ifndef SEGAL_BUILDER_HPP_
#define SEGAL_BUILDER_HPP_

#include <map>
#include <string>
#include <vector>

#include "segal/errors.hpp"
#include "segal/simplicial_set.hpp"

namespace segal {

  template <class Key, class Face, class Degeneracy>
  SimplicialSet build_simplicial_set(std::vector<std::vector<Key>> const& levels,
                                     Face&&                               face,
                                     Degeneracy&& degeneracy) {
    if (levels.empty()) {
      throw ArgumentError("build_simplicial_set: no levels");
    }
    std::size_t const                  trunc = levels.size() - 1;
    std::vector<std::map<Key, Id>>     index(levels.size());
    for (std::size_t k = 0; k <= trunc; ++k) {
      for (Id x = 0; x < levels[k].size(); ++x) {
        index[k].emplace(levels[k][x], x);
      }
    }
    auto lookup = [&](std::size_t k, Key const& key, char const* what) {
      auto it = index[k].find(key);
      if (it == index[k].end()) {
        throw ConstructionError(std::string("build_simplicial_set: ") + what
                                + " leaves level " + std::to_string(k));
      }
      return it->second;
    };
    CellComplex c = SimplicialSet::shape(trunc);
    for (std::size_t k = 0; k <= trunc; ++k) {
      c.sizes[k] = levels[k].size();
    }
    for (std::size_t k = 1; k <= trunc; ++k) {
      for (std::size_t i = 0; i <= k; ++i) {
        auto& m = c.ops[SimplicialSet::face_op(k, i)].map;
        for (auto const& key : levels[k]) {
          m.push_back(lookup(k - 1, face(k, i, key), "a face"));
        }
      }
    }
    for (std::size_t k = 0; k < trunc; ++k) {
      for (std::size_t i = 0; i <= k; ++i) {
        auto& m = c.ops[SimplicialSet::degeneracy_op(trunc, k, i)].map;
        for (auto const& key : levels[k]) {
          m.push_back(lookup(k + 1, degeneracy(k, i, key), "a degeneracy"));
        }
      }
    }
    return SimplicialSet(trunc, std::move(c));
  }

}  // namespace segal

#endif  // SEGAL_BUILDER_HPP_
