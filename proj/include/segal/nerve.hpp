// Nerves of finite monoids, truncated free monoids and free categories.
//
// Level k holds k-tuples (composable, for categories); d_0 drops the first
// entry, d_k drops the last, d_i for 0 < i < k multiplies entries i and
// i+1, and s_i inserts an identity at position i.

#ifndef SEGAL_NERVE_HPP_
#define SEGAL_NERVE_HPP_

#include <string>
#include <vector>

#include "segal/simplicial_set.hpp"
#include "segal/simplicial_space.hpp"
#include "segal/theory.hpp"

namespace segal {

  struct NerveObject {
    SimplicialSet                         set;
    std::string                           provenance;
    std::vector<std::vector<std::string>> bar;  // bar[k][x], e.g. "(x|x|x^2)"
  };

  NerveObject nerve_monoid(Monoid const& m, std::size_t N);

  // Level j: j-tuples of words in n letters with total length <= L, in
  // lexicographic order.
  NerveObject nerve_free_monoid(std::size_t n, std::size_t N, std::size_t L);
  std::vector<std::vector<std::vector<Word>>> free_monoid_tuples(std::size_t n,
                                                                 std::size_t N,
                                                                 std::size_t L);

  // Level k: composable k-tuples of paths with total length <= C.bound.
  NerveObject nerve_category(FreeCategory const& c, std::size_t N);

  struct CategoryTuple {
    Id                start = 0;  // the object, for k = 0
    std::vector<Path> paths;

    bool operator==(CategoryTuple const&) const = default;
    auto operator<=>(CategoryTuple const&) const = default;
  };
  std::vector<std::vector<CategoryTuple>> category_tuples(FreeCategory const& c, std::size_t N);

  std::string format_path(Path const& p);

  // The transposed nerve as a Segal precategory.
  SegalPrecategory nerve_space(NerveObject const&              nerve,
                               std::vector<std::string> const& objects,
                               std::size_t                     inner);

}  // namespace segal

#endif  // SEGAL_NERVE_HPP_
