// The theory of monoids T_M and the (O × O)-sorted theory of categories.
//
// A morphism T_m -> T_n of T_M is an n-tuple of words in the letters
// x_1..x_m (stored 0-based); it is the monoid map F_n -> F_m sending x_j to
// the j-th word.  Hom-sets are infinite, so every enumeration takes a word
// length bound.

#ifndef SEGAL_THEORY_HPP_
#define SEGAL_THEORY_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "segal/simplicial_set.hpp"

namespace segal {

  using Word = std::vector<Id>;

  // Words of length <= L in n letters, by length and then lexicographically.
  std::vector<Word> enumerate_words(std::size_t n, std::size_t L);

  // "e" for the empty word; otherwise x (one letter) or x1, x2, ..., with
  // runs written as powers: x^2, x1x2^3.
  std::string format_word(Word const& w, std::size_t letters);

  enum class LengthBound { total, per_entry };

  struct TheoryMorphism {
    std::size_t       source = 0;
    std::size_t       target = 0;
    std::vector<Word> components;

    bool operator==(TheoryMorphism const&) const = default;
    auto operator<=>(TheoryMorphism const&) const = default;

    std::size_t total_length() const;
    std::size_t max_length() const;
    std::string to_string() const;
  };

  TheoryMorphism identity_morphism(std::size_t n);
  // p_{n,i}: T_n -> T_1, 1 <= i <= n
  TheoryMorphism projection(std::size_t n, std::size_t i);

  // g ∘ f for f: T_a -> T_b and g: T_b -> T_c: each component of g with its
  // letters replaced by the components of f.
  TheoryMorphism compose_theory(TheoryMorphism const& f, TheoryMorphism const& g);

  bool within_bound(TheoryMorphism const& f, std::size_t L, LengthBound mode);

  // All morphisms T_m -> T_n within the bound, in lexicographic order of
  // their component lists.
  std::vector<TheoryMorphism> enumerate_morphisms(std::size_t m,
                                                  std::size_t n,
                                                  std::size_t L,
                                                  LengthBound mode);

  struct Monoid {
    std::size_t                  size = 1;
    Id                           identity = 0;
    std::vector<std::vector<Id>> table{{0}};
    std::vector<std::string>     names;

    Id multiply(Id a, Id b) const {
      return table[a][b];
    }
  };

  // Throws ValidationError naming the first failing entry.
  void   validate_monoid(Monoid const& m);
  Monoid make_monoid(std::vector<std::vector<Id>> table,
                     std::vector<std::string>     names = {});
  Monoid trivial_monoid();
  Monoid cyclic_monoid(std::size_t n);
  // Submonoid of the full transformation monoid on `points` points
  // generated by random maps, retried until its size is at most max_size.
  Monoid random_monoid(std::mt19937_64& rng, std::size_t max_size);

  Id evaluate(Monoid const& m, Word const& w, std::vector<Id> const& values);

  // Tuples in M^n, first coordinate most significant.
  Id              encode_tuple(std::vector<Id> const& t, std::size_t base);
  std::vector<Id> decode_tuple(Id code, std::size_t length, std::size_t base);

  // A functor from the full subcategory on T_0..T_max_arity to truncated
  // simplicial sets.  `act(f, level, x)` is A(f) on level `level`; it is
  // empty when the result falls outside the truncation.
  struct TheoryDiagram {
    std::size_t                max_arity = 0;
    std::vector<SimplicialSet> values;
    std::function<std::optional<Id>(TheoryMorphism const&, std::size_t, Id)> act;
    std::string                bounds;
  };

  TheoryDiagram algebra_of_monoid(Monoid const& m, std::size_t max_arity, std::size_t inner = 0);

  struct ProductReport {
    bool        ok = true;
    std::string detail;
  };
  // A(T_n) -> A(T_1)^n through the projections is a bijection on every
  // level, and A(T_0) is a point.
  ProductReport check_product_preservation(TheoryDiagram const& a);

  // M[k]: T_n |-> n-tuples of words in k letters within the bound.
  struct RepresentedM {
    TheoryDiagram                            diagram;
    std::vector<std::vector<TheoryMorphism>> elements;  // elements[n]
  };
  RepresentedM represented_diagram_M(std::size_t k,
                                     std::size_t L,
                                     LengthBound mode,
                                     std::size_t max_arity,
                                     std::size_t inner = 0);

  // Directed graphs and the free categories they generate.
  struct Graph {
    std::size_t                      objects = 0;
    std::vector<std::pair<Id, Id>>   edges;
  };

  // Edge i - 1 runs x_{i-1} -> x_i; generators are named by position.
  Graph linear_graph(std::vector<Id> const& x, std::size_t objects);

  struct Path {
    Id              source = 0;
    Id              target = 0;
    std::vector<Id> edges;

    bool operator==(Path const&) const = default;
    auto operator<=>(Path const&) const = default;
  };

  std::optional<Path> concatenate(Graph const& g, Path const& first, Path const& second);

  struct FreeCategory {
    Graph             graph;
    std::size_t       bound = 0;
    std::vector<Path> morphisms;  // by length, then source, then edges

    std::vector<Path> hom(Id a, Id b) const;
  };

  FreeCategory free_category(Graph const& g, std::size_t L);

  // An element of the T_OCat diagram C[n]_x at a sort sequence: one path
  // per sort.
  using PathTuple = std::vector<Path>;
  using Sort      = std::pair<Id, Id>;

  struct RepresentedC {
    std::size_t  n = 0;
    std::vector<Id> labels;
    FreeCategory category;

    // Sort sequences are canonicalised by sorting; the tuple is returned in
    // that order.
    std::vector<PathTuple> value(std::vector<Sort> sorts) const;
    // Action of a morphism T_α -> T_β (one word in the sorts of α per sort
    // of β); empty when it leaves the length bound or is ill-typed.
    std::optional<PathTuple> act(TheoryMorphism const&    f,
                                 std::vector<Sort> const& beta,
                                 PathTuple const&         element) const;
  };

  RepresentedC represented_diagram_C(std::size_t            n,
                                     std::vector<Id> const& x,
                                     std::size_t            objects,
                                     std::size_t            L);

}  // namespace segal

#endif  // SEGAL_THEORY_HPP_
