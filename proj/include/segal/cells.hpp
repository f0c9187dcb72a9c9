// Finite presheaves presented by cells and generating operators.
//
// Every finite object in this library (a truncated simplicial set, a
// truncated bisimplicial set) is a family of finite sets ("cells") together
// with total functions between them ("operators": faces and degeneracies).
// A CellComplex forgets which operator is which and keeps only the shape, so
// that quotients, sub-objects, limits, homomorphism search and isomorphism
// search are written once.  Two complexes have the same shape when they have
// the same number of cells and the same operator list (source, target) in
// the same order; maps between complexes are only meaningful in that case.

#ifndef SEGAL_CELLS_HPP_
#define SEGAL_CELLS_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace segal {

  using Id      = std::uint32_t;
  using Mapping = std::vector<Id>;

  inline constexpr Id UNASSIGNED = std::numeric_limits<Id>::max();

  struct CellOperator {
    std::size_t source;
    std::size_t target;
    Mapping     map;
  };

  struct CellComplex {
    std::vector<std::size_t>  sizes;
    std::vector<CellOperator> ops;

    std::size_t total_size() const noexcept;
  };

  // One component per cell.
  using CellMap = std::vector<Mapping>;

  // Union-find over 0..n-1 with path halving; union keeps the smaller
  // representative so that class representatives are canonical.
  class DisjointSet {
   public:
    explicit DisjointSet(std::size_t n = 0);
    std::size_t find(std::size_t x);
    bool        unite(std::size_t x, std::size_t y);
    std::size_t size() const noexcept {
      return _parent.size();
    }

   private:
    std::vector<std::size_t> _parent;
  };

  namespace cells {

    bool same_shape(CellComplex const& a, CellComplex const& b);

    bool is_homomorphism(CellComplex const& source,
                         CellComplex const& target,
                         CellMap const&     map);

    CellMap identity(CellComplex const& x);

    // second ∘ first
    CellMap compose(CellMap const& second, CellMap const& first);

    bool is_bijective(CellComplex const& source,
                      CellComplex const& target,
                      CellMap const&     map);

    struct Injected {
      CellComplex          object;
      std::vector<CellMap> injections;
    };
    Injected coproduct(std::vector<CellComplex const*> const& parts);

    struct Pair {
      std::size_t cell;
      Id          first;
      Id          second;
    };

    // The smallest congruence containing `pairs`.  Classes are numbered per
    // cell in order of their smallest member.
    struct Quotient {
      CellComplex object;
      CellMap     projection;
    };
    Quotient quotient(CellComplex const& x, std::vector<Pair> const& pairs);

    using Mask = std::vector<std::vector<bool>>;

    // Smallest sub-object containing every element flagged in `seed`.
    Mask closure(CellComplex const& x, Mask seed);

    // Elements hit by `map`.
    Mask image(CellComplex const& target, CellMap const& map);

    struct Sub {
      CellComplex object;
      CellMap     inclusion;
    };
    // Throws ArgumentError when `keep` is not closed under the operators.
    Sub sub_object(CellComplex const& x, Mask const& keep);

    struct Arrow {
      std::size_t source;
      std::size_t target;
      CellMap     map;
    };

    // Levelwise limit of a finite diagram.  Elements are the compatible
    // tuples, ordered lexicographically by (object 0, object 1, ...).
    struct Limit {
      CellComplex          object;
      std::vector<CellMap> projections;
    };
    Limit limit(std::vector<CellComplex const*> const& objects,
                std::vector<Arrow> const&               arrows);

    // Levelwise colimit: coproduct modulo x ~ f(x) for every arrow.
    struct Colimit {
      CellComplex          object;
      std::vector<CellMap> injections;
    };
    Colimit colimit(std::vector<CellComplex const*> const& objects,
                    std::vector<Arrow> const&               arrows);

    // All homomorphisms source -> target agreeing with `fixed` wherever
    // `fixed` is not UNASSIGNED.  Stops after `max_count` results.
    // Operators may be partial here and in is_homomorphism: an UNASSIGNED
    // entry in the source imposes nothing, one in the target forbids the
    // elements mapping onto it.  Every other function expects total
    // operators.
    std::vector<CellMap> homomorphisms(
        CellComplex const& source,
        CellComplex const& target,
        CellMap const*     fixed     = nullptr,
        std::size_t        max_count = std::numeric_limits<std::size_t>::max());

    std::size_t count_homomorphisms(CellComplex const& source,
                                    CellComplex const& target,
                                    CellMap const*     fixed = nullptr);

    // Isomorphism search by colour refinement plus individualisation.
    // Candidates are tried in (cell, id) order so the result is
    // deterministic.
    std::optional<CellMap> find_isomorphism(CellComplex const& a,
                                            CellComplex const& b);

    // Relabels every cell by the given permutations (new id = perm[old]).
    CellComplex permute(CellComplex const& x, CellMap const& perm);

  }  // namespace cells
}  // namespace segal

#endif  // SEGAL_CELLS_HPP_
