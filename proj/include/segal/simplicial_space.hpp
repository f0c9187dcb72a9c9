// Truncated bisimplicial sets X_{m,n}, 0 <= m <= M (outer), 0 <= n <= N
// (inner), and Segal precategories over a fixed object set.
//
// Cell (m, n) has index m * (N + 1) + n.  Operators: for each m the inner
// operators of column m in SimplicialSet order, then for each n the outer
// operators of row n in SimplicialSet order.

#ifndef SEGAL_SIMPLICIAL_SPACE_HPP_
#define SEGAL_SIMPLICIAL_SPACE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "segal/cells.hpp"
#include "segal/simplicial_set.hpp"

namespace segal {

  class SimplicialSpace {
   public:
    SimplicialSpace();
    SimplicialSpace(std::size_t outer, std::size_t inner, CellComplex cells);

    static CellComplex shape(std::size_t outer, std::size_t inner);
    // columns[m] carries the inner structure at outer degree m, rows[n] the
    // outer structure at inner level n; their level sizes must agree.
    static SimplicialSpace assemble(std::vector<SimplicialSet> const& columns,
                                    std::vector<SimplicialSet> const& rows);

    std::size_t outer_truncation() const noexcept {
      return _outer;
    }
    std::size_t inner_truncation() const noexcept {
      return _inner;
    }
    std::size_t cell(std::size_t m, std::size_t n) const {
      return m * (_inner + 1) + n;
    }
    std::size_t size(std::size_t m, std::size_t n) const {
      return _cells.sizes.at(cell(m, n));
    }
    std::size_t total_size() const noexcept {
      return _cells.total_size();
    }
    Mapping const& inner_face(std::size_t m, std::size_t n, std::size_t i) const;
    Mapping const& inner_degeneracy(std::size_t m, std::size_t n, std::size_t i) const;
    Mapping const& outer_face(std::size_t m, std::size_t n, std::size_t i) const;
    Mapping const& outer_degeneracy(std::size_t m, std::size_t n, std::size_t i) const;

    SimplicialSet column(std::size_t m) const;
    SimplicialSet row(std::size_t n) const;

    CellComplex const& cells() const noexcept {
      return _cells;
    }
    bool operator==(SimplicialSpace const& other) const;

   private:
    std::size_t inner_op(std::size_t m, std::size_t local) const;
    std::size_t outer_op(std::size_t n, std::size_t local) const;

    std::size_t _outer;
    std::size_t _inner;
    CellComplex _cells;
  };

  // Columns, rows and the commutation of outer with inner operators.
  ValidationReport validate(SimplicialSpace const& x);

  IsoResult iso_check(SimplicialSpace const& x, SimplicialSpace const& y);

  bool is_space_map(SimplicialSpace const& source,
                    SimplicialSpace const& target,
                    SimplicialMap const&   f);

  // (X^t)_{m,n} = X_m with identity inner structure.
  SimplicialSpace transpose(SimplicialSet const& x, std::size_t inner);
  SimplicialMap   transpose(SimplicialMap const& f, std::size_t outer, std::size_t inner);

  // (K)_{m,n} = K_n with identity outer structure.
  SimplicialSpace constant_space(SimplicialSet const& k, std::size_t outer);

  struct SpaceProduct {
    SimplicialSpace object;
    SimplicialMap   first;
    SimplicialMap   second;
  };
  SpaceProduct product(SimplicialSpace const& a, SimplicialSpace const& b);

  // K × L^t, the product of the constant space on K with the transpose of L;
  // the cell (m, n) is the set of pairs K_n × L_m in lexicographic order.
  SimplicialSpace box(SimplicialSet const& k, SimplicialSet const& l);

  // Discrete degree zero with vertex ids equal to object indices, and
  // column 0 normalised so that inner structure maps there are identities.
  struct SegalPrecategory {
    SimplicialSpace          space;
    std::vector<std::string> objects;

    bool reduced() const noexcept {
      return objects.size() == 1;
    }
  };

  std::optional<std::string> precategory_defect(SimplicialSpace const& x,
                                                std::size_t            objects);

  // Checks discreteness of column 0 and renumbers it so that the id of
  // s_0^n(o) is o.  Throws ValidationError when column 0 is not discrete.
  // The renumbering (old id -> new id, per cell) is stored in `renumbering`
  // when given.
  SegalPrecategory make_precategory(SimplicialSpace          x,
                                    std::vector<std::string> objects,
                                    CellMap*                 renumbering = nullptr);

  std::vector<std::string> point_object();

  // Object index of each outer vertex j of the element `e` of X_{m,n}.
  std::vector<Id> outer_vertices(SimplicialSpace const& x,
                                 std::size_t            m,
                                 std::size_t            n,
                                 Id                     e);

  // Inclusion of the discrete set X_0 into X: point v goes to s_0^j(v).
  SimplicialMap vertex_inclusion(SimplicialSet const& x);

  // Δ[n] with vertex i sent to object x[i], vertices of equal label
  // identified, and the remaining objects added as isolated points.
  // Vertex ids are object indices.
  struct LabeledSimplexSet {
    SimplicialSet object;
    SimplicialMap from_simplex;  // Δ[n] -> object
  };
  LabeledSimplexSet labeled_simplex_set(std::size_t            n,
                                        std::vector<Id> const& x,
                                        std::size_t            objects,
                                        std::size_t            trunc);

  SegalPrecategory labeled_simplex(std::size_t                     n,
                                   std::vector<Id> const&          x,
                                   std::vector<std::string> const& objects,
                                   std::size_t                     outer,
                                   std::size_t                     inner);

  struct GObject {
    SegalPrecategory object;
    SimplicialMap    inclusion;  // into labeled_simplex(k, x, ...)
  };
  GObject g_object(std::size_t                     k,
                   std::vector<Id> const&          x,
                   std::vector<std::string> const& objects,
                   std::size_t                     outer,
                   std::size_t                     inner);

  struct Reduction {
    SegalPrecategory object;
    SimplicialMap    unit;  // X -> reduce(X)
  };
  Reduction reduce(SimplicialSpace const& x);

  enum class GeneratingKind { P, Q, R };

  SegalPrecategory generating_object(GeneratingKind                  kind,
                                     std::size_t                     m,
                                     std::size_t                     n,
                                     std::optional<std::size_t>      k,
                                     std::vector<Id> const&          x,
                                     std::vector<std::string> const& objects,
                                     std::size_t                     outer,
                                     std::size_t                     inner);

  // A finite diagram of Segal precategories over one object set; arrows
  // must be identity on objects.
  struct PrecategoryDiagram {
    std::vector<SegalPrecategory> objects;
    std::vector<cells::Arrow>     arrows;
  };

  struct LimitO {
    SegalPrecategory           object;
    std::vector<SimplicialMap> projections;
  };
  LimitO limit_O(PrecategoryDiagram const& d);

  struct ColimitO {
    SegalPrecategory           object;
    std::vector<SimplicialMap> injections;
  };
  ColimitO colimit_O(PrecategoryDiagram const& d);

  // Partial assignment fixing column 0 pointwise, for homomorphism searches
  // in the category of precategories over O.
  CellMap fixed_objects(SegalPrecategory const& source);

  std::string to_dot(SegalPrecategory const& x);

}  // namespace segal

#endif  // SEGAL_SIMPLICIAL_SPACE_HPP_
