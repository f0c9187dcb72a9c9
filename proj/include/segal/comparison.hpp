// The cosimplicial object J: Δ -> T_M^op, restriction of T_M-diagrams to
// simplicial spaces, and the truncated left Kan extension J_*.

#ifndef SEGAL_COMPARISON_HPP_
#define SEGAL_COMPARISON_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segal/nerve.hpp"
#include "segal/simplicial_space.hpp"
#include "segal/theory.hpp"

namespace segal {

  // How the coface rule x_k |-> x_k, x_k x_{k+1}, x_{k+1} is split into
  // cases.  `standard` uses k < i, k = i, k > i.  `swapped` uses k > i,
  // k = i, k < i, which does not satisfy the cosimplicial identities and
  // is kept only to exhibit that.
  enum class CofaceReading { standard, swapped };

  struct CosimplicialTheoryObject {
    std::size_t n_max = 0;
    // coface[n][i] = J(d^i): T_n -> T_{n-1}, 1 <= n <= n_max, 0 <= i <= n
    std::vector<std::vector<TheoryMorphism>> coface;
    // codegeneracy[n][i] = J(s^i): T_n -> T_{n+1}, 0 <= n < n_max, 0 <= i <= n
    std::vector<std::vector<TheoryMorphism>> codegeneracy;
  };

  // J(θ): T_m -> T_{m'} for θ: [m'] -> [m] monotone; x_j goes to
  // x_{θ(j-1)+1} ... x_{θ(j)}.
  TheoryMorphism J_of(std::vector<std::size_t> const& theta, std::size_t m);

  // Every failing cosimplicial identity, as text.
  std::vector<std::string> cosimplicial_violations(CosimplicialTheoryObject const& j);

  // Throws ConstructionError listing the violated identities when `verify`
  // is set and the object is not cosimplicial.
  CosimplicialTheoryObject build_J(std::size_t   n_max,
                                   CofaceReading reading = CofaceReading::standard,
                                   bool          verify  = true);

  // Which coface/codegeneracy of J induces each face/degeneracy of the nerve
  // of M by precomposition Hom(F_n, M) = M^n.
  struct YonedaReport {
    std::string                           orientation;  // "identity", "reversed", "mixed"
    std::vector<std::vector<std::size_t>> face_pairing;        // [n][i] -> i'
    std::vector<std::vector<std::size_t>> degeneracy_pairing;  // [n][i] -> i'
    std::string                           table;
  };
  // Throws ValidationError with the full mismatch table when some nerve
  // operator is induced by no cosimplicial operator.
  YonedaReport yoneda_compat(Monoid const&                   m,
                             CosimplicialTheoryObject const& j);

  // (J^* A)_{m,n} = A(T_m)_n for m <= outer.  Throws ArgumentError when A
  // leaves its bounds on a (co)face image.
  SimplicialSpace restrict(TheoryDiagram const&            a,
                           CosimplicialTheoryObject const& j,
                           std::size_t                     outer);

  struct KanBounds {
    std::size_t m_max = 0;  // outer degrees of X used
    std::size_t L     = 0;  // total length of the comma morphisms
    std::size_t d_max = 0;  // arities T_d computed

    std::string to_string() const;
  };

  // J_*X(T_d) at inner level n is generated by pairs (x, f) with x ∈ X_{m,n},
  // m <= m_max, and f: T_m -> T_d of total length <= L, modulo
  // (x, f ∘ J(θ)) ~ (θ^* x, f).
  struct KanExtension {
    KanBounds   bounds;
    std::size_t inner = 0;
    // per d: the comma morphisms f, and the generator offset of each f per
    // inner level: generator (c, x) has index offset[d][n][c] + x
    std::vector<std::vector<TheoryMorphism>>              comma;
    std::vector<std::map<TheoryMorphism, std::size_t>>    comma_lookup;
    std::vector<std::vector<std::vector<std::size_t>>>    offset;
    std::vector<std::vector<std::vector<Id>>>             class_of;        // [d][n][generator]
    std::vector<std::vector<std::vector<std::size_t>>>    representative;  // [d][n][class]
    std::vector<SimplicialSet>                            values;          // [d]
    bool        partition_stable = false;
    bool        certified = false;
    std::string certificate;

    std::size_t comma_index(TheoryMorphism const& f) const;  // npos if absent
    std::pair<std::size_t, Id> generator(std::size_t d, std::size_t n, std::size_t g) const;
    // Class of (x, f); empty when f is outside the bounds.
    std::optional<Id> class_of_pair(std::size_t n, Id x, TheoryMorphism const& f) const;
    // Classes of (x, φ ∘ f) over the members (x, f) of `cls` for which
    // φ ∘ f is within the bounds.
    std::vector<Id>   images(TheoryMorphism const& phi, std::size_t n, Id cls) const;
    // J_*X(φ) on a class: the common image when images(...) has exactly
    // one element, empty otherwise.
    std::optional<Id> act(TheoryMorphism const& phi, std::size_t n, Id cls) const;
    TheoryDiagram     diagram() const;
    // x |-> [x, id_m], m <= min(m_max, d_max).
    SimplicialMap     unit_component(std::size_t m) const;
  };

  // X must be reduced.  With `certify`, the computation is repeated with
  // m_max (when X allows it) and L raised by one: `partition_stable` records
  // that no two old generators become identified, `certified` that in
  // addition every new class contains an old generator.
  KanExtension kan_extend(SegalPrecategory const& x, KanBounds bounds, bool certify = true);

  // J_*(f) for f: X -> Y computed with equal bounds: [x, f'] |-> [f(x), f'].
  std::vector<CellMap> kan_map(KanExtension const& source,
                               KanExtension const& target,
                               SimplicialMap const& f);

  // Natural families J_*X -> A on the truncated range against maps of
  // simplicial spaces X -> J^*A, through x |-> η_m[x, id].
  struct AdjunctionReport {
    std::size_t families = 0;
    std::size_t space_maps = 0;
    bool        injective = false;
    bool        surjective = false;
    std::string detail;

    bool bijective() const {
      return injective && surjective;
    }
  };
  AdjunctionReport adjunction_check(SegalPrecategory const&         x,
                                    TheoryDiagram const&            a,
                                    KanBounds const&                bounds,
                                    CosimplicialTheoryObject const& j);

  // For the span X1 <- X0 -> X2: the canonical map from the pushout of the
  // J_* values to J_* of the pushout, per (d, n).
  struct ColimitReport {
    bool        bijective = true;
    std::string detail;
  };
  ColimitReport colimit_commutation(SegalPrecategory const& x0,
                                    SegalPrecategory const& x1,
                                    SegalPrecategory const& x2,
                                    SimplicialMap const&    f1,
                                    SimplicialMap const&    f2,
                                    KanBounds const&        bounds);

  // The many-object version: J_O([n]_x) = T_{n,x}.  Words are the same as
  // for J; typing is checked for every object sequence up to n_max.
  struct CosimplicialOObject {
    std::size_t              objects = 0;
    CosimplicialTheoryObject words;
  };
  // Throws ConstructionError naming the first ill-typed component.
  CosimplicialOObject build_J_O(std::size_t objects, std::size_t n_max);

  // J_O^* C[n]_x with the nerve's object set, as a Segal precategory.
  SegalPrecategory restrict_O(RepresentedC const&        c,
                              CosimplicialOObject const& j,
                              std::size_t                outer,
                              std::size_t                inner);

}  // namespace segal

#endif  // SEGAL_COMPARISON_HPP_
