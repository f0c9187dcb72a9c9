// Level-truncated simplicial sets X_0, ..., X_N.
//
// The underlying CellComplex has one cell per level and its operators in a
// fixed order: all faces (k = 1..N, i = 0..k), then all degeneracies
// (k = 0..N-1, i = 0..k).  Simplices are the integers 0..|X_k|-1.

#ifndef SEGAL_SIMPLICIAL_SET_HPP_
#define SEGAL_SIMPLICIAL_SET_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "segal/cells.hpp"

namespace segal {

  class SimplicialSet {
   public:
    SimplicialSet();
    explicit SimplicialSet(std::size_t truncation, CellComplex cells);
    // faces[k][i] for k = 1..N (faces[0] is ignored), degeneracies[k][i]
    // for k = 0..N-1.
    SimplicialSet(std::size_t                              truncation,
                  std::vector<std::size_t>                 sizes,
                  std::vector<std::vector<Mapping>> const& faces,
                  std::vector<std::vector<Mapping>> const& degeneracies);

    static std::size_t face_op(std::size_t k, std::size_t i);
    static std::size_t degeneracy_op(std::size_t truncation,
                                     std::size_t k,
                                     std::size_t i);
    static std::size_t op_count(std::size_t truncation);
    // Empty operators with the right (source, target) pattern.
    static CellComplex shape(std::size_t truncation);

    std::size_t truncation() const noexcept {
      return _trunc;
    }
    std::size_t size(std::size_t k) const {
      return _cells.sizes.at(k);
    }
    std::vector<std::size_t> const& sizes() const noexcept {
      return _cells.sizes;
    }
    std::size_t total_size() const noexcept {
      return _cells.total_size();
    }
    Mapping const& face(std::size_t k, std::size_t i) const;
    Mapping const& degeneracy(std::size_t k, std::size_t i) const;
    CellComplex const& cells() const noexcept {
      return _cells;
    }

    // mask[k][x] is true when x lies in the image of some degeneracy
    std::vector<std::vector<bool>> degenerate_mask() const;
    std::vector<std::size_t>       nondegenerate_counts() const;

    bool operator==(SimplicialSet const& other) const;

   private:
    std::size_t _trunc;
    CellComplex _cells;
  };

  struct SimplicialMap {
    CellMap components;
  };

  bool is_simplicial_map(SimplicialSet const& source,
                         SimplicialSet const& target,
                         SimplicialMap const& f);

  enum class StandardKind { simplex, boundary, horn };

  // Δ[n], ∂Δ[n] or the horn V[n,k], truncated at `trunc`.  The j-simplices
  // are the monotone sequences of length j+1 in {0..n}, in lexicographic
  // order.
  SimplicialSet generate(StandardKind               kind,
                         std::size_t                n,
                         std::optional<std::size_t> k,
                         std::size_t                trunc);

  // The monotone sequences indexing the simplices of generate(...).
  std::vector<std::vector<std::vector<std::size_t>>> standard_simplices(
      StandardKind               kind,
      std::size_t                n,
      std::optional<std::size_t> k,
      std::size_t                trunc);

  struct Violation {
    std::string identity;
    std::size_t level;
    std::size_t i;
    std::size_t j;
    Id          simplex;

    std::string describe() const;
  };

  struct ValidationReport {
    std::vector<Violation> violations;
    bool                   ok() const noexcept {
      return violations.empty();
    }
  };

  // Checks the simplicial identities, injectivity of degeneracies and the
  // uniqueness of the Eilenberg-Zilber decomposition.
  ValidationReport validate(SimplicialSet const& x);

  // Eilenberg-Zilber decomposition: x = σ^* core with σ a surjection
  // [k] -> [core_level].
  struct Decomposition {
    std::size_t              core_level;
    Id                       core;
    std::vector<std::size_t> surjection;
  };
  Decomposition decompose(SimplicialSet const& x, std::size_t k, Id simplex);

  // θ^* x for θ: [m] -> [n] monotone (theta has m+1 entries), x ∈ X_n.
  Id apply_monotone(SimplicialSet const&            x,
                    std::size_t                     n,
                    std::vector<std::size_t> const& theta,
                    Id                              simplex);

  struct Pushout {
    SimplicialSet object;
    SimplicialMap from_x;
    SimplicialMap from_y;
  };
  Pushout pushout(SimplicialSet const& a,
                  SimplicialSet const& x,
                  SimplicialSet const& y,
                  SimplicialMap const& f,
                  SimplicialMap const& g);

  struct Pullback {
    SimplicialSet object;
    SimplicialMap to_x;
    SimplicialMap to_y;
  };
  Pullback pullback(SimplicialSet const& x,
                    SimplicialSet const& y,
                    SimplicialSet const& z,
                    SimplicialMap const& f,
                    SimplicialMap const& g);

  SimplicialSet coproduct(std::vector<SimplicialSet> const& parts);
  SimplicialSet product(SimplicialSet const& x, SimplicialSet const& y);
  SimplicialSet terminal(std::size_t trunc);
  SimplicialSet discrete(std::size_t points, std::size_t trunc);

  struct Components {
    std::size_t     count;
    std::vector<Id> of_vertex;
  };
  Components pi0(SimplicialSet const& x);

  struct IsoResult {
    std::optional<SimplicialMap> map;
    std::string                  witness;
  };
  IsoResult iso_check(SimplicialSet const& x, SimplicialSet const& y);

  struct SubSet {
    SimplicialSet object;
    SimplicialMap inclusion;
  };
  SubSet sub_object(SimplicialSet const& x, cells::Mask const& keep);

  // Smallest sub-object containing the given (level, simplex) seeds.
  cells::Mask generated_by(SimplicialSet const&                        x,
                           std::vector<std::pair<std::size_t, Id>> const& seeds);

}  // namespace segal

#endif  // SEGAL_SIMPLICIAL_SET_HPP_
