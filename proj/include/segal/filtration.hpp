// The filtration Ψ_0 ⊂ Ψ_1 ⊂ ... of the nerve of the free monoid on n
// letters, built twice: directly as tuples of total length <= k, and by
// attaching n^k reduced k-simplices to Ψ_{k-1}.

#ifndef SEGAL_FILTRATION_HPP_
#define SEGAL_FILTRATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "segal/simplicial_space.hpp"
#include "segal/theory.hpp"

namespace segal {

  // A simplicial set whose j-simplices carry j-tuples of words.
  struct LabelledSet {
    SimplicialSet                                set;
    std::vector<std::vector<std::vector<Word>>>  labels;  // labels[j][x]
  };

  // Tuples of total length <= k, outer truncation j_max.
  LabelledSet psi_formula(std::size_t n, std::size_t k, std::size_t j_max);

  struct PsiChain {
    std::size_t                n = 0;
    std::size_t                j_max = 0;
    std::vector<LabelledSet>   stages;      // stages[k] = Ψ_k, k = 0..k_max
    std::vector<SimplicialMap> inclusions;  // inclusions[k]: Ψ_{k-1} -> Ψ_k, k >= 1
  };

  // Ψ_0 is the point and Ψ_1 the reduced spine of Δ[n]; Ψ_k is the pushout
  // of Ψ_{k-1} and n^k copies of the reduced Δ[k] along the simplices that
  // do not meet both vertex 0 and vertex k.  The copy for (a_1, ..., a_k)
  // labels θ: [j] -> [k] by (a_{θ(0)+1}...a_{θ(1)} | ... ).  Throws
  // ConstructionError when labels clash.
  PsiChain psi_pushout(std::size_t n, std::size_t k_max, std::size_t j_max);

  struct LabelComparison {
    bool        bijective = false;
    bool        simplicial = false;
    std::string detail;

    bool iso() const {
      return bijective && simplicial;
    }
  };
  // Matches simplices with equal labels.
  LabelComparison compare_by_labels(LabelledSet const& a, LabelledSet const& b);

  SegalPrecategory as_space(LabelledSet const& x, std::size_t inner);

  // Ψ_k cut down to total length <= L, for k = 0..k_max, against the nerve
  // of the free monoid at the same bound.
  struct StabilizationReport {
    std::size_t                n = 0;
    std::size_t                L = 0;
    std::size_t                j_max = 0;
    std::vector<bool>          equal;      // per k
    std::vector<std::size_t>   sizes;      // |nerve_L| per level
    std::optional<std::size_t> threshold;  // least k from which equality holds up to k_max
  };
  StabilizationReport stabilization_check(std::size_t n,
                                          std::size_t L,
                                          std::size_t k_max,
                                          std::size_t j_max);

  // j-tuples of words in n letters of total length <= k: the sum over
  // t <= k of C(t + j - 1, j - 1) n^t.
  std::size_t psi_count(std::size_t n, std::size_t k, std::size_t j);

  struct FiltrationCount {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t j = 0;
    std::size_t formula = 0;        // psi_count
    std::size_t nerve = 0;          // enumerated tuples
    std::size_t pushout = 0;
    std::size_t nondegenerate = 0;  // in the pushout
    bool        iso = false;        // pushout ≅ formula through the labels
  };
  std::vector<FiltrationCount> filtration_counts(std::size_t n,
                                                 std::size_t k_max,
                                                 std::size_t j_max);

}  // namespace segal

#endif  // SEGAL_FILTRATION_HPP_
