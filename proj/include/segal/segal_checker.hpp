// Segal maps φ_k: X_k -> X_1 ×_{X_0} ... ×_{X_0} X_1, computed per inner
// level, with exact verdicts and cardinality witnesses.

#ifndef SEGAL_SEGAL_CHECKER_HPP_
#define SEGAL_SEGAL_CHECKER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "segal/simplicial_space.hpp"

namespace segal {

  enum class Verdict { bijective, injective_only, surjective_only, neither };

  std::string to_string(Verdict v);

  struct SegalLevel {
    std::size_t inner = 0;
    std::size_t domain = 0;
    std::size_t codomain = 0;
    Verdict     verdict = Verdict::bijective;
    std::string witness;
  };

  struct SegalMapResult {
    std::size_t             k = 0;
    SimplicialSet           domain;    // column k
    SimplicialSet           codomain;  // iterated fiber product of column 1
    SimplicialMap           map;
    // codomain element -> its k edges, per inner level
    std::vector<std::vector<std::vector<Id>>> edges;
    std::vector<SegalLevel> levels;
    Verdict                 verdict = Verdict::bijective;
  };

  SegalMapResult segal_map(SegalPrecategory const& x, std::size_t k);

  // Degree of each element of X_{1,n}, per inner level n, and the bound on
  // the sum of degrees along a spine.
  struct Grading {
    std::vector<std::vector<std::size_t>> degree;
    std::size_t                           bound = 0;
  };

  struct SegalRow {
    std::size_t            k = 0;
    std::size_t            inner = 0;
    std::size_t            domain = 0;
    std::size_t            codomain = 0;
    Verdict                verdict = Verdict::bijective;
    std::optional<std::size_t> graded_codomain;
    std::optional<Verdict>     graded_verdict;
    std::optional<bool>    power_ok;  // reduced case: |X_k| = |X_1|^k
    std::string            witness;
  };

  struct SegalCheck {
    std::vector<SegalRow> rows;
    bool                  passed = true;
    bool                  truncation_artifact = false;
  };

  SegalCheck strict_segal_check(SegalPrecategory const&       x,
                                std::size_t                   k_max,
                                std::optional<Grading> const& grading = std::nullopt);

  struct ShadowReport {
    std::size_t k = 0;
    std::size_t L = 0;
    bool        maps_agree = true;    // restrict(p_k) = nerve(ι_i) elementwise
    bool        simplicial = true;    // each restricted component is a map
    bool        spine_agrees = true;  // φ_k(x_1|...|x_k) = (ι_i x)
    std::string detail;

    bool passed() const {
      return maps_agree && simplicial && spine_agrees;
    }
  };

  ShadowReport projection_shadow(std::size_t k, std::size_t L);

}  // namespace segal

#endif  // SEGAL_SEGAL_CHECKER_HPP_
