#include "segal/filtration.hpp"

#include <map>
#include <sstream>

#include "segal/errors.hpp"
#include "segal/nerve.hpp"

namespace segal {

  namespace {

    using Label = std::vector<Word>;

    Label label_of(std::vector<std::size_t> const& theta, std::vector<Id> const& a) {
      Label out;
      for (std::size_t i = 1; i < theta.size(); ++i) {
        Word w;
        for (std::size_t l = theta[i - 1]; l < theta[i]; ++l) {
          w.push_back(a[l]);
        }
        out.push_back(std::move(w));
      }
      return out;
    }

    std::size_t total_length(Label const& l) {
      std::size_t t = 0;
      for (auto const& w : l) {
        t += w.size();
      }
      return t;
    }

    std::vector<std::map<Label, Id>> label_index(LabelledSet const& x) {
      std::vector<std::map<Label, Id>> idx(x.labels.size());
      for (std::size_t j = 0; j < x.labels.size(); ++j) {
        for (Id e = 0; e < x.labels[j].size(); ++e) {
          if (!idx[j].emplace(x.labels[j][e], e).second) {
            throw ConstructionError("filtration: two simplices share a label at level "
                                    + std::to_string(j));
          }
        }
      }
      return idx;
    }

    // Reduced Δ[k] with a θ for each simplex.
    struct ReducedSimplex {
      SimplicialSet                                      set;
      std::vector<std::vector<std::vector<std::size_t>>> theta;  // theta[j][x]
    };

    ReducedSimplex reduced_simplex(std::size_t k, std::size_t j_max) {
      auto const lss = labeled_simplex_set(k, std::vector<Id>(k + 1, 0), 1, j_max);
      auto const std_simplices = standard_simplices(StandardKind::simplex, k, std::nullopt, j_max);
      ReducedSimplex r{lss.object, {}};
      for (std::size_t j = 0; j <= j_max; ++j) {
        r.theta.emplace_back(lss.object.size(j));
        for (Id s = 0; s < std_simplices[j].size(); ++s) {
          auto& slot = r.theta[j][lss.from_simplex.components[j][s]];
          if (slot.empty()) {
            slot = std_simplices[j][s];
          }
        }
      }
      return r;
    }

    void set_label(std::vector<std::vector<Label>>& labels,
                   std::vector<std::vector<bool>>&  set,
                   std::size_t                      j,
                   Id                               x,
                   Label const&                     l) {
      if (set[j][x]) {
        if (labels[j][x] != l) {
          throw ConstructionError("psi_pushout: conflicting labels at level " + std::to_string(j));
        }
        return;
      }
      set[j][x]    = true;
      labels[j][x] = l;
    }

  }  // namespace

  LabelledSet psi_formula(std::size_t n, std::size_t k, std::size_t j_max) {
    auto nerve  = nerve_free_monoid(n, j_max, k);
    auto tuples = free_monoid_tuples(n, j_max, k);
    return {std::move(nerve.set), std::move(tuples)};
  }

  PsiChain psi_pushout(std::size_t n, std::size_t k_max, std::size_t j_max) {
    if (n == 0) {
      throw ArgumentError("psi_pushout: at least one letter is required");
    }
    PsiChain chain;
    chain.n     = n;
    chain.j_max = j_max;
    {
      LabelledSet pt{terminal(j_max), {}};
      for (std::size_t j = 0; j <= j_max; ++j) {
        pt.labels.push_back({Label(j)});
      }
      chain.stages.push_back(std::move(pt));
      chain.inclusions.emplace_back();
    }
    if (k_max == 0) {
      return chain;
    }
    {
      auto const g    = g_object(n, std::vector<Id>(n + 1, 0), point_object(), j_max, 0);
      auto const full = reduced_simplex(n, j_max);
      std::vector<Id> a(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = static_cast<Id>(i);
      }
      LabelledSet psi1{g.object.space.row(0), {}};
      for (std::size_t j = 0; j <= j_max; ++j) {
        psi1.labels.emplace_back();
        for (Id e = 0; e < psi1.set.size(j); ++e) {
          Id const in_full = g.inclusion.components[j][e];
          psi1.labels[j].push_back(label_of(full.theta[j][in_full], a));
        }
      }
      chain.stages.push_back(std::move(psi1));
      chain.inclusions.emplace_back();
    }
    for (std::size_t k = 2; k <= k_max; ++k) {
      auto const& prev  = chain.stages.back();
      auto const  index = label_index(prev);
      auto const  delta = reduced_simplex(k, j_max);
      std::size_t copies = 1;
      for (std::size_t i = 0; i < k; ++i) {
        copies *= n;
      }
      std::vector<SimplicialSet>     parts(copies, delta.set);
      SimplicialSet const            y = coproduct(parts);
      std::vector<std::vector<bool>> keep(j_max + 1);
      for (std::size_t j = 0; j <= j_max; ++j) {
        for (Id c = 0; c < copies; ++c) {
          for (Id e = 0; e < delta.set.size(j); ++e) {
            auto const& t = delta.theta[j][e];
            keep[j].push_back(t.back() - t.front() < k);
          }
        }
      }
      auto const    sub = sub_object(y, keep);
      auto copy_label = [&](std::size_t j, Id yid) {
        Id const c = static_cast<Id>(yid / delta.set.size(j));
        Id const e = static_cast<Id>(yid % delta.set.size(j));
        return label_of(delta.theta[j][e], decode_tuple(c, k, n));
      };
      SimplicialMap attach;
      for (std::size_t j = 0; j <= j_max; ++j) {
        Mapping comp;
        for (Id s = 0; s < sub.object.size(j); ++s) {
          auto const l  = copy_label(j, sub.inclusion.components[j][s]);
          auto       it = index[j].find(l);
          if (it == index[j].end()) {
            throw ConstructionError("psi_pushout: attaching simplex has no image in stage "
                                    + std::to_string(k - 1));
          }
          comp.push_back(it->second);
        }
        attach.components.push_back(std::move(comp));
      }
      auto po = pushout(sub.object, prev.set, y, attach, sub.inclusion);
      std::vector<std::vector<Label>> labels(j_max + 1);
      std::vector<std::vector<bool>>  done(j_max + 1);
      for (std::size_t j = 0; j <= j_max; ++j) {
        labels[j].resize(po.object.size(j));
        done[j].assign(po.object.size(j), false);
        for (Id e = 0; e < prev.set.size(j); ++e) {
          set_label(labels, done, j, po.from_x.components[j][e], prev.labels[j][e]);
        }
        for (Id e = 0; e < y.size(j); ++e) {
          set_label(labels, done, j, po.from_y.components[j][e], copy_label(j, e));
        }
      }
      chain.stages.push_back({std::move(po.object), std::move(labels)});
      chain.inclusions.push_back(std::move(po.from_x));
    }
    // Ψ_0 -> Ψ_1 sends the point to the empty tuples
    auto const idx1 = label_index(chain.stages[1]);
    SimplicialMap first;
    for (std::size_t j = 0; j <= j_max; ++j) {
      first.components.push_back({idx1[j].at(Label(j))});
    }
    chain.inclusions[1] = std::move(first);
    return chain;
  }

  LabelComparison compare_by_labels(LabelledSet const& a, LabelledSet const& b) {
    LabelComparison r;
    if (a.set.truncation() != b.set.truncation()) {
      r.detail = "truncations differ";
      return r;
    }
    auto const         idx = label_index(b);
    SimplicialMap      f;
    std::ostringstream detail;
    r.bijective = true;
    for (std::size_t j = 0; j <= a.set.truncation(); ++j) {
      Mapping comp;
      for (Id e = 0; e < a.set.size(j); ++e) {
        auto it = idx[j].find(a.labels[j][e]);
        if (it == idx[j].end()) {
          r.bijective = false;
          comp.push_back(0);
        } else {
          comp.push_back(it->second);
        }
      }
      if (a.set.size(j) != b.set.size(j)) {
        r.bijective = false;
      }
      detail << "level " << j << ": " << a.set.size(j) << " vs " << b.set.size(j) << "; ";
      f.components.push_back(std::move(comp));
    }
    r.simplicial = r.bijective && is_simplicial_map(a.set, b.set, f);
    r.detail     = detail.str();
    return r;
  }

  SegalPrecategory as_space(LabelledSet const& x, std::size_t inner) {
    return make_precategory(transpose(x.set, inner), point_object());
  }

  StabilizationReport stabilization_check(std::size_t n,
                                          std::size_t L,
                                          std::size_t k_max,
                                          std::size_t j_max) {
    StabilizationReport r{n, L, j_max, {}, {}, std::nullopt};
    auto const chain  = psi_pushout(n, k_max, j_max);
    auto const target = psi_formula(n, L, j_max);
    for (std::size_t j = 0; j <= j_max; ++j) {
      r.sizes.push_back(target.set.size(j));
    }
    for (std::size_t k = 0; k <= k_max; ++k) {
      auto const&                    psi = chain.stages[k];
      std::vector<std::vector<bool>> keep(j_max + 1);
      for (std::size_t j = 0; j <= j_max; ++j) {
        for (auto const& l : psi.labels[j]) {
          keep[j].push_back(total_length(l) <= L);
        }
      }
      auto const  sub = sub_object(psi.set, keep);
      LabelledSet cut{sub.object, std::vector<std::vector<Label>>(j_max + 1)};
      for (std::size_t j = 0; j <= j_max; ++j) {
        for (Id s : sub.inclusion.components[j]) {
          cut.labels[j].push_back(psi.labels[j][s]);
        }
      }
      r.equal.push_back(compare_by_labels(cut, target).iso());
    }
    for (std::size_t k = k_max + 1; k-- > 0;) {
      if (!r.equal[k]) {
        break;
      }
      r.threshold = k;
    }
    return r;
  }

  std::size_t psi_count(std::size_t n, std::size_t k, std::size_t j) {
    if (j == 0) {
      return 1;
    }
    std::size_t total = 0;
    std::size_t pow   = 1;
    for (std::size_t t = 0; t <= k; ++t) {
      std::size_t binom = 1;  // C(t + j - 1, j - 1)
      for (std::size_t i = 1; i < j; ++i) {
        binom = binom * (t + i) / i;
      }
      total += binom * pow;
      pow *= n;
    }
    return total;
  }

  std::vector<FiltrationCount> filtration_counts(std::size_t n,
                                                 std::size_t k_max,
                                                 std::size_t j_max) {
    std::vector<FiltrationCount> out;
    auto const chain = psi_pushout(n, k_max, j_max);
    for (std::size_t k = 0; k <= k_max; ++k) {
      auto const formula = psi_formula(n, k, j_max);
      auto const nd      = chain.stages[k].set.nondegenerate_counts();
      bool const iso     = compare_by_labels(chain.stages[k], formula).iso();
      for (std::size_t j = 0; j <= j_max; ++j) {
        out.push_back({n, k, j, psi_count(n, k, j), formula.set.size(j),
                       chain.stages[k].set.size(j), nd[j], iso});
      }
    }
    return out;
  }

}  // namespace segal
