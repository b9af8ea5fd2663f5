#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "root_system.hpp"

namespace rootcones {

using Subset = std::uint32_t;

inline bool subset_contains(Subset big, Subset small) { return (big & small) == small; }
inline int subset_size(Subset s) { return __builtin_popcount(s); }

// Subsets T with low <= T <= high, ascending.
std::vector<Subset> subsets_between(Subset low, Subset high);

// Per-root-system tables for standard parabolics: projectors, relative bases
// Delta_P^Q / hat-Delta_P^Q and their dual bases, all cached.
class ParabolicTables {
 public:
  explicit ParabolicTables(const RootSystem& rs);

  const RootSystem& rs() const { return *rs_; }
  Subset full() const { return (1u << rs_->rank()) - 1; }
  std::vector<Subset> all_subsets() const;

  // Orthogonal projector onto a_P = {H : alpha(H) = 0, alpha in Delta^P}.
  const Mat& projector(Subset p) const;
  Vec project(Subset p, const Vec& v) const { return mat_apply(projector(p), v); }
  // Projector onto a_G (orthogonal complement of the root span).
  const Mat& ag_projector() const { return ag_proj_; }
  // Projection onto a_P^G.
  Vec project_G(Subset p, const Vec& v) const;
  // Projection onto a_P^Q = a_P  cap  (a_Q)-perp.
  Vec project_rel(Subset p, Subset q, const Vec& v) const;

  int a_rel(Subset p) const { return rs_->rank() - subset_size(p); }

  struct RelBasis {
    std::vector<int> alphas;       // simple indices in Q \ P
    std::vector<Vec> delta;        // Delta_P^Q: projections of those roots onto a_P
    std::vector<Vec> delta_hat;    // hat-Delta_P^Q: Levi-Q weights vanishing on a_0^P
    std::vector<Vec> delta_dual;   // varpi^vee basis of a_P^Q dual to delta
    std::vector<Vec> coroot_proj;  // projected coroots, dual basis to delta_hat
  };
  const RelBasis& rel_basis(Subset p, Subset q) const;

  // Fundamental weight of the Levi of Q attached to simple root i in Q.
  Vec levi_weight(Subset q, int i) const;

  // (is_obtuse(delta), is_acute(delta_hat)) for the pair P <= Q.
  std::pair<bool, bool> base_angle_check(Subset p, Subset q) const;

 private:
  const RootSystem* rs_;
  Mat ag_proj_;
  mutable std::map<Subset, Mat> proj_cache_;
  mutable std::map<std::pair<Subset, Subset>, RelBasis> rel_cache_;
};

// Point checks behind verify_positivity_lemmas; each returns true when the
// lemma's conclusion holds at the sample (hypotheses checked by the caller).
namespace positivity {

// alpha(X) > 0 on Delta_P^Q implies varpi(X) > 0 on hat-Delta_P^Q.
bool weights_positive(const ParabolicTables& pt, Subset p, Subset q, const Vec& x);
// P <= Q <= R, alpha(X) > 0 on Delta_P^R: projections onto a_Q^R dominate.
bool projection_dominates(const ParabolicTables& pt, Subset p, Subset q, Subset r, const Vec& x);
// Lemma-1.2.7 shape: alpha(H) > 0 on Delta_P^Q and varpi(H) <= 0 on
// hat-Delta_{P_0}^P imply gamma(H) > 0 on Delta_{P_0}^Q - Delta_{P_0}^P.
bool cone_positivity(const ParabolicTables& pt, Subset p, Subset q, const Vec& h);
// Regular X: projections of simple roots onto any a_P stay >= d_min(X).
bool dmin_bound(const ParabolicTables& pt, Subset p, const Vec& x);

}  // namespace positivity

}  // namespace rootcones
