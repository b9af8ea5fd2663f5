#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cone_fns.hpp"
#include "orthogonal.hpp"
#include "weyl.hpp"

namespace rootcones {

// A Cartan-matrix-preserving permutation of the simple roots together with
// the orthogonal map it induces on the ambient space (identity on a_G).
struct DiagramAutomorphism {
  std::vector<int> perm;       // 0-based on simple indices
  int order = 1;
  Mat matrix;
  std::vector<int> root_perm;  // action on root indices

  bool is_identity() const;
};

// Throws std::invalid_argument if the permutation does not preserve the
// Cartan matrix.
DiagramAutomorphism make_automorphism(const RootSystem& rs, const std::vector<int>& perm0);
DiagramAutomorphism identity_automorphism(const RootSystem& rs);
// Named twists: "flip" (A_n reversal / D_n fork swap), "swap" (D_4's
// alpha_1 <-> alpha_3), "perm=i,j,..." (1-based images).
DiagramAutomorphism parse_twist(const RootSystem& rs, const std::string& spec);

// Twisted combinatorics over a fixed automorphism theta_0.
class TwistedData {
 public:
  TwistedData(const FacetData& fd, DiagramAutomorphism theta);

  const FacetData& facets() const { return *fd_; }
  const WeylGroup& weyl() const { return fd_->weyl(); }
  const RootSystem& rs() const { return fd_->rs(); }
  const DiagramAutomorphism& theta() const { return theta_; }

  bool is_stable(Subset p) const;
  std::vector<Subset> stable_subsets() const;
  Subset apply_to_subset(Subset p) const;
  Subset orbit_closure(Subset q) const;   // Q^+
  Subset orbit_interior(Subset q) const;  // Q^-
  // Q_0 = Q cap theta^{-1}(Q).
  Subset q_zero(Subset q) const;

  // theta s theta^{-1}.
  int twist_weyl(int s) const;

  // Projector onto Fix(theta).
  const Mat& fix_projector() const { return fix_proj_; }
  Vec project_fixed(const Vec& v) const { return mat_apply(fix_proj_, v); }
  // Projector onto the twisted space a~_P (Fix cap a_P), P stable.
  Mat tilde_projector(Subset p) const;
  // Projector onto a~_P^{G~} = Fix cap a_P cap root span.
  Mat tilde_projector_G(Subset p) const;
  // dim a~_P - dim a~_G = number of theta-orbits outside P (P stable).
  int a_tilde(Subset p) const;

  struct TwistedRelBasis {
    std::vector<std::vector<int>> orbits;  // orbits of simple indices in Q\P
    std::vector<Vec> delta;                // orbit forms alpha~ (as vectors)
    std::vector<Vec> delta_hat;            // orbit forms varpi~
    std::vector<Vec> delta_dual;           // basis of a~_P^Q dual to delta
    std::vector<Vec> hat_dual;             // basis dual to delta_hat
  };
  const TwistedRelBasis& trel(Subset p, Subset q) const;

  // Twisted cone functions for stable standard pairs.
  int tau(Subset p, Subset q, const Vec& h) const;
  int tau_hat(Subset p, Subset q, const Vec& h) const;
  int phi3(Subset p, Subset q, Subset r, const Vec& h) const;
  int gamma_pr(Subset p, Subset r, const Vec& h, const Vec& x) const;

  // Twisted semi-standard machinery. Underlying parabolics are stable and
  // canonical representatives are automatically theta-fixed.
  std::vector<int> twisted_chambers(Subset m) const;            // W(a~_M)
  std::vector<int> twisted_weyl_set(Subset m, Subset m2) const; // W(a~, a~')
  std::vector<SemiStdParabolic> p_of(Subset m) const;           // P(M~)
  std::vector<SemiStdParabolic> f_of(Subset m) const;           // F(M~)
  std::vector<SemiStdParabolic> f_of_below(Subset m, const SemiStdParabolic& top) const;

  int tau(const SemiStdParabolic& p, const SemiStdParabolic& q, const Vec& h) const;
  int tau_hat(const SemiStdParabolic& p, const SemiStdParabolic& q, const Vec& h) const;
  int gamma_pr(const SemiStdParabolic& p, const SemiStdParabolic& r, const Vec& h,
               const Vec& x) const;
  int a_tilde(const SemiStdParabolic& q) const { return a_tilde(q.r); }

  // Gamma_{M~}^{Q~}(H, X): family values are projected onto a~ spaces.
  int gamma_m(Subset m, const SemiStdParabolic& top, const OrthogonalFamily& fam,
              const Vec& h) const;
  int gamma_m_full(Subset m, const OrthogonalFamily& fam, const Vec& h) const;
  Vec family_value_tilde(const SemiStdParabolic& q, const OrthogonalFamily& fam) const;

  // sigma~_Q^R. When Q^+ is not contained in R^- the value is 0. Otherwise
  // evaluates with every admissible stable P between Q^+ and R^- and checks
  // they agree (Lemma 2.10.3 as a runtime test; disagreement throws).
  int sigma_tilde(Subset q, Subset r, const Vec& h) const;
  // Same but with one chosen P~ (for targeted tests).
  int sigma_tilde_with(Subset q, Subset r, Subset p_tilde, const Vec& h) const;

  // eta~(Q, R) and eta~(Q, R; t).
  long eta_tilde(Subset q, Subset r) const;
  long eta_tilde_t(Subset q, Subset r, int t) const;

  // The map q_Q : X -> ((1 - theta_0) X)_Q^G as a matrix.
  Mat q_map_matrix(Subset q) const;
  Vec q_map(Subset q, const Vec& x) const;

 private:
  const FacetData* fd_;
  DiagramAutomorphism theta_;
  Mat fix_proj_;
  mutable std::map<std::pair<Subset, Subset>, TwistedRelBasis> trel_cache_;

  std::pair<Subset, Subset> to_std_pair(const SemiStdParabolic& p, const SemiStdParabolic& q,
                                        int* s_out) const;
};

}  // namespace rootcones
