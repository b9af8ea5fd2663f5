#pragma once

#include "orthogonal.hpp"
#include "weyl.hpp"

namespace rootcones {

// Exact 0/1 evaluation of the cone characteristic functions. Strict and
// non-strict inequalities follow the definitions literally; no tolerance
// anywhere.
class ConeEvaluator {
 public:
  explicit ConeEvaluator(const FacetData& fd) : fd_(&fd) {}

  const FacetData& facets() const { return *fd_; }

  // --- standard pairs -------------------------------------------------
  int tau(Subset p, Subset q, const Vec& h) const;
  int tau_hat(Subset p, Subset q, const Vec& h) const;
  // phi_P^{Q,R}: varpi <= 0 on hat-Delta_P^R - hat-Delta_Q^R, varpi > 0 on
  // hat-Delta_Q^R (Lemma 1.7.3 characterization, used as the definition).
  int phi3(Subset p, Subset q, Subset r, const Vec& h) const;
  int phi2(Subset p, Subset q, const Vec& h) const { return phi3(p, q, q, h); }
  // Gamma_P^R(H, X) by its alternating-sum definition.
  int gamma_pr(Subset p, Subset r, const Vec& h, const Vec& x) const;
  // sigma_Q^R of section 2.10 (untwisted).
  int sigma(Subset q, Subset r, const Vec& h) const;

  // --- semi-standard pairs (via Weyl transport) -----------------------
  int tau(const SemiStdParabolic& p, const SemiStdParabolic& q, const Vec& h) const;
  int tau_hat(const SemiStdParabolic& p, const SemiStdParabolic& q, const Vec& h) const;
  int gamma_pr(const SemiStdParabolic& p, const SemiStdParabolic& r, const Vec& h,
               const Vec& x) const;

  // delta_M^Q: characteristic function of H_M^Q = 0.
  int delta_mq(Subset m, const SemiStdParabolic& q, const Vec& h) const;

  // --- Levi-level functions -------------------------------------------
  // Gamma_M^R(H, X) = sum over P in F^R(M) of (-1)^{a_P - a_R}
  // tau-hat_P^R(H - X_P).
  int gamma_m(Subset m, const SemiStdParabolic& top, const OrthogonalFamily& fam,
              const Vec& h) const;
  int gamma_m_full(Subset m, const OrthogonalFamily& fam, const Vec& h) const;

  // phi_{M,s}^kappa and a(s, kappa); kappa must avoid the walls of
  // Delta(M, s) (throws std::domain_error otherwise).
  int phi_m_s_kappa(Subset m, int s, const Vec& kappa, const Vec& h) const;
  int a_s_kappa(Subset m, int s, const Vec& kappa) const;
  // Gamma_M(H, X, kappa) of section 1.6.
  int gamma_m_kappa(Subset m, const OrthogonalFamily& fam, const Vec& kappa,
                    const Vec& h) const;

  // Reduction of a nested semi-standard pair to a standard pair: returns
  // (P', Q') with P = s^{-1} P', Q = s^{-1} Q' for s = p.s.
  std::pair<Subset, Subset> to_std_pair(const SemiStdParabolic& p, const SemiStdParabolic& q,
                                        int* s_out) const;

 private:
  const FacetData* fd_;
};

}  // namespace rootcones
