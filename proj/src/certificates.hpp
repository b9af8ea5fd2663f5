#pragma once

#include <string>
#include <vector>

#include "lp.hpp"
#include "sampling.hpp"
#include "twisted.hpp"

namespace rootcones {

// Exact structural certificates for the "there exists c > 0" lemmas of
// sections 2.10-2.12. Every certificate is an exactly decided fact
// (kernel-cone triviality, or an explicitly exhibited smaller parabolic);
// observed ratios are empirical report data, never part of the decision.
struct Certificate {
  std::string lemma;
  std::string instance;
  bool decided = false;
  bool holds = false;       // the structural fact was established
  std::string branch;       // 2.11.1: "contraction" or "proper-parabolic"
  std::string detail;
  Rat ratio_sq = 0;         // max observed squared ratio, when sampled
  long samples = 0;
};

class CertificateEngine {
 public:
  CertificateEngine(const TwistedData& td, Sampler& sampler, int n_ratio_samples = 16);

  // Lemma 2.12.1, one instance per standard Q.
  Certificate kernel_cone_2121(Subset q) const;
  // Corollary 2.12.2, per Q <= R with Q^+ = R^-.
  Certificate kernel_cone_2122(Subset q, Subset r) const;
  // Lemma 2.12.3, per (Q, R, P') with Q^+ = R^- and Q_0 <= P' <= Q.
  Certificate kernel_cone_2123(Subset q, Subset r, Subset p_prime) const;
  // Lemma 2.10.6 cases (i)/(ii), per Q <= R with Q^+ <= R^-.
  Certificate norm_bound_2106(Subset q, Subset r, bool case_two) const;
  // Lemma 2.11.1 dichotomy, per (Q, P, s0) with P stable, Q <= P, s0 in W^P.
  Certificate dichotomy_2111(Subset q, Subset p, int s0) const;

  // Every instance on the system, in deterministic order.
  std::vector<Certificate> run_all() const;

 private:
  const TwistedData* td_;
  Sampler* sampler_;
  int n_ratio_samples_;

  // Closure of the sigma~_Q^R constraints as an H-cone in the root span,
  // using the admissible P~ given.
  HCone sigma_closure_cone(Subset q, Subset r, Subset p_tilde) const;
  // rows asserting x in the image of the projector
  static void append_membership_rows(HCone& cone, const Mat& projector);
  std::string subset_str(Subset s) const;
};

// Boundedness data for C(P, Q, R, X) of section 1.8 (untwisted): exact
// recession-cone triviality, vertex enumeration, max vertex norm.
struct CpqrxReport {
  bool empty = false;
  bool bounded = false;
  Rat max_norm_sq = 0;      // max |H|^2 over vertices of the closure
  Rat x_norm_sq = 0;        // |X_P^R|^2
  std::size_t n_vertices = 0;
};

CpqrxReport analyze_cpqrx(const FacetData& fd, Subset p, Subset q, Subset r, const Vec& x);

// Membership of H in the half-open C(P, Q, R, X).
int cpqrx_member(const FacetData& fd, Subset p, Subset q, Subset r, const Vec& x, const Vec& h);

// Exact emptiness decision for the half-open C(P, Q, R, X): maximizes the
// margin of the strict side over the closure.
bool cpqrx_is_empty(const FacetData& fd, Subset p, Subset q, Subset r, const Vec& x);

}  // namespace rootcones
