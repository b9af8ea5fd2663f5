#include "certificates.hpp"

#include <sstream>

namespace rootcones {

namespace {

std::string mask_to_str(Subset s, int rank) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = 0; i < rank; ++i)
    if (s & (1u << i)) {
      if (!first) os << ",";
      os << (i + 1);
      first = false;
    }
  os << "}";
  return os.str();
}

}  // namespace

CertificateEngine::CertificateEngine(const TwistedData& td, Sampler& sampler,
                                     int n_ratio_samples)
    : td_(&td), sampler_(&sampler), n_ratio_samples_(n_ratio_samples) {}

std::string CertificateEngine::subset_str(Subset s) const {
  return mask_to_str(s, td_->rs().rank());
}

void CertificateEngine::append_membership_rows(HCone& cone, const Mat& projector) {
  // x in image(P)  <=>  (I - P) x = 0
  std::size_t d = projector.size();
  for (std::size_t i = 0; i < d; ++i) {
    Vec row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = (i == j ? Rat(1) : Rat(0)) - projector[i][j];
    cone.eq.push_back(row);
  }
}

Certificate CertificateEngine::kernel_cone_2121(Subset q) const {
  Certificate cert;
  cert.lemma = "2.12.1";
  cert.instance = "Q=" + subset_str(q);
  const auto& pt = td_->facets().tables();
  Subset q0 = td_->q_zero(q);
  Subset qp = td_->orbit_closure(q);

  std::vector<Vec> gens;
  for (const auto& v : pt.rel_basis(q, qp).delta_dual) gens.push_back(v);
  for (const auto& v : pt.rel_basis(q0, q).coroot_proj) gens.push_back(scale(Rat(-1), v));

  Mat k = td_->q_map_matrix(q);
  // structural part 1: a_0^{Q_0} lies in the kernel of q
  for (int i = 0; i < td_->rs().rank(); ++i) {
    if (!(q0 & (1u << i))) continue;
    if (!is_zero(mat_apply(k, td_->rs().simple_coroot(i)))) {
      cert.decided = true;
      cert.holds = false;
      cert.detail = "a_0^{Q_0} not inside ker q";
      return cert;
    }
  }
  // structural part 2: cone(generators) meets ker q only at 0
  Vec witness;
  bool trivial = vcone_meets_kernel_trivially(gens, k, &witness);
  cert.decided = true;
  cert.holds = trivial;
  if (!trivial) {
    cert.detail = "cone meets ker q at " + vec_to_string(witness);
    return cert;
  }
  // empirical ratio |X|^2 / |q(X)|^2 over random cone points
  for (int it = 0; it < n_ratio_samples_; ++it) {
    Vec x = zero_vec(td_->rs().dim());
    for (const auto& g : gens) {
      long c = sampler_->next_int(0, sampler_->bound());
      x = add(x, scale(Rat(c), g));
    }
    if (is_zero(x)) continue;
    Vec qx = mat_apply(k, x);
    if (is_zero(qx)) continue;  // cannot happen when the cone check passed
    Rat ratio = norm_sq(x) / norm_sq(qx);
    cert.ratio_sq = std::max(cert.ratio_sq, ratio);
    ++cert.samples;
  }
  return cert;
}

HCone CertificateEngine::sigma_closure_cone(Subset q, Subset r, Subset p_tilde) const {
  const auto& pt = td_->facets().tables();
  HCone cone;
  cone.dim = td_->rs().dim();
  for (const auto& a : pt.rel_basis(q, r).delta) cone.ge.push_back(a);
  const auto& qg = pt.rel_basis(q, pt.full());
  for (std::size_t k = 0; k < qg.alphas.size(); ++k)
    if (!(r & (1u << qg.alphas[k]))) cone.ge.push_back(scale(Rat(-1), qg.delta[k]));
  for (const auto& w : td_->trel(p_tilde, pt.full()).delta_hat) cone.ge.push_back(w);
  // stay inside the root span
  for (const auto& row : pt.ag_projector()) cone.eq.push_back(row);
  return cone;
}

Certificate CertificateEngine::kernel_cone_2122(Subset q, Subset r) const {
  Certificate cert;
  cert.lemma = "2.12.2";
  cert.instance = "Q=" + subset_str(q) + " R=" + subset_str(r);
  const auto& pt = td_->facets().tables();
  Subset q0 = td_->q_zero(q);
  Subset qp = td_->orbit_closure(q);
  Subset rm = td_->orbit_interior(r);
  if (qp != rm) {
    cert.decided = true;
    cert.holds = false;
    cert.detail = "hypothesis Q^+ = R^- violated";
    return cert;
  }
  HCone cone = sigma_closure_cone(q, r, rm);
  // phi_{Q_0}^Q closure: weights <= 0
  for (const auto& w : pt.rel_basis(q0, q).delta_hat) cone.ge.push_back(scale(Rat(-1), w));
  // x in a_{Q_0}^G
  Mat proj = pt.projector(q0);
  const Mat& ag = pt.ag_projector();
  for (std::size_t i = 0; i < proj.size(); ++i)
    for (std::size_t j = 0; j < proj.size(); ++j) proj[i][j] -= ag[i][j];
  append_membership_rows(cone, proj);
  // intersect with ker q
  for (const auto& row : td_->q_map_matrix(q)) cone.eq.push_back(row);

  Vec witness;
  bool trivial = cone_is_trivial(cone, &witness);
  cert.decided = true;
  cert.holds = trivial;
  if (!trivial) cert.detail = "cone meets ker q at " + vec_to_string(witness);
  return cert;
}

Certificate CertificateEngine::kernel_cone_2123(Subset q, Subset r, Subset p_prime) const {
  Certificate cert;
  cert.lemma = "2.12.3";
  cert.instance =
      "Q=" + subset_str(q) + " R=" + subset_str(r) + " P'=" + subset_str(p_prime);
  const auto& pt = td_->facets().tables();
  Subset q0 = td_->q_zero(q);
  if (!subset_contains(p_prime, q0) || !subset_contains(q, p_prime)) {
    cert.decided = true;
    cert.holds = false;
    cert.detail = "need Q_0 <= P' <= Q";
    return cert;
  }

  // Structural core: the 2.12.2 kernel-cone fact.
  Certificate base = kernel_cone_2122(q, r);
  if (!base.holds) {
    cert.decided = true;
    cert.holds = false;
    cert.detail = "2.12.2 core failed: " + base.detail;
    return cert;
  }

  // T-reduction: q vanishes on { T_{Q_0} : theta T = T }, as a matrix identity.
  Mat reduction = mat_mul(td_->q_map_matrix(q),
                          mat_mul(pt.projector(q0), td_->fix_projector()));
  for (const auto& row : reduction)
    if (!is_zero(row)) {
      cert.decided = true;
      cert.holds = false;
      cert.detail = "q does not vanish on the theta-fixed a_{Q_0} translates";
      return cert;
    }

  // Sampled verification of the proof's reduction: for H in the strict
  // constraint set, y = H_{Q_0} - H_{P'}^Q lies in the closed 2.12.2 cone,
  // and the ratio |(H - T)_{Q_0}|^2 / (|q(H)|^2 + |(H-T)_{P'}^Q|^2) stays
  // bounded. Sample H via an interior point of the constraint cone.
  HCone strict = sigma_closure_cone(q, r, td_->orbit_interior(r));
  for (const auto& w : pt.rel_basis(q0, p_prime).delta_hat)
    strict.ge.push_back(scale(Rat(-1), w));
  for (const auto& a : pt.rel_basis(p_prime, q).delta) strict.ge.push_back(a);

  cert.decided = true;
  cert.holds = true;
  // interior point via margin LP: ge rows >= 1 on the strict rows
  // (here: all sigma (i) rows and tau rows; <=-rows stay at <= 0)
  // For ratio sampling it is enough to perturb any strictly feasible point.
  std::size_t d = td_->rs().dim();
  Mat a_lp;
  Vec b_lp;
  std::size_t n_slack = strict.ge.size();
  // ge_i . x - s_i = margin_i with margins 1 for strict rows
  // Strict rows here: delta rows of (Q,R) and (P',Q) and the weight rows of
  // sigma's condition (iii); the <=-rows are relaxed to <= 0 via slack sign.
  // Simpler: require ge . x >= 1 for rows that are strict in the definitions
  // and ge . x >= 0 for the rest; infeasible => empty support (vacuous).
  std::size_t qr_rows = pt.rel_basis(q, r).delta.size();
  std::size_t hat_rows = td_->trel(td_->orbit_interior(r), pt.full()).delta_hat.size();
  std::vector<Rat> margins(strict.ge.size(), Rat(0));
  for (std::size_t i = 0; i < qr_rows; ++i) margins[i] = 1;
  {
    std::size_t base_idx = qr_rows + (pt.rel_basis(q, pt.full()).alphas.size() -
                                      pt.rel_basis(q, r).alphas.size());
    for (std::size_t i = 0; i < hat_rows; ++i) margins[base_idx + i] = 1;
    std::size_t tail = strict.ge.size() - pt.rel_basis(p_prime, q).delta.size();
    for (std::size_t i = tail; i < strict.ge.size(); ++i) margins[i] = 1;
  }
  for (std::size_t i = 0; i < strict.ge.size(); ++i) {
    Vec row(n_slack + d, Rat(0));
    row[i] = -1;
    for (std::size_t j = 0; j < d; ++j) row[n_slack + j] = strict.ge[i][j];
    a_lp.push_back(row);
    b_lp.push_back(margins[i]);
  }
  for (const auto& er : strict.eq) {
    Vec row(n_slack + d, Rat(0));
    for (std::size_t j = 0; j < d; ++j) row[n_slack + j] = er[j];
    a_lp.push_back(row);
    b_lp.push_back(Rat(0));
  }
  auto feas = lp_feasible(a_lp, b_lp, n_slack);
  if (!feas) {
    cert.detail = "constraint set empty; bound vacuous";
    return cert;
  }
  Vec h0(feas->begin() + n_slack, feas->end());

  Mat qmat = td_->q_map_matrix(q);
  Mat proj_q0 = pt.projector(q0);
  Mat proj_pq = pt.projector(p_prime);
  const Mat& proj_qq = pt.projector(q);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) proj_pq[i][j] -= proj_qq[i][j];

  HCone closed22 = sigma_closure_cone(q, r, td_->orbit_interior(r));
  for (const auto& w : pt.rel_basis(q0, q).delta_hat)
    closed22.ge.push_back(scale(Rat(-1), w));

  for (int it = 0; it < n_ratio_samples_; ++it) {
    // random perturbation of h0 staying in the strict set
    Vec h = h0;
    for (std::size_t j = 0; j < d; ++j) h[j] += sampler_->next_rat() / 100;
    h = td_->rs().project_to_root_span(h);
    bool ok = true;
    for (std::size_t i = 0; i < strict.ge.size(); ++i) {
      Rat v = dot(strict.ge[i], h);
      if (sgn(margins[i]) > 0 ? sgn(v) <= 0 : sgn(v) > 0) ok = false;
    }
    if (!ok) continue;
    // theta-fixed random T; H := h + T satisfies the (H - T)-conditions
    Vec t = td_->project_fixed(td_->rs().project_to_root_span(sampler_->next_vec(d)));
    Vec ht = add(h, t);
    Vec num_vec = mat_apply(proj_q0, h);  // (H - T)_{Q_0}
    Vec qh = mat_apply(qmat, ht);         // q(H); q(T) = 0 for theta-fixed T
    Vec pv = mat_apply(proj_pq, h);       // (H - T)_{P'}^Q
    Rat den = norm_sq(qh) + norm_sq(pv);
    if (sgn(den) == 0) {
      if (sgn(norm_sq(num_vec)) != 0) {
        cert.holds = false;
        cert.detail = "bound violated: nonzero lhs with zero rhs";
        return cert;
      }
      continue;
    }
    Rat ratio = norm_sq(num_vec) / den;
    cert.ratio_sq = std::max(cert.ratio_sq, ratio);
    ++cert.samples;
    // reduction membership: y = H_{Q_0} - H_{P'}^Q in the closed 2.12.2 cone
    Vec y = sub(mat_apply(proj_q0, h), mat_apply(proj_pq, h));
    for (const auto& row : closed22.ge)
      if (sgn(dot(row, y)) < 0) {
        cert.holds = false;
        cert.detail = "reduction vector escapes the closed 2.12.2 cone";
        return cert;
      }
  }
  return cert;
}

Certificate CertificateEngine::norm_bound_2106(Subset q, Subset r, bool case_two) const {
  Certificate cert;
  cert.lemma = "2.10.6";
  cert.instance = "Q=" + subset_str(q) + " R=" + subset_str(r) +
                  (case_two ? " case=(ii)" : " case=(i)");
  const auto& pt = td_->facets().tables();
  Subset qp = td_->orbit_closure(q);
  Subset rm = td_->orbit_interior(r);
  if (!subset_contains(rm, qp)) {
    cert.decided = true;
    cert.holds = true;
    cert.detail = "sigma~ identically zero; bound vacuous";
    return cert;
  }

  // V2: a_R^G (case i) or a~_{R^-}^{G~} (case ii)
  Mat v2 = case_two ? td_->tilde_projector_G(rm) : [&] {
    Mat m = pt.projector(r);
    const Mat& ag = pt.ag_projector();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) m[i][j] -= ag[i][j];
    return m;
  }();

  bool any_trivial = false;
  std::string last_detail;
  for (Subset p : subsets_between(qp, rm)) {
    if (!td_->is_stable(p)) continue;
    HCone cone = sigma_closure_cone(q, r, p);
    append_membership_rows(cone, v2);
    Vec witness;
    if (cone_is_trivial(cone, &witness)) {
      any_trivial = true;
      break;
    }
    last_detail = "closure meets V2 at " + vec_to_string(witness);
  }
  cert.decided = true;
  cert.holds = any_trivial;
  if (!any_trivial) cert.detail = last_detail;
  if (!any_trivial) return cert;

  // empirical ratio via strictly feasible samples
  std::size_t d = td_->rs().dim();
  HCone strict = sigma_closure_cone(q, r, qp);
  Mat a_lp;
  Vec b_lp;
  std::size_t n_slack = strict.ge.size();
  for (std::size_t i = 0; i < strict.ge.size(); ++i) {
    Vec row(n_slack + d, Rat(0));
    row[i] = -1;
    for (std::size_t j = 0; j < d; ++j) row[n_slack + j] = strict.ge[i][j];
    a_lp.push_back(row);
    // margins: strict rows are the (i) block and the weight block; the middle
    // (<=) block was already negated into >=-form with margin 0
    b_lp.push_back(Rat(0));
  }
  {
    std::size_t n_qr = pt.rel_basis(q, r).delta.size();
    for (std::size_t i = 0; i < n_qr; ++i) b_lp[i] = 1;
    std::size_t n_hat = td_->trel(qp, pt.full()).delta_hat.size();
    for (std::size_t i = strict.ge.size() - n_hat; i < strict.ge.size(); ++i) b_lp[i] = 1;
  }
  for (const auto& er : strict.eq) {
    Vec row(n_slack + d, Rat(0));
    for (std::size_t j = 0; j < d; ++j) row[n_slack + j] = er[j];
    a_lp.push_back(row);
    b_lp.push_back(Rat(0));
  }
  auto feas = lp_feasible(a_lp, b_lp, n_slack);
  if (!feas) {
    cert.detail = "support empty at this margin";
    return cert;
  }
  Vec h0(feas->begin() + n_slack, feas->end());
  for (int it = 0; it < n_ratio_samples_; ++it) {
    Vec h = h0;
    for (std::size_t j = 0; j < d; ++j) h[j] += sampler_->next_rat() / 100;
    h = td_->rs().project_to_root_span(h);
    if (td_->sigma_tilde(q, r, h) != 1) continue;
    Vec h2 = mat_apply(v2, h);
    Vec h1 = sub(h, h2);
    if (is_zero(h1)) {
      cert.holds = false;
      cert.detail = "support point inside V2";
      return cert;
    }
    Rat ratio = norm_sq(h2) / norm_sq(h1);
    cert.ratio_sq = std::max(cert.ratio_sq, ratio);
    ++cert.samples;
  }
  return cert;
}

Certificate CertificateEngine::dichotomy_2111(Subset q, Subset p, int s0) const {
  Certificate cert;
  cert.lemma = "2.11.1";
  {
    std::ostringstream os;
    os << "Q=" << subset_str(q) << " P=" << subset_str(p) << " s0=#" << s0;
    cert.instance = os.str();
  }
  const auto& pt = td_->facets().tables();
  const WeylGroup& w = td_->weyl();
  std::size_t d = td_->rs().dim();

  // Fixed-point cone: dominant, in a_Q^P, with s x = x for s = s0 theta.
  // Work inside the subspace V = a_Q^P cap ker(s - 1): when V = 0 the cone is
  // trivially {0}; otherwise probe the dominance cone restricted to V.
  Mat proj_qp = pt.projector(q);
  {
    const Mat& pp = pt.projector(p);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) proj_qp[i][j] -= pp[i][j];
  }
  Mat s_mat = mat_mul(w.matrix(s0), td_->theta().matrix);
  Mat stacked;
  for (std::size_t i = 0; i < d; ++i) {
    Vec row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = (i == j ? Rat(1) : Rat(0)) - proj_qp[i][j];
    stacked.push_back(row);
  }
  for (std::size_t i = 0; i < d; ++i) {
    Vec row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = s_mat[i][j] - (i == j ? Rat(1) : Rat(0));
    stacked.push_back(row);
  }
  std::vector<Vec> vbasis = nullspace(std::move(stacked));

  bool trivial = true;
  Vec y;
  if (!vbasis.empty()) {
    HCone cone;
    cone.dim = vbasis.size();
    for (int i = 0; i < td_->rs().rank(); ++i) {
      Vec row(vbasis.size());
      for (std::size_t j = 0; j < vbasis.size(); ++j)
        row[j] = dot(td_->rs().simple_root(i), vbasis[j]);
      cone.ge.push_back(row);
    }
    Vec coeffs;
    trivial = cone_is_trivial(cone, &coeffs);
    if (!trivial) {
      y = zero_vec(d);
      for (std::size_t j = 0; j < vbasis.size(); ++j) y = add(y, scale(coeffs[j], vbasis[j]));
    }
  }
  cert.decided = true;
  if (trivial) {
    cert.holds = true;
    cert.branch = "contraction";
    // empirical lower bound for c on sampled dominant vectors in a_Q^P
    const auto& duals = pt.rel_basis(q, p).delta_dual;
    Rat best_low(-1);
    for (int it = 0; it < n_ratio_samples_ * 4; ++it) {
      Vec x = zero_vec(d);
      for (const auto& g : duals) x = add(x, scale(Rat(sampler_->next_int(0, sampler_->bound())), g));
      bool dominant = true;
      for (int i = 0; i < td_->rs().rank(); ++i)
        if (sgn(dot(td_->rs().simple_root(i), x)) < 0) dominant = false;
      if (!dominant || is_zero(x)) continue;
      Rat val = (norm_sq(x) - dot(x, mat_apply(s_mat, x))) / norm_sq(x);
      if (best_low < 0 || val < best_low) best_low = val;
      ++cert.samples;
    }
    if (cert.samples > 0) cert.ratio_sq = best_low;  // empirical lower bound for c
    return cert;
  }

  // Branch 2: exhibit P1 from the witness.
  cert.branch = "proper-parabolic";
  if (!is_zero(sub(mat_apply(td_->theta().matrix, y), y)) ||
      !is_zero(sub(w.act(s0, y), y))) {
    cert.holds = false;
    cert.detail = "witness not fixed by theta and s0 separately";
    return cert;
  }
  Subset p1 = 0;
  for (int i = 0; i < td_->rs().rank(); ++i) {
    if (!(p & (1u << i))) continue;
    if (sgn(dot(td_->rs().simple_root(i), y)) == 0) p1 |= (1u << i);
  }
  bool ok = td_->is_stable(p1) && subset_contains(p1, q) && p1 != p &&
            subset_contains(p, p1) && w.in_levi_subgroup(s0, p1);
  cert.holds = ok;
  std::ostringstream os;
  os << "P1=" << subset_str(p1) << " from Y=" << vec_to_string(y);
  cert.detail = os.str();
  if (!ok) cert.detail += " (verification failed)";
  return cert;
}

std::vector<Certificate> CertificateEngine::run_all() const {
  std::vector<Certificate> out;
  const auto& pt = td_->facets().tables();
  Subset full = pt.full();
  for (Subset q = 0; q <= full; ++q) out.push_back(kernel_cone_2121(q));
  for (Subset q = 0; q <= full; ++q)
    for (Subset r = q; r <= full; ++r) {
      if (!subset_contains(r, q)) continue;
      Subset qp = td_->orbit_closure(q), rm = td_->orbit_interior(r);
      if (qp == rm) {
        out.push_back(kernel_cone_2122(q, r));
        for (Subset pp : subsets_between(td_->q_zero(q), q))
          out.push_back(kernel_cone_2123(q, r, pp));
      }
      if (subset_contains(rm, qp)) {
        out.push_back(norm_bound_2106(q, r, false));
        out.push_back(norm_bound_2106(q, r, true));
      }
    }
  for (Subset p = 0; p <= full; ++p) {
    if (!td_->is_stable(p)) continue;
    for (Subset q : subsets_between(0, p)) {
      for (std::size_t s0 = 0; s0 < td_->weyl().size(); ++s0) {
        if (!td_->weyl().in_levi_subgroup(static_cast<int>(s0), p)) continue;
        out.push_back(dichotomy_2111(q, p, static_cast<int>(s0)));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// C(P, Q, R, X)

namespace {

struct CpqrxSystem {
  // rows/rhs of the closure (A x <= b in Delta_P^R dual coordinates),
  // plus the strict-row markers
  Mat a;
  Vec b;
  std::vector<bool> strict;
  std::vector<Vec> dual_basis;  // basis of a_P^R used for coordinates
  Mat gram;                     // gram of the dual basis
};

CpqrxSystem build_cpqrx(const FacetData& fd, Subset p, Subset q, Subset r, const Vec& x) {
  const auto& pt = fd.tables();
  const auto& pr = pt.rel_basis(p, r);
  std::size_t n = pr.alphas.size();
  CpqrxSystem sys;
  sys.dual_basis = pr.delta_dual;
  sys.gram = gram(pr.delta_dual);
  // alpha-side: alpha_i(H) = x_i > 0 for i in Q\P, <= 0 otherwise
  for (std::size_t i = 0; i < n; ++i) {
    Vec row(n, Rat(0));
    bool in_q = (q & (1u << pr.alphas[i])) != 0;
    if (in_q) {
      row[i] = -1;  // -x_i <= 0, strict
      sys.a.push_back(row);
      sys.b.push_back(Rat(0));
      sys.strict.push_back(true);
    } else {
      row[i] = 1;  // x_i <= 0
      sys.a.push_back(row);
      sys.b.push_back(Rat(0));
      sys.strict.push_back(false);
    }
  }
  // weight side: varpi_j(H - X) > 0 for j in hat-Delta_Q^R (outside Q), else <= 0
  for (std::size_t j = 0; j < n; ++j) {
    Vec row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = dot(pr.delta_hat[j], pr.delta_dual[i]);
    Rat off = dot(pr.delta_hat[j], x);
    bool in_q_hat = !(q & (1u << pr.alphas[j]));
    if (in_q_hat) {
      // varpi(H) > off  ->  -varpi(H) < -off
      sys.a.push_back(scale(Rat(-1), row));
      sys.b.push_back(-off);
      sys.strict.push_back(true);
    } else {
      sys.a.push_back(row);
      sys.b.push_back(off);
      sys.strict.push_back(false);
    }
  }
  return sys;
}

}  // namespace

CpqrxReport analyze_cpqrx(const FacetData& fd, Subset p, Subset q, Subset r, const Vec& x) {
  CpqrxReport rep;
  CpqrxSystem sys = build_cpqrx(fd, p, q, r, x);
  std::size_t n = sys.dual_basis.size();
  rep.x_norm_sq = norm_sq(fd.tables().project_rel(p, r, x));
  if (n == 0) {
    rep.bounded = true;
    rep.empty = false;  // the empty product: C = {0}
    rep.n_vertices = 1;
    return rep;
  }
  rep.empty = cpqrx_is_empty(fd, p, q, r, x);
  rep.bounded = polytope_is_bounded(sys.a, n);
  if (!rep.bounded) return rep;
  auto verts = polytope_vertices(sys.a, sys.b, n);
  rep.n_vertices = verts.size();
  for (const auto& v : verts) {
    // |H|^2 = v^T G v
    Rat nsq(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) nsq += v[i] * sys.gram[i][j] * v[j];
    rep.max_norm_sq = std::max(rep.max_norm_sq, nsq);
  }
  return rep;
}

int cpqrx_member(const FacetData& fd, Subset p, Subset q, Subset r, const Vec& x, const Vec& h) {
  const auto& pt = fd.tables();
  const auto& pr = pt.rel_basis(p, r);
  for (std::size_t i = 0; i < pr.alphas.size(); ++i) {
    bool in_q = (q & (1u << pr.alphas[i])) != 0;
    int s = sgn(dot(pr.delta[i], h));
    if (in_q ? s <= 0 : s > 0) return 0;
    bool in_q_hat = !in_q;
    int t = sgn(dot(pr.delta_hat[i], sub(h, x)));
    if (in_q_hat ? t <= 0 : t > 0) return 0;
  }
  return 1;
}

bool cpqrx_is_empty(const FacetData& fd, Subset p, Subset q, Subset r, const Vec& x) {
  CpqrxSystem sys = build_cpqrx(fd, p, q, r, x);
  std::size_t n = sys.dual_basis.size();
  if (n == 0) return false;
  // Feasibility of the half-open set: maximize a margin t with the strict
  // rows tightened by t (a x + t <= b); nonempty iff the max is positive.
  // Variables: [row slacks, cap slack (nonneg) | x (free), t (free)].
  std::size_t n_slack = sys.a.size() + 1;
  Mat a;
  Vec b;
  for (std::size_t i = 0; i < sys.a.size(); ++i) {
    Vec row(n_slack + n + 1, Rat(0));
    row[i] = 1;
    for (std::size_t j = 0; j < n; ++j) row[n_slack + j] = sys.a[i][j];
    if (sys.strict[i]) row[n_slack + n] = 1;
    a.push_back(row);
    b.push_back(sys.b[i]);
  }
  {
    // t <= 1 keeps the objective bounded
    Vec row(n_slack + n + 1, Rat(0));
    row[n_slack - 1] = 1;
    row[n_slack + n] = 1;
    a.push_back(row);
    b.push_back(Rat(1));
  }
  Vec c(n_slack + n + 1, Rat(0));
  c[n_slack + n] = 1;
  auto res = lp_maximize(a, b, n_slack, c);
  if (res.status != LpMax::Status::Optimal)
    throw std::logic_error("cpqrx_is_empty: unexpected LP status");
  return sgn(res.value) <= 0;
}

}  // namespace rootcones
