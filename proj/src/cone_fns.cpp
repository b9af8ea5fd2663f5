#include "cone_fns.hpp"

#include <stdexcept>

namespace rootcones {

int ConeEvaluator::tau(Subset p, Subset q, const Vec& h) const {
  const auto& rb = fd_->tables().rel_basis(p, q);
  for (const auto& a : rb.delta)
    if (sgn(dot(a, h)) <= 0) return 0;
  return 1;
}

int ConeEvaluator::tau_hat(Subset p, Subset q, const Vec& h) const {
  const auto& rb = fd_->tables().rel_basis(p, q);
  for (const auto& w : rb.delta_hat)
    if (sgn(dot(w, h)) <= 0) return 0;
  return 1;
}

int ConeEvaluator::phi3(Subset p, Subset q, Subset r, const Vec& h) const {
  if (!subset_contains(q, p) || !subset_contains(r, q))
    throw std::invalid_argument("phi3: need P <= Q <= R");
  const auto& rb = fd_->tables().rel_basis(p, r);
  for (std::size_t k = 0; k < rb.alphas.size(); ++k) {
    bool in_q_hat = !(q & (1u << rb.alphas[k]));  // varpi in hat-Delta_Q^R
    int s = sgn(dot(rb.delta_hat[k], h));
    if (in_q_hat) {
      if (s <= 0) return 0;
    } else {
      if (s > 0) return 0;
    }
  }
  return 1;
}

int ConeEvaluator::gamma_pr(Subset p, Subset r, const Vec& h, const Vec& x) const {
  int total = 0;
  int a_r = fd_->tables().a_rel(r);
  for (Subset q : subsets_between(p, r)) {
    int term = tau(p, q, h) * tau_hat(q, r, sub(h, x));
    if (term == 0) continue;
    int a_q = fd_->tables().a_rel(q);
    total += ((a_q - a_r) % 2 == 0) ? term : -term;
  }
  return total;
}

int ConeEvaluator::sigma(Subset q, Subset r, const Vec& h) const {
  if (!subset_contains(r, q)) throw std::invalid_argument("sigma: need Q <= R");
  const auto& pt = fd_->tables();
  const auto& qr = pt.rel_basis(q, r);
  for (const auto& a : qr.delta)
    if (sgn(dot(a, h)) <= 0) return 0;
  const auto& qg = pt.rel_basis(q, pt.full());
  for (std::size_t k = 0; k < qg.alphas.size(); ++k) {
    if (r & (1u << qg.alphas[k])) continue;  // only Delta_Q - Delta_Q^R
    if (sgn(dot(qg.delta[k], h)) > 0) return 0;
  }
  const auto& rg = pt.rel_basis(r, pt.full());
  for (const auto& w : rg.delta_hat)
    if (sgn(dot(w, h)) <= 0) return 0;
  return 1;
}

std::pair<Subset, Subset> ConeEvaluator::to_std_pair(const SemiStdParabolic& p,
                                                     const SemiStdParabolic& q,
                                                     int* s_out) const {
  if (!FacetData::contains(q, p)) throw std::invalid_argument("to_std_pair: P not inside Q");
  SemiStdParabolic moved = fd_->apply(p.s, q);
  if (moved.s != fd_->weyl().identity())
    throw std::logic_error("to_std_pair: image of Q is not standard");
  if (s_out) *s_out = p.s;
  return {p.r, moved.r};
}

int ConeEvaluator::tau(const SemiStdParabolic& p, const SemiStdParabolic& q, const Vec& h) const {
  int s;
  auto [ps, qs] = to_std_pair(p, q, &s);
  return tau(ps, qs, fd_->weyl().act(s, h));
}

int ConeEvaluator::tau_hat(const SemiStdParabolic& p, const SemiStdParabolic& q,
                           const Vec& h) const {
  int s;
  auto [ps, qs] = to_std_pair(p, q, &s);
  return tau_hat(ps, qs, fd_->weyl().act(s, h));
}

int ConeEvaluator::gamma_pr(const SemiStdParabolic& p, const SemiStdParabolic& r, const Vec& h,
                            const Vec& x) const {
  int s;
  auto [ps, rs] = to_std_pair(p, r, &s);
  return gamma_pr(ps, rs, fd_->weyl().act(s, h), fd_->weyl().act(s, x));
}

int ConeEvaluator::delta_mq(Subset m, const SemiStdParabolic& q, const Vec& h) const {
  Vec hm = fd_->tables().project(m, h);
  Vec hq = fd_->project_onto_aQ(q, h);
  return (hm == hq) ? 1 : 0;
}

int ConeEvaluator::gamma_m(Subset m, const SemiStdParabolic& top, const OrthogonalFamily& fam,
                           const Vec& h) const {
  int total = 0;
  int a_top = fd_->a_rel(top);
  for (const auto& p : fd_->f_of_below(m, top)) {
    Vec xp = family_value_at(*fd_, fam, p);
    int term = tau_hat(p, top, sub(h, xp));
    if (term == 0) continue;
    int a_p = fd_->a_rel(p);
    total += ((a_p - a_top) % 2 == 0) ? term : -term;
  }
  return total;
}

int ConeEvaluator::gamma_m_full(Subset m, const OrthogonalFamily& fam, const Vec& h) const {
  return gamma_m(m, fd_->standard(fd_->tables().full()), fam, h);
}

int ConeEvaluator::phi_m_s_kappa(Subset m, int s, const Vec& kappa, const Vec& h) const {
  auto cf = fd_->chamber_forms(m, s);
  for (std::size_t k = 0; k < cf.alpha.size(); ++k) {
    int ak = sgn(dot(cf.alpha[k], kappa));
    if (ak == 0) throw std::domain_error("phi_m_s_kappa: kappa on a wall");
    int w = sgn(dot(cf.varpi[k], h));
    if (ak > 0) {
      if (w > 0) return 0;
    } else {
      if (w <= 0) return 0;
    }
  }
  return 1;
}

int ConeEvaluator::a_s_kappa(Subset m, int s, const Vec& kappa) const {
  auto cf = fd_->chamber_forms(m, s);
  int count = 0;
  for (const auto& a : cf.alpha) {
    int sg = sgn(dot(a, kappa));
    if (sg == 0) throw std::domain_error("a_s_kappa: kappa on a wall");
    if (sg < 0) ++count;
  }
  return count;
}

int ConeEvaluator::gamma_m_kappa(Subset m, const OrthogonalFamily& fam, const Vec& kappa,
                                 const Vec& h) const {
  int total = 0;
  for (int s : fd_->weyl().weyl_set_chambers(m)) {
    Vec arg = sub(h, fam.x[s]);
    int term = phi_m_s_kappa(m, s, kappa, arg);
    if (term == 0) continue;
    total += (a_s_kappa(m, s, kappa) % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace rootcones
