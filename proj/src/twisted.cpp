#include "twisted.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rootcones {

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

DiagramAutomorphism make_automorphism(const RootSystem& rs, const std::vector<int>& perm0) {
  int rank = rs.rank();
  if (static_cast<int>(perm0.size()) != rank)
    throw std::invalid_argument("automorphism: permutation size mismatch");
  std::vector<bool> seen(rank, false);
  for (int v : perm0) {
    if (v < 0 || v >= rank || seen[v])
      throw std::invalid_argument("automorphism: not a permutation");
    seen[v] = true;
  }
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (rs.cartan(perm0[i], perm0[j]) != rs.cartan(i, j))
        throw std::invalid_argument("automorphism: permutation does not preserve the Cartan matrix");

  DiagramAutomorphism da;
  da.perm = perm0;

  // order of the permutation
  da.order = 1;
  {
    std::vector<int> cur(perm0);
    auto is_id = [&]() {
      for (int i = 0; i < rank; ++i)
        if (cur[i] != i) return false;
      return true;
    };
    while (!is_id()) {
      std::vector<int> next(rank);
      for (int i = 0; i < rank; ++i) next[i] = perm0[cur[i]];
      cur = next;
      ++da.order;
      if (da.order > 64) throw std::logic_error("automorphism: runaway order");
    }
  }

  // Ambient matrix: alpha_i -> alpha_{perm(i)} on the root span, identity on
  // a_G. theta = B_img * B^{-1} with B columns the simple roots extended by a
  // basis of a_G (fixed pointwise; a_G is orthogonal to the root span).
  std::size_t d = rs.dim();
  {
    std::vector<Vec> basis, images;
    for (int i = 0; i < rank; ++i) {
      basis.push_back(rs.simple_root(i));
      images.push_back(rs.simple_root(perm0[i]));
    }
    for (std::size_t j = 0; j < d && basis.size() < d; ++j) {
      Vec e = zero_vec(d);
      e[j] = 1;
      Vec comp = sub(e, rs.project_to_root_span(e));  // a_G component
      if (is_zero(comp)) continue;
      Mat test(basis.begin(), basis.end());
      test.push_back(comp);
      if (rank_of(test) == basis.size() + 1) {
        basis.push_back(comp);
        images.push_back(comp);
      }
    }
    if (basis.size() != d) throw std::logic_error("automorphism: could not complete basis");
    Mat b = transpose(Mat(basis.begin(), basis.end()));
    Mat img = transpose(Mat(images.begin(), images.end()));
    da.matrix = mat_mul(img, inverse(b));
  }

  da.root_perm.resize(rs.roots().size());
  for (std::size_t r = 0; r < rs.roots().size(); ++r) {
    Vec v = mat_apply(da.matrix, rs.root(static_cast<int>(r)));
    int idx = rs.root_index(v);
    if (idx < 0) throw std::logic_error("automorphism: image of a root is not a root");
    da.root_perm[r] = idx;
  }
  return da;
}

DiagramAutomorphism identity_automorphism(const RootSystem& rs) {
  std::vector<int> p(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) p[i] = i;
  return make_automorphism(rs, p);
}

DiagramAutomorphism parse_twist(const RootSystem& rs, const std::string& spec) {
  int rank = rs.rank();
  if (spec == "id" || spec.empty()) return identity_automorphism(rs);
  if (spec == "flip") {
    std::vector<int> p(rank);
    if (rs.type() == 'A') {
      for (int i = 0; i < rank; ++i) p[i] = rank - 1 - i;
    } else if (rs.type() == 'D') {
      for (int i = 0; i < rank; ++i) p[i] = i;
      std::swap(p[rank - 2], p[rank - 1]);
    } else {
      throw std::invalid_argument("twist 'flip' undefined for type " + rs.label());
    }
    return make_automorphism(rs, p);
  }
  if (spec == "swap") {
    if (rs.type() != 'D' || rank != 4)
      throw std::invalid_argument("twist 'swap' is the D4 outer swap; got " + rs.label());
    std::vector<int> p = {2, 1, 0, 3};
    return make_automorphism(rs, p);
  }
  if (spec.rfind("perm=", 0) == 0) {
    std::vector<int> p;
    std::stringstream ss(spec.substr(5));
    std::string tok;
    while (std::getline(ss, tok, ',')) p.push_back(std::stoi(tok) - 1);
    return make_automorphism(rs, p);
  }
  throw std::invalid_argument("unknown twist spec: " + spec);
}

// ---------------------------------------------------------------------------

TwistedData::TwistedData(const FacetData& fd, DiagramAutomorphism theta)
    : fd_(&fd), theta_(std::move(theta)) {
  std::size_t d = rs().dim();
  // Fix projector: average of the powers of theta.
  Mat acc = identity_mat(d);
  Mat pw = identity_mat(d);
  for (int r = 1; r < theta_.order; ++r) {
    pw = mat_mul(theta_.matrix, pw);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) acc[i][j] += pw[i][j];
  }
  Rat inv(1, theta_.order);
  for (auto& row : acc)
    for (auto& x : row) x *= inv;
  fix_proj_ = acc;
}

Subset TwistedData::apply_to_subset(Subset p) const {
  Subset out = 0;
  for (int i = 0; i < rs().rank(); ++i)
    if (p & (1u << i)) out |= (1u << theta_.perm[i]);
  return out;
}

bool TwistedData::is_stable(Subset p) const { return apply_to_subset(p) == p; }

std::vector<Subset> TwistedData::stable_subsets() const {
  std::vector<Subset> out;
  for (Subset p = 0; p <= fd_->tables().full(); ++p)
    if (is_stable(p)) out.push_back(p);
  return out;
}

Subset TwistedData::orbit_closure(Subset q) const {
  Subset out = q;
  for (int r = 1; r < theta_.order; ++r) out |= apply_to_subset(out);
  return out;
}

Subset TwistedData::orbit_interior(Subset q) const {
  // largest stable subset of q: keep i iff the whole orbit of i lies in q
  Subset out = 0;
  for (int i = 0; i < rs().rank(); ++i) {
    if (!(q & (1u << i))) continue;
    bool whole = true;
    int j = i;
    for (int r = 0; r < theta_.order; ++r) {
      if (!(q & (1u << j))) whole = false;
      j = theta_.perm[j];
    }
    if (whole) out |= (1u << i);
  }
  return out;
}

Subset TwistedData::q_zero(Subset q) const {
  // theta^{-1}(Q) = preimages
  Subset pre = 0;
  for (int i = 0; i < rs().rank(); ++i)
    if (q & (1u << theta_.perm[i])) pre |= (1u << i);
  return q & pre;
}

int TwistedData::twist_weyl(int s) const {
  const WeylGroup& w = weyl();
  int out = w.identity();
  for (std::uint8_t a : w.word(s)) out = w.mul(out, w.simple(theta_.perm[a]));
  return out;
}

Mat TwistedData::tilde_projector(Subset p) const {
  if (!is_stable(p)) throw std::invalid_argument("tilde_projector: subset not stable");
  return mat_mul(fix_proj_, fd_->tables().projector(p));
}

Mat TwistedData::tilde_projector_G(Subset p) const {
  Mat m = tilde_projector(p);
  Mat ag = mat_mul(fix_proj_, fd_->tables().ag_projector());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] -= ag[i][j];
  return m;
}

int TwistedData::a_tilde(Subset p) const {
  if (!is_stable(p)) throw std::invalid_argument("a_tilde: subset not stable");
  // number of theta-orbits among the simple indices outside p
  std::vector<bool> seen(rs().rank(), false);
  int orbits = 0;
  for (int i = 0; i < rs().rank(); ++i) {
    if ((p & (1u << i)) || seen[i]) continue;
    ++orbits;
    int j = i;
    for (int r = 0; r < theta_.order; ++r) {
      seen[j] = true;
      j = theta_.perm[j];
    }
  }
  return orbits;
}

const TwistedData::TwistedRelBasis& TwistedData::trel(Subset p, Subset q) const {
  auto key = std::make_pair(p, q);
  auto it = trel_cache_.find(key);
  if (it != trel_cache_.end()) return it->second;
  if (!is_stable(p) || !is_stable(q))
    throw std::invalid_argument("trel: arguments must be stable");
  if (!subset_contains(q, p)) throw std::invalid_argument("trel: P not contained in Q");

  TwistedRelBasis tb;
  const auto& rb = fd_->tables().rel_basis(p, q);
  // orbits of the simple indices in q \ p
  std::set<int> remaining(rb.alphas.begin(), rb.alphas.end());
  while (!remaining.empty()) {
    int i = *remaining.begin();
    std::vector<int> orbit;
    int j = i;
    for (int r = 0; r < theta_.order; ++r) {
      if (remaining.count(j)) {
        orbit.push_back(j);
        remaining.erase(j);
      }
      j = theta_.perm[j];
    }
    std::sort(orbit.begin(), orbit.end());
    tb.orbits.push_back(orbit);
  }

  auto position = [&](int simple) {
    for (std::size_t k = 0; k < rb.alphas.size(); ++k)
      if (rb.alphas[k] == simple) return k;
    throw std::logic_error("trel: lost simple index");
  };

  std::vector<Vec> coroot_reps;
  for (const auto& orbit : tb.orbits) {
    std::size_t k = position(orbit.front());
    tb.delta.push_back(project_fixed(rb.delta[k]));
    tb.delta_hat.push_back(project_fixed(rb.delta_hat[k]));
    coroot_reps.push_back(project_fixed(rb.coroot_proj[k]));
  }

  std::size_t n = tb.orbits.size();
  if (n > 0) {
    // duals solved inside span(coroot_reps) = a~_P^Q
    Mat pair_delta = zero_mat(n, n), pair_hat = zero_mat(n, n);
    for (std::size_t i2 = 0; i2 < n; ++i2)
      for (std::size_t k2 = 0; k2 < n; ++k2) {
        pair_delta[i2][k2] = dot(tb.delta[i2], coroot_reps[k2]);
        pair_hat[i2][k2] = dot(tb.delta_hat[i2], coroot_reps[k2]);
      }
    for (std::size_t j = 0; j < n; ++j) {
      Vec e = zero_vec(n);
      e[j] = 1;
      Vec c1 = solve(pair_delta, e);
      Vec c2 = solve(pair_hat, e);
      Vec v1 = zero_vec(rs().dim()), v2 = zero_vec(rs().dim());
      for (std::size_t k2 = 0; k2 < n; ++k2) {
        v1 = add(v1, scale(c1[k2], coroot_reps[k2]));
        v2 = add(v2, scale(c2[k2], coroot_reps[k2]));
      }
      tb.delta_dual.push_back(v1);
      tb.hat_dual.push_back(v2);
    }
  }
  return trel_cache_.emplace(key, std::move(tb)).first->second;
}

int TwistedData::tau(Subset p, Subset q, const Vec& h) const {
  for (const auto& a : trel(p, q).delta)
    if (sgn(dot(a, h)) <= 0) return 0;
  return 1;
}

int TwistedData::tau_hat(Subset p, Subset q, const Vec& h) const {
  for (const auto& w : trel(p, q).delta_hat)
    if (sgn(dot(w, h)) <= 0) return 0;
  return 1;
}

int TwistedData::phi3(Subset p, Subset q, Subset r, const Vec& h) const {
  const auto& tb = trel(p, r);
  for (std::size_t k = 0; k < tb.orbits.size(); ++k) {
    bool in_q_hat = !(q & (1u << tb.orbits[k].front()));
    int s = sgn(dot(tb.delta_hat[k], h));
    if (in_q_hat) {
      if (s <= 0) return 0;
    } else {
      if (s > 0) return 0;
    }
  }
  return 1;
}

int TwistedData::gamma_pr(Subset p, Subset r, const Vec& h, const Vec& x) const {
  int total = 0;
  int a_r = a_tilde(r);
  for (Subset q : subsets_between(p, r)) {
    if (!is_stable(q)) continue;
    int term = tau(p, q, h) * tau_hat(q, r, sub(h, x));
    if (term == 0) continue;
    int a_q = a_tilde(q);
    total += ((a_q - a_r) % 2 == 0) ? term : -term;
  }
  return total;
}

std::vector<int> TwistedData::twisted_chambers(Subset m) const {
  if (!is_stable(m)) throw std::invalid_argument("twisted_chambers: M not stable");
  std::vector<int> out;
  for (int s : weyl().weyl_set_chambers(m))
    if (twist_weyl(s) == s) out.push_back(s);
  return out;
}

std::vector<int> TwistedData::twisted_weyl_set(Subset m, Subset m2) const {
  std::vector<int> out;
  for (int s : weyl().weyl_set(m, m2))
    if (twist_weyl(s) == s) out.push_back(s);
  return out;
}

std::vector<SemiStdParabolic> TwistedData::p_of(Subset m) const {
  std::vector<SemiStdParabolic> out;
  for (int s : twisted_chambers(m)) {
    Subset r = *weyl().image_of_simples(s, m);
    out.push_back(fd_->make_semi_std(weyl().inv(s), r));
  }
  return out;
}

std::vector<SemiStdParabolic> TwistedData::f_of(Subset m) const {
  std::vector<SemiStdParabolic> out;
  for (int s : twisted_chambers(m)) {
    Subset r_lo = *weyl().image_of_simples(s, m);
    Subset r_hi = 0;
    int is = weyl().inv(s);
    for (int i = 0; i < rs().rank(); ++i)
      if (rs().is_positive(weyl().act_root(is, i))) r_hi |= (1u << i);
    for (Subset r : subsets_between(r_lo, r_hi)) {
      if (!is_stable(r)) continue;
      out.push_back(fd_->make_semi_std(is, r));
    }
  }
  return out;
}

std::vector<SemiStdParabolic> TwistedData::f_of_below(Subset m,
                                                      const SemiStdParabolic& top) const {
  std::vector<SemiStdParabolic> out;
  for (const auto& q : f_of(m))
    if (FacetData::contains(top, q)) out.push_back(q);
  return out;
}

std::pair<Subset, Subset> TwistedData::to_std_pair(const SemiStdParabolic& p,
                                                   const SemiStdParabolic& q,
                                                   int* s_out) const {
  if (!FacetData::contains(q, p)) throw std::invalid_argument("twisted to_std_pair: P not in Q");
  if (twist_weyl(p.s) != p.s)
    throw std::invalid_argument("twisted to_std_pair: representative not theta-fixed");
  SemiStdParabolic moved = fd_->apply(p.s, q);
  if (moved.s != weyl().identity())
    throw std::logic_error("twisted to_std_pair: image of Q not standard");
  if (s_out) *s_out = p.s;
  return {p.r, moved.r};
}

int TwistedData::tau(const SemiStdParabolic& p, const SemiStdParabolic& q, const Vec& h) const {
  int s;
  auto [ps, qs] = to_std_pair(p, q, &s);
  return tau(ps, qs, weyl().act(s, h));
}

int TwistedData::tau_hat(const SemiStdParabolic& p, const SemiStdParabolic& q,
                         const Vec& h) const {
  int s;
  auto [ps, qs] = to_std_pair(p, q, &s);
  return tau_hat(ps, qs, weyl().act(s, h));
}

int TwistedData::gamma_pr(const SemiStdParabolic& p, const SemiStdParabolic& r, const Vec& h,
                          const Vec& x) const {
  int s;
  auto [ps, rs2] = to_std_pair(p, r, &s);
  return gamma_pr(ps, rs2, weyl().act(s, h), weyl().act(s, x));
}

Vec TwistedData::family_value_tilde(const SemiStdParabolic& q, const OrthogonalFamily& fam) const {
  // X_{P~}: projection of X_P onto a~_P; transport to the standard position.
  Vec xq = family_value_at(*fd_, fam, q);
  // project onto Fix (a_Q is already handled by family_value_at; a~ = Fix cap a_Q;
  // fix_proj_ preserves a_Q because Q is stable)
  return project_fixed(xq);
}

int TwistedData::gamma_m(Subset m, const SemiStdParabolic& top, const OrthogonalFamily& fam,
                         const Vec& h) const {
  int total = 0;
  int a_top = a_tilde(top.r);
  for (const auto& p : f_of_below(m, top)) {
    Vec xp = family_value_at(*fd_, fam, p);
    int term = tau_hat(p, top, sub(h, xp));
    if (term == 0) continue;
    int a_p = a_tilde(p.r);
    total += ((a_p - a_top) % 2 == 0) ? term : -term;
  }
  return total;
}

int TwistedData::gamma_m_full(Subset m, const OrthogonalFamily& fam, const Vec& h) const {
  return gamma_m(m, fd_->standard(fd_->tables().full()), fam, h);
}

int TwistedData::sigma_tilde_with(Subset q, Subset r, Subset p_tilde, const Vec& h) const {
  const auto& pt = fd_->tables();
  if (!subset_contains(r, q) || !subset_contains(p_tilde, q) || !subset_contains(r, p_tilde))
    throw std::invalid_argument("sigma_tilde_with: need Q <= P~ <= R");
  if (!is_stable(p_tilde)) throw std::invalid_argument("sigma_tilde_with: P~ not stable");
  const auto& qr = pt.rel_basis(q, r);
  for (const auto& a : qr.delta)
    if (sgn(dot(a, h)) <= 0) return 0;
  const auto& qg = pt.rel_basis(q, pt.full());
  for (std::size_t k = 0; k < qg.alphas.size(); ++k) {
    if (r & (1u << qg.alphas[k])) continue;
    if (sgn(dot(qg.delta[k], h)) > 0) return 0;
  }
  const auto& tg = trel(p_tilde, pt.full());
  for (const auto& w : tg.delta_hat)
    if (sgn(dot(w, h)) <= 0) return 0;
  return 1;
}

int TwistedData::sigma_tilde(Subset q, Subset r, const Vec& h) const {
  Subset qp = orbit_closure(q);
  Subset rm = orbit_interior(r);
  if (!subset_contains(rm, qp)) return 0;
  std::optional<int> value;
  for (Subset p : subsets_between(qp, rm)) {
    if (!is_stable(p)) continue;
    int v = sigma_tilde_with(q, r, p, h);
    if (value && *value != v)
      throw std::logic_error("sigma_tilde: value depends on the choice of P~");
    value = v;
  }
  if (!value) throw std::logic_error("sigma_tilde: no admissible P~");
  return *value;
}

long TwistedData::eta_tilde(Subset q, Subset r) const {
  if (!subset_contains(r, q)) throw std::invalid_argument("eta_tilde: need Q <= R");
  long total = 0;
  for (Subset p : subsets_between(q, r)) {
    if (!is_stable(p)) continue;
    int e = a_tilde(p);  // a_{P~} - a_{G~}
    total += (e % 2 == 0) ? 1 : -1;
  }
  return total;
}

long TwistedData::eta_tilde_t(Subset q, Subset r, int t) const {
  if (!subset_contains(r, q)) throw std::invalid_argument("eta_tilde_t: need Q <= R");
  long total = 0;
  for (Subset p : subsets_between(q, r)) {
    if (!is_stable(p)) continue;
    if (!weyl().in_levi_subgroup(t, p)) continue;
    int e = a_tilde(p);
    total += (e % 2 == 0) ? 1 : -1;
  }
  return total;
}

Mat TwistedData::q_map_matrix(Subset q) const {
  std::size_t d = rs().dim();
  Mat one_minus = identity_mat(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) one_minus[i][j] -= theta_.matrix[i][j];
  const Mat& pq = fd_->tables().projector(q);
  Mat proj = pq;
  const Mat& ag = fd_->tables().ag_projector();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) proj[i][j] -= ag[i][j];
  return mat_mul(proj, one_minus);
}

Vec TwistedData::q_map(Subset q, const Vec& x) const {
  return mat_apply(q_map_matrix(q), x);
}

}  // namespace rootcones
