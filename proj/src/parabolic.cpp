#include "parabolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootcones {

std::vector<Subset> subsets_between(Subset low, Subset high) {
  if (!subset_contains(high, low)) return {};
  Subset extra = high & ~low;
  std::vector<Subset> out;
  Subset sub = 0;
  while (true) {
    out.push_back(low | sub);
    if (sub == extra) break;
    sub = (sub - extra) & extra;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParabolicTables::ParabolicTables(const RootSystem& rs) : rs_(&rs) {
  std::vector<Vec> simples(rs.roots().begin(), rs.roots().begin() + rs.rank());
  Mat span = projector_onto_span(simples, rs.dim());
  ag_proj_ = zero_mat(rs.dim(), rs.dim());
  for (std::size_t i = 0; i < rs.dim(); ++i) {
    for (std::size_t j = 0; j < rs.dim(); ++j) ag_proj_[i][j] = -span[i][j];
    ag_proj_[i][i] += 1;
  }
}

std::vector<Subset> ParabolicTables::all_subsets() const {
  std::vector<Subset> out;
  for (Subset s = 0; s <= full(); ++s) out.push_back(s);
  return out;
}

const Mat& ParabolicTables::projector(Subset p) const {
  auto it = proj_cache_.find(p);
  if (it != proj_cache_.end()) return it->second;
  std::vector<Vec> gens;
  for (int i = 0; i < rs_->rank(); ++i)
    if (p & (1u << i)) gens.push_back(rs_->simple_root(i));
  Mat span = projector_onto_span(gens, rs_->dim());
  Mat proj = zero_mat(rs_->dim(), rs_->dim());
  for (std::size_t i = 0; i < rs_->dim(); ++i) {
    for (std::size_t j = 0; j < rs_->dim(); ++j) proj[i][j] = -span[i][j];
    proj[i][i] += 1;
  }
  return proj_cache_.emplace(p, std::move(proj)).first->second;
}

Vec ParabolicTables::project_G(Subset p, const Vec& v) const {
  Vec a = project(p, v);
  return sub(a, mat_apply(ag_proj_, a));
}

Vec ParabolicTables::project_rel(Subset p, Subset q, const Vec& v) const {
  return sub(project(p, v), project(q, v));
}

Vec ParabolicTables::levi_weight(Subset q, int i) const {
  const RelBasis& rb = rel_basis(0, q);
  for (std::size_t k = 0; k < rb.alphas.size(); ++k)
    if (rb.alphas[k] == i) return rb.delta_hat[k];
  throw std::invalid_argument("levi_weight: index not in subset");
}

const ParabolicTables::RelBasis& ParabolicTables::rel_basis(Subset p, Subset q) const {
  auto key = std::make_pair(p, q);
  auto it = rel_cache_.find(key);
  if (it != rel_cache_.end()) return it->second;
  if (!subset_contains(q, p)) throw std::invalid_argument("rel_basis: P not contained in Q");

  RelBasis rb;
  const RootSystem& rsys = *rs_;
  const Mat& proj_p = projector(p);

  // Levi-Q fundamental weights: dual basis of the simple coroots of Q inside
  // span(Delta^Q).
  std::vector<int> q_ids;
  std::vector<Vec> q_roots, q_coroots;
  for (int i = 0; i < rsys.rank(); ++i)
    if (q & (1u << i)) {
      q_ids.push_back(i);
      q_roots.push_back(rsys.simple_root(i));
      q_coroots.push_back(rsys.simple_coroot(i));
    }
  std::map<int, Vec> levi_weight;
  if (!q_ids.empty()) {
    Mat pairing = zero_mat(q_ids.size(), q_ids.size());
    for (std::size_t a = 0; a < q_ids.size(); ++a)
      for (std::size_t b = 0; b < q_ids.size(); ++b)
        pairing[b][a] = dot(q_roots[a], q_coroots[b]);
    for (std::size_t a = 0; a < q_ids.size(); ++a) {
      Vec e = zero_vec(q_ids.size());
      e[a] = 1;
      Vec c = solve(pairing, e);
      Vec wv = zero_vec(rsys.dim());
      for (std::size_t b = 0; b < q_ids.size(); ++b) wv = add(wv, scale(c[b], q_roots[b]));
      levi_weight[q_ids[a]] = wv;
    }
  }

  for (int i : q_ids) {
    if (p & (1u << i)) continue;
    rb.alphas.push_back(i);
    rb.delta.push_back(mat_apply(proj_p, rsys.simple_root(i)));
    rb.delta_hat.push_back(levi_weight.at(i));
    rb.coroot_proj.push_back(mat_apply(proj_p, rsys.simple_coroot(i)));
  }

  std::size_t n = rb.alphas.size();
  if (n > 0) {
    Mat pairing = zero_mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) pairing[i][k] = dot(rb.delta[i], rb.coroot_proj[k]);
    for (std::size_t j = 0; j < n; ++j) {
      Vec e = zero_vec(n);
      e[j] = 1;
      Vec c = solve(pairing, e);
      Vec v = zero_vec(rsys.dim());
      for (std::size_t k = 0; k < n; ++k) v = add(v, scale(c[k], rb.coroot_proj[k]));
      rb.delta_dual.push_back(v);
    }
  }
  return rel_cache_.emplace(key, std::move(rb)).first->second;
}

std::pair<bool, bool> ParabolicTables::base_angle_check(Subset p, Subset q) const {
  const RelBasis& rb = rel_basis(p, q);
  bool obtuse = true, acute = true;
  for (std::size_t i = 0; i < rb.delta.size(); ++i)
    for (std::size_t j = i + 1; j < rb.delta.size(); ++j) {
      if (sgn(dot(rb.delta[i], rb.delta[j])) > 0) obtuse = false;
      if (sgn(dot(rb.delta_hat[i], rb.delta_hat[j])) < 0) acute = false;
    }
  return {obtuse, acute};
}

namespace positivity {

bool weights_positive(const ParabolicTables& pt, Subset p, Subset q, const Vec& x) {
  const auto& rb = pt.rel_basis(p, q);
  for (const auto& w : rb.delta_hat)
    if (sgn(dot(w, x)) <= 0) return false;
  return true;
}

bool projection_dominates(const ParabolicTables& pt, Subset p, Subset q, Subset r, const Vec& x) {
  const auto& pr = pt.rel_basis(p, r);
  const auto& qr = pt.rel_basis(q, r);
  // bar-alpha in Delta_Q^R is the projection of alpha in Delta_P^R for the
  // simple roots outside Q; match by simple index.
  for (std::size_t k = 0; k < qr.alphas.size(); ++k) {
    int i = qr.alphas[k];
    std::size_t src = 0;
    bool found = false;
    for (std::size_t l = 0; l < pr.alphas.size(); ++l)
      if (pr.alphas[l] == i) {
        src = l;
        found = true;
      }
    if (!found) return false;
    Rat lo = dot(pr.delta[src], x);
    Rat hi = dot(qr.delta[k], x);
    if (!(hi >= lo && sgn(lo) > 0)) return false;
  }
  return true;
}

bool cone_positivity(const ParabolicTables& pt, Subset p, Subset q, const Vec& h) {
  const RootSystem& rs = pt.rs();
  for (int i = 0; i < rs.rank(); ++i) {
    if (!(q & (1u << i)) || (p & (1u << i))) continue;
    if (sgn(dot(rs.simple_root(i), h)) <= 0) return false;
  }
  return true;
}

bool dmin_bound(const ParabolicTables& pt, Subset p, const Vec& x) {
  const RootSystem& rs = pt.rs();
  Rat d = rs.d_min(x);
  const auto& rb = pt.rel_basis(p, pt.full());
  for (std::size_t k = 0; k < rb.alphas.size(); ++k) {
    Rat raw = dot(rs.simple_root(rb.alphas[k]), x);
    Rat proj = dot(rb.delta[k], x);
    if (!(proj >= raw && raw >= d)) return false;
  }
  return true;
}

}  // namespace positivity

}  // namespace rootcones
