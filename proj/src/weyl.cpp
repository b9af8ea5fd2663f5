#include "weyl.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace rootcones {

WeylGroup::WeylGroup(const RootSystem& rs, std::uint64_t bound) : rs_(&rs) {
  n_roots_ = rs.roots().size();
  if (n_roots_ > kMaxRoots) throw std::runtime_error("root set too large");
  int rank = rs.rank();

  std::vector<std::int16_t> id(n_roots_);
  for (std::size_t i = 0; i < n_roots_; ++i) id[i] = static_cast<std::int16_t>(i);

  std::vector<std::vector<std::int16_t>> gens(rank);
  for (int i = 0; i < rank; ++i) {
    gens[i].resize(n_roots_);
    for (std::size_t r = 0; r < n_roots_; ++r)
      gens[i][r] = static_cast<std::int16_t>(rs.reflect_root(i, static_cast<int>(r)));
  }

  perms_.push_back(id);
  words_.push_back({});
  index_[id] = 0;

  // Length-lexicographic BFS: FIFO over elements, generators in ascending
  // order, extending only when the length goes up (w alpha_j > 0).
  for (std::size_t head = 0; head < perms_.size(); ++head) {
    for (int j = 0; j < rank; ++j) {
      if (!rs.is_positive(perms_[head][j])) continue;  // descent: skip
      // w' = w . s_j acts by r -> w(s_j r)
      std::vector<std::int16_t> next(n_roots_);
      for (std::size_t r = 0; r < n_roots_; ++r) next[r] = perms_[head][gens[j][r]];
      if (index_.count(next)) continue;
      if (perms_.size() >= bound)
        throw std::runtime_error("Weyl group order exceeds configured bound");
      index_[next] = static_cast<int>(perms_.size());
      perms_.push_back(std::move(next));
      auto w = words_[head];
      w.push_back(static_cast<std::uint8_t>(j));
      words_.push_back(std::move(w));
    }
  }

  inverses_.resize(perms_.size());
  for (std::size_t w = 0; w < perms_.size(); ++w) {
    std::vector<std::int16_t> inv(n_roots_);
    for (std::size_t r = 0; r < n_roots_; ++r) inv[perms_[w][r]] = static_cast<std::int16_t>(r);
    auto it = index_.find(inv);
    if (it == index_.end()) throw std::logic_error("group not closed under inversion");
    inverses_[w] = it->second;
  }

  simple_idx_.resize(rank);
  for (int i = 0; i < rank; ++i) {
    auto it = index_.find(gens[i]);
    if (it == index_.end()) throw std::logic_error("generator missing");
    simple_idx_[i] = it->second;
  }
}

int WeylGroup::mul(int a, int b) const {
  std::vector<std::int16_t> prod(n_roots_);
  const auto& pa = perms_[a];
  const auto& pb = perms_[b];
  for (std::size_t r = 0; r < n_roots_; ++r) prod[r] = pa[pb[r]];
  auto it = index_.find(prod);
  if (it == index_.end()) throw std::logic_error("group not closed under product");
  return it->second;
}

Vec WeylGroup::act(int w, const Vec& v) const {
  // w = s_{i1} ... s_{ik}; apply right-to-left.
  Vec out = v;
  const auto& ltrs = words_[w];
  for (auto it = ltrs.rbegin(); it != ltrs.rend(); ++it) out = rs_->reflect(*it, out);
  return out;
}

Mat WeylGroup::matrix(int w) const {
  std::size_t d = rs_->dim();
  Mat m = zero_mat(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec e = zero_vec(d);
    e[j] = 1;
    Vec img = act(w, e);
    for (std::size_t i = 0; i < d; ++i) m[i][j] = img[i];
  }
  return m;
}

std::vector<int> WeylGroup::inversion_set(int w) const {
  std::vector<int> out;
  int m = static_cast<int>(rs_->n_positive());
  for (int r = 0; r < m; ++r)
    if (perms_[w][r] >= m) out.push_back(r);
  return out;
}

std::vector<int> WeylGroup::inversion_set_rel(int s, int t) const {
  std::vector<int> out;
  int m = static_cast<int>(rs_->n_positive());
  for (std::size_t r = 0; r < n_roots_; ++r)
    if (perms_[t][r] < m && perms_[s][r] >= m) out.push_back(static_cast<int>(r));
  return out;
}

const RootSet& WeylGroup::levi_roots(Subset p) const {
  auto it = levi_roots_cache_.find(p);
  if (it != levi_roots_cache_.end()) return it->second;
  // Roots whose simple support lies inside p.
  RootSet set;
  for (std::size_t r = 0; r < n_roots_; ++r) {
    const Vec& coeffs = rs_->simple_coords(static_cast<int>(r));
    bool inside = true;
    for (int i = 0; i < rs_->rank(); ++i)
      if (sgn(coeffs[i]) != 0 && !(p & (1u << i))) inside = false;
    if (inside) set.set(r);
  }
  return levi_roots_cache_.emplace(p, set).first->second;
}

bool WeylGroup::in_levi_subgroup(int w, Subset p) const {
  const RootSet& levi = levi_roots(p);
  int m = static_cast<int>(rs_->n_positive());
  for (int r = 0; r < m; ++r)
    if (perms_[w][r] >= m && !levi.test(r)) return false;
  return true;
}

int WeylGroup::min_coset_rep(int w, Subset p) const {
  int cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rs_->rank(); ++i) {
      if (!(p & (1u << i))) continue;
      if (!rs_->is_positive(perms_[cur][i])) {  // cur(alpha_i) < 0: strip
        cur = mul(cur, simple_idx_[i]);
        changed = true;
      }
    }
  }
  return cur;
}

int WeylGroup::min_double_coset_rep(int w, Subset q, Subset p) const {
  int cur = w;
  while (true) {
    int before = cur;
    cur = min_coset_rep(cur, p);
    // left version: strip s_i from the left while cur^{-1}(alpha_i) < 0
    bool changed = true;
    while (changed) {
      changed = false;
      int icur = inv(cur);
      for (int i = 0; i < rs_->rank(); ++i) {
        if (!(q & (1u << i))) continue;
        if (!rs_->is_positive(perms_[icur][i])) {
          cur = mul(simple_idx_[i], cur);
          icur = inv(cur);
          changed = true;
        }
      }
    }
    if (cur == before) break;
  }
  return cur;
}

std::optional<Subset> WeylGroup::image_of_simples(int w, Subset p) const {
  Subset out = 0;
  for (int i = 0; i < rs_->rank(); ++i) {
    if (!(p & (1u << i))) continue;
    int img = perms_[w][i];
    if (img >= rs_->rank()) return std::nullopt;
    out |= (1u << img);
  }
  return out;
}

std::vector<int> WeylGroup::weyl_set(Subset p, Subset q) const {
  std::vector<int> out;
  if (subset_size(p) != subset_size(q)) return out;
  for (std::size_t w = 0; w < perms_.size(); ++w) {
    auto img = image_of_simples(static_cast<int>(w), p);
    if (img && *img == q) out.push_back(static_cast<int>(w));
  }
  return out;
}

std::vector<int> WeylGroup::weyl_set_relative(Subset p, Subset r) const {
  const RootSet& levi_r = levi_roots(r);
  std::vector<int> out;
  for (std::size_t w = 0; w < perms_.size(); ++w) {
    // (ii) of 1.3.7: w^{-1} alpha > 0 for alpha in Delta^R
    int iw = inverses_[w];
    bool ok = true;
    for (int i = 0; ok && i < rs_->rank(); ++i)
      if ((r & (1u << i)) && !rs_->is_positive(perms_[iw][i])) ok = false;
    if (!ok) continue;
    // (i): w(a_P) contains a_R, i.e. w maps the Levi roots of P into those of R
    for (int i = 0; ok && i < rs_->rank(); ++i)
      if ((p & (1u << i)) && !levi_r.test(perms_[w][i])) ok = false;
    if (ok) out.push_back(static_cast<int>(w));
  }
  return out;
}

std::vector<int> WeylGroup::weyl_set_chambers(Subset m) const {
  std::vector<int> out;
  for (std::size_t w = 0; w < perms_.size(); ++w) {
    auto img = image_of_simples(static_cast<int>(w), m);
    if (img) out.push_back(static_cast<int>(w));
  }
  return out;
}

std::vector<int> WeylGroup::weyl_group_of_levi(Subset m) const {
  std::vector<int> out;
  for (std::size_t w = 0; w < perms_.size(); ++w) {
    auto img = image_of_simples(static_cast<int>(w), m);
    if (img && *img == m) out.push_back(static_cast<int>(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// FacetData

FacetData::FacetData(const WeylGroup& w, const ParabolicTables& pt)
    : w_(&w), pt_(&pt), dim_(w.rs().dim()) {}

SemiStdParabolic FacetData::make_semi_std(int w, Subset r) const {
  // Canonical representative: minimal length in W^R w, i.e. w with
  // w^{-1}(alpha) > 0 for alpha in Delta^R.
  const WeylGroup& wg = *w_;
  int cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    int icur = wg.inv(cur);
    for (int i = 0; i < rs().rank(); ++i) {
      if (!(r & (1u << i))) continue;
      if (!rs().is_positive(wg.act_root(icur, i))) {
        cur = wg.mul(wg.simple(i), cur);
        icur = wg.inv(cur);
        changed = true;
      }
    }
  }
  SemiStdParabolic q;
  q.s = cur;
  q.r = r;
  // closed(Q) = s^{-1}(positives  cup  Levi roots of R)
  const RootSet& levi = wg.levi_roots(r);
  int is = wg.inv(cur);
  std::size_t n = rs().roots().size();
  for (std::size_t idx = 0; idx < n; ++idx) {
    bool in_std = rs().is_positive(static_cast<int>(idx)) || levi.test(idx);
    if (in_std) q.closed.set(wg.act_root(is, static_cast<int>(idx)));
  }
  return q;
}

SemiStdParabolic FacetData::apply(int w, const SemiStdParabolic& q) const {
  return make_semi_std(w_->mul(q.s, w_->inv(w)), q.r);
}

bool FacetData::contains(const SemiStdParabolic& big, const SemiStdParabolic& small) {
  return (small.closed & big.closed) == small.closed;
}

int FacetData::a_rel(const SemiStdParabolic& q) const {
  return rs().rank() - subset_size(q.r);
}

std::vector<SemiStdParabolic> FacetData::p_of(Subset m) const {
  std::vector<SemiStdParabolic> out;
  for (int s : w_->weyl_set_chambers(m)) {
    Subset r = *w_->image_of_simples(s, m);
    out.push_back(make_semi_std(w_->inv(s), r));
  }
  return out;
}

const std::vector<SemiStdParabolic>& FacetData::f_of(Subset m) const {
  auto it = f_cache_.find(m);
  if (it != f_cache_.end()) return it->second;
  std::vector<SemiStdParabolic> out;
  for (const auto& interval : facet_decomposition(m))
    for (const auto& q : interval.members) out.push_back(q);
  return f_cache_.emplace(m, std::move(out)).first->second;
}

std::vector<SemiStdParabolic> FacetData::f_of_below(Subset m, const SemiStdParabolic& top) const {
  std::vector<SemiStdParabolic> out;
  for (const auto& q : f_of(m))
    if (contains(top, q)) out.push_back(q);
  return out;
}

std::vector<FacetData::FacetInterval> FacetData::facet_decomposition(Subset m) const {
  std::vector<FacetInterval> out;
  for (int s : w_->weyl_set_chambers(m)) {
    FacetInterval fi;
    fi.s = s;
    Subset r_lo = *w_->image_of_simples(s, m);  // R_s: s(Delta^M)
    Subset r_hi = 0;                            // R^s: {alpha : s^{-1} alpha > 0}
    int is = w_->inv(s);
    for (int i = 0; i < rs().rank(); ++i)
      if (rs().is_positive(w_->act_root(is, i))) r_hi |= (1u << i);
    fi.q_lo = make_semi_std(is, r_lo);
    fi.q_hi = make_semi_std(is, r_hi);
    for (Subset r : subsets_between(r_lo, r_hi)) fi.members.push_back(make_semi_std(is, r));
    out.push_back(fi);
  }
  return out;
}

Vec FacetData::project_onto_aQ(const SemiStdParabolic& q, const Vec& v) const {
  Vec moved = w_->act(q.s, v);
  Vec proj = mat_apply(pt_->projector(q.r), moved);
  return w_->act(w_->inv(q.s), proj);
}

Vec FacetData::project_onto_aQG(const SemiStdParabolic& q, const Vec& v) const {
  Vec p = project_onto_aQ(q, v);
  return sub(p, mat_apply(pt_->ag_projector(), p));
}

FacetData::ChamberForms FacetData::chamber_forms(Subset m, int s) const {
  // s in W(a_M); R_s = s(Delta^M). Delta(M, s) consists of the projections
  // onto a_M of the alpha in s^{-1}(Delta) not vanishing there; the matching
  // weight for alpha = s^{-1}(gamma), gamma simple outside Delta^{R_s}, is
  // s^{-1}(fundamental weight of gamma).
  ChamberForms cf;
  auto img = w_->image_of_simples(s, m);
  if (!img) throw std::invalid_argument("chamber_forms: s not in W(a_M)");
  Subset r_s = *img;
  int is = w_->inv(s);
  const Mat& proj_m = pt_->projector(m);
  for (int g = 0; g < rs().rank(); ++g) {
    if (r_s & (1u << g)) continue;
    Vec alpha = w_->act(is, rs().simple_root(g));
    Vec alpha_bar = mat_apply(proj_m, alpha);
    if (is_zero(alpha_bar)) throw std::logic_error("chamber_forms: unexpected zero projection");
    cf.alpha.push_back(alpha_bar);
    cf.varpi.push_back(w_->act(is, rs().fund_weight(g)));
  }
  return cf;
}

}  // namespace rootcones
