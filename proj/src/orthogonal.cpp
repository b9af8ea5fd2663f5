#include "orthogonal.hpp"

#include <sstream>
#include <stdexcept>

namespace rootcones {

OrthogonalFamily family_from_T(const WeylGroup& w, const Vec& T, const Vec& T0) {
  const RootSystem& rs = w.rs();
  Vec t = rs.project_to_root_span(T);
  Vec t0 = rs.project_to_root_span(T0);
  OrthogonalFamily fam;
  fam.x.resize(w.size());
  for (std::size_t s = 0; s < w.size(); ++s) {
    int is = w.inv(static_cast<int>(s));
    fam.x[s] = add(w.act(is, sub(t, t0)), t0);
  }
  return fam;
}

OrthogonalFamily constant_family(const WeylGroup& w, const Vec& x0) {
  OrthogonalFamily fam;
  fam.x.assign(w.size(), w.rs().project_to_root_span(x0));
  return fam;
}

OrthogonalFamily family_sum(const OrthogonalFamily& a, const OrthogonalFamily& b) {
  if (a.x.size() != b.x.size()) throw std::invalid_argument("family_sum: size mismatch");
  OrthogonalFamily out;
  out.x.resize(a.x.size());
  for (std::size_t i = 0; i < a.x.size(); ++i) out.x[i] = add(a.x[i], b.x[i]);
  return out;
}

namespace {

// X_t - X_s = b gamma^vee ; extracts b or reports failure.
std::optional<Rat> proportionality(const RootSystem& rs, const Vec& diff, int gamma) {
  const Vec& cv = rs.coroot(gamma);
  // find a coordinate of cv that is nonzero
  std::size_t k = 0;
  while (k < cv.size() && sgn(cv[k]) == 0) ++k;
  if (k == cv.size()) return std::nullopt;
  Rat b = diff[k] / cv[k];
  if (!(scale(b, cv) == diff)) return std::nullopt;
  return b;
}

}  // namespace

FamilyCheck validate_orthogonal_family(const WeylGroup& w, const OrthogonalFamily& fam) {
  FamilyCheck out;
  if (fam.x.size() != w.size()) {
    out.violation = "family not defined on all of W";
    return out;
  }
  const RootSystem& rs = w.rs();
  out.orthogonal = true;
  out.regular = true;
  for (std::size_t s = 0; s < w.size(); ++s) {
    int is = w.inv(static_cast<int>(s));
    for (int a = 0; a < rs.rank(); ++a) {
      // left descent: s = s_alpha t with l(s) = l(t) + 1  <=>  s^{-1} alpha < 0
      if (rs.is_positive(w.act_root(is, a))) continue;
      int t = w.mul(w.simple(a), static_cast<int>(s));
      int gamma = w.act_root(w.inv(t), a);
      Vec diff = sub(fam.x[t], fam.x[s]);
      auto b = proportionality(rs, diff, gamma);
      if (!b) {
        out.orthogonal = false;
        out.regular = false;
        std::ostringstream os;
        os << "edge (s=" << s << ", t=" << t << "): X_t - X_s not proportional to gamma^vee";
        out.violation = os.str();
        return out;
      }
      if (sgn(*b) <= 0) out.regular = false;
      out.edges.push_back({static_cast<int>(s), t, gamma, *b});
    }
  }
  return out;
}

std::vector<std::pair<int, Rat>> path_decomposition(const WeylGroup& w,
                                                    const OrthogonalFamily& fam,
                                                    int s, int t) {
  const RootSystem& rs = w.rs();
  int v = w.mul(s, w.inv(t));
  const auto& letters = w.word(v);  // v = s_{j1} ... s_{jk}
  std::vector<std::pair<int, Rat>> out;
  // walk t_i = s_{j_{k-i+1}} ... s_{jk} t ; beta_i = t_{i-1}^{-1}(alpha_i)
  int cur = t;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    int a = *it;
    int beta = w.act_root(w.inv(cur), a);
    int next = w.mul(w.simple(a), cur);
    Vec diff = sub(fam.x[cur], fam.x[next]);
    auto b = proportionality(rs, diff, beta);
    if (!b) throw std::logic_error("path_decomposition: family not orthogonal");
    out.emplace_back(beta, *b);
    cur = next;
  }
  if (cur != s) throw std::logic_error("path_decomposition: walk did not reach s");
  return out;
}

Vec family_value_at(const FacetData& fd, const OrthogonalFamily& fam,
                    const SemiStdParabolic& q) {
  return fd.project_onto_aQ(q, fam.x[q.s]);
}

Vec family_value_at_chamber(const FacetData& fd, Subset m, const OrthogonalFamily& fam, int s) {
  return fd.tables().project(m, fam.x[s]);
}

}  // namespace rootcones
