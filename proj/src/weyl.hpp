#pragma once

#include <bitset>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parabolic.hpp"
#include "root_system.hpp"

namespace rootcones {

constexpr std::size_t kMaxRoots = 256;
using RootSet = std::bitset<kMaxRoots>;

// The Weyl group of a root system, generated breadth-first by length.
// Elements are stored as permutations of the full root list; element 0 is the
// identity and every element carries one reduced word.
class WeylGroup {
 public:
  // Throws std::runtime_error when the group order would exceed `bound`.
  explicit WeylGroup(const RootSystem& rs, std::uint64_t bound = 1000000);

  const RootSystem& rs() const { return *rs_; }
  std::size_t size() const { return perms_.size(); }

  int identity() const { return 0; }
  int simple(int i) const { return simple_idx_[i]; }

  const std::vector<std::uint8_t>& word(int w) const { return words_[w]; }
  std::size_t length(int w) const { return words_[w].size(); }

  int mul(int a, int b) const;           // a . b
  int inv(int a) const { return inverses_[a]; }
  int act_root(int w, int root_idx) const { return perms_[w][root_idx]; }

  // Image of an ambient vector under w.
  Vec act(int w, const Vec& v) const;
  // Exact matrix of w on the ambient space.
  Mat matrix(int w) const;

  // Inversion set R(w) = {beta > 0 : w beta < 0}, as root indices.
  std::vector<int> inversion_set(int w) const;
  // R(s,t) = {beta in R : t beta > 0, s beta < 0} over all roots.
  std::vector<int> inversion_set_rel(int s, int t) const;

  // Membership in W^P (P a subset of simple indices): all inversions lie in
  // the Levi span (Lemma-1.3.2 criterion).
  bool in_levi_subgroup(int w, Subset p) const;

  // Minimal-length representative of w W^P.
  int min_coset_rep(int w, Subset p) const;
  // Minimal-length representative of W^Q w W^P.
  int min_double_coset_rep(int w, Subset q, Subset p) const;

  // W(a_P, a_Q): minimal representatives with s(Delta^P) = Delta^Q.
  std::vector<int> weyl_set(Subset p, Subset q) const;
  // W(a_P, R) of Lemma 1.3.7: s(a_P) contains a_R and s^{-1} positive on
  // Delta^R; one representative per double coset.
  std::vector<int> weyl_set_relative(Subset p, Subset r) const;
  // W(a_M) = union over standard R of W(a_P, a_R); deterministic order.
  std::vector<int> weyl_set_chambers(Subset m) const;
  // W(M): the subgroup of minimal representatives normalizing M.
  std::vector<int> weyl_group_of_levi(Subset m) const;

  // Roots lying in the Levi span of subset p.
  const RootSet& levi_roots(Subset p) const;

  // Indices of simple roots (as root indices 0..rank-1) mapped by w onto
  // simple roots; nullopt if some image is not simple.
  std::optional<Subset> image_of_simples(int w, Subset p) const;

 private:
  const RootSystem* rs_;
  std::size_t n_roots_;
  std::vector<std::vector<std::int16_t>> perms_;
  std::vector<std::vector<std::uint8_t>> words_;
  std::vector<int> inverses_;
  std::vector<int> simple_idx_;
  std::map<std::vector<std::int16_t>, int> index_;
  mutable std::map<Subset, RootSet> levi_roots_cache_;
};

// A semi-standard parabolic Q = s^{-1}(R) with R standard and s the
// minimal-length representative of W^R s. Ordering/equality go through the
// closed root set, so the representation is canonical.
struct SemiStdParabolic {
  int s = 0;          // Weyl index, minimal in W^R s
  Subset r = 0;       // standard parabolic
  RootSet closed;     // roots nonnegative on the facet of Q

  bool operator==(const SemiStdParabolic& o) const { return closed == o.closed; }
};

// Machinery for semi-standard parabolics and facets (sections 1.4 of the
// combinatorial development).
class FacetData {
 public:
  FacetData(const WeylGroup& w, const ParabolicTables& pt);

  const WeylGroup& weyl() const { return *w_; }
  const RootSystem& rs() const { return w_->rs(); }
  const ParabolicTables& tables() const { return *pt_; }

  SemiStdParabolic make_semi_std(int w, Subset r) const;
  SemiStdParabolic standard(Subset r) const { return make_semi_std(w_->identity(), r); }
  // w(Q) as a parabolic.
  SemiStdParabolic apply(int w, const SemiStdParabolic& q) const;

  static bool contains(const SemiStdParabolic& big, const SemiStdParabolic& small);

  int a_rel(const SemiStdParabolic& q) const;  // dim a_Q^G

  // P(M): parabolics with Levi exactly M, indexed by W(a_M) (Lemma 1.4.1).
  std::vector<SemiStdParabolic> p_of(Subset m) const;
  // F(M): all semi-standard parabolics containing M.
  const std::vector<SemiStdParabolic>& f_of(Subset m) const;
  std::vector<SemiStdParabolic> f_of_below(Subset m, const SemiStdParabolic& top) const;

  // Q_s, Q^s and the interval F_s(M) of Lemma 1.4.3.
  struct FacetInterval {
    int s;
    SemiStdParabolic q_lo;   // Q_s
    SemiStdParabolic q_hi;   // Q^s
    std::vector<SemiStdParabolic> members;
  };
  std::vector<FacetInterval> facet_decomposition(Subset m) const;

  // Projection of an ambient vector onto a_Q (resp. a_Q^G).
  Vec project_onto_aQ(const SemiStdParabolic& q, const Vec& v) const;
  Vec project_onto_aQG(const SemiStdParabolic& q, const Vec& v) const;

  // Delta(M, s) with matched weights: for s in W(a_M), pairs (alpha_bar,
  // varpi) indexed by the simple roots outside Delta^{R_s}, pulled back
  // through s (used by phi_{M,s}^kappa).
  struct ChamberForms {
    std::vector<Vec> alpha;   // Delta(M, s), as vectors in a_M
    std::vector<Vec> varpi;   // matching weights
  };
  ChamberForms chamber_forms(Subset m, int s) const;

 private:
  const WeylGroup* w_;
  const ParabolicTables* pt_;
  std::size_t dim_;
  mutable std::map<Subset, std::vector<SemiStdParabolic>> f_cache_;
};

}  // namespace rootcones
