#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace rootcones {

// Based root system in a fixed rational realization:
//   A_n  : sum-zero hyperplane of Q^{n+1}, roots e_i - e_j
//   B_n  : Q^n, roots ±e_i, ±e_i±e_j
//   C_n  : Q^n, roots ±2e_i, ±e_i±e_j
//   D_n  : Q^n, roots ±e_i±e_j
//   G_2  : sum-zero plane of Q^3 (short roots of squared length 2)
// The invariant form is the standard dot product, so every pairing is
// rational. Only reduced systems are built.
class RootSystem {
 public:
  static RootSystem build(char type, int rank);
  // Parses "A3", "D4", "G2", ...
  static RootSystem build(const std::string& label);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }

  // All roots; the first n_positive_ are the positive ones, and the first
  // rank_ of those are the simple roots in Dynkin order. roots_[i + m] for
  // i < m is -roots_[i] where m = n_positive_.
  const std::vector<Vec>& roots() const { return roots_; }
  std::size_t n_positive() const { return n_positive_; }
  const Vec& root(int idx) const { return roots_[idx]; }
  const Vec& simple_root(int i) const { return roots_[i]; }
  bool is_positive(int idx) const { return idx < static_cast<int>(n_positive_); }
  int negate_root(int idx) const;

  // Index of a root vector, or -1.
  int root_index(const Vec& v) const;

  const Vec& coroot(int idx) const { return coroots_[idx]; }
  const Vec& simple_coroot(int i) const { return coroots_[i]; }
  // Fundamental weight dual to simple coroot i, supported on the root span.
  const Vec& fund_weight(int i) const { return fund_weights_[i]; }

  // <alpha_i, v> for simple root i (as a linear form on the ambient space).
  Rat simple_pair(int i, const Vec& v) const { return dot(roots_[i], v); }

  // Coordinates of root idx in the simple-root basis (integers for the
  // classical types).
  const Vec& simple_coords(int idx) const { return simple_coords_[idx]; }

  // Cartan integers <alpha_i, alpha_j^vee>.
  long cartan(int i, int j) const { return cartan_[i][j]; }

  // Action of the simple reflection s_i on roots, as an index permutation.
  int reflect_root(int i, int root_idx) const { return simple_perm_[i][root_idx]; }
  // s_i applied to an ambient vector.
  Vec reflect(int i, const Vec& v) const;

  // Orthogonal projection onto the span of the roots (a_0^G).
  Vec project_to_root_span(const Vec& v) const;
  bool in_root_span(const Vec& v) const;

  // inf over simple roots of alpha(X)  (d_{P_0} of the text).
  Rat d_min(const Vec& x) const;

  // Pairing of two ambient vectors; checks dimensions.
  Rat pair(const Vec& a, const Vec& b) const;

  // Human-readable description of the realization and normalization.
  std::string realization_note() const;

 private:
  RootSystem() = default;
  void finish_build();

  char type_ = 'A';
  int rank_ = 0;
  std::size_t dim_ = 0;
  std::string label_;
  std::vector<Vec> roots_;
  std::vector<Vec> simple_coords_;
  std::size_t n_positive_ = 0;
  std::vector<Vec> coroots_;
  std::vector<Vec> fund_weights_;
  std::vector<std::vector<long>> cartan_;
  std::vector<std::vector<int>> simple_perm_;
  std::map<Vec, int> root_lookup_;
  Mat span_projector_;
};

}  // namespace rootcones
