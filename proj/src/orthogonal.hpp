#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyl.hpp"

namespace rootcones {

// Orthogonal family: s -> X_s in a_0, indexed by Weyl-group element index.
// Values are kept reduced modulo a_G (projected to the root span).
struct OrthogonalFamily {
  std::vector<Vec> x;

  const Vec& at(int w) const { return x[w]; }
};

struct EdgeCoefficient {
  int s, t;      // s = s_alpha t, l(s) = l(t) + 1
  int gamma;     // root index, gamma = t^{-1}(alpha)
  Rat b;         // X_t - X_s = b gamma^vee
};

struct FamilyCheck {
  bool orthogonal = false;
  bool regular = false;
  std::vector<EdgeCoefficient> edges;
  std::string violation;  // empty when orthogonal
};

// s -> s^{-1}T + T0 - s^{-1}T0, values projected to the root span.
OrthogonalFamily family_from_T(const WeylGroup& w, const Vec& T, const Vec& T0);

// Constant family X_s = X0.
OrthogonalFamily constant_family(const WeylGroup& w, const Vec& x0);

// Pointwise sum.
OrthogonalFamily family_sum(const OrthogonalFamily& a, const OrthogonalFamily& b);

// Checks the wall-coroot condition on every adjacent pair, extracts the edge
// coefficients, and reproduces the Lemma-1.5.1 path decomposition for the
// requested pairs.
FamilyCheck validate_orthogonal_family(const WeylGroup& w, const OrthogonalFamily& fam);

// Decomposition X_t - X_s = sum_{beta in R(s,t)} b_beta beta^vee along a
// reduced word of st^{-1}; returns (root index, coefficient) pairs.
std::vector<std::pair<int, Rat>> path_decomposition(const WeylGroup& w,
                                                    const OrthogonalFamily& fam,
                                                    int s, int t);

// Projection of the family value onto a_Q for a semi-standard Q >= some
// minimal parabolic of the family; uses the canonical representative chamber.
Vec family_value_at(const FacetData& fd, const OrthogonalFamily& fam,
                    const SemiStdParabolic& q);

// For s in W(a_M): the value X_s projected onto a_M.
Vec family_value_at_chamber(const FacetData& fd, Subset m, const OrthogonalFamily& fam, int s);

}  // namespace rootcones
