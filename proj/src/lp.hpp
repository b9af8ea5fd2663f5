#pragma once

#include <optional>
#include <vector>

#include "linalg.hpp"

namespace rootcones {

// Exact rational linear programming, phase-1 only (feasibility), Bland's rule.
// Problems are tiny (dims <= 8, a few hundred columns), so a dense tableau is
// fine.

// Feasibility of { x : A x = b, x_i >= 0 for i < n_nonneg, x_i free beyond }.
// Returns a feasible point when one exists.
std::optional<Vec> lp_feasible(const Mat& a, const Vec& b, std::size_t n_nonneg);

// Maximize c.x over the same feasible set.
struct LpMax {
  enum class Status { Infeasible, Unbounded, Optimal } status;
  Rat value;
  Vec point;
};
LpMax lp_maximize(const Mat& a, const Vec& b, std::size_t n_nonneg, const Vec& c);

// Is the target point in the convex hull of the given points (all same dim)?
bool in_convex_hull(const std::vector<Vec>& points, const Vec& target);

// Strict interior of the hull: target is interior iff the polar cone
// { phi : <phi, p - target> <= 0 for all points p } is {0}.
bool in_hull_interior(const std::vector<Vec>& points, const Vec& target);

// H-cone { x : ge x >= 0 (rowwise), eq x = 0 }. Decides whether the cone is
// {0}; if not, *witness (when non-null) receives a nonzero member.
struct HCone {
  Mat ge;
  Mat eq;
  std::size_t dim = 0;
};
bool cone_is_trivial(const HCone& cone, Vec* witness = nullptr);

// V-cone spanned by nonnegative combinations of `generators`; decides whether
// it meets { x : ker_rows x = 0 } only at the origin.
bool vcone_meets_kernel_trivially(const std::vector<Vec>& generators, const Mat& ker_rows,
                                  Vec* witness = nullptr);

// Polytope { x : A x <= b }. Enumerates vertices via basic solutions; callers
// must first establish boundedness (trivial recession cone).
bool polytope_is_bounded(const Mat& a, std::size_t dim);
std::vector<Vec> polytope_vertices(const Mat& a, const Vec& b, std::size_t dim);

}  // namespace rootcones
