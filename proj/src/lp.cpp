#include "lp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rootcones {

namespace {

enum class SimplexStatus { Infeasible, Unbounded, Optimal };

// Two-phase simplex on { y >= 0 : M y = rhs }, maximizing obj.y (obj may be
// empty for pure feasibility). Bland's rule throughout, exact arithmetic.
struct SimplexResult {
  SimplexStatus status;
  Vec point;
  Rat value;
};

SimplexResult simplex_solve(Mat m, Vec rhs, Vec obj) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  if (rows == 0) return {SimplexStatus::Optimal, Vec(cols, Rat(0)), Rat(0)};

  for (std::size_t r = 0; r < rows; ++r)
    if (sgn(rhs[r]) < 0) {
      for (auto& x : m[r]) x = -x;
      rhs[r] = -rhs[r];
    }

  std::size_t total = cols + rows;
  Mat t = zero_mat(rows, total + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < cols; ++j) t[r][j] = m[r][j];
    t[r][cols + r] = 1;
    t[r][total] = rhs[r];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = cols + r;

  auto pivot = [&](Vec& z, std::size_t pr, std::size_t pc) {
    Rat inv = Rat(1) / t[pr][pc];
    for (auto& x : t[pr]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || sgn(t[r][pc]) == 0) continue;
      Rat f = t[r][pc];
      for (std::size_t j = 0; j <= total; ++j) t[r][j] -= f * t[pr][j];
    }
    if (sgn(z[pc]) != 0) {
      Rat f = z[pc];
      for (std::size_t j = 0; j <= total; ++j) z[j] -= f * t[pr][j];
    }
    basis[pr] = pc;
  };

  auto run = [&](Vec& z, std::size_t usable_cols) -> bool {
    // returns false on unboundedness
    while (true) {
      std::size_t pc = total;
      for (std::size_t j = 0; j < usable_cols; ++j)
        if (sgn(z[j]) > 0) {
          pc = j;
          break;
        }
      if (pc == total) return true;
      std::size_t pr = rows;
      Rat best;
      for (std::size_t r = 0; r < rows; ++r) {
        if (sgn(t[r][pc]) <= 0) continue;
        Rat ratio = t[r][total] / t[r][pc];
        if (pr == rows || ratio < best || (ratio == best && basis[r] < basis[pr])) {
          pr = r;
          best = ratio;
        }
      }
      if (pr == rows) return false;
      pivot(z, pr, pc);
    }
  };

  // Phase 1: minimize artificial sum (maximize its negative).
  Vec z1(total + 1, Rat(0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j <= total; ++j) z1[j] += t[r][j];
  run(z1, total);
  if (sgn(z1[total]) != 0) return {SimplexStatus::Infeasible, {}, Rat(0)};

  // Drive artificial variables out of the basis where possible.
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < cols) continue;
    std::size_t pc = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(t[r][j]) != 0) {
        pc = j;
        break;
      }
    if (pc < cols) {
      Vec dummy(total + 1, Rat(0));
      pivot(dummy, r, pc);
    }
  }

  // Phase 2 over structural columns only (artificials pinned at zero by
  // excluding them from the entering rule; rows where they remain basic are
  // degenerate and harmless).
  Vec z2(total + 1, Rat(0));
  for (std::size_t j = 0; j < cols; ++j) z2[j] = obj.empty() ? Rat(0) : obj[j];
  // reduce by current basis
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] >= cols) continue;
    Rat f = z2[basis[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j <= total; ++j) z2[j] -= f * t[r][j];
  }
  if (!obj.empty()) {
    if (!run(z2, cols)) return {SimplexStatus::Unbounded, {}, Rat(0)};
  }

  Vec y(cols, Rat(0));
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < cols) y[basis[r]] = t[r][total];
  Rat val(0);
  if (!obj.empty())
    for (std::size_t j = 0; j < cols; ++j) val += obj[j] * y[j];
  return {SimplexStatus::Optimal, y, val};
}

// Free variables x = u - v; returns the split matrix and a recovery map.
Mat split_free(const Mat& a, std::size_t n_nonneg, std::size_t n_free) {
  std::size_t rows = a.size();
  Mat m = zero_mat(rows, n_nonneg + 2 * n_free);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < n_nonneg; ++j) m[r][j] = a[r][j];
    for (std::size_t j = 0; j < n_free; ++j) {
      m[r][n_nonneg + 2 * j] = a[r][n_nonneg + j];
      m[r][n_nonneg + 2 * j + 1] = -a[r][n_nonneg + j];
    }
  }
  return m;
}

Vec unsplit(const Vec& y, std::size_t n_nonneg, std::size_t n_free) {
  Vec x(n_nonneg + n_free);
  for (std::size_t j = 0; j < n_nonneg; ++j) x[j] = y[j];
  for (std::size_t j = 0; j < n_free; ++j)
    x[n_nonneg + j] = y[n_nonneg + 2 * j] - y[n_nonneg + 2 * j + 1];
  return x;
}

}  // namespace

std::optional<Vec> lp_feasible(const Mat& a, const Vec& b, std::size_t n_nonneg) {
  if (a.empty()) return Vec{};
  std::size_t n = a[0].size();
  std::size_t n_free = n - n_nonneg;
  auto res = simplex_solve(split_free(a, n_nonneg, n_free), b, {});
  if (res.status != SimplexStatus::Optimal) return std::nullopt;
  return unsplit(res.point, n_nonneg, n_free);
}

LpMax lp_maximize(const Mat& a, const Vec& b, std::size_t n_nonneg, const Vec& c) {
  LpMax out;
  if (a.empty()) {
    out.status = LpMax::Status::Optimal;
    out.value = 0;
    return out;
  }
  std::size_t n = a[0].size();
  std::size_t n_free = n - n_nonneg;
  Vec obj(n_nonneg + 2 * n_free, Rat(0));
  for (std::size_t j = 0; j < n_nonneg; ++j) obj[j] = c[j];
  for (std::size_t j = 0; j < n_free; ++j) {
    obj[n_nonneg + 2 * j] = c[n_nonneg + j];
    obj[n_nonneg + 2 * j + 1] = -c[n_nonneg + j];
  }
  auto res = simplex_solve(split_free(a, n_nonneg, n_free), b, obj);
  switch (res.status) {
    case SimplexStatus::Infeasible:
      out.status = LpMax::Status::Infeasible;
      break;
    case SimplexStatus::Unbounded:
      out.status = LpMax::Status::Unbounded;
      break;
    case SimplexStatus::Optimal:
      out.status = LpMax::Status::Optimal;
      out.value = res.value;
      out.point = unsplit(res.point, n_nonneg, n_free);
      break;
  }
  return out;
}

bool in_convex_hull(const std::vector<Vec>& points, const Vec& target) {
  if (points.empty()) return false;
  std::size_t d = target.size();
  std::size_t k = points.size();
  Mat a = zero_mat(d + 1, k);
  Vec b(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = points[j][i];
    b[i] = target[i];
  }
  for (std::size_t j = 0; j < k; ++j) a[d][j] = 1;
  b[d] = 1;
  return lp_feasible(a, b, k).has_value();
}

bool in_hull_interior(const std::vector<Vec>& points, const Vec& target) {
  if (!in_convex_hull(points, target)) return false;
  HCone polar;
  polar.dim = target.size();
  for (const auto& p : points) {
    Vec row = sub(target, p);  // <phi, p - target> <= 0  <=>  <target - p, phi> >= 0
    polar.ge.push_back(row);
  }
  return cone_is_trivial(polar);
}

bool cone_is_trivial(const HCone& cone, Vec* witness) {
  std::size_t d = cone.dim;
  // Nonzero member exists iff for some coordinate i and sign sigma the system
  // { ge x >= 0, eq x = 0, sigma x_i = 1 } is feasible.
  for (std::size_t i = 0; i < d; ++i) {
    for (int sigma : {1, -1}) {
      std::size_t n_slack = cone.ge.size();
      // variables: [slack s >= 0 | x free]
      Mat a;
      Vec b;
      for (std::size_t r = 0; r < cone.ge.size(); ++r) {
        Vec row(n_slack + d, Rat(0));
        row[r] = -1;
        for (std::size_t j = 0; j < d; ++j) row[n_slack + j] = cone.ge[r][j];
        a.push_back(row);
        b.push_back(Rat(0));
      }
      for (const auto& er : cone.eq) {
        Vec row(n_slack + d, Rat(0));
        for (std::size_t j = 0; j < d; ++j) row[n_slack + j] = er[j];
        a.push_back(row);
        b.push_back(Rat(0));
      }
      {
        Vec row(n_slack + d, Rat(0));
        row[n_slack + i] = sigma;
        a.push_back(row);
        b.push_back(Rat(1));
      }
      auto x = lp_feasible(a, b, n_slack);
      if (x) {
        if (witness) {
          witness->assign(x->begin() + n_slack, x->end());
        }
        return false;
      }
    }
  }
  return true;
}

bool vcone_meets_kernel_trivially(const std::vector<Vec>& generators, const Mat& ker_rows,
                                  Vec* witness) {
  if (generators.empty()) return true;
  std::size_t d = generators[0].size();
  std::size_t k = generators.size();
  // lambda >= 0, sum lambda = 1, ker_rows . (sum lambda g) = 0
  Mat a;
  Vec b;
  for (const auto& kr : ker_rows) {
    Vec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(kr, generators[j]);
    a.push_back(row);
    b.push_back(Rat(0));
  }
  a.push_back(Vec(k, Rat(1)));
  b.push_back(Rat(1));
  auto lam = lp_feasible(a, b, k);
  if (!lam) return true;
  if (witness) {
    Vec x = zero_vec(d);
    for (std::size_t j = 0; j < k; ++j) x = add(x, scale((*lam)[j], generators[j]));
    *witness = x;
  }
  return false;
}

bool polytope_is_bounded(const Mat& a, std::size_t dim) {
  HCone rec;
  rec.dim = dim;
  for (const auto& row : a) rec.ge.push_back(scale(Rat(-1), row));  // A x <= 0
  return cone_is_trivial(rec);
}

std::vector<Vec> polytope_vertices(const Mat& a, const Vec& b, std::size_t dim) {
  std::vector<Vec> out;
  std::set<Vec> seen;
  std::size_t m = a.size();
  if (dim == 0) return out;
  // enumerate all dim-subsets of rows
  std::vector<std::size_t> comb(dim);
  for (std::size_t i = 0; i < dim; ++i) comb[i] = i;
  if (m < dim) return out;
  while (true) {
    Mat sys;
    Vec rhs;
    for (std::size_t i : comb) {
      sys.push_back(a[i]);
      rhs.push_back(b[i]);
    }
    bool singular = false;
    Vec x;
    try {
      x = solve(sys, rhs);
    } catch (const std::logic_error&) {
      singular = true;
    }
    if (!singular) {
      bool feas = true;
      for (std::size_t r = 0; r < m && feas; ++r)
        if (dot(a[r], x) > b[r]) feas = false;
      if (feas && seen.insert(x).second) out.push_back(x);
    }
    // next combination
    bool advanced = false;
    std::size_t i = dim;
    while (i-- > 0) {
      if (comb[i] < m - dim + i) {
        ++comb[i];
        for (std::size_t j = i + 1; j < dim; ++j) comb[j] = comb[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

}  // namespace rootcones
