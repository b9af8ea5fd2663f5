#include "hull.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rootcones {

namespace {

Rat cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Vec cross3(const Vec& a, const Vec& b) {
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rat det3(const Vec& a, const Vec& b, const Vec& c) {
  return dot(a, cross3(b, c));
}

Rat polygon_area_twice(const std::vector<Vec>& poly) {
  Rat s(0);
  std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& p = poly[i];
    const Vec& q = poly[(i + 1) % n];
    s += p[0] * q[1] - q[0] * p[1];
  }
  return abs(s);
}

Rat hull_volume_3d(const std::vector<Vec>& pts) {
  // Centroid is interior for a full-dimensional hull.
  Vec cent = zero_vec(3);
  for (const auto& p : pts) cent = add(cent, p);
  cent = scale(Rat(1, static_cast<long>(pts.size())), cent);

  std::set<std::pair<Vec, Rat>> planes;
  Rat six_vol(0);
  std::size_t k = pts.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) {
        Vec n = cross3(sub(pts[j], pts[i]), sub(pts[l], pts[i]));
        if (is_zero(n)) continue;
        Rat d = dot(n, pts[i]);
        bool above = false, below = false;
        for (const auto& p : pts) {
          int s = sgn(dot(n, p) - d);
          if (s > 0) above = true;
          if (s < 0) below = true;
          if (above && below) break;
        }
        if (above && below) continue;  // not a supporting plane
        // canonical key: scale (n, d) by the leading coefficient of n
        Rat lead(0);
        for (const auto& x : n)
          if (sgn(x) != 0) {
            lead = x;
            break;
          }
        Vec keyn = scale(Rat(1) / lead, n);
        Rat keyd = d / lead;
        if (!planes.insert({keyn, keyd}).second) continue;

        // Facet polygon: points on the plane, 2D-hulled in plane coordinates.
        std::vector<Vec> on_plane;
        for (const auto& p : pts)
          if (dot(n, p) == d) on_plane.push_back(p);
        // Plane basis from the first noncollinear pair of edges.
        Vec u = sub(pts[j], pts[i]);
        Vec v = sub(pts[l], pts[i]);
        std::vector<Vec> flat;
        for (const auto& p : on_plane) {
          Vec q = sub(p, pts[i]);
          flat.push_back(Vec{dot(q, u), dot(q, v)});
        }
        std::vector<Vec> poly2 = hull_2d(flat);
        if (poly2.size() < 3) continue;
        // Map polygon order back to 3D points.
        std::map<Vec, Vec> back;
        for (std::size_t t = 0; t < on_plane.size(); ++t) back[flat[t]] = on_plane[t];
        std::vector<Vec> poly3;
        for (const auto& q : poly2) poly3.push_back(back.at(q));
        // Fan of tetrahedra against the centroid.
        for (std::size_t t = 1; t + 1 < poly3.size(); ++t) {
          six_vol += abs(det3(sub(poly3[0], cent), sub(poly3[t], cent), sub(poly3[t + 1], cent)));
        }
      }
  return six_vol / 6;
}

}  // namespace

std::vector<Vec> hull_2d(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Vec> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && sgn(cross2(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && sgn(cross2(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

Rat hull_volume(const std::vector<Vec>& coords) {
  if (coords.empty()) return Rat(0);
  std::size_t d = coords[0].size();
  std::vector<Vec> pts = coords;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  if (d == 0) return Rat(1);  // zero-dimensional convention
  if (pts.size() <= d) return Rat(0);

  switch (d) {
    case 1: {
      Rat lo = pts.front()[0], hi = pts.front()[0];
      for (const auto& p : pts) {
        lo = std::min(lo, p[0]);
        hi = std::max(hi, p[0]);
      }
      return hi - lo;
    }
    case 2: {
      auto poly = hull_2d(pts);
      if (poly.size() < 3) return Rat(0);
      return polygon_area_twice(poly) / 2;
    }
    case 3: {
      // degenerate check
      Mat diffs;
      for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
      if (rank_of(diffs) < 3) return Rat(0);
      return hull_volume_3d(pts);
    }
    default:
      throw std::invalid_argument("hull_volume: dimension > 3 not supported");
  }
}

}  // namespace rootcones
