#include "linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace rootcones {

Vec zero_vec(std::size_t dim) { return Vec(dim, Rat(0)); }

Mat zero_mat(std::size_t rows, std::size_t cols) {
  return Mat(rows, zero_vec(cols));
}

Mat identity_mat(std::size_t n) {
  Mat m = zero_mat(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::logic_error("add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::logic_error("sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::logic_error("dot: dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat norm_sq(const Vec& a) { return dot(a, a); }

Vec mat_apply(const Mat& m, const Vec& v) {
  Vec r(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Mat r = zero_mat(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(a[i][j]) == 0) continue;
      for (std::size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  return r;
}

Mat transpose(const Mat& m) {
  if (m.empty()) return m;
  Mat r = zero_mat(m[0].size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
  return r;
}

bool mat_eq(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

Rat det(Mat m) {
  std::size_t n = m.size();
  Rat d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      d = -d;
    }
    d *= m[col][col];
    Rat inv = Rat(1) / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Rat f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return d;
}

Mat gram(const std::vector<Vec>& vs) {
  Mat g = zero_mat(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) g[i][j] = g[j][i] = dot(vs[i], vs[j]);
  return g;
}

Rat gram_det(const std::vector<Vec>& vs) {
  if (vs.empty()) return Rat(1);
  return det(gram(vs));
}

namespace {

// Row-reduces [a | rhs...] in place; returns the pivot columns of a.
std::vector<std::size_t> row_reduce(Mat& m, std::size_t lead_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < lead_cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[row]);
    Rat inv = Rat(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rat f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Vec solve(Mat a, Vec b) {
  std::size_t n = a.size();
  if (n == 0) return {};
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto pivots = row_reduce(a, n);
  if (pivots.size() != n) throw std::logic_error("solve: singular system");
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
  return x;
}

Mat inverse(const Mat& a) {
  std::size_t n = a.size();
  Mat m = a;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  auto pivots = row_reduce(m, n);
  if (pivots.size() != n) throw std::logic_error("inverse: singular matrix");
  Mat r = zero_mat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[pivots[i]][j] = m[i][n + j];
  return r;
}

std::size_t rank_of(Mat m) {
  if (m.empty()) return 0;
  return row_reduce(m, m[0].size()).size();
}

std::vector<Vec> nullspace(Mat m) {
  if (m.empty()) return {};
  std::size_t n = m[0].size();
  auto pivots = row_reduce(m, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(v);
  }
  return basis;
}

std::vector<std::size_t> greedy_basis(const std::vector<Vec>& candidates) {
  std::vector<std::size_t> chosen;
  Mat rows;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (is_zero(candidates[i])) continue;
    rows.push_back(candidates[i]);
    Mat copy = rows;
    std::size_t r = row_reduce(copy, copy[0].size()).size();
    if (r > rank) {
      rank = r;
      chosen.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

Mat projector_onto_span(const std::vector<Vec>& basis, std::size_t dim) {
  if (basis.empty()) return zero_mat(dim, dim);
  // P = B (B^T B)^{-1} B^T with columns of B the basis vectors.
  Mat bt(basis.begin(), basis.end());  // rows = basis vectors = B^T
  Mat b = transpose(bt);
  Mat g = gram(basis);
  Mat gi = inverse(g);
  return mat_mul(mat_mul(b, gi), bt);
}

Vec coordinates_in_basis(const std::vector<Vec>& basis, const Vec& v) {
  // Solve Gram * x = (<b_i, v>) — valid because v must lie in span(basis).
  Mat g = gram(basis);
  Vec rhs(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) rhs[i] = dot(basis[i], v);
  Vec x = solve(g, rhs);
  // Confirm membership.
  Vec recon = zero_vec(v.size());
  for (std::size_t i = 0; i < basis.size(); ++i) recon = add(recon, scale(x[i], basis[i]));
  if (!(recon == v)) throw std::logic_error("coordinates_in_basis: vector outside span");
  return x;
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

Vec parse_vec(const std::vector<std::string>& coords) {
  Vec v;
  v.reserve(coords.size());
  for (const auto& c : coords) v.push_back(parse_rat(c));
  return v;
}

}  // namespace rootcones
