#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rational.hpp"

namespace rootcones {

// Dense exact-rational vectors and matrices, sized for rank <= 8 root data.
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major

Vec zero_vec(std::size_t dim);
Mat zero_mat(std::size_t rows, std::size_t cols);
Mat identity_mat(std::size_t n);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& a);
bool is_zero(const Vec& a);

// Standard dot product; the ambient realizations are chosen so this is the
// invariant form.
Rat dot(const Vec& a, const Vec& b);
Rat norm_sq(const Vec& a);

Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
bool mat_eq(const Mat& a, const Mat& b);

Rat det(Mat m);  // by value: destroyed by elimination

// Gram matrix of a family of vectors.
Mat gram(const std::vector<Vec>& vs);
Rat gram_det(const std::vector<Vec>& vs);

// Solves a x = b for square nonsingular a; throws std::logic_error otherwise.
Vec solve(Mat a, Vec b);

// Inverse of a square nonsingular matrix.
Mat inverse(const Mat& a);

std::size_t rank_of(Mat m);

// Basis of { x : m x = 0 }.
std::vector<Vec> nullspace(Mat m);

// Indices into `candidates` of a greedy maximal linearly independent subset,
// scanned in order. If `within` is nonempty the span is capped at rank(within).
std::vector<std::size_t> greedy_basis(const std::vector<Vec>& candidates);

// Orthogonal projector (w.r.t. dot) onto span(basis), as a dim x dim matrix.
Mat projector_onto_span(const std::vector<Vec>& basis, std::size_t dim);

// Coordinates of v in the given basis of a subspace containing v;
// throws std::logic_error if v is outside the span.
Vec coordinates_in_basis(const std::vector<Vec>& basis, const Vec& v);

std::string vec_to_string(const Vec& v);
Vec parse_vec(const std::vector<std::string>& coords);

}  // namespace rootcones
