#pragma once

#include <span>
#include <vector>

#include "qtp/bipoly.hpp"
#include "qtp/dense_matrix.hpp"
#include "qtp/poly_matrix.hpp"

namespace qtp {

/// Exact determinant by Bareiss fraction-free elimination with row pivoting.
GaussianRational det(const Matrix& m);

/// Exact rank by fraction-free elimination (rectangular input allowed).
std::size_t rank(const Matrix& m);

/// Exact inverse by Gauss-Jordan; throws DomainError if singular.
Matrix inverse(const Matrix& m);

/// Exact determinant of a polynomial matrix.
///
/// The determinant is sampled on the integer grid {0..dλ} x {0..dμ}, where
/// dλ (dμ) bounds the λ- (μ-) degree of the determinant by the smaller of the
/// row-wise and column-wise sums of entry degrees, and then recovered by
/// Newton interpolation in μ followed by λ.
BiPoly det(const PolyMatrix& m);

/// Coefficients (ascending) of the unique polynomial of degree <= values.size()-1
/// taking `values[k]` at x = k.
std::vector<GaussianRational> interpolate_integer_nodes(std::span<const GaussianRational> values);

}  // namespace qtp
