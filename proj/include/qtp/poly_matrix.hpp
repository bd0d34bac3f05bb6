#pragma once

#include "qtp/bipoly.hpp"
#include "qtp/dense_matrix.hpp"

namespace qtp {

/// Matrix with bivariate polynomial entries.
using PolyMatrix = DenseMatrix<BiPoly>;

/// Lifts a scalar matrix to constant polynomial entries.
PolyMatrix to_poly(const Matrix& m);

/// Inverse of to_poly; throws DegreeError if any entry is non-constant.
Matrix to_scalar(const PolyMatrix& m);

Matrix eval(const PolyMatrix& m, const GaussianRational& lambda, const GaussianRational& mu);

/// Largest total degree over all entries; -1 for the zero matrix.
int max_total_degree(const PolyMatrix& m);

/// Scalar times polynomial entries.
PolyMatrix scale(const BiPoly& s, const PolyMatrix& m);

}  // namespace qtp
