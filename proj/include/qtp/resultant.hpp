#pragma once

#include <optional>

#include "qtp/bipoly.hpp"
#include "qtp/poly_matrix.hpp"
#include "qtp/unipoly.hpp"

namespace qtp {

/// Sylvester matrix of f and g with respect to `eliminate`; entries are
/// polynomials in the remaining variable.
PolyMatrix sylvester_matrix(const BiPoly& f, const BiPoly& g, Variable eliminate);

/// Res_v(f, g) as a polynomial in the other variable.
/// Throws DegreeError if either input has degree < 1 in `eliminate`.
UniPoly sylvester_resultant(const BiPoly& f, const BiPoly& g, Variable eliminate);

/// Outcome of comparing two polynomials up to a constant factor.
struct ProportionalityResult {
  bool proportional = false;
  /// p = ratio * q when proportional.
  GaussianRational ratio;
  /// True when p is zero, so ratio = 0 (never an acceptable linearization factor).
  bool degenerate = false;
};

/// Finds γ with p = γ q exactly. Throws DomainError if q is zero.
ProportionalityResult constant_ratio(const BiPoly& p, const BiPoly& q);

}  // namespace qtp
