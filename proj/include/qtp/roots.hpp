#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qtp/errors.hpp"
#include "qtp/unipoly.hpp"

namespace qtp {

struct RootOptions {
  double tol = 1e-12;
  int max_iterations = 500;
};

/// Raised when the simultaneous iteration hits its cap; carries the last iterate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<std::complex<double>> best)
      : Error(what), best_(std::move(best)) {}
  const std::vector<std::complex<double>>& best_iterate() const { return best_; }

 private:
  std::vector<std::complex<double>> best_;
};

/// All complex roots (with multiplicity) of the polynomial with ascending
/// coefficients `coeffs`, by Aberth–Ehrlich iteration started on a perturbed
/// circle of radius max(1, 1 + max|c_i / c_d|). A root is accepted once its
/// correction drops below tol * max(1, |z|) or its residual reaches the
/// rounding-error level of Horner evaluation. Output is sorted by (re, im).
///
/// Throws DegreeError for degree < 1 (after trimming zero leading terms).
std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> coeffs,
                                                   const RootOptions& options = {});

std::vector<std::complex<double>> unipoly_roots(const UniPoly& p, const RootOptions& options = {});

/// Lexicographic (re, im) sort used for every set-valued numeric output.
void sort_lex(std::vector<std::complex<double>>& values);

}  // namespace qtp
