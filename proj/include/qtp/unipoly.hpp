#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qtp/bipoly.hpp"
#include "qtp/gaussian_rational.hpp"

namespace qtp {

/// Dense univariate polynomial over the Gaussian rationals, coefficients in
/// ascending order. The leading coefficient is nonzero unless the polynomial
/// is zero (empty coefficient list).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussianRational> ascending);

  /// Reads a BiPoly that only involves `v`. Throws DegreeError otherwise.
  static UniPoly from_bipoly(const BiPoly& p, Variable v);

  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const GaussianRational& leading() const { return coeffs_.back(); }

  GaussianRational eval(const GaussianRational& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  UniPoly derivative() const;
  UniPoly monic() const;

  /// Euclidean division; throws DomainError for a zero divisor.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// Monic gcd (zero if both inputs are zero).
  static UniPoly gcd(UniPoly a, UniPoly b);
  /// p / gcd(p, p'): same roots, all simple.
  UniPoly squarefree_part() const;

  std::vector<std::complex<double>> to_complex() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string str(const std::string& var = "x") const;
  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

}  // namespace qtp
