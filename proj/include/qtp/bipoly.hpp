#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "qtp/gaussian_rational.hpp"

namespace qtp {

/// Exponent pair (i, j) of the monomial λ^i μ^j.
struct Monomial {
  int lambda = 0;
  int mu = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  int total() const { return lambda + mu; }
};

enum class Variable { Lambda, Mu };

/// Sparse bivariate polynomial in (λ, μ) over the Gaussian rationals.
/// Zero coefficients are never stored.
class BiPoly {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  BiPoly() = default;
  BiPoly(int c) : BiPoly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  BiPoly(const GaussianRational& c);                // NOLINT(google-explicit-constructor)

  static BiPoly lambda() { return monomial({1, 0}, 1); }
  static BiPoly mu() { return monomial({0, 1}, 1); }
  static BiPoly monomial(Monomial m, const GaussianRational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True for the zero polynomial and for nonzero constants.
  bool is_constant() const;
  GaussianRational coefficient(Monomial m) const;
  GaussianRational constant_term() const { return coefficient({0, 0}); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Degree in one variable; -1 for the zero polynomial.
  int degree(Variable v) const;

  /// Adds c * λ^i μ^j, dropping the term if it cancels.
  void add_term(Monomial m, const GaussianRational& c);

  GaussianRational eval(const GaussianRational& lambda, const GaussianRational& mu) const;
  std::complex<double> eval(std::complex<double> lambda, std::complex<double> mu) const;

  /// Coefficients of powers of `v`, each a polynomial in the other variable
  /// (index k holds the coefficient of v^k).
  std::vector<BiPoly> coefficients_in(Variable v) const;

  /// Largest |coefficient| as a double.
  double max_coefficient_abs() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

 private:
  Terms terms_;
};

}  // namespace qtp
