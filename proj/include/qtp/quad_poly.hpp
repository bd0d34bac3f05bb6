#pragma once

#include <array>
#include <string_view>

#include "qtp/dense_matrix.hpp"
#include "qtp/poly_matrix.hpp"

namespace qtp {

/// Coefficient slot of a quadratic two-parameter matrix polynomial, in the
/// canonical row order [A20 A11 A02 A10 A01 A00].
enum class Coef { A20 = 0, A11, A02, A10, A01, A00 };

inline constexpr std::array<Coef, 6> kCoefOrder = {Coef::A20, Coef::A11, Coef::A02, Coef::A10, Coef::A01, Coef::A00};

std::string_view coef_name(Coef c);
Monomial coef_monomial(Coef c);

/// Q(λ,μ) = λ²A20 + λμA11 + μ²A02 + λA10 + μA01 + A00 with n x n coefficients.
class QuadPoly2P {
 public:
  QuadPoly2P() = default;
  /// Coefficients in canonical order; all must be n x n for a common n >= 1.
  explicit QuadPoly2P(std::array<Matrix, 6> coefficients);

  /// Zero polynomial of size n.
  static QuadPoly2P zero(std::size_t n);

  std::size_t n() const { return n_; }
  const Matrix& operator[](Coef c) const { return coefs_[static_cast<std::size_t>(c)]; }
  const std::array<Matrix, 6>& coefficients() const { return coefs_; }

  /// The n x 6n coefficient row [A20 A11 A02 A10 A01 A00].
  Matrix coefficient_row() const;
  bool is_zero() const;

  Matrix eval(const GaussianRational& lambda, const GaussianRational& mu) const;
  PolyMatrix to_poly() const;

  friend bool operator==(const QuadPoly2P&, const QuadPoly2P&) = default;

 private:
  std::size_t n_ = 0;
  std::array<Matrix, 6> coefs_;
};

}  // namespace qtp
