#include "qtp/quad_poly.hpp"

namespace qtp {

std::string_view coef_name(Coef c) {
  switch (c) {
    case Coef::A20: return "A20";
    case Coef::A11: return "A11";
    case Coef::A02: return "A02";
    case Coef::A10: return "A10";
    case Coef::A01: return "A01";
    case Coef::A00: return "A00";
  }
  return "?";
}

Monomial coef_monomial(Coef c) {
  switch (c) {
    case Coef::A20: return {2, 0};
    case Coef::A11: return {1, 1};
    case Coef::A02: return {0, 2};
    case Coef::A10: return {1, 0};
    case Coef::A01: return {0, 1};
    case Coef::A00: return {0, 0};
  }
  return {};
}

QuadPoly2P::QuadPoly2P(std::array<Matrix, 6> coefficients) : coefs_(std::move(coefficients)) {
  n_ = coefs_[0].rows();
  if (n_ == 0) {
    throw ShapeError("quadratic polynomial needs n >= 1");
  }
  for (Coef c : kCoefOrder) {
    const Matrix& m = (*this)[c];
    if (m.rows() != n_ || m.cols() != n_) {
      throw ShapeError(std::string(coef_name(c)) + " is " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(n_) + "x" + std::to_string(n_));
    }
  }
}

QuadPoly2P QuadPoly2P::zero(std::size_t n) {
  Matrix z(n, n);
  return QuadPoly2P({z, z, z, z, z, z});
}

Matrix QuadPoly2P::coefficient_row() const {
  Matrix row(n_, 6 * n_);
  for (std::size_t k = 0; k < 6; ++k) row.paste(0, k * n_, coefs_[k]);
  return row;
}

bool QuadPoly2P::is_zero() const {
  for (const auto& m : coefs_) {
    if (!m.is_zero()) return false;
  }
  return true;
}

Matrix QuadPoly2P::eval(const GaussianRational& lambda, const GaussianRational& mu) const {
  Matrix out(n_, n_);
  for (Coef c : kCoefOrder) {
    Monomial m = coef_monomial(c);
    GaussianRational w = 1;
    for (int k = 0; k < m.lambda; ++k) w *= lambda;
    for (int k = 0; k < m.mu; ++k) w *= mu;
    out += w * (*this)[c];
  }
  return out;
}

PolyMatrix QuadPoly2P::to_poly() const {
  PolyMatrix out(n_, n_);
  for (Coef c : kCoefOrder) {
    const Matrix& a = (*this)[c];
    Monomial m = coef_monomial(c);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) out(i, j).add_term(m, a(i, j));
    }
  }
  return out;
}

}  // namespace qtp
