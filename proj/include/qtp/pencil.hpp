#pragma once

#include <span>

#include "qtp/ansatz.hpp"
#include "qtp/dense_matrix.hpp"
#include "qtp/poly_matrix.hpp"
#include "qtp/quad_poly.hpp"

namespace qtp {

/// Linear two-parameter pencil L(λ,μ) = λ Â1 + μ Â2 + Â3 with m x m coefficients.
///
/// Pencils related to a QuadPoly2P of size n have m = 3n and are read as a
/// 3 x 3 grid of n x n blocks.
class Pencil2P {
 public:
  Pencil2P() = default;
  Pencil2P(Matrix a1, Matrix a2, Matrix a3);

  static Pencil2P zero(std::size_t m);

  std::size_t m() const { return a1_.rows(); }
  const Matrix& a1() const { return a1_; }
  const Matrix& a2() const { return a2_; }
  const Matrix& a3() const { return a3_; }

  /// Block size n = m / 3; throws ShapeError if m is not divisible by 3.
  std::size_t block_size() const;

  Matrix eval(const GaussianRational& lambda, const GaussianRational& mu) const;
  PolyMatrix to_poly() const;

  /// (T ⊗ I_n) L for a 3x3 transform T.
  Pencil2P left_block_transform(const Matrix& t) const;

  friend Pencil2P operator+(const Pencil2P& a, const Pencil2P& b);
  friend Pencil2P operator-(const Pencil2P& a, const Pencil2P& b);
  friend Pencil2P operator*(const GaussianRational& s, const Pencil2P& p);
  friend bool operator==(const Pencil2P&, const Pencil2P&) = default;

 private:
  Matrix a1_;
  Matrix a2_;
  Matrix a3_;
};

/// Λ = (λ, μ, 1)ᵀ as a 3x1 polynomial matrix.
PolyMatrix lambda_vector();

/// e_k ∈ C^dim as a column (k is 0-based).
Matrix unit_vector(std::size_t dim, std::size_t k);

/// Box-addition of three 3n x 3n block matrices into a 3n x 6n matrix:
/// X feeds block columns {1, 2, 4}, Y feeds {2, 3, 5}, Z feeds {4, 5, 6}.
Matrix box_add(const Matrix& x, const Matrix& y, const Matrix& z);
inline Matrix box_add(const Pencil2P& l) { return box_add(l.a1(), l.a2(), l.a3()); }

/// The 3n x 3n standard linearization with ansatz e1.
Pencil2P standard_linearization(const QuadPoly2P& q);

/// L(λ,μ)(Λ ⊗ I_n) as an exact 3n x n polynomial matrix.
PolyMatrix apply_to_lambda(const Pencil2P& l);

/// v ⊗ Q(λ,μ) as a 3n x n polynomial matrix.
PolyMatrix ansatz_times_q(const AnsatzVector& v, const QuadPoly2P& q);

struct CorrespondenceReport {
  /// L(λ,μ)(Λ(λ,μ) ⊗ x).
  Matrix lhs;
  /// v ⊗ (Q(λ,μ) x).
  Matrix rhs;
  /// lhs - rhs, exact.
  Matrix residual;
  /// Q(λ,μ) x, exact.
  Matrix qx;
  bool holds = false;
};

/// Checks L(λ,μ)(Λ ⊗ x) = v ⊗ (Q(λ,μ) x) at one point. Throws DomainError for x = 0.
CorrespondenceReport eigenvector_correspondence(const QuadPoly2P& q, const Pencil2P& l, const AnsatzVector& v,
                                                const GaussianRational& lambda, const GaussianRational& mu,
                                                const Matrix& x);

}  // namespace qtp
