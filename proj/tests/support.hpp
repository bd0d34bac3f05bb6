// Shared helpers for the test binaries: seeded random instances and
// oracles that avoid the library code paths they check.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qtp/ansatz.hpp"
#include "qtp/bipoly.hpp"
#include "qtp/dense_matrix.hpp"
#include "qtp/linearization_space.hpp"
#include "qtp/pencil.hpp"
#include "qtp/poly_matrix.hpp"
#include "qtp/quad_poly.hpp"

#ifndef QTP_DATA_DIR
#define QTP_DATA_DIR "data"
#endif

namespace qtp::test {

inline std::string data_path(const std::string& name) { return std::string(QTP_DATA_DIR) + "/" + name; }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  // Mostly small integers, sometimes a fraction or a Gaussian rational.
  GaussianRational scalar() {
    int kind = integer(0, 9);
    mpq_class re(integer(-5, 5));
    if (kind == 8) re = mpq_class(integer(-9, 9), integer(1, 7));
    if (kind == 9) return {re, mpq_class(integer(-3, 3), integer(1, 3))};
    re.canonicalize();
    return GaussianRational(re);
  }

  GaussianRational nonzero_scalar() {
    for (;;) {
      auto z = scalar();
      if (!z.is_zero()) return z;
    }
  }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar();
    return m;
  }

  QuadPoly2P quad(std::size_t n) {
    std::array<Matrix, 6> a;
    for (auto& m : a) m = matrix(n, n);
    return QuadPoly2P(a);
  }

  FreeBlocks blocks(std::size_t n) { return {n, matrix(3 * n, n), matrix(3 * n, n), matrix(3 * n, n)}; }

  AnsatzVector ansatz() { return {{scalar(), scalar(), scalar()}}; }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Laplace expansion along the first row; exponential, small sizes only.
template <class T>
T cofactor_det(const DenseMatrix<T>& a) {
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  if (n == 1) return a(0, 0);
  T total(0);
  for (std::size_t j = 0; j < n; ++j) {
    DenseMatrix<T> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    T term = a(0, j) * cofactor_det(minor);
    if (j % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

// Plain Gauss-Jordan rank over the Gaussian rationals.
inline std::size_t naive_rank(Matrix a) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(piv, k), a(rank, k));
    const GaussianRational inv = a(rank, c).inverse();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || a(r, c).is_zero()) continue;
      const GaussianRational f = a(r, c) * inv;
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) -= f * a(rank, k);
    }
    ++rank;
  }
  return rank;
}

// L(λ,μ)(Λ ⊗ I) expanded by hand from λÂ1 + μÂ2 + Â3 and Λ = (λ, μ, 1).
inline PolyMatrix expand_times_lambda(const Pencil2P& l) {
  const std::size_t n = l.m() / 3;
  const BiPoly vars[3] = {BiPoly::lambda(), BiPoly::mu(), BiPoly(1)};
  const Matrix* coef[3] = {&l.a1(), &l.a2(), &l.a3()};
  PolyMatrix out(3 * n, n);
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j)
      for (std::size_t r = 0; r < 3 * n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) += vars[k] * vars[j] * BiPoly((*coef[k])(r, j * n + c));
  return out;
}

// v ⊗ Q(λ,μ) written out from the six coefficients.
inline PolyMatrix expand_ansatz_q(const AnsatzVector& v, const QuadPoly2P& q) {
  const std::size_t n = q.n();
  const BiPoly l = BiPoly::lambda(), m = BiPoly::mu();
  const BiPoly mono[6] = {l * l, l * m, m * m, l, m, BiPoly(1)};
  PolyMatrix out(3 * n, n);
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t k = 0; k < 6; ++k)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          out(b * n + r, c) += BiPoly(v[b]) * mono[k] * BiPoly(q.coefficients()[k](r, c));
  return out;
}

// Rank of the homogeneous linear system in the unknowns (Â1, Â2, Â3, v)
// expressing L(Λ ⊗ I) = v ⊗ Q, obtained by matching coefficients of each
// monomial. dim 𝕃(Q) = unknowns - rank.
struct ConstraintSystem {
  std::size_t unknowns = 0;
  std::size_t rank = 0;
};

inline ConstraintSystem brute_force_constraints(const QuadPoly2P& q) {
  const std::size_t n = q.n(), m = 3 * n;
  const std::size_t unknowns = 3 * m * m + 3;
  // monomial index of var(k) * var(j), vars = (λ, μ, 1): λ² λμ μ² λ μ 1
  const int mono[3][3] = {{0, 1, 3}, {1, 2, 4}, {3, 4, 5}};
  // one equation per (monomial, row, col of the 3n x n product)
  Matrix eq(6 * m * n, unknowns);
  auto row_of = [&](int mon, std::size_t r, std::size_t c) { return (mon * m + r) * n + c; };
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          // entry (r, j*n + c) of Â_{k+1}
          std::size_t var = k * m * m + r * m + (j * n + c);
          eq(row_of(mono[k][j], r, c), var) += 1;
        }
  for (std::size_t b = 0; b < 3; ++b)
    for (int mon = 0; mon < 6; ++mon)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          eq(row_of(mon, b * n + r, c), 3 * m * m + b) -= q.coefficients()[mon](r, c);
  return {unknowns, naive_rank(eq)};
}

// diag(a, b).
inline PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.paste(0, 0, a);
  out.paste(a.rows(), a.cols(), b);
  return out;
}

// Worked member with ansatz (1, 1, 2), block by block. `as_printed` puts
// A01 instead of A10 in block (2,1) of Â3, which breaks membership.
inline Pencil2P worked_pencil(const QuadPoly2P& q, bool as_printed = false) {
  const std::size_t n = q.n();
  const Matrix &a20 = q[Coef::A20], &a11 = q[Coef::A11], &a02 = q[Coef::A02];
  const Matrix &a10 = q[Coef::A10], &a01 = q[Coef::A01], &a00 = q[Coef::A00];
  const Matrix o(n, n), id = Matrix::identity(n);
  const GaussianRational two(2);
  auto grid = [&](std::initializer_list<std::initializer_list<Matrix>> rows) {
    Matrix out(3 * n, 3 * n);
    std::size_t i = 0;
    for (const auto& row : rows) {
      std::size_t j = 0;
      for (const auto& b : row) out.set_block(i, j++, b);
      ++i;
    }
    return out;
  };
  Matrix x = grid({{a20, a11 + a20, a10 + a01}, {a20, a00, o}, {two * a20, a02 + two * a11, id}});
  Matrix y = grid({{-a20, a02, a01}, {a11 - a00, a02, o}, {-a02, two * a02, a01}});
  Matrix z = grid({{-a01, o, a00}, {as_printed ? a01 : a10, a01, a00}, {two * a10 - id, a01, two * a00}});
  return {x, y, z};
}

// Free blocks that reproduce worked_pencil through generate_member.
inline FreeBlocks worked_blocks(const QuadPoly2P& q) {
  const std::size_t n = q.n();
  const Matrix o(n, n), id = Matrix::identity(n);
  return {n, vstack({Matrix(-q[Coef::A20]), q[Coef::A11] - q[Coef::A00], Matrix(-q[Coef::A02])}),
          vstack({Matrix(-q[Coef::A01]), q[Coef::A10], GaussianRational(2) * q[Coef::A10] - id}),
          vstack({o, q[Coef::A01], q[Coef::A01]})};
}

}  // namespace qtp::test
