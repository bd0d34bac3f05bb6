#include "qtp/pencil.hpp"

namespace qtp {

Pencil2P::Pencil2P(Matrix a1, Matrix a2, Matrix a3) : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)) {
  const std::size_t m = a1_.rows();
  for (const Matrix* a : {&a1_, &a2_, &a3_}) {
    if (a->rows() != m || a->cols() != m) {
      throw ShapeError("pencil coefficients must be square of equal size");
    }
  }
}

Pencil2P Pencil2P::zero(std::size_t m) {
  return {Matrix(m, m), Matrix(m, m), Matrix(m, m)};
}

std::size_t Pencil2P::block_size() const {
  if (m() == 0 || m() % 3 != 0) {
    throw ShapeError("pencil size " + std::to_string(m()) + " is not a positive multiple of 3");
  }
  return m() / 3;
}

Matrix Pencil2P::eval(const GaussianRational& lambda, const GaussianRational& mu) const {
  return lambda * a1_ + mu * a2_ + a3_;
}

PolyMatrix Pencil2P::to_poly() const {
  PolyMatrix out(m(), m());
  for (std::size_t i = 0; i < m(); ++i) {
    for (std::size_t j = 0; j < m(); ++j) {
      BiPoly& e = out(i, j);
      e.add_term({1, 0}, a1_(i, j));
      e.add_term({0, 1}, a2_(i, j));
      e.add_term({0, 0}, a3_(i, j));
    }
  }
  return out;
}

Pencil2P Pencil2P::left_block_transform(const Matrix& t) const {
  Matrix tk = kron(t, Matrix::identity(block_size()));
  return {tk * a1_, tk * a2_, tk * a3_};
}

Pencil2P operator+(const Pencil2P& a, const Pencil2P& b) {
  return {a.a1_ + b.a1_, a.a2_ + b.a2_, a.a3_ + b.a3_};
}

Pencil2P operator-(const Pencil2P& a, const Pencil2P& b) {
  return {a.a1_ - b.a1_, a.a2_ - b.a2_, a.a3_ - b.a3_};
}

Pencil2P operator*(const GaussianRational& s, const Pencil2P& p) {
  return {s * p.a1_, s * p.a2_, s * p.a3_};
}

PolyMatrix lambda_vector() {
  PolyMatrix v(3, 1);
  v(0, 0) = BiPoly::lambda();
  v(1, 0) = BiPoly::mu();
  v(2, 0) = BiPoly(1);
  return v;
}

Matrix unit_vector(std::size_t dim, std::size_t k) {
  Matrix e(dim, 1);
  e(k, 0) = 1;
  return e;
}

Matrix box_add(const Matrix& x, const Matrix& y, const Matrix& z) {
  const std::size_t m = x.rows();
  if (m == 0 || m % 3 != 0) {
    throw ShapeError("box-addition needs 3n x 3n operands");
  }
  for (const Matrix* a : {&x, &y, &z}) {
    if (a->rows() != m || a->cols() != m) {
      throw ShapeError("box-addition operands must all be 3n x 3n");
    }
  }
  const std::size_t n = m / 3;
  Matrix out(m, 2 * m);
  auto add_column = [&](const Matrix& src, std::size_t from, std::size_t to) {
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) out(r, to * n + c) += src(r, from * n + c);
    }
  };
  add_column(x, 0, 0);
  add_column(x, 1, 1);
  add_column(x, 2, 3);
  add_column(y, 0, 1);
  add_column(y, 1, 2);
  add_column(y, 2, 4);
  add_column(z, 0, 3);
  add_column(z, 1, 4);
  add_column(z, 2, 5);
  return out;
}

Pencil2P standard_linearization(const QuadPoly2P& q) {
  const std::size_t n = q.n();
  const Matrix id = Matrix::identity(n);
  Matrix a1(3 * n, 3 * n);
  Matrix a2(3 * n, 3 * n);
  Matrix a3(3 * n, 3 * n);
  a1.set_block(0, 0, q[Coef::A20]);
  a1.set_block(0, 1, q[Coef::A11]);
  a1.set_block(2, 2, id);
  a2.set_block(0, 1, q[Coef::A02]);
  a2.set_block(1, 2, id);
  a3.set_block(0, 0, q[Coef::A10]);
  a3.set_block(0, 1, q[Coef::A01]);
  a3.set_block(0, 2, q[Coef::A00]);
  a3.set_block(1, 1, -id);
  a3.set_block(2, 0, -id);
  return {a1, a2, a3};
}

PolyMatrix apply_to_lambda(const Pencil2P& l) {
  const std::size_t n = l.block_size();
  PolyMatrix lambda_i = kron(lambda_vector(), to_poly(Matrix::identity(n)));
  return l.to_poly() * lambda_i;
}

PolyMatrix ansatz_times_q(const AnsatzVector& v, const QuadPoly2P& q) {
  return kron(to_poly(v.column()), q.to_poly());
}

CorrespondenceReport eigenvector_correspondence(const QuadPoly2P& q, const Pencil2P& l, const AnsatzVector& v,
                                                const GaussianRational& lambda, const GaussianRational& mu,
                                                const Matrix& x) {
  if (x.cols() != 1 || x.rows() != q.n()) {
    throw ShapeError("eigenvector must be an n-vector");
  }
  if (l.m() != 3 * q.n()) {
    throw ShapeError("pencil size does not match 3n");
  }
  if (x.is_zero()) {
    throw DomainError("eigenvector must be nonzero");
  }
  Matrix big_lambda = Matrix::column(std::array<GaussianRational, 3>{lambda, mu, GaussianRational(1)});
  CorrespondenceReport report;
  report.lhs = l.eval(lambda, mu) * kron(big_lambda, x);
  report.qx = q.eval(lambda, mu) * x;
  report.rhs = kron(v.column(), report.qx);
  report.residual = report.lhs - report.rhs;
  report.holds = report.residual.is_zero();
  return report;
}

}  // namespace qtp
