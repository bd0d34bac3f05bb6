#include "qtp/linearization_space.hpp"

#include "qtp/elimination.hpp"

namespace qtp {

FreeBlocks FreeBlocks::zero(std::size_t n) {
  return {n, Matrix(3 * n, n), Matrix(3 * n, n), Matrix(3 * n, n)};
}

FreeBlocks FreeBlocks::standard(const QuadPoly2P& q) {
  const std::size_t n = q.n();
  const Matrix id = Matrix::identity(n);
  const Matrix zero(n, n);
  return {n, Matrix(3 * n, n), vstack({q[Coef::A10], zero, -id}), vstack({q[Coef::A01], -id, zero})};
}

void FreeBlocks::validate() const {
  for (const Matrix* b : {&y1, &z1, &z2}) {
    if (b->rows() != 3 * n || b->cols() != n) {
      throw ShapeError("free blocks must be 3n x n with n = " + std::to_string(n));
    }
  }
}

MembershipResult membership(const Pencil2P& l, const QuadPoly2P& q) {
  const std::size_t n = q.n();
  if (l.m() != 3 * n) {
    throw ShapeError("pencil is " + std::to_string(l.m()) + "x" + std::to_string(l.m()) + ", expected 3n = " +
                     std::to_string(3 * n));
  }
  const Matrix b = box_add(l);
  const Matrix row = q.coefficient_row();
  MembershipResult out;
  if (row.is_zero()) {
    out.ambiguous = true;
    out.status = b.is_zero() ? MembershipStatus::Member : MembershipStatus::NotMember;
    return out;
  }
  std::size_t pr = 0;
  std::size_t pc = 0;
  [&] {
    for (pr = 0; pr < n; ++pr) {
      for (pc = 0; pc < 6 * n; ++pc) {
        if (!row(pr, pc).is_zero()) return;
      }
    }
  }();
  const GaussianRational pivot_inv = row(pr, pc).inverse();
  for (std::size_t k = 0; k < 3; ++k) {
    GaussianRational vk = b(k * n + pr, pc) * pivot_inv;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < 6 * n; ++c) {
        if (b(k * n + r, c) != vk * row(r, c)) return out;
      }
    }
    out.v[k] = vk;
  }
  out.status = MembershipStatus::Member;
  return out;
}

Pencil2P generate_member(const QuadPoly2P& q, const AnsatzVector& v, const FreeBlocks& blocks) {
  blocks.validate();
  if (blocks.n != q.n()) {
    throw ShapeError("free blocks do not match the polynomial size");
  }
  const Matrix vc = v.column();
  auto vq = [&](Coef c) { return kron(vc, q[c]); };
  Matrix a1 = hstack({vq(Coef::A20), vq(Coef::A11) - blocks.y1, vq(Coef::A10) - blocks.z1});
  Matrix a2 = hstack({blocks.y1, vq(Coef::A02), vq(Coef::A01) - blocks.z2});
  Matrix a3 = hstack({blocks.z1, blocks.z2, vq(Coef::A00)});
  return {a1, a2, a3};
}

Pencil2P kernel_member(const FreeBlocks& blocks) {
  blocks.validate();
  const Matrix zero(3 * blocks.n, blocks.n);
  Matrix a1 = hstack({zero, -blocks.y1, -blocks.z1});
  Matrix a2 = hstack({blocks.y1, zero, -blocks.z2});
  Matrix a3 = hstack({blocks.z1, blocks.z2, zero});
  return {a1, a2, a3};
}

FreeBlocks read_free_blocks(const Pencil2P& l) {
  const std::size_t n = l.block_size();
  return {n, l.a2().slice(0, 0, 3 * n, n), l.a3().slice(0, 0, 3 * n, n), l.a3().slice(0, n, 3 * n, n)};
}

namespace {

void append_pencil(Matrix& stack, std::size_t row, const Pencil2P& l) {
  std::size_t col = 0;
  for (const Matrix* a : {&l.a1(), &l.a2(), &l.a3()}) {
    for (const auto& x : a->entries()) stack(row, col++) = x;
  }
}

}  // namespace

DimensionReport space_dimension(const QuadPoly2P& q) {
  const std::size_t n = q.n();
  DimensionReport report;
  report.n = n;
  report.degenerate = q.is_zero();
  report.dimension = 9 * n * n + (report.degenerate ? 0 : 3);
  report.parameter_count = 9 * n * n + 3;

  Matrix stack(report.parameter_count, 27 * n * n);
  std::size_t row = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    AnsatzVector v;
    v[k] = 1;
    append_pencil(stack, row++, generate_member(q, v, FreeBlocks::zero(n)));
  }
  for (std::size_t which = 0; which < 3; ++which) {
    for (std::size_t r = 0; r < 3 * n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        FreeBlocks b = FreeBlocks::zero(n);
        Matrix& target = which == 0 ? b.y1 : (which == 1 ? b.z1 : b.z2);
        target(r, c) = 1;
        append_pencil(stack, row++, kernel_member(b));
      }
    }
  }
  report.witness_rank = rank(stack);
  report.verified = report.witness_rank == report.dimension;
  return report;
}

PolyMatrix OneParamPencil::to_poly() const {
  PolyMatrix out(x1.rows(), x1.cols());
  for (std::size_t i = 0; i < x1.rows(); ++i) {
    for (std::size_t j = 0; j < x1.cols(); ++j) {
      out(i, j).add_term({1, 0}, x1(i, j));
      out(i, j).add_term({0, 0}, x3(i, j));
    }
  }
  return out;
}

OneParamPencil one_parameter_member(const QuadPoly2P& q, const GaussianRational& v1, const GaussianRational& v2,
                                    const Matrix& z1) {
  const std::size_t n = q.n();
  if (z1.rows() != 2 * n || z1.cols() != n) {
    throw ShapeError("Z1 must be 2n x n");
  }
  const Matrix vc = Matrix::column(std::array<GaussianRational, 2>{v1, v2});
  OneParamPencil p;
  p.x1 = hstack({kron(vc, q[Coef::A20]), kron(vc, q[Coef::A10]) - z1});
  p.x3 = hstack({z1, kron(vc, q[Coef::A00])});
  return p;
}

MuZeroReduction reduce_mu_zero(const Pencil2P& l, const QuadPoly2P& q) {
  MembershipResult member = membership(l, q);
  if (!member.is_member() || member.ambiguous) {
    throw HypothesisViolated("μ = 0 reduction needs a member of 𝕃(Q) with a well-defined ansatz");
  }
  const std::size_t n = q.n();
  auto restrict = [n](const Matrix& a) {
    return hstack({a.slice(0, 0, 2 * n, n), a.slice(0, 2 * n, 2 * n, n)});
  };
  MuZeroReduction out;
  out.pencil.x1 = restrict(l.a1());
  out.pencil.x3 = restrict(l.a3());
  out.v1 = member.v[0];
  out.v2 = member.v[1];

  PolyMatrix lambda_one(2, 1);
  lambda_one(0, 0) = BiPoly::lambda();
  lambda_one(1, 0) = BiPoly(1);
  PolyMatrix lhs = out.pencil.to_poly() * kron(lambda_one, to_poly(Matrix::identity(n)));
  QuadPoly2P p({q[Coef::A20], Matrix(n, n), Matrix(n, n), q[Coef::A10], Matrix(n, n), q[Coef::A00]});
  PolyMatrix rhs = kron(to_poly(Matrix::column(std::array<GaussianRational, 2>{out.v1, out.v2})), p.to_poly());
  out.identity_holds = lhs == rhs;
  return out;
}

}  // namespace qtp
