#include <doctest.h>

#include "qtp/elimination.hpp"
#include "qtp/errors.hpp"
#include "qtp/io.hpp"
#include "qtp/resultant.hpp"
#include "support.hpp"

using namespace qtp;
using qtp::test::Rng;

namespace {

QuadPoly2P unit_circle() {
  Matrix one{{1}}, zero{{0}}, neg{{-1}};
  return QuadPoly2P({one, zero, one, zero, zero, neg});
}

}  // namespace

TEST_CASE("quadratic evaluation") {
  CHECK(unit_circle().eval(1, 0).is_zero());

  QuadPoly2P id = QuadPoly2P::zero(2);
  std::array<Matrix, 6> a = id.coefficients();
  a[5] = Matrix::identity(2);
  CHECK(QuadPoly2P(a).eval(GaussianRational::parse("3/7"), GaussianRational::parse("2-i")) == Matrix::identity(2));

  QuadPoly2P q = io::read_problem(test::data_path("example_n2.json"));
  CHECK(q.eval(0, 0) == q[Coef::A00]);

  Rng rng(21);
  QuadPoly2P r = rng.quad(2);
  auto lam = rng.scalar(), mu = rng.scalar();
  Matrix direct = lam * lam * r[Coef::A20] + mu * mu * r[Coef::A02] + lam * mu * r[Coef::A11] +
                  lam * r[Coef::A10] + mu * r[Coef::A01] + r[Coef::A00];
  CHECK(r.eval(lam, mu) == direct);
  CHECK(eval(r.to_poly(), lam, mu) == direct);
}

TEST_CASE("quadratic polynomial rejects mismatched coefficient sizes") {
  std::array<Matrix, 6> a;
  for (auto& m : a) m = Matrix(2, 2);
  a[3] = Matrix(3, 3);
  CHECK_THROWS_AS(QuadPoly2P{a}, ShapeError);
}

TEST_CASE("pencil evaluation") {
  Pencil2P l = standard_linearization(unit_circle());
  CHECK(det(l.eval(1, 0)).is_zero());
  CHECK(l.eval(0, 0) == l.a3());
  Rng rng(22);
  Matrix a3 = rng.matrix(3, 3);
  Pencil2P only3(Matrix(3, 3), Matrix(3, 3), a3);
  CHECK(only3.eval(rng.scalar(), rng.scalar()) == a3);
}

TEST_CASE("kron examples") {
  Matrix e1 = unit_vector(3, 0);
  Matrix expected{{1, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}};
  CHECK(kron(e1, Matrix::identity(2)) == expected);
  Rng rng(23);
  Matrix b = rng.matrix(2, 3);
  auto c = rng.scalar();
  CHECK(kron(Matrix{{c}}, b) == c * b);
}

TEST_CASE("standard linearization of the unit circle") {
  Pencil2P l = standard_linearization(unit_circle());
  CHECK(l.a1() == Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  CHECK(l.a2() == Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(l.a3() == Matrix{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}});
  CHECK(box_add(l) == Matrix{{1, 0, 1, 0, 0, -1}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}});
}

TEST_CASE("standard linearization identities on random Q") {
  Rng rng(24);
  for (int t = 0; t < 6; ++t) {
    QuadPoly2P q = rng.quad(1 + t % 3);
    Pencil2P l = standard_linearization(q);
    CHECK(apply_to_lambda(l) == kron(to_poly(unit_vector(3, 0)), q.to_poly()));
    CHECK(apply_to_lambda(l) == test::expand_times_lambda(l));
    CHECK(box_add(l) == kron(unit_vector(3, 0), q.coefficient_row()));
    if (q.n() <= 2) {
      auto r = constant_ratio(det(l.to_poly()), det(q.to_poly()));
      if (!det(q.to_poly()).is_zero()) {
        CHECK(r.proportional);
        CHECK_FALSE(r.ratio.is_zero());
      }
    }
  }
}

TEST_CASE("box-add") {
  CHECK(box_add(Matrix(6, 6), Matrix(6, 6), Matrix(6, 6)) == Matrix(6, 12));
  CHECK_THROWS_AS(box_add(Matrix(4, 4), Matrix(4, 4), Matrix(4, 4)), ShapeError);
  CHECK_THROWS_AS(box_add(Matrix(6, 6), Matrix(3, 3), Matrix(6, 6)), ShapeError);

  QuadPoly2P q = io::read_problem(test::data_path("example_n2.json"));
  CHECK(box_add(test::worked_pencil(q)) == kron(Matrix{{1}, {1}, {2}}, q.coefficient_row()));
}

TEST_CASE("box-add is linear") {
  Rng rng(25);
  for (int t = 0; t < 10; ++t) {
    std::size_t m = 3 * (1 + t % 2);
    Pencil2P a(rng.matrix(m, m), rng.matrix(m, m), rng.matrix(m, m));
    Pencil2P b(rng.matrix(m, m), rng.matrix(m, m), rng.matrix(m, m));
    auto s = rng.scalar();
    CHECK(box_add(a + s * b) == box_add(a) + s * box_add(b));
  }
}

TEST_CASE("apply_to_lambda") {
  QuadPoly2P q = io::read_problem(test::data_path("example_n2.json"));
  CHECK(apply_to_lambda(test::worked_pencil(q)) == ansatz_times_q(AnsatzVector{{1, 1, 2}}, q));
  CHECK(ansatz_times_q(AnsatzVector{{1, 1, 2}}, q) == test::expand_ansatz_q(AnsatzVector{{1, 1, 2}}, q));
  CHECK(apply_to_lambda(Pencil2P::zero(6)).is_zero());
  CHECK_THROWS_AS(apply_to_lambda(Pencil2P::zero(4)), ShapeError);
}

TEST_CASE("eigenvector correspondence") {
  // q(λ,μ) = λ² + μ² − 1 vanishes at (3/5, 4/5).
  QuadPoly2P q = unit_circle();
  Pencil2P l = standard_linearization(q);
  auto lam = GaussianRational::parse("3/5"), mu = GaussianRational::parse("4/5");
  auto rep = eigenvector_correspondence(q, l, AnsatzVector::e1(), lam, mu, Matrix{{1}});
  CHECK(rep.holds);
  CHECK(rep.qx.is_zero());
  CHECK(rep.lhs.is_zero());

  Rng rng(26);
  QuadPoly2P q2 = rng.quad(2);
  Pencil2P l2 = standard_linearization(q2);
  Matrix x = rng.matrix(2, 1);
  x(0, 0) = 1;
  auto r2 = eigenvector_correspondence(q2, l2, AnsatzVector::e1(), rng.scalar(), rng.scalar(), x);
  CHECK(r2.holds);
  CHECK(r2.lhs.slice(2, 0, 4, 1).is_zero());

  std::array<Matrix, 6> a;
  for (auto& m : a) m = Matrix(2, 2);
  a[5] = Matrix::identity(2);
  QuadPoly2P ident(a);
  AnsatzVector v{{2, -1, 3}};
  Pencil2P lv = generate_member(ident, v, rng.blocks(2));
  Matrix ek = unit_vector(2, 1);
  auto r3 = eigenvector_correspondence(ident, lv, v, rng.scalar(), rng.scalar(), ek);
  CHECK(r3.holds);
  CHECK(r3.lhs == kron(v.column(), ek));

  CHECK_THROWS_AS(eigenvector_correspondence(q, l, AnsatzVector::e1(), lam, mu, Matrix{{0}}), DomainError);
}
