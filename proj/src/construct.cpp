#include "qtp/construct.hpp"

#include <algorithm>
#include <random>

#include "qtp/elimination.hpp"
#include "qtp/resultant.hpp"

namespace qtp {

std::string_view case_label(AppendixCase c) {
  switch (c) {
    case AppendixCase::AllNonzero: return "a!=0, b!=0, c!=0";
    case AppendixCase::AZero: return "a=0, b!=0, c!=0";
    case AppendixCase::ABZero: return "a=0, b=0, c!=0";
    case AppendixCase::BZero: return "a!=0, b=0, c!=0";
    case AppendixCase::BCZero: return "a!=0, b=0, c=0";
    case AppendixCase::CZero: return "a!=0, b!=0, c=0";
    case AppendixCase::ACZero: return "a=0, b!=0, c=0";
    case AppendixCase::BZeroAlt: return "a!=0, b=0, c!=0 (alternate)";
  }
  return "?";
}

std::string_view kind_label(CertificateKind k) {
  return k == CertificateKind::UnimodularPair ? "unimodular-pair" : "det-ratio";
}

AppendixCase classify(const AnsatzVector& v, bool prefer_alternate) {
  const bool a = !v[0].is_zero();
  const bool b = !v[1].is_zero();
  const bool c = !v[2].is_zero();
  if (!a && !b && !c) throw ZeroAnsatz("ansatz vector is zero");
  if (a && b && c) return AppendixCase::AllNonzero;
  if (!a && b && c) return AppendixCase::AZero;
  if (!a && !b) return AppendixCase::ABZero;
  if (a && !b && c) return prefer_alternate ? AppendixCase::BZeroAlt : AppendixCase::BZero;
  if (a && !b) return AppendixCase::BCZero;
  if (a) return AppendixCase::CZero;
  return AppendixCase::ACZero;
}

AppendixTransform appendix_transform(const AnsatzVector& v, const GaussianRational& alpha, bool prefer_alternate) {
  return appendix_transform(classify(v, prefer_alternate), v, alpha);
}

AppendixTransform appendix_transform(AppendixCase which, const AnsatzVector& v, const GaussianRational& alpha) {
  if (alpha.is_zero()) {
    throw DomainError("alpha must be nonzero");
  }
  AppendixCase pattern = classify(v);
  bool matches = which == pattern || (which == AppendixCase::BZeroAlt && pattern == AppendixCase::BZero);
  if (!matches) {
    throw DomainError("appendix case '" + std::string(case_label(which)) + "' does not match v = " + v.str());
  }
  const GaussianRational& a = v[0];
  const GaussianRational& b = v[1];
  const GaussianRational& c = v[2];
  auto inv = [](const GaussianRational& x) { return x.inverse(); };
  const GaussianRational zero;
  const GaussianRational one = 1;
  Matrix m;
  switch (which) {
    case AppendixCase::AllNonzero:
      m = {{alpha / a, zero, zero}, {inv(a), -inv(b), zero}, {inv(a), zero, -inv(c)}};
      break;
    case AppendixCase::AZero:
      m = {{zero, alpha / b, zero}, {zero, -inv(b), inv(c)}, {one, zero, zero}};
      break;
    case AppendixCase::ABZero:
      m = {{one, one, alpha / c}, {one, one, zero}, {zero, one, zero}};
      break;
    case AppendixCase::BZero:
      m = {{alpha / a, zero, zero}, {zero, one, zero}, {-inv(a), zero, inv(c)}};
      break;
    case AppendixCase::BCZero:
      m = {{alpha / a, zero, zero}, {zero, one, zero}, {zero, one, one}};
      break;
    case AppendixCase::CZero:
      m = {{alpha / a, zero, one}, {inv(a), -inv(b), one}, {-inv(a), inv(b), zero}};
      break;
    case AppendixCase::ACZero:
      m = {{one, alpha / b, zero}, {one, zero, zero}, {one, zero, one}};
      break;
    case AppendixCase::BZeroAlt:
      m = {{alpha / a, zero, zero}, {inv(a), zero, -inv(c)}, {zero, one, zero}};
      break;
  }
  if (m * v.column() != AnsatzVector::e1(alpha).column()) {
    throw InternalError("appendix transform does not map v to alpha e1");
  }
  if (det(m).is_zero()) {
    throw InternalError("appendix transform is singular");
  }
  return {m, which, alpha};
}

Matrix condition_matrix(const Matrix& m, const Matrix& z1, const Matrix& z2) {
  const std::size_t n = z1.cols();
  if (z1.rows() != 3 * n || z2.rows() != 3 * n || z2.cols() != n || m.rows() != 3 || m.cols() != 3) {
    throw ShapeError("condition check needs a 3x3 transform and 3n x n Z blocks");
  }
  Matrix transformed = kron(m, Matrix::identity(n)) * hstack({z1, z2});
  return transformed.slice(n, 0, 2 * n, 2 * n);
}

bool condition_det_check(const AppendixTransform& t, const Matrix& z1, const Matrix& z2) {
  return !det(condition_matrix(t.m, z1, z2)).is_zero();
}

double max_coefficient_abs(const PolyMatrix& m) {
  double best = 0.0;
  for (const auto& p : m.entries()) best = std::max(best, p.max_coefficient_abs());
  return best;
}

namespace {

PolyMatrix diag_q_identity(const QuadPoly2P& q) {
  const std::size_t n = q.n();
  PolyMatrix target = to_poly(Matrix::identity(3 * n));
  target.paste(0, 0, q.to_poly());
  return target;
}

// Fills det_e, det_f, residual and verified from E, F and the pencil.
void finish_unimodular(LinearizationCertificate& cert, const Pencil2P& l, const QuadPoly2P& q) {
  cert.kind = CertificateKind::UnimodularPair;
  PolyMatrix product = *cert.f * l.to_poly() * *cert.e;
  PolyMatrix diff = product - diag_q_identity(q);
  cert.residual = max_coefficient_abs(diff);
  BiPoly de = det(*cert.e);
  BiPoly df = det(*cert.f);
  bool unimodular = de.is_constant() && !de.is_zero() && df.is_constant() && !df.is_zero();
  if (de.is_constant()) cert.det_e = de.constant_term();
  if (df.is_constant()) cert.det_f = df.constant_term();
  cert.verified = diff.is_zero() && unimodular;
  if (!unimodular) cert.note = "E or F is not unimodular";
}

}  // namespace

LinearizationCertificate build_certificate_standard(const QuadPoly2P& q) {
  const std::size_t n = q.n();
  const PolyMatrix id = to_poly(Matrix::identity(n));
  const PolyMatrix lam = scale(BiPoly::lambda(), id);
  const PolyMatrix mu = scale(BiPoly::mu(), id);
  const PolyMatrix zero(n, n);

  LinearizationCertificate cert;
  cert.e = vstack({hstack({lam, id, zero}), hstack({mu, zero, id}), hstack({id, zero, zero})});
  PolyMatrix p = scale(BiPoly::mu(), to_poly(q[Coef::A02])) + scale(BiPoly::lambda(), to_poly(q[Coef::A11])) +
                 to_poly(q[Coef::A01]);
  PolyMatrix r = scale(BiPoly::lambda(), to_poly(q[Coef::A20])) + to_poly(q[Coef::A10]);
  cert.f = vstack({hstack({id, p, r}), hstack({zero, zero, -id}), hstack({zero, -id, zero})});
  finish_unimodular(cert, standard_linearization(q), q);
  if (!cert.verified) {
    throw InternalError("standard linearization certificate failed: residual " + std::to_string(cert.residual));
  }
  return cert;
}

LinearizationCertificate build_certificate_alpha_e1(const Pencil2P& l, const QuadPoly2P& q,
                                                    const GaussianRational& alpha) {
  if (alpha.is_zero()) {
    throw DomainError("alpha must be nonzero");
  }
  MembershipResult member = membership(l, q);
  if (!member.is_member() || member.ambiguous || member.v != AnsatzVector::e1(alpha)) {
    throw HypothesisViolated("pencil does not have ansatz alpha*e1 with alpha = " + alpha.str());
  }
  const std::size_t n = q.n();
  const FreeBlocks blocks = read_free_blocks(l);
  if (!blocks.y(1).is_zero() || !blocks.y(2).is_zero()) {
    throw HypothesisViolated("Y21 and Y31 must vanish");
  }
  const Matrix z = condition_matrix(Matrix::identity(3), blocks.z1, blocks.z2);
  if (det(z).is_zero()) {
    throw HypothesisViolated("[[Z21, Z22], [Z31, Z32]] is singular");
  }
  const Matrix z_inv = inverse(z);

  const PolyMatrix id = to_poly(Matrix::identity(n));
  const PolyMatrix zero(n, n);
  const GaussianRational inv_alpha = alpha.inverse();
  LinearizationCertificate cert;
  cert.e = vstack({hstack({scale(BiPoly::monomial({1, 0}, inv_alpha), id), id, zero}),
                   hstack({scale(BiPoly::monomial({0, 1}, inv_alpha), id), zero, id}),
                   hstack({to_poly(inv_alpha * Matrix::identity(n)), zero, zero})});
  const PolyMatrix w = l.to_poly().slice(0, 0, n, 2 * n);
  const PolyMatrix z_inv_poly = to_poly(z_inv);
  cert.f = vstack({hstack({id, -(w * z_inv_poly)}), hstack({PolyMatrix(2 * n, n), z_inv_poly})});
  finish_unimodular(cert, l, q);
  return cert;
}

LinearizationCertificate certify_linearization(const Pencil2P& l, const QuadPoly2P& q) {
  if (l.m() != 3 * q.n()) {
    throw ShapeError("pencil size does not match 3n");
  }
  LinearizationCertificate cert;
  cert.kind = CertificateKind::DetRatio;
  const BiPoly det_l = det(l.to_poly());
  const BiPoly det_q = det(q.to_poly());
  if (det_q.is_zero()) {
    cert.note = "det Q is identically zero";
    return cert;
  }
  ProportionalityResult ratio = constant_ratio(det_l, det_q);
  if (!ratio.proportional) {
    cert.note = "det L is not a constant multiple of det Q";
    return cert;
  }
  if (ratio.degenerate) {
    cert.note = "det L is identically zero";
    return cert;
  }
  cert.gamma = ratio.ratio;
  cert.verified = true;
  return cert;
}

ProcedureResult procedure_linearize(const QuadPoly2P& q, const AnsatzVector& v, const GaussianRational& alpha,
                                    const FreeBlocks& blocks, const ProcedureOptions& options) {
  if (v.is_zero()) {
    throw ZeroAnsatz("procedure needs a nonzero ansatz vector");
  }
  blocks.validate();
  if (blocks.n != q.n()) {
    throw ShapeError("free blocks do not match the polynomial size");
  }
  const std::size_t n = q.n();
  ProcedureResult out;
  if (v == AnsatzVector::e1(alpha) && !alpha.is_zero()) {
    // Already α e1: no transform needed.
    out.transform = {Matrix::identity(3), AppendixCase::BCZero, alpha};
  } else {
    out.transform = appendix_transform(v, alpha, options.prefer_alternate_case);
  }
  out.blocks = blocks;

  const Matrix& m = out.transform.m;
  Matrix y_lower = blocks.y1.slice(n, 0, 2 * n, n);
  if (!y_lower.is_zero()) {
    out.y_lower_forced_zero = true;
    out.blocks.y1.paste(n, 0, Matrix(2 * n, n));
  }
  if (!(m(1, 0).is_zero() && m(2, 0).is_zero()) && !blocks.y(0).is_zero()) {
    out.y11_forced_zero = true;
    out.blocks.y1.paste(0, 0, Matrix(n, n));
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> draw(-options.draw_bound, options.draw_bound);
  while (!condition_det_check(out.transform, out.blocks.z1, out.blocks.z2)) {
    if (out.redraws >= options.redraw_budget) {
      throw ConditionUnsatisfiable("no nonsingular condition matrix after " + std::to_string(out.redraws) +
                                   " re-draws (case " + std::string(case_label(out.transform.tag)) + ")");
    }
    ++out.redraws;
    for (Matrix* z : {&out.blocks.z1, &out.blocks.z2}) {
      for (std::size_t r = 0; r < 3 * n; ++r) {
        for (std::size_t c = 0; c < n; ++c) (*z)(r, c) = GaussianRational(draw(rng));
      }
    }
  }

  out.base = generate_member(q, v, out.blocks);
  out.transformed = out.base.left_block_transform(m);
  MembershipResult member = membership(out.transformed, q);
  if (!member.is_member()) {
    throw InternalError("transformed pencil left 𝕃(Q)");
  }
  out.transformed_ansatz = member.v;
  out.certificate = build_certificate_alpha_e1(out.transformed, q, alpha);
  return out;
}

}  // namespace qtp
