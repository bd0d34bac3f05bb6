#include "qtp/qep.hpp"

#include <algorithm>
#include <cmath>

#include "qtp/elimination.hpp"
#include "qtp/resultant.hpp"
#include "qtp/roots.hpp"

namespace qtp {

LinearSystem2P linearize_system(const QuadSystem2P& sys, const GaussianRational& alpha1,
                                const GaussianRational& alpha2, const FreeBlocks& blocks1,
                                const FreeBlocks& blocks2) {
  auto build = [](const QuadPoly2P& q, const GaussianRational& alpha, const FreeBlocks& blocks, int which) {
    if (alpha.is_zero()) {
      throw DomainError("alpha" + std::to_string(which) + " must be nonzero");
    }
    blocks.validate();
    if (!blocks.y(1).is_zero() || !blocks.y(2).is_zero()) {
      throw HypothesisViolated("component " + std::to_string(which) + ": Y1 must be [Y11; 0; 0]");
    }
    Pencil2P l = generate_member(q, AnsatzVector::e1(alpha), blocks);
    return std::pair{l, build_certificate_alpha_e1(l, q, alpha)};
  };
  auto [l1, c1] = build(sys.q1, alpha1, blocks1, 1);
  auto [l2, c2] = build(sys.q2, alpha2, blocks2, 2);
  return {l1, l2, alpha1, alpha2, c1, c2};
}

LinearSystem2P linearize_system_standard(const QuadSystem2P& sys) {
  return linearize_system(sys, 1, 1, FreeBlocks::standard(sys.q1), FreeBlocks::standard(sys.q2));
}

DeltaOps delta_operators(const Pencil2P& l1, const Pencil2P& l2) {
  const Matrix& a1 = l1.a3();
  const Matrix& b1 = l1.a1();
  const Matrix& c1 = l1.a2();
  const Matrix& a2 = l2.a3();
  const Matrix& b2 = l2.a1();
  const Matrix& c2 = l2.a2();
  return {kron(b1, c2) - kron(c1, b2), kron(c1, a2) - kron(a1, c2), kron(a1, b2) - kron(b1, a2)};
}

DeltaOps delta_operators(const LinearSystem2P& lin) { return delta_operators(lin.l1, lin.l2); }

SingularityReport singularity_check(const DeltaOps& delta) {
  SingularityReport out;
  out.det_delta0 = det(delta.delta0);
  out.singular = out.det_delta0.is_zero();
  return out;
}

namespace {

using cd = std::complex<double>;

struct Partials {
  cd value;
  cd d_lambda;
  cd d_mu;
};

Partials eval_partials(const BiPoly& p, cd lambda, cd mu) {
  Partials out;
  for (const auto& [m, coef] : p.terms()) {
    cd c = coef.to_complex();
    cd lp = std::pow(lambda, m.lambda);
    cd mp = std::pow(mu, m.mu);
    out.value += c * lp * mp;
    if (m.lambda > 0) out.d_lambda += c * static_cast<double>(m.lambda) * std::pow(lambda, m.lambda - 1) * mp;
    if (m.mu > 0) out.d_mu += c * static_cast<double>(m.mu) * lp * std::pow(mu, m.mu - 1);
  }
  return out;
}

double relative_residual(const BiPoly& p, cd lambda, cd mu) {
  double w = std::pow(std::max({1.0, std::abs(lambda), std::abs(mu)}), std::max(0, p.total_degree()));
  return std::abs(p.eval(lambda, mu)) / ((1.0 + p.max_coefficient_abs()) * w);
}

double point_residual(const BiPoly& f, const BiPoly& g, cd lambda, cd mu) {
  return std::max(relative_residual(f, lambda, mu), relative_residual(g, lambda, mu));
}

void newton_polish(const BiPoly& f, const BiPoly& g, cd& lambda, cd& mu) {
  double best = point_residual(f, g, lambda, mu);
  for (int iter = 0; iter < 8 && best > 0.0; ++iter) {
    Partials pf = eval_partials(f, lambda, mu);
    Partials pg = eval_partials(g, lambda, mu);
    cd jac = pf.d_lambda * pg.d_mu - pf.d_mu * pg.d_lambda;
    if (std::abs(jac) == 0.0) return;
    cd dl = (pf.value * pg.d_mu - pf.d_mu * pg.value) / jac;
    cd dm = (pf.d_lambda * pg.value - pf.value * pg.d_lambda) / jac;
    cd nl = lambda - dl;
    cd nm = mu - dm;
    double r = point_residual(f, g, nl, nm);
    if (!(r < best)) return;
    lambda = nl;
    mu = nm;
    best = r;
  }
}

// f(λ0, ·) as complex coefficients (ascending in μ), with numerically
// negligible leading terms removed.
std::vector<cd> restrict_to_lambda(const BiPoly& p, cd lambda0, double tol) {
  std::vector<cd> c(static_cast<std::size_t>(std::max(0, p.degree(Variable::Mu) + 1)));
  for (const auto& [m, coef] : p.terms()) c[m.mu] += coef.to_complex() * std::pow(lambda0, m.lambda);
  double scale = (1.0 + p.max_coefficient_abs()) * std::pow(std::max(1.0, std::abs(lambda0)), p.degree(Variable::Lambda));
  while (!c.empty() && std::abs(c.back()) <= tol * scale) c.pop_back();
  return c;
}

std::vector<cd> lambda_candidates(const BiPoly& f, const BiPoly& g) {
  const bool f_has_mu = f.degree(Variable::Mu) >= 1;
  const bool g_has_mu = g.degree(Variable::Mu) >= 1;
  UniPoly source;
  if (f_has_mu && g_has_mu) {
    source = sylvester_resultant(f, g, Variable::Mu);
    if (source.is_zero()) {
      throw NonGenericSystem("Res_mu(f, g) vanishes identically: common factor, infinitely many zeros");
    }
  } else if (!f_has_mu && !g_has_mu) {
    UniPoly uf = UniPoly::from_bipoly(f, Variable::Lambda);
    UniPoly ug = UniPoly::from_bipoly(g, Variable::Lambda);
    if (UniPoly::gcd(uf, ug).degree() >= 1) {
      throw NonGenericSystem("f and g share a root in λ and are free in μ: infinitely many zeros");
    }
    return {};
  } else {
    source = UniPoly::from_bipoly(f_has_mu ? g : f, Variable::Lambda);
  }
  if (source.degree() < 1) return {};
  return unipoly_roots(source.squarefree_part());
}

bool lex_point_less(const SpectralPoint& a, const SpectralPoint& b) {
  if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
  if (a.lambda.imag() != b.lambda.imag()) return a.lambda.imag() < b.lambda.imag();
  if (a.mu.real() != b.mu.real()) return a.mu.real() < b.mu.real();
  return a.mu.imag() < b.mu.imag();
}

double point_distance(const SpectralPoint& a, const SpectralPoint& b) {
  return std::max(std::abs(a.lambda - b.lambda), std::abs(a.mu - b.mu));
}

}  // namespace

std::vector<SpectralPoint> common_zeros(const BiPoly& f, const BiPoly& g, const SpectrumOptions& options) {
  if (f.is_zero() || g.is_zero()) {
    throw NonGenericSystem("a determinant polynomial vanishes identically");
  }
  if (f.is_constant() || g.is_constant()) return {};

  std::vector<SpectralPoint> found;
  for (cd lambda0 : lambda_candidates(f, g)) {
    std::vector<cd> fm = restrict_to_lambda(f, lambda0, options.tol);
    std::vector<cd> gm = restrict_to_lambda(g, lambda0, options.tol);
    if (fm.empty() && gm.empty()) {
      throw NonGenericSystem("f and g both vanish on the line λ = const");
    }
    // f(λ0, ·) ≡ 0 means the line λ = λ0 lies in f's zero set; use g instead.
    const std::vector<cd>& source = fm.empty() ? gm : fm;
    if (source.size() < 2) continue;
    for (cd mu0 : polynomial_roots(source)) {
      cd lambda = lambda0;
      cd mu = mu0;
      newton_polish(f, g, lambda, mu);
      double r = point_residual(f, g, lambda, mu);
      if (r < options.tol) found.push_back({lambda, mu, r});
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.residual < b.residual; });
  std::vector<SpectralPoint> unique;
  for (const auto& p : found) {
    bool duplicate = std::any_of(unique.begin(), unique.end(),
                                 [&](const SpectralPoint& u) { return point_distance(u, p) < 10.0 * options.tol; });
    if (!duplicate) unique.push_back(p);
  }
  std::sort(unique.begin(), unique.end(), lex_point_less);
  return unique;
}

namespace {

SpectrumReport solve_pair(BiPoly f, BiPoly g, std::size_t bezout_bound, const SpectrumOptions& options) {
  SpectrumReport report;
  report.bezout_bound = bezout_bound;
  report.degree_bound = static_cast<std::size_t>(std::max(0, f.total_degree())) *
                        static_cast<std::size_t>(std::max(0, g.total_degree()));
  report.points = common_zeros(f, g, options);
  report.f = std::move(f);
  report.g = std::move(g);
  report.within_bound = report.points.size() <= report.bezout_bound;
  return report;
}

}  // namespace

SpectrumReport spectrum_quadratic(const QuadSystem2P& sys, const SpectrumOptions& options) {
  return solve_pair(det(sys.q1.to_poly()), det(sys.q2.to_poly()), 4 * sys.q1.n() * sys.q2.n(), options);
}

SpectrumReport spectrum_pencil(const LinearSystem2P& lin, const SpectrumOptions& options) {
  return solve_pair(det(lin.l1.to_poly()), det(lin.l2.to_poly()), lin.l1.m() * lin.l2.m(), options);
}

SpectralComparison compare_spectra(const SpectrumReport& sq, const SpectrumReport& sl, double radius) {
  SpectralComparison out;
  out.spectrum_q = sq;
  out.spectrum_l = sl;
  auto match = [&](const std::vector<SpectralPoint>& from, const std::vector<SpectralPoint>& to,
                   std::vector<SpectralPoint>& unmatched) {
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& t : to) best = std::min(best, point_distance(p, t));
      if (best <= radius) {
        out.max_match_distance = std::max(out.max_match_distance, best);
      } else {
        unmatched.push_back(p);
      }
    }
  };
  match(sq.points, sl.points, out.unmatched_q);
  match(sl.points, sq.points, out.unmatched_l);
  out.equal = out.unmatched_q.empty() && out.unmatched_l.empty();
  return out;
}

SpectralComparison verify_spectral_equality(const QuadSystem2P& sys, const LinearSystem2P& lin,
                                            const SpectrumOptions& options) {
  return compare_spectra(spectrum_quadratic(sys, options), spectrum_pencil(lin, options), 10.0 * options.tol);
}

EigenpairReport verify_eigenpair(const QuadSystem2P& sys, const LinearSystem2P& lin, const GaussianRational& lambda,
                                 const GaussianRational& mu, const Matrix& x1, const Matrix& x2, double tol) {
  if (x1.is_zero() || x2.is_zero()) {
    throw DomainError("eigenvectors must be nonzero");
  }
  if (x1.rows() != sys.q1.n() || x2.rows() != sys.q2.n() || x1.cols() != 1 || x2.cols() != 1) {
    throw ShapeError("eigenvector sizes do not match the system");
  }
  const Matrix big_lambda = Matrix::column(std::array<GaussianRational, 3>{lambda, mu, GaussianRational(1)});
  const Matrix w1 = kron(big_lambda, x1);
  const Matrix w2 = kron(big_lambda, x2);
  const Matrix z = kron(w1, w2);
  const DeltaOps delta = delta_operators(lin);
  const Matrix d0z = delta.delta0 * z;

  const Matrix r_q1 = sys.q1.eval(lambda, mu) * x1;
  const Matrix r_q2 = sys.q2.eval(lambda, mu) * x2;
  const Matrix r_l1 = lin.l1.eval(lambda, mu) * w1;
  const Matrix r_l2 = lin.l2.eval(lambda, mu) * w2;
  const Matrix r_d1 = delta.delta1 * z - lambda * d0z;
  const Matrix r_d2 = delta.delta2 * z - mu * d0z;

  EigenpairReport out;
  out.q1_residual = max_abs(r_q1);
  out.q2_residual = max_abs(r_q2);
  out.l1_residual = max_abs(r_l1);
  out.l2_residual = max_abs(r_l2);
  out.delta1_residual = max_abs(r_d1);
  out.delta2_residual = max_abs(r_d2);
  out.exact_zero = r_q1.is_zero() && r_q2.is_zero() && r_l1.is_zero() && r_l2.is_zero() && r_d1.is_zero() &&
                   r_d2.is_zero();

  double scale = 1.0;
  for (const Matrix* m : {&delta.delta0, &delta.delta1, &delta.delta2}) scale = std::max(scale, 1.0 + max_abs(*m));
  const double worst = std::max({out.q1_residual, out.q2_residual, out.l1_residual, out.l2_residual,
                                 out.delta1_residual, out.delta2_residual});
  out.passed = worst < tol * scale;
  return out;
}

}  // namespace qtp
