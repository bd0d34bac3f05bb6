#pragma once

#include <complex>
#include <vector>

#include "qtp/bipoly.hpp"
#include "qtp/construct.hpp"
#include "qtp/linearization_space.hpp"
#include "qtp/pencil.hpp"
#include "qtp/quad_poly.hpp"
#include "qtp/unipoly.hpp"

namespace qtp {

/// Q1(λ,μ) x1 = 0, Q2(λ,μ) x2 = 0.
struct QuadSystem2P {
  QuadPoly2P q1;
  QuadPoly2P q2;
};

/// L_i(λ,μ) = A⁽ⁱ⁾ + λB⁽ⁱ⁾ + μC⁽ⁱ⁾, i.e. A = Â3, B = Â1, C = Â2 of each pencil.
struct LinearSystem2P {
  Pencil2P l1;
  Pencil2P l2;
  GaussianRational alpha1 = 1;
  GaussianRational alpha2 = 1;
  std::optional<LinearizationCertificate> cert1;
  std::optional<LinearizationCertificate> cert2;
};

/// Members of 𝕃(Q_i) with ansatz α_i e1, one per component, each certified
/// by build_certificate_alpha_e1. Requires Y21 = Y31 = 0 in both block sets;
/// throws HypothesisViolated otherwise or when a Z matrix is singular.
LinearSystem2P linearize_system(const QuadSystem2P& sys, const GaussianRational& alpha1,
                                const GaussianRational& alpha2, const FreeBlocks& blocks1,
                                const FreeBlocks& blocks2);

/// Standard linearizations of both components (α = 1, FreeBlocks::standard).
LinearSystem2P linearize_system_standard(const QuadSystem2P& sys);

struct DeltaOps {
  Matrix delta0;  // B1⊗C2 - C1⊗B2
  Matrix delta1;  // C1⊗A2 - A1⊗C2
  Matrix delta2;  // A1⊗B2 - B1⊗A2
};

DeltaOps delta_operators(const LinearSystem2P& lin);
/// Same, for explicit pencils.
DeltaOps delta_operators(const Pencil2P& l1, const Pencil2P& l2);

struct SingularityReport {
  GaussianRational det_delta0;
  bool singular = false;
};

SingularityReport singularity_check(const DeltaOps& delta);

struct SpectralPoint {
  std::complex<double> lambda;
  std::complex<double> mu;
  /// max of |f| and |g| at the point, each relative to its scale.
  double residual = 0.0;
};

struct SpectrumReport {
  std::vector<SpectralPoint> points;
  /// 4 n1 n2 for a quadratic system, m1 m2 for a pencil system.
  std::size_t bezout_bound = 0;
  /// deg f * deg g for the determinant polynomials actually solved.
  std::size_t degree_bound = 0;
  bool generic = true;
  bool within_bound = true;
  BiPoly f;
  BiPoly g;
};

struct SpectrumOptions {
  double tol = 1e-9;
};

/// Common zeros of two bivariate polynomials: λ from the squarefree part of
/// Res_μ(f, g), μ from the roots of f(λ0, ·) filtered by |g(λ0, μ)|, both
/// Newton-polished; residuals are relative to scale = 1 + max coefficient
/// magnitude times max(1, |λ|, |μ|)^degree. Points closer than 10 tol
/// (max-norm) are merged; output sorted by (λ, μ) lexicographically.
/// Throws NonGenericSystem when the zero set is not finite.
std::vector<SpectralPoint> common_zeros(const BiPoly& f, const BiPoly& g, const SpectrumOptions& options = {});

/// σ_Q from det Q1, det Q2.
SpectrumReport spectrum_quadratic(const QuadSystem2P& sys, const SpectrumOptions& options = {});
/// σ_L from det L1, det L2.
SpectrumReport spectrum_pencil(const LinearSystem2P& lin, const SpectrumOptions& options = {});

struct SpectralComparison {
  bool equal = false;
  /// Points of σ_Q without a partner in σ_L, and vice versa.
  std::vector<SpectralPoint> unmatched_q;
  std::vector<SpectralPoint> unmatched_l;
  /// Largest distance among matched pairs.
  double max_match_distance = 0.0;
  SpectrumReport spectrum_q;
  SpectrumReport spectrum_l;
};

/// Bidirectional matching of two point sets within `radius` (max-norm).
SpectralComparison compare_spectra(const SpectrumReport& sq, const SpectrumReport& sl, double radius);

/// σ_Q vs σ_L with matching radius 10 tol.
SpectralComparison verify_spectral_equality(const QuadSystem2P& sys, const LinearSystem2P& lin,
                                            const SpectrumOptions& options = {});

struct EigenpairReport {
  double q1_residual = 0.0;
  double q2_residual = 0.0;
  double l1_residual = 0.0;
  double l2_residual = 0.0;
  /// |Δ1 z - λ Δ0 z| and |Δ2 z - μ Δ0 z| (max-norm).
  double delta1_residual = 0.0;
  double delta2_residual = 0.0;
  /// Every residual is exactly zero.
  bool exact_zero = false;
  /// Every residual is below tol * (1 + largest operator entry).
  bool passed = false;
};

/// Checks Q_i x_i, L_i (Λ ⊗ x_i), and both Δ-equations on z = w1 ⊗ w2, exactly.
/// Throws DomainError for a zero eigenvector.
EigenpairReport verify_eigenpair(const QuadSystem2P& sys, const LinearSystem2P& lin, const GaussianRational& lambda,
                                 const GaussianRational& mu, const Matrix& x1, const Matrix& x2, double tol = 1e-9);

}  // namespace qtp
