#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qtp/ansatz.hpp"
#include "qtp/linearization_space.hpp"
#include "qtp/pencil.hpp"
#include "qtp/poly_matrix.hpp"
#include "qtp/quad_poly.hpp"

namespace qtp {

/// The eight appendix cases, keyed by the zero pattern of v = (a, b, c).
/// The pattern a≠0, b=0, c≠0 has two listed transforms; BZeroAlt is the second.
enum class AppendixCase {
  AllNonzero,  // a≠0, b≠0, c≠0
  AZero,       // a=0, b≠0, c≠0
  ABZero,      // a=0, b=0, c≠0
  BZero,       // a≠0, b=0, c≠0
  BCZero,      // a≠0, b=0, c=0
  CZero,       // a≠0, b≠0, c=0
  ACZero,      // a=0, b≠0, c=0
  BZeroAlt,    // a≠0, b=0, c≠0 (alternate transform)
};

inline constexpr std::array<AppendixCase, 8> kAppendixCases = {
    AppendixCase::AllNonzero, AppendixCase::AZero,  AppendixCase::ABZero, AppendixCase::BZero,
    AppendixCase::BCZero,     AppendixCase::CZero,  AppendixCase::ACZero, AppendixCase::BZeroAlt};

std::string_view case_label(AppendixCase c);

/// Case matching the zero pattern of v. Throws ZeroAnsatz for v = 0.
AppendixCase classify(const AnsatzVector& v, bool prefer_alternate = false);

/// Nonsingular 3x3 M with M v = α e1.
struct AppendixTransform {
  Matrix m;
  AppendixCase tag = AppendixCase::AllNonzero;
  GaussianRational alpha;
};

/// Instantiates the appendix matrix for v's zero pattern and checks
/// M v = α e1 and det M ≠ 0 exactly. Throws ZeroAnsatz for v = 0,
/// DomainError for α = 0.
AppendixTransform appendix_transform(const AnsatzVector& v, const GaussianRational& alpha,
                                     bool prefer_alternate = false);

/// Same, with the case chosen by the caller; throws DomainError if the case
/// does not match v's zero pattern.
AppendixTransform appendix_transform(AppendixCase which, const AnsatzVector& v, const GaussianRational& alpha);

/// The 2n x 2n matrix formed by rows 2-3 of M applied to the Z1, Z2 stacks,
/// i.e. the lower-right blocks of (M ⊗ I)[Z1 Z2].
Matrix condition_matrix(const Matrix& m, const Matrix& z1, const Matrix& z2);

/// True when condition_matrix is nonsingular.
bool condition_det_check(const AppendixTransform& t, const Matrix& z1, const Matrix& z2);

enum class CertificateKind {
  /// F L E = diag(Q, I_2n) with det E, det F nonzero constants.
  UnimodularPair,
  /// det L = γ det Q with γ ≠ 0; eigenvalue preservation only.
  DetRatio,
};

std::string_view kind_label(CertificateKind k);

struct LinearizationCertificate {
  CertificateKind kind = CertificateKind::DetRatio;
  std::optional<PolyMatrix> e;
  std::optional<PolyMatrix> f;
  std::optional<GaussianRational> det_e;
  std::optional<GaussianRational> det_f;
  std::optional<GaussianRational> gamma;
  /// Largest |coefficient| of F L E - diag(Q, I); exactly 0 when verified.
  double residual = 0.0;
  bool verified = false;
  std::string note;
};

/// E = [[λI, I, 0], [μI, 0, I], [I, 0, 0]],
/// F = [[I, μA02 + λA11 + A01, λA20 + A10], [0, 0, -I], [0, -I, 0]],
/// checked against the standard linearization of q.
LinearizationCertificate build_certificate_standard(const QuadPoly2P& q);

/// Unimodular certificate for a member with ansatz α e1 whose free blocks
/// satisfy Y21 = Y31 = 0 and det [[Z21, Z22], [Z31, Z32]] ≠ 0:
/// E = [[λ/α I, I, 0], [μ/α I, 0, I], [1/α I, 0, 0]], F = [[I, -W Z⁻¹], [0, Z⁻¹]]
/// where W is the first block row of L restricted to block columns 1-2.
/// Throws HypothesisViolated if the ansatz or the block conditions fail.
LinearizationCertificate build_certificate_alpha_e1(const Pencil2P& l, const QuadPoly2P& q,
                                                    const GaussianRational& alpha);

/// Determinant-ratio certificate: verified iff det L = γ det Q with γ ≠ 0.
LinearizationCertificate certify_linearization(const Pencil2P& l, const QuadPoly2P& q);

struct ProcedureOptions {
  std::uint64_t seed = 0;
  /// Number of random Z re-draws allowed after the caller's blocks fail.
  int redraw_budget = 32;
  /// Re-drawn entries are uniform integers in [-draw_bound, draw_bound].
  int draw_bound = 3;
  bool prefer_alternate_case = false;
};

struct ProcedureResult {
  /// L = generate_member(Q, v, blocks) with the blocks actually used.
  Pencil2P base;
  /// (M ⊗ I) L, a member with ansatz α e1.
  Pencil2P transformed;
  AppendixTransform transform;
  FreeBlocks blocks;
  int redraws = 0;
  /// The caller's Y11 was replaced by 0 because m21 or m31 is nonzero.
  bool y11_forced_zero = false;
  /// The caller's Y21 / Y31 were nonzero and replaced by 0.
  bool y_lower_forced_zero = false;
  AnsatzVector transformed_ansatz;
  LinearizationCertificate certificate;
};

/// Builds a linearization from an arbitrary nonzero ansatz: pick M from the
/// appendix (M = I when v is already α e1), restrict Y1 to [Y11; 0; 0] (Y11 = 0 unless m21 = m31 = 0),
/// re-draw Z1, Z2 until the condition matrix is nonsingular, and transform
/// L by M ⊗ I. Throws ZeroAnsatz, ConditionUnsatisfiable.
ProcedureResult procedure_linearize(const QuadPoly2P& q, const AnsatzVector& v, const GaussianRational& alpha,
                                    const FreeBlocks& blocks, const ProcedureOptions& options = {});

/// Largest |coefficient| over all entries.
double max_coefficient_abs(const PolyMatrix& m);

}  // namespace qtp
