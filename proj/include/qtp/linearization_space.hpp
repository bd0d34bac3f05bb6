#pragma once

#include <optional>

#include "qtp/ansatz.hpp"
#include "qtp/pencil.hpp"
#include "qtp/quad_poly.hpp"

namespace qtp {

/// The free 3n x n blocks Y1, Z1, Z2 that parameterize a member of 𝕃(Q)
/// for a fixed ansatz vector. Sub-blocks are addressed by block row
/// (0-based), e.g. y(1) is Y21.
struct FreeBlocks {
  std::size_t n = 0;
  Matrix y1;
  Matrix z1;
  Matrix z2;

  static FreeBlocks zero(std::size_t n);
  /// Y1 = 0, Z1 = [A10; 0; -I], Z2 = [A01; -I; 0]: yields the standard linearization for v = e1.
  static FreeBlocks standard(const QuadPoly2P& q);

  /// Throws ShapeError unless all three blocks are 3n x n.
  void validate() const;

  Matrix y(std::size_t row) const { return y1.block(row, 0, n); }
  Matrix z1_block(std::size_t row) const { return z1.block(row, 0, n); }
  Matrix z2_block(std::size_t row) const { return z2.block(row, 0, n); }

  friend bool operator==(const FreeBlocks&, const FreeBlocks&) = default;
};

enum class MembershipStatus { Member, NotMember };

struct MembershipResult {
  MembershipStatus status = MembershipStatus::NotMember;
  AnsatzVector v;
  /// Q's coefficient row is zero, so no ansatz is determined; v is reported as 0.
  bool ambiguous = false;
  bool is_member() const { return status == MembershipStatus::Member; }
};

/// Recovers v from box_add(L) = v ⊗ [A20 A11 A02 A10 A01 A00], or reports NotMember.
///
/// v_k is read from block row k against the first nonzero entry of the
/// coefficient row; every entry of the block row must then match exactly.
MembershipResult membership(const Pencil2P& l, const QuadPoly2P& q);

/// The member of 𝕃(Q) with ansatz v and free blocks (Y1, Z1, Z2):
///   Â1 = [v⊗A20 | -Y1 + v⊗A11 | -Z1 + v⊗A10]
///   Â2 = [Y1    | v⊗A02       | -Z2 + v⊗A01]
///   Â3 = [Z1    | Z2          | v⊗A00      ]
Pencil2P generate_member(const QuadPoly2P& q, const AnsatzVector& v, const FreeBlocks& blocks);

/// Element of the kernel of L ↦ L(Λ ⊗ I): Â1 = [0 | -Y1 | -Z1], Â2 = [Y1 | 0 | -Z2], Â3 = [Z1 | Z2 | 0].
Pencil2P kernel_member(const FreeBlocks& blocks);

/// Reads (Y1, Z1, Z2) back from a pencil of the generate_member form
/// (Y1 = block column 1 of Â2, Z1 and Z2 = block columns 1 and 2 of Â3).
FreeBlocks read_free_blocks(const Pencil2P& l);

struct DimensionReport {
  std::size_t n = 0;
  /// 9n² + 3 (or 9n² when Q = 0).
  std::size_t dimension = 0;
  /// Exact rank of the stacked parameter directions.
  std::size_t witness_rank = 0;
  std::size_t parameter_count = 0;
  /// Q = 0: the three ansatz directions collapse into the kernel.
  bool degenerate = false;
  bool verified = false;
};

/// dim 𝕃(Q) with a constructive witness: the 9n² + 3 canonical parameter
/// directions (three ansatz unit vectors with zero blocks, then every unit
/// entry of Y1, Z1, Z2 with zero ansatz) are vectorized and their exact rank taken.
DimensionReport space_dimension(const QuadPoly2P& q);

/// One-parameter pencil λ X1 + X3 of size 2n.
struct OneParamPencil {
  Matrix x1;
  Matrix x3;
  PolyMatrix to_poly() const;
};

/// The μ = 0 space member for v ∈ C² and Z1 ∈ C^{2n x n}:
/// X1 = [v⊗A20 | -Z1 + v⊗A10], X3 = [Z1 | v⊗A00].
OneParamPencil one_parameter_member(const QuadPoly2P& q, const GaussianRational& v1, const GaussianRational& v2,
                                    const Matrix& z1);

struct MuZeroReduction {
  OneParamPencil pencil;
  GaussianRational v1;
  GaussianRational v2;
  /// (λ X1 + X3)((λ,1)ᵀ ⊗ I_n) = (v1, v2)ᵀ ⊗ (λ²A20 + λA10 + A00), checked exactly.
  bool identity_holds = false;
};

/// Restricts a member L ∈ 𝕃(Q) to μ = 0: keeps block rows 1-2 and the block
/// columns multiplying λ and 1. Throws HypothesisViolated if L is not a member.
MuZeroReduction reduce_mu_zero(const Pencil2P& l, const QuadPoly2P& q);

}  // namespace qtp
