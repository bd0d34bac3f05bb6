#pragma once

#include <array>
#include <string>

#include "qtp/dense_matrix.hpp"

namespace qtp {

/// The v in L(λ,μ)(Λ ⊗ I) = v ⊗ Q(λ,μ).
struct AnsatzVector {
  std::array<GaussianRational, 3> v{};

  static AnsatzVector e1(const GaussianRational& alpha = 1) { return {{alpha, 0, 0}}; }

  const GaussianRational& operator[](std::size_t k) const { return v[k]; }
  GaussianRational& operator[](std::size_t k) { return v[k]; }
  bool is_zero() const { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }
  /// 3x1 column.
  Matrix column() const { return Matrix::column(v); }
  std::string str() const { return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")"; }

  friend AnsatzVector operator+(const AnsatzVector& a, const AnsatzVector& b) {
    return {{a[0] + b[0], a[1] + b[1], a[2] + b[2]}};
  }
  friend AnsatzVector operator*(const GaussianRational& s, const AnsatzVector& a) {
    return {{s * a[0], s * a[1], s * a[2]}};
  }
  friend bool operator==(const AnsatzVector&, const AnsatzVector&) = default;
};

}  // namespace qtp
