#include "qtp/elimination.hpp"

#include <algorithm>
#include <utility>

namespace qtp {

GaussianRational det(const Matrix& input) {
  if (!input.is_square()) {
    throw ShapeError("determinant of a non-square matrix");
  }
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  Matrix a = input;
  GaussianRational prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return {};
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

std::size_t rank(const Matrix& input) {
  Matrix a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  GaussianRational prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = GaussianRational{};
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

Matrix inverse(const Matrix& input) {
  if (!input.is_square()) {
    throw ShapeError("inverse of a non-square matrix");
  }
  const std::size_t n = input.rows();
  Matrix a = input;
  Matrix inv = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) {
      throw DomainError("matrix is singular");
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(k, j));
        std::swap(inv(p, j), inv(k, j));
      }
    }
    GaussianRational piv = a(k, k).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= piv;
      inv(k, j) *= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      GaussianRational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::vector<GaussianRational> interpolate_integer_nodes(std::span<const GaussianRational> values) {
  const std::size_t count = values.size();
  if (count == 0) return {};
  // Divided differences on nodes 0, 1, ..., count-1.
  std::vector<GaussianRational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t k = count - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / GaussianRational(static_cast<long>(level));
      if (k == level) break;
    }
  }
  // Newton form to monomial basis: p = dd[d] ; p = p*(x - k) + dd[k].
  std::vector<GaussianRational> poly{dd[count - 1]};
  for (std::size_t k = count - 1; k-- > 0;) {
    std::vector<GaussianRational> next(poly.size() + 1);
    GaussianRational node(static_cast<long>(k));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= node * poly[j];
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  while (poly.size() > 1 && poly.back().is_zero()) poly.pop_back();
  return poly;
}

namespace {

// Upper bound on the degree of det(m) in `v`, or -1 if some row or column is zero.
int det_degree_bound(const PolyMatrix& m, Variable v) {
  const std::size_t n = m.rows();
  int row_sum = 0;
  int col_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int row_max = -1;
    int col_max = -1;
    for (std::size_t j = 0; j < n; ++j) {
      row_max = std::max(row_max, m(i, j).degree(v));
      col_max = std::max(col_max, m(j, i).degree(v));
    }
    if (row_max < 0 || col_max < 0) return -1;
    row_sum += row_max;
    col_sum += col_max;
  }
  return std::min(row_sum, col_sum);
}

}  // namespace

BiPoly det(const PolyMatrix& m) {
  if (!m.is_square()) {
    throw ShapeError("determinant of a non-square polynomial matrix");
  }
  if (m.rows() == 0) return 1;
  const int dl = det_degree_bound(m, Variable::Lambda);
  const int dm = det_degree_bound(m, Variable::Mu);
  if (dl < 0 || dm < 0) return {};

  const auto nl = static_cast<std::size_t>(dl) + 1;
  const auto nm = static_cast<std::size_t>(dm) + 1;
  // mu_coeffs[i][k]: coefficient of μ^k in det(m)(λ = i, μ).
  std::vector<std::vector<GaussianRational>> mu_coeffs(nl);
  for (std::size_t i = 0; i < nl; ++i) {
    std::vector<GaussianRational> samples(nm);
    for (std::size_t j = 0; j < nm; ++j) {
      samples[j] = det(eval(m, GaussianRational(static_cast<long>(i)), GaussianRational(static_cast<long>(j))));
    }
    mu_coeffs[i] = interpolate_integer_nodes(samples);
    mu_coeffs[i].resize(nm);
  }
  BiPoly out;
  for (std::size_t k = 0; k < nm; ++k) {
    std::vector<GaussianRational> column(nl);
    for (std::size_t i = 0; i < nl; ++i) column[i] = mu_coeffs[i][k];
    auto lambda_coeffs = interpolate_integer_nodes(column);
    for (std::size_t a = 0; a < lambda_coeffs.size(); ++a) {
      out.add_term({static_cast<int>(a), static_cast<int>(k)}, lambda_coeffs[a]);
    }
  }
  return out;
}

}  // namespace qtp
