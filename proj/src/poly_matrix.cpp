#include "qtp/poly_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace qtp {

PolyMatrix to_poly(const Matrix& m) {
  return m.map([](const GaussianRational& x) { return BiPoly(x); });
}

Matrix to_scalar(const PolyMatrix& m) {
  return m.map([](const BiPoly& p) {
    if (!p.is_constant()) {
      throw DegreeError("entry " + p.str() + " is not constant");
    }
    return p.constant_term();
  });
}

Matrix eval(const PolyMatrix& m, const GaussianRational& lambda, const GaussianRational& mu) {
  return m.map([&](const BiPoly& p) { return p.eval(lambda, mu); });
}

int max_total_degree(const PolyMatrix& m) {
  int d = -1;
  for (const auto& p : m.entries()) d = std::max(d, p.total_degree());
  return d;
}

PolyMatrix scale(const BiPoly& s, const PolyMatrix& m) {
  return m.map([&](const BiPoly& p) { return s * p; });
}

double max_abs(const Matrix& m) {
  double best = 0.0;
  for (const auto& x : m.entries()) best = std::max(best, x.abs());
  return best;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]\n";
  }
  return os.str();
}

}  // namespace qtp
