#include "qtp/resultant.hpp"

#include "qtp/elimination.hpp"
#include "qtp/errors.hpp"

namespace qtp {

PolyMatrix sylvester_matrix(const BiPoly& f, const BiPoly& g, Variable eliminate) {
  const int p = f.degree(eliminate);
  const int q = g.degree(eliminate);
  if (p < 1 || q < 1) {
    throw DegreeError("Sylvester matrix needs positive degree in the eliminated variable (got " +
                      std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  const auto fc = f.coefficients_in(eliminate);
  const auto gc = g.coefficients_in(eliminate);
  const auto size = static_cast<std::size_t>(p + q);
  PolyMatrix s(size, size);
  // q shifted copies of f's coefficients (leading first), then p copies of g's.
  for (std::size_t r = 0; r < static_cast<std::size_t>(q); ++r) {
    for (int k = 0; k <= p; ++k) s(r, r + static_cast<std::size_t>(p - k)) = fc[static_cast<std::size_t>(k)];
  }
  for (std::size_t r = 0; r < static_cast<std::size_t>(p); ++r) {
    for (int k = 0; k <= q; ++k) {
      s(static_cast<std::size_t>(q) + r, r + static_cast<std::size_t>(q - k)) = gc[static_cast<std::size_t>(k)];
    }
  }
  return s;
}

UniPoly sylvester_resultant(const BiPoly& f, const BiPoly& g, Variable eliminate) {
  BiPoly r = det(sylvester_matrix(f, g, eliminate));
  Variable remaining = eliminate == Variable::Mu ? Variable::Lambda : Variable::Mu;
  return UniPoly::from_bipoly(r, remaining);
}

ProportionalityResult constant_ratio(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) {
    throw DomainError("proportionality against the zero polynomial");
  }
  ProportionalityResult out;
  if (p.is_zero()) {
    out.proportional = true;
    out.degenerate = true;
    return out;
  }
  const auto& [lead_monomial, lead_coef] = *q.terms().begin();
  GaussianRational ratio = p.coefficient(lead_monomial) / lead_coef;
  if (ratio.is_zero() || p.terms().size() != q.terms().size()) return out;
  for (const auto& [m, c] : q.terms()) {
    if (p.coefficient(m) != ratio * c) return out;
  }
  out.proportional = true;
  out.ratio = ratio;
  return out;
}

}  // namespace qtp
