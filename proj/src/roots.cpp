#include "qtp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qtp {

void sort_lex(std::vector<std::complex<double>>& values) {
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
}

std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> input,
                                                   const RootOptions& options) {
  using cd = std::complex<double>;
  std::vector<cd> c(input.begin(), input.end());
  while (!c.empty() && c.back() == cd{}) c.pop_back();
  if (c.size() < 2) {
    throw DegreeError("root finding needs a polynomial of degree >= 1");
  }
  const std::size_t d = c.size() - 1;
  const cd lead = c.back();
  for (auto& x : c) x /= lead;

  // Zero roots are exact; strip them so the iteration only sees c_0 != 0.
  std::size_t zeros = 0;
  while (zeros < d && c[zeros] == cd{}) ++zeros;
  std::vector<cd> roots(zeros, cd{});
  std::vector<cd> p(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
  const std::size_t m = p.size() - 1;
  if (m == 0) {
    sort_lex(roots);
    return roots;
  }

  double bound = 0.0;
  for (std::size_t k = 0; k < m; ++k) bound = std::max(bound, std::abs(p[k]));
  const double radius = std::max(1.0, 1.0 + bound);
  std::vector<cd> z(m);
  for (std::size_t k = 0; k < m; ++k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<bool> done(m, false);
  std::size_t remaining = m;
  for (int iter = 0; iter < options.max_iterations && remaining > 0; ++iter) {
    for (std::size_t k = 0; k < m; ++k) {
      if (done[k]) continue;
      // Horner for p, p', and the running bound sum |p_j| |z|^j.
      cd value = p[m];
      cd deriv{};
      double absz = std::abs(z[k]);
      double err_bound = std::abs(p[m]);
      for (std::size_t j = m; j-- > 0;) {
        deriv = deriv * z[k] + value;
        value = value * z[k] + p[j];
        err_bound = err_bound * absz + std::abs(p[j]);
      }
      if (std::abs(value) <= 4.0 * eps * err_bound) {
        done[k] = true;
        --remaining;
        continue;
      }
      cd ratio = value / deriv;
      cd repulsion{};
      for (std::size_t j = 0; j < m; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      cd step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        step = ratio;
      }
      z[k] -= step;
      if (std::abs(step) < options.tol * std::max(1.0, std::abs(z[k]))) {
        done[k] = true;
        --remaining;
      }
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  // Parts below the accuracy of the iteration are noise; zeroing them keeps
  // conjugate and real roots in a stable order.
  for (auto& r : roots) {
    const double floor = options.tol * std::max(1.0, std::abs(r));
    r = {std::abs(r.real()) < floor ? 0.0 : r.real(), std::abs(r.imag()) < floor ? 0.0 : r.imag()};
  }
  sort_lex(roots);
  if (remaining > 0) {
    throw ConvergenceError("Aberth iteration did not converge in " + std::to_string(options.max_iterations) +
                               " iterations",
                           roots);
  }
  return roots;
}

std::vector<std::complex<double>> unipoly_roots(const UniPoly& p, const RootOptions& options) {
  if (p.degree() < 1) {
    throw DegreeError("root finding needs a polynomial of degree >= 1");
  }
  auto c = p.to_complex();
  return polynomial_roots(c, options);
}

}  // namespace qtp
