#include "qtp/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qtp {

BiPoly::BiPoly(const GaussianRational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

BiPoly BiPoly::monomial(Monomial m, const GaussianRational& c) {
  BiPoly p;
  p.add_term(m, c);
  return p;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

GaussianRational BiPoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

int BiPoly::degree(Variable v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, v == Variable::Lambda ? m.lambda : m.mu);
  return d;
}

void BiPoly::add_term(Monomial m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

template <class S>
std::vector<S> powers(const S& x, int max_exp) {
  std::vector<S> p;
  p.reserve(static_cast<std::size_t>(max_exp) + 1);
  p.emplace_back(1);
  for (int k = 1; k <= max_exp; ++k) p.push_back(p.back() * x);
  return p;
}

}  // namespace

GaussianRational BiPoly::eval(const GaussianRational& lambda, const GaussianRational& mu) const {
  if (terms_.empty()) return {};
  auto lp = powers(lambda, std::max(0, degree(Variable::Lambda)));
  auto mp = powers(mu, std::max(0, degree(Variable::Mu)));
  GaussianRational sum;
  for (const auto& [m, c] : terms_) sum += c * lp[m.lambda] * mp[m.mu];
  return sum;
}

std::complex<double> BiPoly::eval(std::complex<double> lambda, std::complex<double> mu) const {
  if (terms_.empty()) return {};
  auto lp = powers(lambda, std::max(0, degree(Variable::Lambda)));
  auto mp = powers(mu, std::max(0, degree(Variable::Mu)));
  std::complex<double> sum;
  for (const auto& [m, c] : terms_) sum += c.to_complex() * lp[m.lambda] * mp[m.mu];
  return sum;
}

std::vector<BiPoly> BiPoly::coefficients_in(Variable v) const {
  std::vector<BiPoly> out(static_cast<std::size_t>(std::max(0, degree(v) + 1)));
  for (const auto& [m, c] : terms_) {
    if (v == Variable::Mu) {
      out[m.mu].add_term({m.lambda, 0}, c);
    } else {
      out[m.lambda].add_term({0, m.mu}, c);
    }
  }
  return out;
}

double BiPoly::max_coefficient_abs() const {
  double best = 0.0;
  for (const auto& [m, c] : terms_) best = std::max(best, c.abs());
  return best;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  *this = *this * o;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma.lambda + mb.lambda, ma.mu + mb.mu}, ca * cb);
    }
  }
  return out;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first, λ-heavy first within a degree.
  std::vector<std::pair<Monomial, GaussianRational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.first.total() != y.first.total()) return x.first.total() > y.first.total();
    return x.first.lambda > y.first.lambda;
  });
  for (const auto& [m, c] : ordered) {
    std::string coef = c.str();
    if (!c.is_real() && sgn(c.re()) != 0) coef = "(" + coef + ")";
    std::string mono;
    if (m.lambda > 0) mono += m.lambda == 1 ? "λ" : "λ^" + std::to_string(m.lambda);
    if (m.mu > 0) mono += m.mu == 1 ? "μ" : "μ^" + std::to_string(m.mu);
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (c.is_one()) {
      term = mono;
    } else if (c == GaussianRational(-1)) {
      term = "-" + mono;
    } else {
      term = coef + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace qtp
