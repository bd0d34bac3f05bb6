#include "qtp/unipoly.hpp"

#include <algorithm>

#include "qtp/errors.hpp"

namespace qtp {

UniPoly::UniPoly(std::vector<GaussianRational> ascending) : coeffs_(std::move(ascending)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::from_bipoly(const BiPoly& p, Variable v) {
  std::vector<GaussianRational> c(static_cast<std::size_t>(std::max(0, p.degree(v) + 1)));
  for (const auto& [m, coef] : p.terms()) {
    int other = v == Variable::Lambda ? m.mu : m.lambda;
    if (other != 0) {
      throw DegreeError("polynomial " + p.str() + " is not univariate");
    }
    c[v == Variable::Lambda ? m.lambda : m.mu] = coef;
  }
  return UniPoly(std::move(c));
}

GaussianRational UniPoly::eval(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> UniPoly::eval(std::complex<double> x) const {
  std::complex<double> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = GaussianRational(static_cast<long>(k)) * coeffs_[k];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  GaussianRational inv = leading().inverse();
  std::vector<GaussianRational> c = coeffs_;
  for (auto& x : c) x *= inv;
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) {
    throw DomainError("polynomial division by zero");
  }
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<GaussianRational> rem = a.coeffs_;
  std::vector<GaussianRational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  GaussianRational inv_lead = b.leading().inverse();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    GaussianRational q = rem[static_cast<std::size_t>(k + b.degree())] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly UniPoly::squarefree_part() const {
  if (degree() <= 0) return *this;
  UniPoly g = gcd(*this, derivative());
  return divmod(*this, g).first;
}

std::vector<std::complex<double>> UniPoly::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_complex());
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

std::string UniPoly::str(const std::string& var) const {
  BiPoly p;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p.add_term({static_cast<int>(k), 0}, coeffs_[k]);
  std::string s = p.str();
  if (var != "λ") {
    std::string out;
    const std::string lam = "λ";
    for (std::size_t pos = 0; pos < s.size();) {
      if (s.compare(pos, lam.size(), lam) == 0) {
        out += var;
        pos += lam.size();
      } else {
        out += s[pos++];
      }
    }
    s = out;
  }
  return s;
}

}  // namespace qtp
