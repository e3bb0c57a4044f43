#include "nazeta/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace nazeta {

UniPoly::UniPoly(std::string var, std::vector<BigRational> coeffs)
    : var_(std::move(var)), coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly::UniPoly(std::string var, std::initializer_list<long> coeffs) : var_(std::move(var)) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(std::string var, const BigRational& c) {
  return UniPoly(std::move(var), std::vector<BigRational>{c});
}

UniPoly UniPoly::monomial(std::string var, const BigRational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<BigRational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(var), std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void UniPoly::check_var(const UniPoly& o) const {
  if (o.var_ != var_ && !o.is_zero() && !is_zero())
    throw std::invalid_argument("polynomial variable mismatch: " + var_ + " vs " + o.var_);
}

BigRational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigRational UniPoly::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<BigRational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return UniPoly(var_, std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  const BigRational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  check_var(o);
  if (is_zero() && !o.is_zero()) var_ = o.var_;
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  check_var(o);
  if (is_zero() && !o.is_zero()) var_ = o.var_;
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  check_var(o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> prod(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const BigRational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigRational& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigRational mag = neg ? BigRational(-c) : c;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    if (i == 0 || mag != 1) out += nazeta::to_string(mag);
    if (i >= 1) out += var_;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const std::string& var = a.is_zero() ? b.var() : a.var();
  if (a.degree() < b.degree()) return {UniPoly(var), a};
  std::vector<BigRational> rem = a.coeffs();
  std::vector<BigRational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  const BigRational lc = b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    const BigRational f = rem[static_cast<std::size_t>(i)] / lc;
    const int shift = i - b.degree();
    quot[static_cast<std::size_t>(shift)] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(shift) + j] -= f * bc[j];
  }
  return {UniPoly(var, std::move(quot)), UniPoly(var, std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

UniPoly pow(const UniPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  UniPoly r = UniPoly::constant(p.var(), 1);
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

}  // namespace nazeta
