#pragma once

#include "nazeta/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace nazeta {

// Dense univariate polynomial over Q in a named variable.
// coeffs()[i] is the coefficient of var^i; the highest stored coefficient is
// nonzero unless the polynomial is zero (then coeffs() is empty).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::string var) : var_(std::move(var)) {}
  UniPoly(std::string var, std::vector<BigRational> coeffs);
  UniPoly(std::string var, std::initializer_list<long> coeffs);

  static UniPoly constant(std::string var, const BigRational& c);
  static UniPoly monomial(std::string var, const BigRational& c, int degree);

  const std::string& var() const { return var_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigRational coeff(int i) const;
  const BigRational& leading() const { return coeffs_.back(); }

  BigRational operator()(const BigRational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const BigRational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const BigRational& c) { return a *= c; }
  friend UniPoly operator-(UniPoly a) { return a *= BigRational(-1); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  // Ascending-power text form, e.g. "1-3t+2t^2" or "0".
  std::string to_string() const;

 private:
  void trim();
  void check_var(const UniPoly& o) const;

  std::string var_ = "T";
  std::vector<BigRational> coeffs_;
};

// Quotient and remainder of a / b; b must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// p(x)^k expanded.
UniPoly pow(const UniPoly& p, int k);

}  // namespace nazeta
