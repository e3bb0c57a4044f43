#pragma once

#include "nazeta/poly.hpp"

#include <string>

namespace nazeta {

// Univariate rational function over Q in canonical form: numerator and
// denominator coprime, denominator monic. Two equal functions have equal
// members, so operator== is structural.
class RationalFunctionQ {
 public:
  // The zero function in variable "T".
  RationalFunctionQ();
  explicit RationalFunctionQ(const UniPoly& poly);

  // Canonicalizing constructor; throws std::domain_error("division by zero
  // polynomial") when den is zero.
  RationalFunctionQ(const UniPoly& num, const UniPoly& den);

  static RationalFunctionQ constant(const std::string& var, const BigRational& c);
  // c * var^k for any integer k.
  static RationalFunctionQ monomial(const std::string& var, const BigRational& c, int k);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  const std::string& var() const { return num_.var(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  // Throws std::domain_error("pole") if x is a root of the denominator.
  BigRational operator()(const BigRational& x) const;

  RationalFunctionQ& operator+=(const RationalFunctionQ& o);
  RationalFunctionQ& operator-=(const RationalFunctionQ& o);
  RationalFunctionQ& operator*=(const RationalFunctionQ& o);
  RationalFunctionQ& operator/=(const RationalFunctionQ& o);

  friend RationalFunctionQ operator+(RationalFunctionQ a, const RationalFunctionQ& b) { return a += b; }
  friend RationalFunctionQ operator-(RationalFunctionQ a, const RationalFunctionQ& b) { return a -= b; }
  friend RationalFunctionQ operator*(RationalFunctionQ a, const RationalFunctionQ& b) { return a *= b; }
  friend RationalFunctionQ operator/(RationalFunctionQ a, const RationalFunctionQ& b) { return a /= b; }
  friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "(num)/(den)", or just the numerator text when den == 1.
  std::string to_string() const;

 private:
  UniPoly num_;
  UniPoly den_;
};

RationalFunctionQ rf_normalize(const UniPoly& num, const UniPoly& den);

// f(1/(Q*T)). Applying it twice returns f. Throws std::domain_error if Q == 0.
RationalFunctionQ rf_substitute_inv(const RationalFunctionQ& f, const BigRational& Q);

// lim_{T->pole} (T - pole) f(T) for a simple pole.
// Errors: "not a pole" / "pole not simple" (std::domain_error).
BigRational rf_residue_simple(const RationalFunctionQ& f, const BigRational& pole);

}  // namespace nazeta
