#include "nazeta/ratfunc.hpp"

#include <stdexcept>

namespace nazeta {

RationalFunctionQ::RationalFunctionQ() : num_("T"), den_(UniPoly::constant("T", 1)) {}

RationalFunctionQ::RationalFunctionQ(const UniPoly& poly)
    : num_(poly), den_(UniPoly::constant(poly.var(), 1)) {}

RationalFunctionQ::RationalFunctionQ(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  const std::string& var = den.var();
  if (num.is_zero()) {
    num_ = UniPoly(var);
    den_ = UniPoly::constant(var, 1);
    return;
  }
  const UniPoly g = gcd(num, den);
  UniPoly n = divmod(num, g).first;
  UniPoly d = divmod(den, g).first;
  const BigRational lc = d.leading();
  n *= BigRational(1 / lc);
  d = d.monic();
  num_ = std::move(n);
  den_ = std::move(d);
}

RationalFunctionQ RationalFunctionQ::constant(const std::string& var, const BigRational& c) {
  return RationalFunctionQ(UniPoly::constant(var, c));
}

RationalFunctionQ RationalFunctionQ::monomial(const std::string& var, const BigRational& c, int k) {
  if (k >= 0) return RationalFunctionQ(UniPoly::monomial(var, c, k));
  return RationalFunctionQ(UniPoly::constant(var, c), UniPoly::monomial(var, 1, -k));
}

BigRational RationalFunctionQ::operator()(const BigRational& x) const {
  const BigRational d = den_(x);
  if (d == 0) throw std::domain_error("pole");
  return num_(x) / d;
}

RationalFunctionQ& RationalFunctionQ::operator+=(const RationalFunctionQ& o) {
  *this = RationalFunctionQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunctionQ& RationalFunctionQ::operator-=(const RationalFunctionQ& o) {
  *this = RationalFunctionQ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunctionQ& RationalFunctionQ::operator*=(const RationalFunctionQ& o) {
  *this = RationalFunctionQ(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunctionQ& RationalFunctionQ::operator/=(const RationalFunctionQ& o) {
  if (o.is_zero()) throw std::domain_error("division by zero polynomial");
  *this = RationalFunctionQ(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::string RationalFunctionQ::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunctionQ rf_normalize(const UniPoly& num, const UniPoly& den) { return RationalFunctionQ(num, den); }

namespace {

// T^deg(p) * p(1/(Q T)).
UniPoly reverse_scaled(const UniPoly& p, const BigRational& Q) {
  const int d = p.degree();
  std::vector<BigRational> out(static_cast<std::size_t>(d) + 1);
  BigRational qinv_pow = 1;
  const BigRational qinv = 1 / Q;
  for (int i = 0; i <= d; ++i) {
    out[static_cast<std::size_t>(d - i)] = p.coeff(i) * qinv_pow;
    qinv_pow *= qinv;
  }
  return UniPoly(p.var(), std::move(out));
}

}  // namespace

RationalFunctionQ rf_substitute_inv(const RationalFunctionQ& f, const BigRational& Q) {
  if (Q == 0) throw std::domain_error("substitution T -> 1/(QT) needs Q != 0");
  if (f.is_zero()) return f;
  const std::string& var = f.var();
  const int dn = f.num().degree();
  const int dd = f.den().degree();
  UniPoly num = reverse_scaled(f.num(), Q);
  UniPoly den = reverse_scaled(f.den(), Q);
  if (dd > dn) num *= UniPoly::monomial(var, 1, dd - dn);
  if (dn > dd) den *= UniPoly::monomial(var, 1, dn - dd);
  return RationalFunctionQ(num, den);
}

BigRational rf_residue_simple(const RationalFunctionQ& f, const BigRational& pole) {
  if (f.den()(pole) != 0) throw std::domain_error("not a pole");
  const BigRational dprime = f.den().derivative()(pole);
  if (dprime == 0) throw std::domain_error("pole not simple");
  return f.num()(pole) / dprime;
}

}  // namespace nazeta
