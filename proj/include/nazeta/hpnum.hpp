#pragma once

// High-precision real and complex scalars on top of MPFR.
//
// Every HPReal carries its own precision in bits (>= 64). Binary operations
// produce a result at the larger of the two operand precisions, so the
// precision reported by a derived value is the precision actually used.

#include "nazeta/rational.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace nazeta {

constexpr long kMinPrecisionBits = 64;

// Bits needed to carry `digits` decimal digits plus a guard margin.
long bits_for_digits(long digits);

class HPReal {
 public:
  explicit HPReal(long precision_bits = 128);
  HPReal(double v, long precision_bits);
  HPReal(long v, long precision_bits);
  HPReal(const BigRational& v, long precision_bits);
  HPReal(const HPReal& o);
  HPReal(HPReal&& o) noexcept;
  HPReal& operator=(const HPReal& o);
  HPReal& operator=(HPReal&& o) noexcept;
  ~HPReal();

  // Parses a decimal string (e.g. "0.5235...", "1e-40").
  static HPReal from_string(const std::string& s, long precision_bits);
  static HPReal pi(long precision_bits);

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  // Copy rounded (or widened) to the given precision.
  HPReal with_precision(long bits) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // Fixed significant-digit scientific-free rendering, e.g.
  // to_string(20) of pi/6 -> "0.52359877559829887308".
  std::string to_string(int significant_digits) const;

  HPReal& operator+=(const HPReal& o);
  HPReal& operator-=(const HPReal& o);
  HPReal& operator*=(const HPReal& o);
  HPReal& operator/=(const HPReal& o);

  friend HPReal operator+(HPReal a, const HPReal& b) { return a += b; }
  friend HPReal operator-(HPReal a, const HPReal& b) { return a -= b; }
  friend HPReal operator*(HPReal a, const HPReal& b) { return a *= b; }
  friend HPReal operator/(HPReal a, const HPReal& b) { return a /= b; }
  friend HPReal operator-(HPReal a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  void raise_precision(long bits);
  mpfr_t v_;
};

HPReal abs(const HPReal& x);
HPReal sqrt(const HPReal& x);
HPReal exp(const HPReal& x);
HPReal log(const HPReal& x);
HPReal sin(const HPReal& x);
HPReal cos(const HPReal& x);
HPReal atan2(const HPReal& y, const HPReal& x);
HPReal pow(const HPReal& x, const HPReal& y);
HPReal pow(const HPReal& x, long k);
// Real Gamma; throws std::domain_error at nonpositive integers.
HPReal gamma(const HPReal& x);
// Riemann zeta at a real argument (pole at 1 -> std::domain_error).
HPReal riemann_zeta(const HPReal& s);
// Riemann zeta at an integer s >= 2, rounded toward +infinity.
HPReal riemann_zeta_upper(unsigned long s, long precision_bits);
// 2^e for integral e.
HPReal ldexp_one(long e, long precision_bits);

class HPComplex {
 public:
  explicit HPComplex(long precision_bits = 128) : re_(precision_bits), im_(precision_bits) {}
  HPComplex(HPReal re, HPReal im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit HPComplex(HPReal re) : re_(re), im_(re.precision()) {}

  static HPComplex polar(const HPReal& r, const HPReal& theta);
  // exp(2 pi i * x) for rational x.
  static HPComplex unit_root(const BigRational& x, long precision_bits);

  const HPReal& real() const { return re_; }
  const HPReal& imag() const { return im_; }
  long precision() const { return re_.precision() > im_.precision() ? re_.precision() : im_.precision(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  HPComplex with_precision(long bits) const { return {re_.with_precision(bits), im_.with_precision(bits)}; }

  HPComplex& operator+=(const HPComplex& o);
  HPComplex& operator-=(const HPComplex& o);
  HPComplex& operator*=(const HPComplex& o);
  HPComplex& operator/=(const HPComplex& o);

  friend HPComplex operator+(HPComplex a, const HPComplex& b) { return a += b; }
  friend HPComplex operator-(HPComplex a, const HPComplex& b) { return a -= b; }
  friend HPComplex operator*(HPComplex a, const HPComplex& b) { return a *= b; }
  friend HPComplex operator/(HPComplex a, const HPComplex& b) { return a /= b; }
  friend HPComplex operator-(const HPComplex& a) { return HPComplex(-a.re_, -a.im_); }

  // "a" when the imaginary part is exactly zero, else "a+bi" / "a-bi".
  std::string to_string(int significant_digits) const;

 private:
  HPReal re_;
  HPReal im_;
};

HPReal abs(const HPComplex& z);
HPReal arg(const HPComplex& z);
HPComplex exp(const HPComplex& z);
HPComplex log(const HPComplex& z);
HPComplex pow(const HPComplex& z, const HPComplex& w);

// Complex Gamma (Stirling series after an upward shift, reflection for
// Re z < 1/2). Throws std::domain_error at nonpositive integers.
HPComplex gamma(const HPComplex& z);
HPComplex sin(const HPComplex& z);

}  // namespace nazeta
