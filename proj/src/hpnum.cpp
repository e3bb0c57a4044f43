#include "nazeta/hpnum.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nazeta {

long bits_for_digits(long digits) {
  const long bits = static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 32;
  return std::max(bits, kMinPrecisionBits);
}

namespace {

long clamp_prec(long bits) { return std::max(bits, kMinPrecisionBits); }

}  // namespace

HPReal::HPReal(long precision_bits) {
  mpfr_init2(v_, clamp_prec(precision_bits));
  mpfr_set_zero(v_, 1);
}

HPReal::HPReal(double v, long precision_bits) {
  mpfr_init2(v_, clamp_prec(precision_bits));
  mpfr_set_d(v_, v, MPFR_RNDN);
}

HPReal::HPReal(long v, long precision_bits) {
  mpfr_init2(v_, clamp_prec(precision_bits));
  mpfr_set_si(v_, v, MPFR_RNDN);
}

HPReal::HPReal(const BigRational& v, long precision_bits) {
  mpfr_init2(v_, clamp_prec(precision_bits));
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

HPReal::HPReal(const HPReal& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& o) noexcept {
  // MPFR has no cheap move; swap with a fresh minimal value.
  mpfr_init2(v_, kMinPrecisionBits);
  mpfr_swap(v_, o.v_);
}

HPReal& HPReal::operator=(const HPReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

HPReal& HPReal::operator=(HPReal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

HPReal::~HPReal() { mpfr_clear(v_); }

HPReal HPReal::from_string(const std::string& s, long precision_bits) {
  HPReal r(precision_bits);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("malformed decimal: '" + s + "'");
  return r;
}

HPReal HPReal::pi(long precision_bits) {
  HPReal r(precision_bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

HPReal HPReal::with_precision(long bits) const {
  HPReal r(*this);
  mpfr_prec_round(r.v_, clamp_prec(bits), MPFR_RNDN);
  return r;
}

void HPReal::raise_precision(long bits) {
  if (bits > precision()) mpfr_prec_round(v_, bits, MPFR_RNDN);
}

HPReal& HPReal::operator+=(const HPReal& o) {
  raise_precision(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator-=(const HPReal& o) {
  raise_precision(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator*=(const HPReal& o) {
  raise_precision(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator/=(const HPReal& o) {
  raise_precision(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

std::string HPReal::to_string(int significant_digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
  const int digits = std::max(significant_digits, 1);
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw_digits = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
  std::string d(raw_digits);
  mpfr_free_str(raw_digits);
  std::string sign_str;
  if (!d.empty() && d.front() == '-') {
    sign_str = "-";
    d.erase(0, 1);
  }
  const long e = static_cast<long>(exp10);
  std::string out;
  if (e > 40 || e < -30) {
    out = d.substr(0, 1) + "." + d.substr(1) + "e" + std::to_string(e - 1);
  } else if (e <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + d;
  } else if (static_cast<std::size_t>(e) >= d.size()) {
    out = d + std::string(static_cast<std::size_t>(e) - d.size(), '0');
  } else {
    out = d.substr(0, static_cast<std::size_t>(e)) + "." + d.substr(static_cast<std::size_t>(e));
  }
  return sign_str + out;
}

HPReal abs(const HPReal& x) {
  HPReal r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal sqrt(const HPReal& x) {
  HPReal r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal exp(const HPReal& x) {
  HPReal r(x.precision());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal log(const HPReal& x) {
  HPReal r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal sin(const HPReal& x) {
  HPReal r(x.precision());
  mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal cos(const HPReal& x) {
  HPReal r(x.precision());
  mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal atan2(const HPReal& y, const HPReal& x) {
  HPReal r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal pow(const HPReal& x, const HPReal& y) {
  HPReal r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

HPReal pow(const HPReal& x, long k) {
  HPReal r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}

HPReal gamma(const HPReal& x) {
  if (mpfr_integer_p(x.raw()) && x.sign() <= 0) throw std::domain_error("Gamma pole");
  HPReal r(x.precision());
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal riemann_zeta(const HPReal& s) {
  if (mpfr_cmp_si(s.raw(), 1) == 0) throw std::domain_error("zeta pole at s = 1");
  HPReal r(s.precision());
  mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
  return r;
}

HPReal riemann_zeta_upper(unsigned long s, long precision_bits) {
  if (s < 2) throw std::domain_error("zeta pole at s = 1");
  HPReal r(precision_bits);
  mpfr_zeta_ui(r.raw(), s, MPFR_RNDU);
  return r;
}

HPReal ldexp_one(long e, long precision_bits) {
  HPReal r(precision_bits);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// HPComplex

HPComplex HPComplex::polar(const HPReal& r, const HPReal& theta) { return {r * cos(theta), r * sin(theta)}; }

HPComplex HPComplex::unit_root(const BigRational& x, long precision_bits) {
  const BigRational f = frac(x);
  // Exact values at quarter turns keep real inputs real.
  if (f == 0) return HPComplex(HPReal(1L, precision_bits));
  if (f == BigRational(1, 2)) return HPComplex(HPReal(-1L, precision_bits));
  if (f == BigRational(1, 4)) return {HPReal(0L, precision_bits), HPReal(1L, precision_bits)};
  if (f == BigRational(3, 4)) return {HPReal(0L, precision_bits), HPReal(-1L, precision_bits)};
  const HPReal theta = HPReal::pi(precision_bits) * HPReal(BigRational(2 * f), precision_bits);
  return {cos(theta), sin(theta)};
}

HPComplex& HPComplex::operator+=(const HPComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

HPComplex& HPComplex::operator-=(const HPComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

HPComplex& HPComplex::operator*=(const HPComplex& o) {
  HPReal re = re_ * o.re_ - im_ * o.im_;
  HPReal im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

HPComplex& HPComplex::operator/=(const HPComplex& o) {
  const HPReal den = o.re_ * o.re_ + o.im_ * o.im_;
  if (den.is_zero()) throw std::domain_error("complex division by zero");
  HPReal re = (re_ * o.re_ + im_ * o.im_) / den;
  HPReal im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string HPComplex::to_string(int significant_digits) const {
  if (im_.is_zero()) return re_.to_string(significant_digits);
  std::string im = im_.to_string(significant_digits);
  if (im.front() != '-') im = "+" + im;
  return re_.to_string(significant_digits) + im + "i";
}

HPReal abs(const HPComplex& z) {
  HPReal r(z.precision());
  mpfr_hypot(r.raw(), z.real().raw(), z.imag().raw(), MPFR_RNDN);
  return r;
}

HPReal arg(const HPComplex& z) { return atan2(z.imag(), z.real()); }

HPComplex exp(const HPComplex& z) { return HPComplex::polar(exp(z.real()), z.imag()); }

HPComplex log(const HPComplex& z) { return {log(abs(z)), arg(z)}; }

HPComplex pow(const HPComplex& z, const HPComplex& w) { return exp(w * log(z)); }

HPComplex sin(const HPComplex& z) {
  const long p = z.precision();
  HPReal sh(p), ch(p);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), z.imag().raw(), MPFR_RNDN);
  return {sin(z.real()) * ch, cos(z.real()) * sh};
}

namespace {

// B_0, B_2, B_4, ... as exact rationals, grown on demand.
class BernoulliCache {
 public:
  BigRational even(std::size_t k) {
    std::lock_guard<std::mutex> lock(mu_);
    while (b_.size() <= 2 * k) extend();
    return b_[2 * k];
  }

 private:
  // Appends B_m via sum_{j=0}^{m} C(m+1, j) B_j = 0.
  void extend() {
    const std::size_t m = b_.size();
    if (m == 0) {
      b_.emplace_back(1);
      return;
    }
    BigRational acc = 0;
    BigInt binom = 1;  // C(m+1, j)
    for (std::size_t j = 0; j < m; ++j) {
      acc += BigRational(binom) * b_[j];
      binom = binom * static_cast<unsigned long>(m + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    b_.push_back(-acc / BigRational(static_cast<long>(m + 1)));
  }

  std::mutex mu_;
  std::vector<BigRational> b_;
};

BernoulliCache& bernoulli() {
  static BernoulliCache cache;
  return cache;
}

bool is_nonpositive_integer(const HPComplex& z) {
  return z.imag().is_zero() && mpfr_integer_p(z.real().raw()) && z.real().sign() <= 0;
}

// log Gamma(z) by the Stirling series; requires Re z large enough that the
// asymptotic expansion reaches the working precision.
HPComplex stirling_lgamma(const HPComplex& z, long prec) {
  const HPReal half(BigRational(1, 2), prec);
  const HPReal two_pi = HPReal::pi(prec) * HPReal(2L, prec);
  HPComplex acc = (z - HPComplex(half)) * log(z) - z + HPComplex(half * log(two_pi));
  const HPComplex zinv = HPComplex(HPReal(1L, prec)) / z;
  const HPComplex zinv2 = zinv * zinv;
  HPComplex zpow = zinv;
  const HPReal eps = ldexp_one(-prec - 8, prec);
  for (std::size_t k = 1; k < 4000; ++k) {
    const BigRational coef = bernoulli().even(k) / BigRational(static_cast<long>((2 * k) * (2 * k - 1)));
    const HPComplex term = zpow * HPComplex(HPReal(coef, prec));
    acc += term;
    if (abs(term) < eps * abs(acc)) break;
    zpow *= zinv2;
  }
  return acc;
}

}  // namespace

HPComplex gamma(const HPComplex& z) {
  if (is_nonpositive_integer(z)) throw std::domain_error("Gamma pole");
  const long prec = z.precision() + 32;
  const HPComplex w = z.with_precision(prec);
  const HPReal half(BigRational(1, 2), prec);
  if (w.real() < half) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const HPReal pi = HPReal::pi(prec);
    const HPComplex one(HPReal(1L, prec));
    const HPComplex s = sin(HPComplex(pi) * w);
    return (HPComplex(pi) / (s * gamma(one - w))).with_precision(z.precision());
  }
  // Shift so that |z + m| is comfortably inside the Stirling regime.
  const double radius = 0.12 * static_cast<double>(prec) + 12.0;
  HPComplex shifted = w;
  HPComplex product(HPReal(1L, prec));
  const HPComplex one(HPReal(1L, prec));
  while (abs(shifted).to_double() < radius) {
    product *= shifted;
    shifted += one;
  }
  return (exp(stirling_lgamma(shifted, prec)) / product).with_precision(z.precision());
}

}  // namespace nazeta
