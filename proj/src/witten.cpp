#include "nazeta/witten.hpp"

#include <stdexcept>

namespace nazeta::witten {

BigInt weyl_dimension(int n, const std::vector<long>& labels) {
  if (n < 2 || n > 5) throw std::invalid_argument("n must be in 2..5");
  if (labels.size() != static_cast<std::size_t>(n - 1)) throw std::invalid_argument("expected n-1 Dynkin labels");
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long s = 0;
      for (int k = i; k < j; ++k) {
        if (labels[static_cast<std::size_t>(k)] < 0) throw std::invalid_argument("Dynkin labels must be >= 0");
        s += labels[static_cast<std::size_t>(k)] + 1;
      }
      num *= s;
      den *= j - i;
    }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer");
  return num / den;
}

WittenZeta witten_zeta_su(int n, long s, long cutoff, long precision_bits) {
  if (s < 2) throw std::invalid_argument("divergent");
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  if (n < 2 || n > 5) throw std::invalid_argument("n must be in 2..5");
  const long work = precision_bits + 32;

  WittenZeta out;
  HPReal sum(work);
  std::vector<long> a(static_cast<std::size_t>(n - 1), 0);
  const HPReal one(1L, work);
  for (;;) {
    BigInt d = weyl_dimension(n, a);
    BigInt ds;
    mpz_pow_ui(ds.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(s));
    sum = sum + one / HPReal(BigRational(ds), work);
    ++out.terms;
    std::size_t k = 0;
    while (k < a.size() && a[k] == cutoff) a[k++] = 0;
    if (k == a.size()) break;
    ++a[k];
  }

  // Omitted weights have some label > cutoff, and dim >= prod (a_k + 1), so the
  // tail is at most (n-1) zeta(s)^{n-2} sum_{m >= cutoff+2} m^{-s}
  // <= (n-1) zeta(s)^{n-2} (cutoff+1)^{1-s} / (s-1).
  HPReal tail(work);
  {
    mpfr_t z, t, u;
    mpfr_inits2(work, z, t, u, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_si(u, s, MPFR_RNDU);
    mpfr_zeta(z, u, MPFR_RNDU);
    mpfr_pow_ui(z, z, static_cast<unsigned long>(n - 2), MPFR_RNDU);
    mpfr_mul_ui(z, z, static_cast<unsigned long>(n - 1), MPFR_RNDU);
    // (cutoff+1)^{1-s} = 1 / (cutoff+1)^{s-1}; round the denominator down.
    mpfr_set_si(t, cutoff + 1, MPFR_RNDD);
    mpfr_pow_ui(t, t, static_cast<unsigned long>(s - 1), MPFR_RNDD);
    mpfr_mul_ui(t, t, static_cast<unsigned long>(s - 1), MPFR_RNDD);
    mpfr_div(z, z, t, MPFR_RNDU);
    mpfr_set(tail.raw(), z, MPFR_RNDU);
    mpfr_clears(z, t, u, static_cast<mpfr_ptr>(nullptr));
  }
  // Each addition and division contributes at most one ulp relative to the
  // running sum.
  const HPReal rounding = HPReal(2 * out.terms + 2, work) * ldexp_one(-(work - 1), work) * sum;
  const HPReal margin = HPReal(1L, work) + ldexp_one(-(precision_bits - 2), work);
  out.tail_bound = ((tail + rounding) * margin).with_precision(precision_bits);
  out.value = sum.with_precision(precision_bits);
  return out;
}

WittenVolume witten_volume(int n, int g, const HPReal& vol_su, long cutoff, long precision_bits) {
  if (n < 2) throw std::invalid_argument("n >= 2 required");
  if (g < 2) throw std::invalid_argument("g >= 2 required");
  const long work = precision_bits + 32;
  const WittenZeta z = witten_zeta_su(n, 2L * g - 2, cutoff, work);
  const HPReal two_pi = HPReal(2L, work) * HPReal::pi(work);
  const HPReal base = HPReal(vol_su).with_precision(work) / pow(two_pi, static_cast<long>(n) * n - 1);
  const HPReal factor = HPReal(static_cast<long>(n), work) * pow(base, 2L * g - 2);
  return {(factor * z.value).with_precision(precision_bits), abs(factor * z.tail_bound).with_precision(precision_bits)};
}

}  // namespace nazeta::witten
