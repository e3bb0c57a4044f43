#include "nazeta/curve.hpp"

#include "nazeta/polyroots.hpp"

#include <stdexcept>
#include <string>

namespace nazeta::curve {

namespace {

bool is_prime_power(long q) {
  if (q < 2) return false;
  long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

BigInt ipow(long base, int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

void CurveData::validate() const {
  if (!is_prime_power(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (g < 0) throw std::invalid_argument("negative genus");
  if (numerator.size() != static_cast<std::size_t>(2 * g + 1))
    throw std::invalid_argument("numerator must have 2g+1 = " + std::to_string(2 * g + 1) + " coefficients");
  if (numerator[0] != 1) throw std::invalid_argument("numerator constant term must be 1");
  for (int i = 0; i <= g; ++i) {
    if (numerator[static_cast<std::size_t>(2 * g - i)] != ipow(q, g - i) * numerator[static_cast<std::size_t>(i)])
      throw std::invalid_argument("numerator violates the functional-equation symmetry at index " +
                                  std::to_string(i));
  }
  if (point_counts) {
    if (point_counts->size() != static_cast<std::size_t>(g))
      throw std::invalid_argument("point_counts must have g entries");
    if (numerator_from_counts(q, g, *point_counts) != numerator)
      throw std::invalid_argument("point_counts do not reproduce the numerator");
  }
}

UniPoly CurveData::numerator_poly(const std::string& var) const {
  std::vector<BigRational> c;
  c.reserve(numerator.size());
  for (const auto& a : numerator) c.emplace_back(a);
  return UniPoly(var, std::move(c));
}

CurveData from_numerator(long q, std::vector<BigInt> numerator) {
  if (numerator.empty() || numerator.size() % 2 == 0)
    throw std::invalid_argument("numerator must have odd length 2g+1");
  CurveData c;
  c.q = q;
  c.g = static_cast<int>(numerator.size() / 2);
  c.numerator = std::move(numerator);
  c.validate();
  return c;
}

CurveData from_point_counts(long q, std::vector<BigInt> counts) {
  CurveData c;
  c.q = q;
  c.g = static_cast<int>(counts.size());
  c.numerator = numerator_from_counts(q, c.g, counts);
  c.point_counts = std::move(counts);
  c.validate();
  return c;
}

std::vector<BigInt> numerator_from_counts(long q, int g, const std::vector<BigInt>& counts) {
  if (g < 0 || counts.size() != static_cast<std::size_t>(g)) throw std::invalid_argument("invalid point counts");
  // s_m = N_m - 1 - q^m is the m-th power sum of log P; k a_k = sum_i s_i a_{k-i}.
  std::vector<BigInt> s(static_cast<std::size_t>(g) + 1);
  for (int m = 1; m <= g; ++m) s[static_cast<std::size_t>(m)] = counts[static_cast<std::size_t>(m - 1)] - 1 - ipow(q, m);
  std::vector<BigInt> a(static_cast<std::size_t>(2 * g) + 1);
  a[0] = 1;
  for (int k = 1; k <= g; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) acc += s[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(k - i)];
    if (acc % k != 0) throw std::invalid_argument("invalid point counts");
    a[static_cast<std::size_t>(k)] = acc / k;
  }
  for (int i = 0; i < g; ++i) a[static_cast<std::size_t>(2 * g - i)] = ipow(q, g - i) * a[static_cast<std::size_t>(i)];
  return a;
}

std::vector<BigInt> counts_from_numerator(long q, const std::vector<BigInt>& numerator, int m) {
  auto a = [&](int j) -> BigInt {
    return j >= 0 && static_cast<std::size_t>(j) < numerator.size() ? numerator[static_cast<std::size_t>(j)] : BigInt(0);
  };
  std::vector<BigInt> s(static_cast<std::size_t>(m) + 1);
  std::vector<BigInt> counts;
  for (int k = 1; k <= m; ++k) {
    BigInt sk = k * a(k);
    for (int i = 1; i < k; ++i) sk -= s[static_cast<std::size_t>(i)] * a(k - i);
    s[static_cast<std::size_t>(k)] = sk;
    counts.push_back(sk + 1 + ipow(q, k));
  }
  return counts;
}

ZetaBundle artin_zeta(const CurveData& curve) {
  curve.validate();
  const UniPoly den = UniPoly("t", {1, -1}) * UniPoly("t", {1, -curve.q});
  return {RationalFunctionQ(curve.numerator_poly("t"), den), curve.g - 1};
}

std::string format_zeta(const CurveData& curve) {
  const std::string p = curve.numerator_poly("t").to_string();
  const std::string den = "((1-t)(1-" + std::to_string(curve.q) + "t))";
  if (curve.g == 0) return "1/" + den;
  return "(" + p + ")/" + den;
}

BigRational zeta_special_value(const CurveData& curve, int k) {
  if (k < 1) throw std::invalid_argument("special values need k >= 1");
  const ZetaBundle z = artin_zeta(curve);
  const BigRational q(curve.q);
  if (k == 1) {
    // t = q^{-s}: Res_s = Res_t * (-1/(t0 log q)); the log q factors cancel.
    const BigRational t0 = 1 / q;
    const BigRational res_t = rf_residue_simple(z.zeta_t, t0);
    return -res_t / t0 * pow(q, curve.g - 1);
  }
  return z.zeta_t(pow(q, -k)) * pow(q, static_cast<long>(k) * (curve.g - 1));
}

std::vector<BigInt> effective_divisor_counts(const CurveData& curve, int dmax) {
  if (dmax < 0) throw std::invalid_argument("dmax must be >= 0");
  curve.validate();
  // 1/((1-t)(1-qt)) = sum_d (q^{d+1}-1)/(q-1) t^d
  std::vector<BigInt> out(static_cast<std::size_t>(dmax) + 1);
  for (int d = 0; d <= dmax; ++d) {
    BigInt acc = 0;
    for (int i = 0; i <= d && i < static_cast<int>(curve.numerator.size()); ++i)
      acc += curve.numerator[static_cast<std::size_t>(i)] * ((ipow(curve.q, d - i + 1) - 1) / (curve.q - 1));
    out[static_cast<std::size_t>(d)] = acc;
  }
  return out;
}

RhReport rh_check(const CurveData& curve, double tolerance, long precision_bits) {
  curve.validate();
  if (curve.g == 0) throw std::domain_error("no roots to check");
  RhReport report;
  report.roots = poly_roots_numeric(curve.numerator_poly("T"), precision_bits);
  const HPReal target = HPReal(1L, precision_bits) / sqrt(HPReal(curve.q, precision_bits));
  report.max_deviation = HPReal(precision_bits);
  for (const auto& r : report.roots) {
    HPReal dev = abs(abs(r) - target);
    if (dev > report.max_deviation) report.max_deviation = dev;
  }
  report.pass = report.max_deviation < HPReal(tolerance, precision_bits);
  return report;
}

}  // namespace nazeta::curve
