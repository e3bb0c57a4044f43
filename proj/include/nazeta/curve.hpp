#pragma once

// Artin zeta functions of curves over finite fields.
//
// A curve X/F_q of genus g is described by the numerator
//   P(T) = a_0 + a_1 T + ... + a_2g T^2g,  a_0 = 1,  a_{2g-i} = q^{g-i} a_i,
// of its zeta function Z_X(t) = P(t) / ((1 - t)(1 - q t)), t = q^{-s}.
// The completed zeta is zeta_X(s) * (q^s)^(g-1).

#include "nazeta/hpnum.hpp"
#include "nazeta/ratfunc.hpp"

#include <optional>
#include <vector>

namespace nazeta::curve {

struct CurveData {
  long q = 2;
  int g = 0;
  std::vector<BigInt> numerator;                   // a_0 .. a_2g
  std::optional<std::vector<BigInt>> point_counts;  // N_1 .. N_g, if supplied

  // Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
  UniPoly numerator_poly(const std::string& var = "T") const;
};

// Builds a validated curve from numerator coefficients.
CurveData from_numerator(long q, std::vector<BigInt> numerator);
// Builds a validated curve from N_1..N_g (g = counts.size(); g = 0 allowed).
CurveData from_point_counts(long q, std::vector<BigInt> counts);

// a_0..a_2g from N_1..N_g via Newton's identities on log Z.
// Throws std::invalid_argument("invalid point counts") on non-integral data.
std::vector<BigInt> numerator_from_counts(long q, int g, const std::vector<BigInt>& counts);

// N_1..N_m from the numerator: N_k = q^k + 1 - sum of k-th powers of the
// inverse roots.
std::vector<BigInt> counts_from_numerator(long q, const std::vector<BigInt>& numerator, int m);

struct ZetaBundle {
  RationalFunctionQ zeta_t;  // Z_X(t) in canonical form, variable "t"
  int completed_shift = 0;   // g - 1
};

ZetaBundle artin_zeta(const CurveData& curve);

// Structural text "(P(t))/((1-t)(1-qt))" as printed by the CLI.
std::string format_zeta(const CurveData& curve);

// Completed zeta value at the integer k >= 1. For k = 1 this is
// Res_{s=1} zeta_X(s) * log q, which is rational.
BigRational zeta_special_value(const CurveData& curve, int k);

// b_0 .. b_dmax: numbers of effective divisors of each degree.
std::vector<BigInt> effective_divisor_counts(const CurveData& curve, int dmax);

struct RhReport {
  std::vector<HPComplex> roots;
  HPReal max_deviation;  // max | |root| - q^{-1/2} |
  bool pass = false;
};

// Throws std::domain_error("no roots to check") for g == 0.
RhReport rh_check(const CurveData& curve, double tolerance, long precision_bits = 256);

}  // namespace nazeta::curve
