#pragma once

// Curve fixtures shared by the test binaries, plus the brute-force
// point-count oracle used to derive the genus-2 fixture.

#include "nazeta/curve.hpp"

#include <cstdint>
#include <vector>

namespace fixtures {

using nazeta::BigInt;
using nazeta::curve::CurveData;

// E/F_2 with P(T) = 1 + 2T^2 (N_1 = 3).
inline CurveData e2() { return nazeta::curve::from_numerator(2, {1, 0, 2}); }

// E'/F_2 with P(T) = 1 + 2T + 2T^2 (N_1 = 5).
inline CurveData e2b() { return nazeta::curve::from_numerator(2, {1, 2, 2}); }

// Projective line over F_2.
inline CurveData p1() { return nazeta::curve::from_numerator(2, {1}); }

// Arithmetic in GF(2^m) with a fixed irreducible modulus (m <= 4).
class Gf2m {
 public:
  explicit Gf2m(int m) : m_(m) {
    static const std::uint32_t moduli[] = {0, 0b11, 0b111, 0b1011, 0b10011};
    modulus_ = moduli[m];
  }
  std::uint32_t size() const { return 1u << m_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    while (b) {
      if (b & 1u) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & (1u << m_)) a ^= modulus_;
    }
    return r;
  }
  std::uint32_t pow(std::uint32_t a, int e) const {
    std::uint32_t r = 1;
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

 private:
  int m_;
  std::uint32_t modulus_;
};

// #X(F_{2^m}) for the smooth projective model of y^2 + y = x^5: affine
// solutions plus the single point at infinity of the odd-degree model.
inline long count_points_y2_y_x5(int m) {
  const Gf2m f(m);
  long affine = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x)
    for (std::uint32_t y = 0; y < f.size(); ++y)
      if ((f.mul(y, y) ^ y ^ f.pow(x, 5)) == 0) ++affine;
  return affine + 1;
}

// Genus-2 curve y^2 + y = x^5 over F_2 from its brute-force point counts.
inline CurveData genus2() {
  return nazeta::curve::from_point_counts(2, {BigInt(count_points_y2_y_x5(1)), BigInt(count_points_y2_y_x5(2))});
}

}  // namespace fixtures
