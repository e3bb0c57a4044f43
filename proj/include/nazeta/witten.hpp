#pragma once

// Witten zeta values sum_rho dim(rho)^{-s} for SU(n) and the moduli volume
// formula built from them.

#include "nazeta/hpnum.hpp"
#include "nazeta/rational.hpp"

#include <vector>

namespace nazeta::witten {

// Dimension of the irreducible SU(n) representation with Dynkin labels a
// (a.size() == n - 1), by the Weyl dimension formula in exact arithmetic.
BigInt weyl_dimension(int n, const std::vector<long>& labels);

struct WittenZeta {
  HPReal value;       // partial sum over labels with max coordinate <= cutoff
  HPReal tail_bound;  // upper bound on the omitted terms plus rounding
  long terms = 0;
};

// Throws std::invalid_argument("divergent") for s < 2.
WittenZeta witten_zeta_su(int n, long s, long cutoff, long precision_bits);

struct WittenVolume {
  HPReal value;
  HPReal uncertainty;  // tail bound carried through the prefactor
};

// n (V / (2 pi)^{n^2-1})^{2g-2} sum_rho dim(rho)^{-(2g-2)}.
// Throws std::invalid_argument("n >= 2 required") and ("g >= 2 required").
WittenVolume witten_volume(int n, int g, const HPReal& vol_su, long cutoff, long precision_bits);

}  // namespace nazeta::witten
