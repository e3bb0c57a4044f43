#pragma once

// Rank-n zeta functions assembled from semistable partial masses.
//
// With T = t^n and Q = base^n,
//   Z(T) = sum_{m=0}^{g-2} alpha(mn) (T^m + Q^{g-1-m} T^{2g-2-m})
//        + alpha(n(g-1)) T^{g-1} + beta (Q-1) T^g / ((1-T)(1-QT)).

#include "nazeta/curve.hpp"
#include "nazeta/polyroots.hpp"
#include "nazeta/ratfunc.hpp"

#include <vector>

namespace nazeta::assembly {

struct AlphaBetaTable {
  int n = 1;
  int g = 0;
  BigRational base = 2;             // q, or a formal rational base
  std::vector<BigRational> alphas;  // alpha(0), alpha(n), ..., alpha(n(g-1))
  BigRational beta = 1;

  // Throws std::invalid_argument on the first violated invariant.
  void validate() const;
};

struct AssembledZeta {
  RationalFunctionQ Z;  // in the variable "T"
  int n = 1;            // T = t^n
  int g = 0;
  BigRational Q;        // base^n
};

AssembledZeta assemble_zeta(const AlphaBetaTable& table);

struct FunctionalEquationReport {
  bool pass = false;
  RationalFunctionQ witness;  // Z(1/(QT)) (QT)^{g-1} - Z(T) T^{-(g-1)}
};

FunctionalEquationReport functional_equation_check(const AssembledZeta& z);

// P with Z = P(T)/((1-T)(1-QT)); std::domain_error("not in expected form") otherwise.
UniPoly extract_numerator(const AssembledZeta& z);

// Res_{s=1} of the completed zeta times log Q, i.e. -Q^g Res_{T=1/Q} Z.
BigRational residue_at_one(const AssembledZeta& z);

AlphaBetaTable rank_one_pipeline(const curve::CurveData& curve);

struct RhExploration {
  std::vector<HPComplex> roots;
  std::vector<HPReal> deviations;  // | |T| Q^{1/2} - 1 |
};

// Reports root positions of the numerator; makes no claim.
RhExploration rh_explore(const AssembledZeta& z, long precision_bits = 256);

}  // namespace nazeta::assembly
