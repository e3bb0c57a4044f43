#include "nazeta/assembly.hpp"

#include <stdexcept>
#include <string>

namespace nazeta::assembly {

namespace {

UniPoly denominator(const BigRational& Q) { return UniPoly("T", {BigRational(1), BigRational(-1)}) * UniPoly("T", {BigRational(1), BigRational(-Q)}); }

}  // namespace

void AlphaBetaTable::validate() const {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (g < 0) throw std::invalid_argument("negative genus");
  if (base <= 0 || base == 1) throw std::invalid_argument("base must be positive and different from 1");
  if (alphas.size() != static_cast<std::size_t>(g))
    throw std::invalid_argument("expected g = " + std::to_string(g) + " alpha values");
  for (std::size_t m = 0; m < alphas.size(); ++m)
    if (alphas[m] < 0) throw std::invalid_argument("alpha(" + std::to_string(m) + ") is negative");
  if (beta <= 0) throw std::invalid_argument("beta must be positive");
}

AssembledZeta assemble_zeta(const AlphaBetaTable& table) {
  table.validate();
  const int g = table.g;
  const BigRational Q = pow(table.base, table.n);

  UniPoly poly("T");
  for (int m = 0; m + 1 < g; ++m) {
    const BigRational& a = table.alphas[static_cast<std::size_t>(m)];
    poly += UniPoly::monomial("T", a, m);
    poly += UniPoly::monomial("T", a * pow(Q, g - 1 - m), 2 * (g - 1) - m);
  }
  if (g >= 1) poly += UniPoly::monomial("T", table.alphas[static_cast<std::size_t>(g - 1)], g - 1);

  const RationalFunctionQ tail(UniPoly::monomial("T", table.beta * (Q - 1), g), denominator(Q));
  return {RationalFunctionQ(poly) + tail, table.n, g, Q};
}

FunctionalEquationReport functional_equation_check(const AssembledZeta& z) {
  const auto shift = RationalFunctionQ::monomial("T", 1, -(z.g - 1));
  const RationalFunctionQ completed = z.Z * shift;
  FunctionalEquationReport r;
  r.witness = rf_substitute_inv(completed, z.Q) - completed;
  r.pass = r.witness.is_zero();
  return r;
}

UniPoly extract_numerator(const AssembledZeta& z) {
  const RationalFunctionQ p = z.Z * RationalFunctionQ(denominator(z.Q));
  if (!p.is_polynomial()) throw std::domain_error("not in expected form");
  return p.num();
}

BigRational residue_at_one(const AssembledZeta& z) {
  BigRational res;
  try {
    res = rf_residue_simple(z.Z, 1 / z.Q);
  } catch (const std::domain_error& e) {
    throw std::domain_error(std::string("no simple pole at T=1/Q: ") + e.what());
  }
  return -res * pow(z.Q, z.g);
}

AlphaBetaTable rank_one_pipeline(const curve::CurveData& curve) {
  curve.validate();
  AlphaBetaTable t;
  t.n = 1;
  t.g = curve.g;
  t.base = curve.q;
  if (curve.g > 0) {
    for (const auto& b : curve::effective_divisor_counts(curve, curve.g - 1)) t.alphas.emplace_back(b);
  }
  t.beta = curve::zeta_special_value(curve, 1);
  return t;
}

RhExploration rh_explore(const AssembledZeta& z, long precision_bits) {
  const UniPoly p = extract_numerator(z);
  RhExploration out;
  if (p.degree() < 1) return out;
  out.roots = poly_roots_numeric(p, precision_bits);
  const HPReal sq = sqrt(HPReal(z.Q, precision_bits));
  for (const auto& r : out.roots) out.deviations.push_back(abs(abs(r) * sq - HPReal(1L, precision_bits)));
  return out;
}

}  // namespace nazeta::assembly
