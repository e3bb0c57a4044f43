#include "nazeta/polyroots.hpp"

#include <stdexcept>

namespace nazeta {

HPComplex eval(const UniPoly& p, const HPComplex& z) {
  const long prec = z.precision();
  HPComplex acc(prec);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + HPComplex(HPReal(*it, prec));
  return acc;
}

namespace {

HPReal max_abs_coeff(const UniPoly& p, long prec) {
  HPReal m(prec);
  for (const auto& c : p.coeffs()) {
    HPReal a = abs(HPReal(c, prec));
    if (a > m) m = a;
  }
  return m;
}

}  // namespace

std::vector<HPComplex> poly_roots_numeric(const UniPoly& p, long precision_bits) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no finite root set");
  const int n = p.degree();
  if (n < 1) throw std::domain_error("constant polynomial has no roots");
  const long prec = std::max(precision_bits, kMinPrecisionBits) + 64;

  const UniPoly dp = p.derivative();
  const HPReal lead_abs = abs(HPReal(p.leading(), prec));

  // Cauchy bound for the starting circle.
  HPReal radius(1L, prec);
  for (int i = 0; i < n; ++i) {
    HPReal r = abs(HPReal(p.coeff(i), prec)) / lead_abs + HPReal(1L, prec);
    if (r > radius) radius = r;
  }
  HPReal start_radius = radius / HPReal(2L, prec);

  std::vector<HPComplex> z;
  z.reserve(static_cast<std::size_t>(n));
  // Offset angle avoids symmetric stalls on real-symmetric inputs.
  for (int k = 0; k < n; ++k) {
    const BigRational turn = BigRational(k, n) + BigRational(1, 4 * n + 3);
    z.push_back(HPComplex::unit_root(turn, prec) * HPComplex(start_radius));
  }

  const HPReal eps = ldexp_one(-(prec - 16), prec);
  const HPComplex one(HPReal(1L, prec));
  bool converged = false;
  for (int iter = 0; iter < 5000 && !converged; ++iter) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      const HPComplex pv = eval(p, z[i]);
      if (abs(pv).is_zero()) continue;
      const HPComplex ratio = pv / eval(dp, z[i]);
      HPComplex sum(prec);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        sum += one / (z[i] - z[j]);
      }
      const HPComplex step = ratio / (one - ratio * sum);
      z[i] -= step;
      if (abs(step) > eps * (abs(z[i]) + HPReal(1L, prec))) converged = false;
    }
  }

  const HPReal bound = ldexp_one(-(precision_bits / 2), prec) * max_abs_coeff(p, prec);
  std::vector<HPComplex> roots;
  roots.reserve(z.size());
  for (auto& r : z) {
    const HPReal residual = abs(eval(p, r));
    if (!(residual < bound))
      throw std::runtime_error("root iteration did not converge: residual " + residual.to_string(6) +
                               " at root " + r.to_string(12));
    roots.push_back(r.with_precision(precision_bits));
  }
  return roots;
}

}  // namespace nazeta
