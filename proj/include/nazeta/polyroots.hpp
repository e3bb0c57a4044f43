#pragma once

#include "nazeta/hpnum.hpp"
#include "nazeta/poly.hpp"

#include <vector>

namespace nazeta {

// All deg(p) complex roots of p (with multiplicity), by Aberth-Ehrlich
// simultaneous iteration at `precision_bits` plus guard bits. Every returned
// root r satisfies |p(r)| < 2^(-precision_bits/2) * max|coeff|; otherwise
// std::runtime_error is thrown with the offending residual.
std::vector<HPComplex> poly_roots_numeric(const UniPoly& p, long precision_bits);

// p evaluated at a complex point (Horner).
HPComplex eval(const UniPoly& p, const HPComplex& z);

}  // namespace nazeta
