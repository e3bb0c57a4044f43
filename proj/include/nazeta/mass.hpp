#pragma once

// Masses and volumes under parabolic reduction.
//
// Function-field side (curve X/F_q): total masses m_{X,n} are products of
// completed zeta values; normalized semistable masses m~^ss_{X,n}(d) come
// from the alternating composition sum with fractional-part exponents; the
// Harder-Narasimhan series rebuilds m_{X,n} from them; the averaged and
// individual root-of-unity forms are evaluated on top.
//
// Number-field side (Q): Siegel volumes, semistable volumes by the analogous
// alternating sum, and the Kontsevich-Soibelman style inverse relation.

#include "nazeta/curve.hpp"
#include "nazeta/hpnum.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nazeta::mass {

struct Composition {
  std::vector<int> parts;

  int total() const;
  int length() const { return static_cast<int>(parts.size()); }
  // Partial sums N_1..N_k.
  std::vector<int> prefix_sums() const;
  friend bool operator==(const Composition&, const Composition&) = default;
};

// All 2^{n-1} ordered compositions of n, lexicographic by parts.
std::vector<Composition> compositions(int n);

// A power of an exact base with an exact rational exponent. Only integral
// exponents materialize; fractional ones must cancel when terms are combined.
class QPower {
 public:
  QPower(BigRational base, BigRational exponent);

  const BigRational& base() const { return base_; }
  const BigRational& exponent() const { return exponent_; }

  QPower& operator*=(const QPower& o);
  // Throws std::domain_error("non-integral exponent") unless integral.
  BigRational materialize() const;

 private:
  BigRational base_;
  BigRational exponent_;
};

// Exact data the function-field formulas consume: the base q and the total
// masses m_1..m_N (index 0 unused).
struct MassContext {
  BigRational q;
  int genus = 1;
  std::vector<BigRational> total;

  static MassContext from_curve(const curve::CurveData& curve, int nmax);
  const BigRational& m(int n) const { return total.at(static_cast<std::size_t>(n)); }
};

// m_{X,n} = zeta^(1) ... zeta^(n).
BigRational total_mass_ff(const curve::CurveData& curve, int n);

// m~^ss_{X,n}(d) (normalized semistable mass).
BigRational zagier_semistable_mass(const MassContext& ctx, int n, long d);
BigRational zagier_semistable_mass(const curve::CurveData& curve, int n, long d);
// m^ss_{X,n}(d) = q^{n(n-1)(g-1)/2} m~^ss_{X,n}(d).
BigRational semistable_mass(const curve::CurveData& curve, int n, long d);

struct HnPartial {
  BigRational partial_sum;
  BigRational last_shell;  // terms with instability weight exactly weight_cap
};

// Harder-Narasimhan sum truncated to instability weight <= weight_cap.
HnPartial hn_series_partial(const MassContext& ctx, int n, long d, long weight_cap);
HnPartial hn_series_partial(const curve::CurveData& curve, int n, long d, long weight_cap);

struct IdentityCheck {
  BigRational lhs;
  BigRational rhs;
  bool pass = false;
};

// n * m_{X,n} against the delta-sum over compositions.
IdentityCheck wz_average_identity(const MassContext& ctx, int n);
IdentityCheck wz_average_identity(const curve::CurveData& curve, int n);

struct IndividualMass {
  HPComplex value;
  BigRational reference;  // m_{X,n}
  HPComplex deviation;    // value - reference
};

// Root-of-unity evaluation for a single degree 0 <= d < n. zeta^x for the
// root zeta = exp(2 pi i j / n) and rational x means exp(2 pi i j x / n).
IndividualMass wz_individual_mass(const MassContext& ctx, int n, int d, long precision_bits);
IndividualMass wz_individual_mass(const curve::CurveData& curve, int n, int d, long precision_bits);

// ---------------------------------------------------------------------------
// Number fields

// Completed Riemann zeta pi^{-s/2} Gamma(s/2) zeta(s) at integer k >= 2;
// k = 1 returns the residue at s = 1, which is 1.
HPReal completed_riemann_zeta(int k, long precision_bits);

// m_{Q,n} = prod_{k=1}^n completed zeta(k).
HPReal siegel_volume_nf(int n, long precision_bits);

// m^ss_{Q,n} by the alternating composition sum.
HPReal weng_semistable_volume_nf(int n, long precision_bits);

// Two readings of the printed c_{n_1..n_k} denominator:
//  prefix_suffix: all proper prefix sums * all proper suffix sums * n;
//  prefix_only:   all prefix sums N_1..N_k * n_k.
enum class KsConvention { prefix_suffix, prefix_only };

KsConvention parse_ks_convention(const std::string& name);
std::string to_string(KsConvention c);

BigRational ks_coefficient(const Composition& c, KsConvention convention);

// Right-hand side sum_comps c * prod m^ss_{n_j}; ss maps rank -> m^ss_{Q,rank}.
HPReal ks_total_from_semistable(int n, const std::map<int, HPReal>& ss, KsConvention convention);

// ---------------------------------------------------------------------------
// Symbolic inversion check

// Sparse polynomial with rational coefficients in the commuting symbols
// m_1..m_N; a monomial is its exponent vector.
class MassPolynomial {
 public:
  explicit MassPolynomial(int symbols = 0) : symbols_(symbols) {}
  static MassPolynomial symbol(int symbols, int index);  // m_index
  static MassPolynomial constant(int symbols, const BigRational& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, BigRational>& terms() const { return terms_; }
  BigRational coefficient(const std::vector<int>& exponents) const;

  MassPolynomial& operator+=(const MassPolynomial& o);
  MassPolynomial& operator*=(const MassPolynomial& o);
  MassPolynomial& operator*=(const BigRational& c);
  friend MassPolynomial operator+(MassPolynomial a, const MassPolynomial& b) { return a += b; }
  friend MassPolynomial operator*(MassPolynomial a, const MassPolynomial& b) { return a *= b; }
  friend MassPolynomial operator*(MassPolynomial a, const BigRational& c) { return a *= c; }

  // e.g. "1/4*m1^2 - 1/2*m2"; "0" when zero. Terms in ascending monomial order.
  std::string to_string() const;

 private:
  int symbols_;
  std::map<std::vector<int>, BigRational> terms_;
};

struct InversionRow {
  int n = 0;
  KsConvention convention = KsConvention::prefix_suffix;
  MassPolynomial residual;  // RHS - (1/n) m_n after substituting m^ss
  bool closes = false;
};

struct InversionReport {
  int nmax = 0;
  std::vector<InversionRow> rows;
  std::string to_text() const;
};

InversionReport inversion_consistency(int nmax);

}  // namespace nazeta::mass
