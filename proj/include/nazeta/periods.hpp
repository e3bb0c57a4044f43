#pragma once

// The period omega_X^G(lambda) as a Weyl-group sum of Gamma_R factors and
// ratios of completed curve zeta values, plus the SL_2 comparison table.

#include "nazeta/assembly.hpp"
#include "nazeta/curve.hpp"
#include "nazeta/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nazeta::periods {

enum class SignConvention { all_plus, length_sign };

SignConvention parse_sign_convention(const std::string& name);
std::string to_string(SignConvention c);

struct PeriodConfig {
  SignConvention sign = SignConvention::all_plus;
  long precision_bits = 128;
};

// pi^{-z/2} Gamma(z/2). Throws std::domain_error("Gamma_R pole") at 0, -2, -4, ...
HPComplex gamma_r(const HPComplex& z);

// Completed zeta of the curve at a rational point; exact values are used for
// integers >= 2. Throws std::domain_error at the poles s = 0 and s = 1.
HPReal completed_curve_zeta(const curve::CurveData& curve, const BigRational& s, long precision_bits);

struct PeriodTerm {
  std::string word;
  int sign = 1;
  HPComplex gamma_factor;
  HPReal zeta_factor;
  HPComplex value;
};

struct PeriodResult {
  HPComplex value;
  std::vector<PeriodTerm> terms;  // in Weyl enumeration order
};

// lambda is given by its pairings <lambda, alpha_i^vee> with the simple coroots.
// Throws std::domain_error("singular configuration: ...") naming w and the factor.
PeriodResult period_eval(const rootsys::RootSystemData& rs, const curve::CurveData& curve,
                         const std::vector<BigRational>& lambda, const PeriodConfig& config);

struct Sl2Row {
  BigRational s;
  std::optional<HPReal> period;  // real part; the imaginary part vanishes for rational s
  std::string period_note;       // reason when singular
  std::optional<HPReal> assembled;
  std::optional<HPReal> ratio;
};

// Exploratory best fit of zeta_{X,2}(s) ~ c * period(a s + b) over a small
// grid of (a, b), with c by least squares.
struct Sl2Fit {
  BigRational a, b;
  HPReal c;
  HPReal residual;
};

struct Sl2Table {
  bool has_comparison = false;
  std::vector<Sl2Row> rows;
  std::optional<Sl2Fit> fit;
  std::string to_csv(int digits) const;
};

// Throws std::invalid_argument("rank-1 only") unless rs is A1.
Sl2Table sl2_group_zeta(const rootsys::RootSystemData& rs, const curve::CurveData& curve,
                        const std::vector<BigRational>& samples, const PeriodConfig& config,
                        const std::optional<assembly::AlphaBetaTable>& table = std::nullopt);

// Completed assembled zeta Z(T) (q^s)^{n(g-1)} at T = base^{-ns}.
HPReal assembled_value(const assembly::AssembledZeta& z, const BigRational& base, const BigRational& s,
                       long precision_bits);

}  // namespace nazeta::periods
