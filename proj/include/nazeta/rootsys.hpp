#pragma once

// Finite root systems of types A1-A4, B2-B4, C2-C4, D3-D4 and G2.
//
// Everything lives in simple-root coordinates: a vector x stands for
// sum_i x_i alpha_i. The invariant form is a rational Gram matrix with
// (alpha, alpha) = 2 for long roots. Weyl elements are integer matrices in
// the same coordinates together with a shortest word in simple reflections.

#include "nazeta/hpnum.hpp"
#include "nazeta/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nazeta::rootsys {

using IntVec = std::vector<long>;
using RatVec = std::vector<BigRational>;

struct WeylElement {
  std::vector<long> matrix;  // r x r, row-major, acts on coordinate columns
  std::vector<int> word;     // w = s_{word[0]} s_{word[1]} ..., 0-based indices

  int length() const { return static_cast<int>(word.size()); }
};

class RootSystemData {
 public:
  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  const std::vector<RatVec>& gram() const { return gram_; }
  // cartan(i, j) = <alpha_i, alpha_j^vee>.
  long cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  const std::vector<IntVec>& positive_roots() const { return positive_; }
  const RatVec& rho() const { return rho_; }
  const std::vector<WeylElement>& weyl_group() const { return weyl_; }

  BigRational form(const RatVec& x, const RatVec& y) const;
  // <x, beta^vee> = 2 (x, beta) / (beta, beta) for a root beta.
  BigRational pairing(const RatVec& x, const IntVec& beta) const;
  BigRational pairing_simple(const RatVec& x, int i) const;

  IntVec apply(const WeylElement& w, const IntVec& x) const;
  RatVec apply(const WeylElement& w, const RatVec& x) const;
  WeylElement compose(const WeylElement& a, const WeylElement& b) const;  // a * b
  // Index in weyl_group() of the element with this matrix, if any.
  std::optional<std::size_t> find(const std::vector<long>& matrix) const;

  // i for the simple root alpha_i, -1 otherwise.
  int simple_index(const IntVec& root) const;
  bool is_root(const IntVec& v) const;
  static bool is_negative(const IntVec& v);

  friend RootSystemData build_root_system(char type, int rank);

 private:
  char type_ = 'A';
  int rank_ = 0;
  std::vector<RatVec> gram_;
  std::vector<std::vector<long>> cartan_;
  std::vector<IntVec> positive_;
  RatVec rho_;
  std::vector<WeylElement> weyl_;
  std::map<std::vector<long>, std::size_t> index_;
};

// Throws std::invalid_argument("unsupported root system ...").
RootSystemData build_root_system(char type, int rank);

// n_i = #{alpha > 0 : <rho, alpha^vee> = i} - #{... = i + 1}, nonzero entries only.
std::map<int, int> exponent_counts(const RootSystemData& rs);

// sqrt(det) of the Gram matrix of the simple coroots.
HPReal coweight_cell_volume(const RootSystemData& rs, long precision_bits);

enum class VolumeConvention { as_printed, reciprocal };

struct LanglandsVolume {
  HPReal value;
  std::optional<HPReal> siegel;  // prod_{k=1}^{r+1} zeta^(k), type A only
};

// v_G prod_i zeta(i)^{-n_i} (as_printed) or ^{+n_i} (reciprocal).
// Throws std::invalid_argument("missing zeta value for i=...").
LanglandsVolume langlands_volume(const RootSystemData& rs, const std::map<int, HPReal>& zeta_values,
                                 VolumeConvention convention, long precision_bits);

// Completed Riemann zeta values for every i with n_i != 0 (zeta^(1) := 1).
std::map<int, HPReal> riemann_zeta_values(const RootSystemData& rs, long precision_bits);

struct ParabolicIndex {
  unsigned J = 0;          // bitmask over simple roots
  std::size_t w = 0;       // index into weyl_group()
  int rank_P = 0;          // |Delta \ J|
};

// Ordered by decreasing |J|, then by bitmask. Throws std::logic_error
// ("W0 correspondence violated") if w -> J_w is not a bijection.
std::vector<ParabolicIndex> enumerate_W0(const RootSystemData& rs);

enum class Flavor { NF, FF, RS };

struct CoefficientRow {
  ParabolicIndex parabolic;
  std::string label;  // "G", "B" or "P{1,3}" (1-based members of J)
  bool singular = false;
  int sign = 1;
  // NF: the exact coefficient. FF with numeric q: the exact value.
  std::optional<BigRational> exact;
  // FF: exponents e of the denominator factors (q^e - 1), sorted.
  std::vector<long> ff_exponents;
  // RS: the real value.
  std::optional<HPReal> real;
  std::string text;  // printable coefficient or "singular"
};

struct CoefficientOptions {
  Flavor flavor = Flavor::NF;
  std::optional<BigRational> q;  // FF: numeric q > 1 (symbolic if absent)
  long precision_bits = 128;     // RS
};

std::vector<CoefficientRow> conjecture_coeffs(const RootSystemData& rs, const CoefficientOptions& options);

std::string parabolic_label(const RootSystemData& rs, unsigned J);

struct CrosscheckRow {
  std::vector<int> composition;
  std::string label;
  std::string word;  // e.g. "s1 s2", "e" for the identity
  BigRational nf_conjecture, nf_reference;
  bool nf_singular = false;
  bool nf_match = false;
  std::string ff_conjecture, ff_reference;
  bool ff_match = false;
};

struct CrosscheckReport {
  int n = 0;
  std::vector<CrosscheckRow> rows;
  std::string to_text() const;
};

// A_{n-1} conjecture coefficients against the composition-indexed SL_n
// coefficients, for 2 <= n <= 5.
CrosscheckReport sln_coefficient_crosscheck(int n);

std::string format_word(const std::vector<int>& word);

}  // namespace nazeta::rootsys
