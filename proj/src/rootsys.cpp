#include "nazeta/rootsys.hpp"

#include "nazeta/mass.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nazeta::rootsys {

namespace {

std::vector<RatVec> zero_gram(int r) { return std::vector<RatVec>(static_cast<std::size_t>(r), RatVec(static_cast<std::size_t>(r), BigRational(0))); }

void link(std::vector<RatVec>& b, int i, int j, const BigRational& v) {
  b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
  b[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
}

std::vector<RatVec> gram_matrix(char type, int r) {
  auto b = zero_gram(r);
  auto diag = [&](int i, const BigRational& v) { b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = v; };
  switch (type) {
    case 'A':
      for (int i = 0; i < r; ++i) diag(i, 2);
      for (int i = 0; i + 1 < r; ++i) link(b, i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < r; ++i) diag(i, i + 1 < r ? 2 : 1);
      for (int i = 0; i + 1 < r; ++i) link(b, i, i + 1, -1);
      break;
    case 'C':
      for (int i = 0; i < r; ++i) diag(i, i + 1 < r ? BigRational(1) : BigRational(2));
      for (int i = 0; i + 2 < r; ++i) link(b, i, i + 1, make_rational(-1, 2));
      link(b, r - 2, r - 1, -1);
      break;
    case 'D':
      for (int i = 0; i < r; ++i) diag(i, 2);
      for (int i = 0; i + 2 < r; ++i) link(b, i, i + 1, -1);
      link(b, r - 3, r - 1, -1);
      break;
    case 'G':
      diag(0, make_rational(2, 3));
      diag(1, 2);
      link(b, 0, 1, -1);
      break;
    default:
      break;
  }
  return b;
}

bool supported(char type, int r) {
  switch (type) {
    case 'A': return r >= 1 && r <= 4;
    case 'B':
    case 'C': return r >= 2 && r <= 4;
    case 'D': return r >= 3 && r <= 4;
    case 'G': return r == 2;
    default: return false;
  }
}

std::vector<long> identity_matrix(int r) {
  std::vector<long> m(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i * r + i)] = 1;
  return m;
}

std::vector<long> matmul(const std::vector<long>& a, const std::vector<long>& b, int r) {
  std::vector<long> c(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      const long aik = a[static_cast<std::size_t>(i * r + k)];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) c[static_cast<std::size_t>(i * r + j)] += aik * b[static_cast<std::size_t>(k * r + j)];
    }
  return c;
}

RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

int popcount(unsigned x) { return std::popcount(x); }

std::string ff_text(int sign, const std::vector<long>& exps) {
  std::string s = sign < 0 ? "-1" : "1";
  if (exps.empty()) return s;
  std::string den;
  for (long e : exps) den += e == 1 ? "(q-1)" : "(q^" + std::to_string(e) + "-1)";
  return s + "/" + (exps.size() == 1 ? den : "(" + den + ")");
}

// Gamma_R(x) = pi^{-x/2} Gamma(x/2); nullopt at the poles x in {0, -2, -4, ...}.
std::optional<HPReal> gamma_r_real(const BigRational& x, long prec) {
  const BigRational half = x / 2;
  if (is_integer(half) && half <= 0) return std::nullopt;
  const HPReal h(half, prec);
  return pow(HPReal::pi(prec), -h) * gamma(h);
}

int digits_for_bits(long bits) { return std::max(6, static_cast<int>((bits - 32) * 0.30102999566398)); }

}  // namespace

BigRational RootSystemData::form(const RatVec& x, const RatVec& y) const {
  BigRational acc = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      acc += x[static_cast<std::size_t>(i)] * gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             y[static_cast<std::size_t>(j)];
  return acc;
}

BigRational RootSystemData::pairing(const RatVec& x, const IntVec& beta) const {
  const RatVec b = to_rat(beta);
  return 2 * form(x, b) / form(b, b);
}

BigRational RootSystemData::pairing_simple(const RatVec& x, int i) const {
  IntVec e(static_cast<std::size_t>(rank_), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return pairing(x, e);
}

IntVec RootSystemData::apply(const WeylElement& w, const IntVec& x) const {
  IntVec y(static_cast<std::size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) y[static_cast<std::size_t>(i)] += w.matrix[static_cast<std::size_t>(i * rank_ + j)] * x[static_cast<std::size_t>(j)];
  return y;
}

RatVec RootSystemData::apply(const WeylElement& w, const RatVec& x) const {
  RatVec y(static_cast<std::size_t>(rank_), BigRational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) y[static_cast<std::size_t>(i)] += w.matrix[static_cast<std::size_t>(i * rank_ + j)] * x[static_cast<std::size_t>(j)];
  return y;
}

WeylElement RootSystemData::compose(const WeylElement& a, const WeylElement& b) const {
  WeylElement c;
  c.matrix = matmul(a.matrix, b.matrix, rank_);
  if (auto idx = find(c.matrix)) c.word = weyl_[*idx].word;
  return c;
}

std::optional<std::size_t> RootSystemData::find(const std::vector<long>& matrix) const {
  auto it = index_.find(matrix);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystemData::simple_index(const IntVec& root) const {
  int idx = -1;
  for (int i = 0; i < rank_; ++i) {
    const long c = root[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (c != 1 || idx >= 0) return -1;
    idx = i;
  }
  return idx;
}

bool RootSystemData::is_root(const IntVec& v) const {
  if (std::find(positive_.begin(), positive_.end(), v) != positive_.end()) return true;
  IntVec neg(v.size());
  std::transform(v.begin(), v.end(), neg.begin(), [](long x) { return -x; });
  return std::find(positive_.begin(), positive_.end(), neg) != positive_.end();
}

bool RootSystemData::is_negative(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x <= 0; }) &&
         std::any_of(v.begin(), v.end(), [](long x) { return x < 0; });
}

RootSystemData build_root_system(char type, int rank) {
  if (!supported(type, rank))
    throw std::invalid_argument("unsupported root system " + std::string(1, type) + std::to_string(rank));
  RootSystemData rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.gram_ = gram_matrix(type, rank);
  const auto r = static_cast<std::size_t>(rank);

  rs.cartan_.assign(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const BigRational c = 2 * rs.gram_[i][j] / rs.gram_[j][j];
      if (!is_integer(c)) throw std::logic_error("non-integral Cartan entry");
      rs.cartan_[i][j] = c.get_num().get_si();
    }

  // Simple reflection s_j: x -> x - <x, alpha_j^vee> alpha_j.
  std::vector<std::vector<long>> refl(r, identity_matrix(rank));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) refl[j][j * r + k] -= rs.cartan_[k][j];

  // Weyl group by breadth-first search over left multiplication.
  std::deque<std::size_t> queue;
  rs.weyl_.push_back({identity_matrix(rank), {}});
  rs.index_[rs.weyl_[0].matrix] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<long> m = matmul(refl[j], rs.weyl_[cur].matrix, rank);
      if (rs.index_.count(m)) continue;
      std::vector<int> word{static_cast<int>(j)};
      word.insert(word.end(), rs.weyl_[cur].word.begin(), rs.weyl_[cur].word.end());
      rs.index_[m] = rs.weyl_.size();
      rs.weyl_.push_back({std::move(m), std::move(word)});
      queue.push_back(rs.weyl_.size() - 1);
    }
  }

  // Roots are the W-orbits of the simple roots.
  std::set<IntVec> roots;
  for (const auto& w : rs.weyl_)
    for (std::size_t i = 0; i < r; ++i) {
      IntVec e(r, 0);
      e[i] = 1;
      roots.insert(rs.apply(w, e));
    }
  for (const auto& v : roots)
    if (!RootSystemData::is_negative(v)) rs.positive_.push_back(v);
  std::stable_sort(rs.positive_.begin(), rs.positive_.end(), [](const IntVec& a, const IntVec& b) {
    long ha = 0, hb = 0;
    for (long x : a) ha += x;
    for (long x : b) hb += x;
    return ha < hb;
  });

  rs.rho_.assign(r, BigRational(0));
  for (const auto& a : rs.positive_)
    for (std::size_t i = 0; i < r; ++i) rs.rho_[i] += make_rational(a[i], 2);
  return rs;
}

std::map<int, int> exponent_counts(const RootSystemData& rs) {
  std::map<int, int> level;
  for (const auto& a : rs.positive_roots()) {
    const BigRational h = rs.pairing(rs.rho(), a);
    if (!is_integer(h)) throw std::logic_error("non-integral <rho, alpha^vee>");
    ++level[static_cast<int>(h.get_num().get_si())];
  }
  std::map<int, int> n;
  for (const auto& [i, c] : level) {
    const auto next = level.find(i + 1);
    const int d = c - (next == level.end() ? 0 : next->second);
    if (d != 0) n[i] = d;
  }
  return n;
}

HPReal coweight_cell_volume(const RootSystemData& rs, long precision_bits) {
  const int r = rs.rank();
  // Gram of coroots: (a_i^vee, a_j^vee) = 4 (a_i, a_j) / ((a_i, a_i)(a_j, a_j)); det by exact elimination.
  std::vector<RatVec> m(static_cast<std::size_t>(r), RatVec(static_cast<std::size_t>(r)));
  const auto& b = rs.gram();
  for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j) m[i][j] = 4 * b[i][j] / (b[i][i] * b[j][j]);
  BigRational det = 1;
  for (std::size_t c = 0; c < static_cast<std::size_t>(r); ++c) {
    std::size_t p = c;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) return HPReal(precision_bits);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < m.size(); ++i) {
      const BigRational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < m.size(); ++j) m[i][j] -= f * m[c][j];
    }
  }
  return sqrt(HPReal(det, precision_bits));
}

LanglandsVolume langlands_volume(const RootSystemData& rs, const std::map<int, HPReal>& zeta_values,
                                 VolumeConvention convention, long precision_bits) {
  LanglandsVolume out;
  out.value = coweight_cell_volume(rs, precision_bits);
  for (const auto& [i, n] : exponent_counts(rs)) {
    const auto it = zeta_values.find(i);
    if (it == zeta_values.end()) throw std::invalid_argument("missing zeta value for i=" + std::to_string(i));
    const long e = convention == VolumeConvention::as_printed ? -n : n;
    out.value = out.value * pow(it->second, e);
  }
  if (rs.type() == 'A') out.siegel = mass::siegel_volume_nf(rs.rank() + 1, precision_bits);
  return out;
}

std::map<int, HPReal> riemann_zeta_values(const RootSystemData& rs, long precision_bits) {
  std::map<int, HPReal> z;
  for (const auto& [i, n] : exponent_counts(rs)) z.emplace(i, mass::completed_riemann_zeta(i, precision_bits));
  return z;
}

std::vector<ParabolicIndex> enumerate_W0(const RootSystemData& rs) {
  const int r = rs.rank();
  std::vector<ParabolicIndex> out;
  std::set<unsigned> seen;
  for (std::size_t wi = 0; wi < rs.weyl_group().size(); ++wi) {
    const auto& w = rs.weyl_group()[wi];
    unsigned J = 0;
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) {
      IntVec e(static_cast<std::size_t>(r), 0);
      e[static_cast<std::size_t>(i)] = 1;
      const IntVec img = rs.apply(w, e);
      if (rs.simple_index(img) >= 0) J |= 1u << i;
      else if (!RootSystemData::is_negative(img)) ok = false;
    }
    if (!ok) continue;
    if (!seen.insert(J).second) throw std::logic_error("W0 correspondence violated");
    out.push_back({J, wi, r - popcount(J)});
  }
  if (out.size() != (std::size_t{1} << r)) throw std::logic_error("W0 correspondence violated");
  std::sort(out.begin(), out.end(), [](const ParabolicIndex& a, const ParabolicIndex& b) {
    if (popcount(a.J) != popcount(b.J)) return popcount(a.J) > popcount(b.J);
    return a.J < b.J;
  });
  return out;
}

std::string parabolic_label(const RootSystemData& rs, unsigned J) {
  const unsigned full = (1u << rs.rank()) - 1;
  if (J == full) return "G";
  if (J == 0) return "B";
  std::string s = "P{";
  bool first = true;
  for (int i = 0; i < rs.rank(); ++i)
    if (J & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

std::vector<CoefficientRow> conjecture_coeffs(const RootSystemData& rs, const CoefficientOptions& options) {
  if (options.flavor == Flavor::FF && options.q && *options.q <= 1)
    throw std::invalid_argument("q must be > 1");
  const int r = rs.rank();
  std::vector<CoefficientRow> rows;
  for (const auto& p : enumerate_W0(rs)) {
    CoefficientRow row;
    row.parabolic = p;
    row.label = parabolic_label(rs, p.J);
    row.sign = p.rank_P % 2 == 0 ? 1 : -1;
    const auto& w = rs.weyl_group()[p.w];

    if (options.flavor == Flavor::RS) {
      if (p.rank_P == 0) {
        // Empty inner sum; P = G is given coefficient 1.
        row.real = HPReal(1L, options.precision_bits);
      } else {
        // rho_P = rho - rho_J, rho_J the half-sum of positive roots spanned by J.
        RatVec rho_p = rs.rho();
        for (const auto& a : rs.positive_roots()) {
          bool in_span = true;
          for (int i = 0; i < r; ++i)
            if (a[static_cast<std::size_t>(i)] != 0 && !(p.J & (1u << i))) in_span = false;
          if (!in_span) continue;
          for (int i = 0; i < r; ++i) rho_p[static_cast<std::size_t>(i)] -= make_rational(a[static_cast<std::size_t>(i)], 2);
        }
        HPReal acc(options.precision_bits);
        for (int i = 0; i < r && !row.singular; ++i) {
          if (p.J & (1u << i)) continue;
          const auto g = gamma_r_real(rs.pairing_simple(rho_p, i) - 1, options.precision_bits);
          if (!g) row.singular = true;
          else acc = acc + *g;
        }
        if (!row.singular) row.real = row.sign < 0 ? -acc : acc;
      }
      row.text = row.singular ? "singular" : row.real->to_string(digits_for_bits(options.precision_bits));
      rows.push_back(std::move(row));
      continue;
    }

    // Simple roots in w(J).
    unsigned wJ = 0;
    for (int i = 0; i < r; ++i) {
      if (!(p.J & (1u << i))) continue;
      IntVec e(static_cast<std::size_t>(r), 0);
      e[static_cast<std::size_t>(i)] = 1;
      wJ |= 1u << rs.simple_index(rs.apply(w, e));
    }
    const RatVec wrho = rs.apply(w, rs.rho());
    BigRational nf_den = 1;
    for (int i = 0; i < r; ++i) {
      if (wJ & (1u << i)) continue;
      const BigRational c = rs.pairing_simple(wrho, i);
      if (!is_integer(c)) throw std::logic_error("non-integral <w rho, alpha^vee>");
      nf_den *= 1 - c;
      row.ff_exponents.push_back(1 - c.get_num().get_si());
    }
    std::sort(row.ff_exponents.begin(), row.ff_exponents.end());

    if (options.flavor == Flavor::NF) {
      row.singular = nf_den == 0;
      if (!row.singular) row.exact = BigRational(row.sign) / nf_den;
      row.text = row.singular ? "singular" : to_string(*row.exact);
    } else {
      row.singular = std::find(row.ff_exponents.begin(), row.ff_exponents.end(), 0L) != row.ff_exponents.end();
      if (row.singular) {
        row.text = "singular";
      } else if (options.q) {
        BigRational den = 1;
        for (long e : row.ff_exponents) den *= pow(*options.q, e) - 1;
        row.exact = BigRational(row.sign) / den;
        row.text = to_string(*row.exact);
      } else {
        row.text = ff_text(row.sign, row.ff_exponents);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_word(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += " ";
    s += "s" + std::to_string(word[i] + 1);
  }
  return s;
}

std::string CrosscheckReport::to_text() const {
  std::ostringstream os;
  os << "# SL_" << n << " coefficient cross-check (A" << n - 1 << ")\n";
  os << "composition\tparabolic\tw\tNF_conjecture\tNF_composition\tNF_match\tFF_conjecture\tFF_composition\tFF_match\n";
  for (const auto& r : rows) {
    std::string comp;
    for (std::size_t i = 0; i < r.composition.size(); ++i) comp += (i ? "," : "") + std::to_string(r.composition[i]);
    os << "(" << comp << ")\t" << r.label << "\t" << r.word << "\t"
       << (r.nf_singular ? std::string("singular") : to_string(r.nf_conjecture)) << "\t" << to_string(r.nf_reference)
       << "\t" << (r.nf_match ? "yes" : "no") << "\t" << r.ff_conjecture << "\t" << r.ff_reference << "\t"
       << (r.ff_match ? "yes" : "no") << "\n";
  }
  return os.str();
}

CrosscheckReport sln_coefficient_crosscheck(int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("n must be in 2..5");
  const RootSystemData rs = build_root_system('A', n - 1);
  const auto nf = conjecture_coeffs(rs, {Flavor::NF, std::nullopt, 128});
  const auto ff = conjecture_coeffs(rs, {Flavor::FF, std::nullopt, 128});

  CrosscheckReport report;
  report.n = n;
  for (std::size_t k = 0; k < nf.size(); ++k) {
    const unsigned J = nf[k].parabolic.J;
    // Composition: blocks end at the simple roots missing from J.
    std::vector<int> comp;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (J & (1u << i)) ++run;
      else {
        comp.push_back(run);
        run = 1;
      }
    }
    comp.push_back(run);

    const int sign = comp.size() % 2 == 1 ? 1 : -1;
    BigRational ref_den = 1;
    std::vector<long> ref_exps;
    for (std::size_t j = 0; j + 1 < comp.size(); ++j) {
      ref_den *= comp[j] + comp[j + 1];
      ref_exps.push_back(comp[j] + comp[j + 1]);
    }
    std::sort(ref_exps.begin(), ref_exps.end());

    CrosscheckRow row;
    row.composition = comp;
    row.label = nf[k].label;
    row.word = format_word(rs.weyl_group()[nf[k].parabolic.w].word);
    row.nf_reference = BigRational(sign) / ref_den;
    row.nf_singular = nf[k].singular;
    if (!row.nf_singular) row.nf_conjecture = *nf[k].exact;
    row.nf_match = !row.nf_singular && row.nf_conjecture == row.nf_reference;
    row.ff_conjecture = ff[k].text;
    row.ff_reference = ff_text(sign, ref_exps);
    row.ff_match = !ff[k].singular && ff[k].sign == sign && ff[k].ff_exponents == ref_exps;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace nazeta::rootsys
