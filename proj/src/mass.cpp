#include "nazeta/mass.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace nazeta::mass {

int Composition::total() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::vector<int> Composition::prefix_sums() const {
  std::vector<int> out;
  int s = 0;
  for (int p : parts) out.push_back(s += p);
  return out;
}

std::vector<Composition> compositions(int n) {
  if (n <= 0) throw std::invalid_argument("compositions need n >= 1");
  std::vector<Composition> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back({current});
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      current.push_back(first);
      rec(rest - first);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

// ---------------------------------------------------------------------------

QPower::QPower(BigRational base, BigRational exponent) : base_(std::move(base)), exponent_(std::move(exponent)) {}

QPower& QPower::operator*=(const QPower& o) {
  if (o.base_ != base_) throw std::invalid_argument("QPower bases differ");
  exponent_ += o.exponent_;
  return *this;
}

BigRational QPower::materialize() const {
  if (!is_integer(exponent_)) throw std::domain_error("non-integral exponent " + nazeta::to_string(exponent_));
  return pow(base_, exponent_.get_num().get_si());
}

// ---------------------------------------------------------------------------

MassContext MassContext::from_curve(const curve::CurveData& curve, int nmax) {
  MassContext ctx;
  ctx.q = curve.q;
  ctx.genus = curve.g;
  ctx.total.assign(static_cast<std::size_t>(nmax) + 1, BigRational(0));
  BigRational acc = 1;
  for (int k = 1; k <= nmax; ++k) {
    acc *= curve::zeta_special_value(curve, k);
    ctx.total[static_cast<std::size_t>(k)] = acc;
  }
  return ctx;
}

BigRational total_mass_ff(const curve::CurveData& curve, int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  return MassContext::from_curve(curve, n).m(n);
}

BigRational zagier_semistable_mass(const MassContext& ctx, int n, long d) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  BigRational sum = 0;
  const BigRational slope = make_rational(d, n);
  for (const auto& comp : compositions(n)) {
    const auto& parts = comp.parts;
    const auto prefix = comp.prefix_sums();
    const int k = comp.length();
    QPower numer(ctx.q, 0);
    BigRational denom = 1;
    BigRational masses = 1;
    for (int j = 0; j + 1 < k; ++j) {
      const int pair = parts[static_cast<std::size_t>(j)] + parts[static_cast<std::size_t>(j) + 1];
      numer *= QPower(ctx.q, pair * frac(prefix[static_cast<std::size_t>(j)] * slope));
      denom *= pow(ctx.q, pair) - 1;
    }
    for (int p : parts) masses *= ctx.m(p);
    const BigRational term = numer.materialize() / denom * masses;
    sum += (k % 2 == 1) ? term : BigRational(-term);
  }
  return sum;
}

BigRational zagier_semistable_mass(const curve::CurveData& curve, int n, long d) {
  return zagier_semistable_mass(MassContext::from_curve(curve, n), n, d);
}

BigRational semistable_mass(const curve::CurveData& curve, int n, long d) {
  const BigRational exponent = make_rational(static_cast<long>(n) * (n - 1) * (curve.g - 1), 2);
  return QPower(BigRational(curve.q), exponent).materialize() * zagier_semistable_mass(curve, n, d);
}

// ---------------------------------------------------------------------------

namespace {

class NormalizedSsCache {
 public:
  explicit NormalizedSsCache(const MassContext& ctx) : ctx_(ctx) {}

  const BigRational& get(int n, long d) {
    const long r = ((d % n) + n) % n;
    auto key = std::make_pair(n, r);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, zagier_semistable_mass(ctx_, n, r)).first;
    return it->second;
  }

 private:
  const MassContext& ctx_;
  std::map<std::pair<int, long>, BigRational> cache_;
};

long ceil_rational(const BigRational& x) {
  BigInt f = floor(x);
  if (BigRational(f) != x) f += 1;
  return f.get_si();
}

}  // namespace

HnPartial hn_series_partial(const MassContext& ctx, int n, long d, long weight_cap) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (weight_cap < 0) throw std::invalid_argument("weight_cap must be >= 0");
  NormalizedSsCache ss(ctx);
  HnPartial out{0, 0};

  for (const auto& comp : compositions(n)) {
    const auto& parts = comp.parts;
    const int k = comp.length();
    if (k == 1) {
      const BigRational term = ss.get(n, d);
      out.partial_sum += term;
      if (weight_cap == 0) out.last_shell += term;
      continue;
    }
    std::vector<long> degs(static_cast<std::size_t>(k));
    // Slopes stay within (k-1)*cap of d/n, so d_i lies within n_i*(k-1)*cap of n_i*d/n.
    std::function<void(int, long, long)> rec = [&](int i, long assigned, long weight) {
      const auto ii = static_cast<std::size_t>(i);
      auto pair_weight = [&](std::size_t a, std::size_t b) {
        return degs[a] * parts[b] - degs[b] * parts[a];
      };
      auto extend = [&](long di) {
        degs[ii] = di;
        if (i > 0 && !(degs[ii - 1] * parts[ii] > di * parts[ii - 1])) return;
        long w = weight;
        for (std::size_t a = 0; a < ii; ++a) w += pair_weight(a, ii);
        if (w > weight_cap) return;
        if (i + 1 == k) {
          BigRational term = pow(ctx.q, -w);
          for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) term *= ss.get(parts[j], degs[j]);
          out.partial_sum += term;
          if (w == weight_cap) out.last_shell += term;
        } else {
          rec(i + 1, assigned + di, w);
        }
      };
      if (i + 1 == k) {
        extend(d - assigned);
        return;
      }
      const BigRational centre = make_rational(static_cast<long>(parts[ii]) * d, n);
      const BigRational radius(static_cast<long>(parts[ii]) * (k - 1) * weight_cap);
      const long lo = ceil_rational(centre - radius);
      const long hi = floor(centre + radius).get_si();
      for (long di = lo; di <= hi; ++di) extend(di);
    };
    rec(0, 0, 0);
  }
  return out;
}

HnPartial hn_series_partial(const curve::CurveData& curve, int n, long d, long weight_cap) {
  return hn_series_partial(MassContext::from_curve(curve, n), n, d, weight_cap);
}

// ---------------------------------------------------------------------------

namespace {

// Calls f(delta) for every delta with 0 <= delta_j < parts_j.
void for_each_delta(const std::vector<int>& parts, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> delta(parts.size(), 0);
  while (true) {
    f(delta);
    std::size_t i = 0;
    while (i < parts.size()) {
      if (++delta[i] < parts[i]) break;
      delta[i] = 0;
      ++i;
    }
    if (i == parts.size()) return;
  }
}

BigRational v_shift(const std::vector<int>& parts, const std::vector<int>& delta, std::size_t i) {
  return frac(make_rational(delta[i], parts[i]) - make_rational(delta[i + 1], parts[i + 1]));
}

}  // namespace

IdentityCheck wz_average_identity(const MassContext& ctx, int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  NormalizedSsCache ss(ctx);
  IdentityCheck out{BigRational(n) * ctx.m(n), 0, false};
  for (const auto& comp : compositions(n)) {
    const auto& parts = comp.parts;
    const auto prefix = comp.prefix_sums();
    const std::size_t k = parts.size();
    for_each_delta(parts, [&](const std::vector<int>& delta) {
      QPower numer(ctx.q, 0);
      BigRational denom = 1;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        const long nn = static_cast<long>(prefix[i]) * (n - prefix[i]);
        numer *= QPower(ctx.q, v_shift(parts, delta, i) * nn);
        denom *= pow(ctx.q, nn) - 1;
      }
      BigRational term = numer.materialize() / denom;
      for (std::size_t j = 0; j < k; ++j) term *= ss.get(parts[j], delta[j]);
      out.rhs += term;
    });
  }
  out.pass = out.lhs == out.rhs;
  return out;
}

IdentityCheck wz_average_identity(const curve::CurveData& curve, int n) {
  return wz_average_identity(MassContext::from_curve(curve, n), n);
}

IndividualMass wz_individual_mass(const MassContext& ctx, int n, int d, long precision_bits) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (d < 0 || d >= n) throw std::invalid_argument("degree must satisfy 0 <= d < n");
  const long prec = precision_bits + 32;
  NormalizedSsCache ss(ctx);
  HPComplex total(prec);
  const HPComplex one(HPReal(1L, prec));
  for (const auto& comp : compositions(n)) {
    const auto& parts = comp.parts;
    const auto prefix = comp.prefix_sums();
    const std::size_t k = parts.size();
    for_each_delta(parts, [&](const std::vector<int>& delta) {
      BigRational masses = 1;
      for (std::size_t j = 0; j < k; ++j) masses *= ss.get(parts[j], delta[j]);
      HPComplex root_sum(prec);
      for (int j = 0; j < n; ++j) {
        // zeta = exp(2 pi i j / n); zeta^x = exp(2 pi i j x / n).
        auto zeta_pow = [&](const BigRational& x) { return HPComplex::unit_root(BigRational(j) * x / n, prec); };
        HPComplex term = zeta_pow(BigRational(n - d));
        BigRational zeta_exponent = 0;
        QPower qpow(ctx.q, 0);
        for (std::size_t h = 0; h + 1 < k; ++h) {
          const BigRational v = v_shift(parts, delta, h);
          const long nn = static_cast<long>(prefix[h]) * (n - prefix[h]);
          zeta_exponent += v * prefix[h];
          qpow *= QPower(ctx.q, v * nn);
          const HPComplex den = zeta_pow(BigRational(prefix[h])) * HPComplex(HPReal(pow(ctx.q, nn), prec)) - one;
          term /= den;
        }
        term *= zeta_pow(zeta_exponent) * HPComplex(HPReal(qpow.materialize(), prec));
        root_sum += term;
      }
      total += root_sum * HPComplex(HPReal(masses / n, prec));
    });
  }
  IndividualMass out{total.with_precision(precision_bits), ctx.m(n), HPComplex(precision_bits)};
  out.deviation = (total - HPComplex(HPReal(ctx.m(n), prec))).with_precision(precision_bits);
  return out;
}

IndividualMass wz_individual_mass(const curve::CurveData& curve, int n, int d, long precision_bits) {
  return wz_individual_mass(MassContext::from_curve(curve, n), n, d, precision_bits);
}

// ---------------------------------------------------------------------------
// Number fields

HPReal completed_riemann_zeta(int k, long precision_bits) {
  if (k < 1) throw std::invalid_argument("completed zeta values need k >= 1");
  if (k == 1) return HPReal(1L, precision_bits);
  const long prec = precision_bits + 32;
  const HPReal s(static_cast<long>(k), prec);
  const HPReal half_s(make_rational(k, 2), prec);
  const HPReal value = pow(HPReal::pi(prec), -half_s) * gamma(half_s) * riemann_zeta(s);
  return value.with_precision(precision_bits);
}

HPReal siegel_volume_nf(int n, long precision_bits) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  const long prec = precision_bits + 32;
  HPReal acc(1L, prec);
  for (int k = 1; k <= n; ++k) acc *= completed_riemann_zeta(k, prec);
  return acc.with_precision(precision_bits);
}

HPReal weng_semistable_volume_nf(int n, long precision_bits) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  const long prec = precision_bits + 32;
  std::vector<HPReal> m;
  m.reserve(static_cast<std::size_t>(n) + 1);
  m.emplace_back(prec);
  for (int k = 1; k <= n; ++k) m.push_back(siegel_volume_nf(k, prec));
  HPReal sum(prec);
  for (const auto& comp : compositions(n)) {
    const auto& parts = comp.parts;
    BigInt denom = 1;
    for (std::size_t j = 0; j + 1 < parts.size(); ++j) denom *= parts[j] + parts[j + 1];
    HPReal term = HPReal(make_rational(1, denom), prec);
    for (int p : parts) term *= m[static_cast<std::size_t>(p)];
    if (parts.size() % 2 == 1) sum += term;
    else sum -= term;
  }
  return sum.with_precision(precision_bits);
}

KsConvention parse_ks_convention(const std::string& name) {
  if (name == "A" || name == "prefix_suffix") return KsConvention::prefix_suffix;
  if (name == "B" || name == "prefix_only") return KsConvention::prefix_only;
  throw std::invalid_argument("unknown coefficient convention '" + name + "'");
}

std::string to_string(KsConvention c) {
  return c == KsConvention::prefix_suffix ? "prefix_suffix" : "prefix_only";
}

BigRational ks_coefficient(const Composition& c, KsConvention convention) {
  const auto prefix = c.prefix_sums();
  const int n = c.total();
  const std::size_t k = c.parts.size();
  BigInt denom = 1;
  if (convention == KsConvention::prefix_suffix) {
    for (std::size_t i = 0; i + 1 < k; ++i) denom *= prefix[i];      // proper prefixes
    for (std::size_t i = 0; i + 1 < k; ++i) denom *= n - prefix[i];  // proper suffixes
    denom *= n;
  } else {
    for (std::size_t i = 0; i < k; ++i) denom *= prefix[i];
    denom *= c.parts.back();
  }
  return make_rational(1, denom);
}

HPReal ks_total_from_semistable(int n, const std::map<int, HPReal>& ss, KsConvention convention) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  long prec = kMinPrecisionBits;
  for (int m = 1; m <= n; ++m) {
    auto it = ss.find(m);
    if (it == ss.end()) throw std::invalid_argument("semistable table lacks rank " + std::to_string(m));
    prec = std::max(prec, it->second.precision());
  }
  HPReal sum(prec);
  for (const auto& comp : compositions(n)) {
    HPReal term(ks_coefficient(comp, convention), prec);
    for (int p : comp.parts) term *= ss.at(p);
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------------------

MassPolynomial MassPolynomial::symbol(int symbols, int index) {
  if (index < 1 || index > symbols) throw std::out_of_range("mass symbol index");
  MassPolynomial p(symbols);
  std::vector<int> e(static_cast<std::size_t>(symbols), 0);
  e[static_cast<std::size_t>(index - 1)] = 1;
  p.terms_.emplace(std::move(e), BigRational(1));
  return p;
}

MassPolynomial MassPolynomial::constant(int symbols, const BigRational& c) {
  MassPolynomial p(symbols);
  if (c != 0) p.terms_.emplace(std::vector<int>(static_cast<std::size_t>(symbols), 0), c);
  return p;
}

BigRational MassPolynomial::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigRational(0) : it->second;
}

MassPolynomial& MassPolynomial::operator+=(const MassPolynomial& o) {
  for (const auto& [mono, c] : o.terms_) {
    auto& slot = terms_[mono];
    slot += c;
    if (slot == 0) terms_.erase(mono);
  }
  return *this;
}

MassPolynomial& MassPolynomial::operator*=(const MassPolynomial& o) {
  std::map<std::vector<int>, BigRational> out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      std::vector<int> m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(out);
  return *this;
}

MassPolynomial& MassPolynomial::operator*=(const BigRational& c) {
  if (c == 0) terms_.clear();
  for (auto& [mono, coef] : terms_) coef *= c;
  return *this;
}

std::string MassPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms_) {
    const bool neg = c < 0;
    const BigRational mag = neg ? BigRational(-c) : c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    std::string monomial;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += "m" + std::to_string(i + 1);
      if (mono[i] > 1) monomial += "^" + std::to_string(mono[i]);
    }
    if (monomial.empty()) out += nazeta::to_string(mag);
    else if (mag == 1) out += monomial;
    else out += nazeta::to_string(mag) + "*" + monomial;
  }
  return out;
}

std::string InversionReport::to_text() const {
  std::ostringstream os;
  os << "# inversion consistency, nmax=" << nmax << "\n";
  for (const auto& r : rows) {
    os << "n=" << r.n << " convention=" << to_string(r.convention) << " closes=" << (r.closes ? "yes" : "no")
       << " residual=" << r.residual.to_string() << "\n";
  }
  return os.str();
}

InversionReport inversion_consistency(int nmax) {
  if (nmax < 1) throw std::invalid_argument("nmax must be >= 1");
  InversionReport report;
  report.nmax = nmax;
  // m^ss_j as polynomials in m_1..m_nmax.
  std::vector<MassPolynomial> ss(static_cast<std::size_t>(nmax) + 1, MassPolynomial(nmax));
  for (int j = 1; j <= nmax; ++j) {
    MassPolynomial acc(nmax);
    for (const auto& comp : compositions(j)) {
      const auto& parts = comp.parts;
      BigInt denom = 1;
      for (std::size_t i = 0; i + 1 < parts.size(); ++i) denom *= parts[i] + parts[i + 1];
      BigRational coef = make_rational(1, denom);
      if (parts.size() % 2 == 0) coef = -coef;
      MassPolynomial term = MassPolynomial::constant(nmax, coef);
      for (int p : parts) term *= MassPolynomial::symbol(nmax, p);
      acc += term;
    }
    ss[static_cast<std::size_t>(j)] = acc;
  }
  for (int n = 1; n <= nmax; ++n) {
    for (KsConvention conv : {KsConvention::prefix_suffix, KsConvention::prefix_only}) {
      MassPolynomial rhs(nmax);
      for (const auto& comp : compositions(n)) {
        MassPolynomial term = MassPolynomial::constant(nmax, ks_coefficient(comp, conv));
        for (int p : comp.parts) term *= ss[static_cast<std::size_t>(p)];
        rhs += term;
      }
      rhs += MassPolynomial::symbol(nmax, n) * make_rational(-1, n);
      report.rows.push_back({n, conv, rhs, rhs.is_zero()});
    }
  }
  return report;
}

}  // namespace nazeta::mass
