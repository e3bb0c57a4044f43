#include "nazeta/periods.hpp"

#include <stdexcept>

namespace nazeta::periods {

namespace {

HPReal eval_real(const UniPoly& p, const HPReal& x) {
  HPReal acc(x.precision());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + HPReal(*it, x.precision());
  return acc;
}

bool gamma_r_pole(const BigRational& x) {
  const BigRational half = x / 2;
  return is_integer(half) && half <= 0;
}

// Solves sum_j x_j <alpha_j, alpha_i^vee> = c_i for x.
rootsys::RatVec weight_coordinates(const rootsys::RootSystemData& rs, const std::vector<BigRational>& c) {
  const auto r = static_cast<std::size_t>(rs.rank());
  std::vector<rootsys::RatVec> m(r, rootsys::RatVec(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = rs.cartan(static_cast<int>(j), static_cast<int>(i));
    m[i][r] = c[i];
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t p = col;
    while (m[p][col] == 0) ++p;
    std::swap(m[p], m[col]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const BigRational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j <= r; ++j) m[i][j] -= f * m[col][j];
    }
  }
  rootsys::RatVec x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = m[i][r] / m[i][i];
  return x;
}

[[noreturn]] void singular(const std::string& word, const std::string& factor) {
  throw std::domain_error("singular configuration: w=" + word + " factor=" + factor);
}

}  // namespace

SignConvention parse_sign_convention(const std::string& name) {
  if (name == "all_plus") return SignConvention::all_plus;
  if (name == "length_sign") return SignConvention::length_sign;
  throw std::invalid_argument("unknown sign convention '" + name + "'");
}

std::string to_string(SignConvention c) { return c == SignConvention::all_plus ? "all_plus" : "length_sign"; }

HPComplex gamma_r(const HPComplex& z) {
  const long prec = z.precision();
  if (z.imag().is_zero()) {
    const HPReal half = z.real() / HPReal(2L, prec);
    HPReal fl(prec);
    mpfr_floor(fl.raw(), half.raw());
    if (half.sign() <= 0 && fl == half) throw std::domain_error("Gamma_R pole");
  }
  const HPComplex half = z / HPComplex(HPReal(2L, prec));
  return exp(-half * HPComplex(log(HPReal::pi(prec)))) * gamma(half);
}

HPReal completed_curve_zeta(const curve::CurveData& curve, const BigRational& s, long precision_bits) {
  if (s == 0 || s == 1) throw std::domain_error("completed zeta has a pole at s=" + nazeta::to_string(s));
  if (is_integer(s) && s >= 2)
    return HPReal(curve::zeta_special_value(curve, static_cast<int>(s.get_num().get_si())), precision_bits);
  const long work = precision_bits + 32;
  const HPReal logq = log(HPReal(curve.q, work));
  const HPReal sv(s, work);
  const HPReal t = exp(-sv * logq);
  const HPReal one(1L, work);
  const HPReal z = eval_real(curve.numerator_poly("t"), t) / ((one - t) * (one - HPReal(curve.q, work) * t));
  return (z * exp(sv * logq * HPReal(static_cast<long>(curve.g - 1), work))).with_precision(precision_bits);
}

PeriodResult period_eval(const rootsys::RootSystemData& rs, const curve::CurveData& curve,
                         const std::vector<BigRational>& lambda, const PeriodConfig& config) {
  const int r = rs.rank();
  if (lambda.size() != static_cast<std::size_t>(r))
    throw std::invalid_argument("lambda needs " + std::to_string(r) + " coroot pairings");
  curve.validate();
  const long prec = config.precision_bits;
  const rootsys::RatVec x = weight_coordinates(rs, lambda);

  PeriodResult out;
  out.value = HPComplex(prec);
  for (const auto& w : rs.weyl_group()) {
    PeriodTerm term;
    term.word = rootsys::format_word(w.word);
    term.sign = config.sign == SignConvention::length_sign && w.length() % 2 == 1 ? -1 : 1;

    rootsys::RatVec shifted = rs.apply(w, x);
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= rs.rho()[i];
    term.gamma_factor = HPComplex(HPReal(1L, prec));
    for (int i = 0; i < r; ++i) {
      const BigRational arg = -rs.pairing_simple(shifted, i);
      if (gamma_r_pole(arg)) singular(term.word, "Gamma_R(" + nazeta::to_string(arg) + ")");
      term.gamma_factor = term.gamma_factor * gamma_r(HPComplex(HPReal(arg, prec)));
    }

    term.zeta_factor = HPReal(1L, prec);
    for (const auto& a : rs.positive_roots()) {
      if (!rootsys::RootSystemData::is_negative(rs.apply(w, a))) continue;
      const BigRational c = rs.pairing(x, a);
      for (const BigRational& arg : {c, BigRational(c + 1)})
        if (arg == 0 || arg == 1) singular(term.word, "zeta(" + nazeta::to_string(arg) + ") pole");
      const HPReal num = completed_curve_zeta(curve, c, prec);
      const HPReal den = completed_curve_zeta(curve, c + 1, prec);
      if (abs(den) < ldexp_one(-prec / 2, prec)) singular(term.word, "zeta(" + nazeta::to_string(BigRational(c + 1)) + ") = 0");
      term.zeta_factor = term.zeta_factor * num / den;
    }
    term.value = term.gamma_factor * HPComplex(term.zeta_factor);
    if (term.sign < 0) term.value = -term.value;
    out.value = out.value + term.value;
    out.terms.push_back(std::move(term));
  }
  return out;
}

HPReal assembled_value(const assembly::AssembledZeta& z, const BigRational& base, const BigRational& s,
                       long precision_bits) {
  if (s == 0 || s == 1) throw std::domain_error("assembled zeta has a pole at s=" + nazeta::to_string(s));
  const long work = precision_bits + 32;
  const HPReal logb = log(HPReal(base, work));
  const HPReal sv(s, work);
  const HPReal n(static_cast<long>(z.n), work);
  const HPReal T = exp(-n * sv * logb);
  const HPReal value = eval_real(z.Z.num(), T) / eval_real(z.Z.den(), T);
  return (value * exp(sv * n * HPReal(static_cast<long>(z.g - 1), work) * logb)).with_precision(precision_bits);
}

Sl2Table sl2_group_zeta(const rootsys::RootSystemData& rs, const curve::CurveData& curve,
                        const std::vector<BigRational>& samples, const PeriodConfig& config,
                        const std::optional<assembly::AlphaBetaTable>& table) {
  if (rs.type() != 'A' || rs.rank() != 1) throw std::invalid_argument("rank-1 only");
  const long prec = config.precision_bits;
  Sl2Table out;
  out.has_comparison = table.has_value();
  std::optional<assembly::AssembledZeta> z;
  if (table) z = assembly::assemble_zeta(*table);

  auto period_at = [&](const BigRational& s) -> std::optional<HPReal> {
    try {
      return period_eval(rs, curve, {s}, config).value.real();
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  };

  for (const auto& s : samples) {
    Sl2Row row;
    row.s = s;
    try {
      row.period = period_eval(rs, curve, {s}, config).value.real();
    } catch (const std::domain_error& e) {
      row.period_note = e.what();
    }
    if (z) {
      try {
        row.assembled = assembled_value(*z, table->base, s, prec);
      } catch (const std::domain_error&) {
      }
      if (row.period && row.assembled && !row.period->is_zero()) row.ratio = *row.assembled / *row.period;
    }
    out.rows.push_back(std::move(row));
  }

  if (z) {
    std::vector<std::pair<BigRational, HPReal>> pts;
    for (const auto& row : out.rows)
      if (row.assembled) pts.emplace_back(row.s, *row.assembled);
    if (pts.size() >= 3) {
      for (long an = 1; an <= 4; ++an)
        for (long bn = -4; bn <= 4; ++bn) {
          const BigRational a = make_rational(an, 2), b = make_rational(bn, 2);
          std::vector<HPReal> om;
          for (const auto& [s, y] : pts) {
            auto v = period_at(a * s + b);
            if (!v) break;
            om.push_back(*v);
          }
          if (om.size() != pts.size()) continue;
          HPReal sxy(prec), sxx(prec);
          for (std::size_t i = 0; i < om.size(); ++i) {
            sxy = sxy + om[i] * pts[i].second;
            sxx = sxx + om[i] * om[i];
          }
          if (sxx.is_zero()) continue;
          const HPReal c = sxy / sxx;
          HPReal res(prec);
          for (std::size_t i = 0; i < om.size(); ++i) {
            const HPReal d = pts[i].second - c * om[i];
            res = res + d * d;
          }
          res = sqrt(res);
          if (!out.fit || res < out.fit->residual) out.fit = Sl2Fit{a, b, c, res};
        }
    }
  }
  return out;
}

std::string Sl2Table::to_csv(int digits) const {
  std::string s = has_comparison ? "s,period,assembled,ratio\n" : "s,period\n";
  for (const auto& r : rows) {
    s += nazeta::to_string(r.s) + "," + (r.period ? r.period->to_string(digits) : "singular");
    if (has_comparison) {
      s += "," + (r.assembled ? r.assembled->to_string(digits) : std::string("singular"));
      s += "," + (r.ratio ? r.ratio->to_string(digits) : std::string("n/a"));
    }
    s += "\n";
  }
  if (fit)
    s += "# exploratory fit zeta_X2(s) ~ c*period(a*s+b): a=" + nazeta::to_string(fit->a) +
         " b=" + nazeta::to_string(fit->b) + " c=" + fit->c.to_string(digits) +
         " residual=" + fit->residual.to_string(digits) + "\n";
  return s;
}

}  // namespace nazeta::periods
