// nazeta command-line front end.
//
// Exit codes: 0 ok, 2 bad input, 3 computation error, 4 a requested check failed.

#include "nazeta/assembly.hpp"
#include "nazeta/curve.hpp"
#include "nazeta/io.hpp"
#include "nazeta/mass.hpp"
#include "nazeta/periods.hpp"
#include "nazeta/rootsys.hpp"
#include "nazeta/witten.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <sstream>

using namespace nazeta;

namespace {

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  int prec = 30;  // decimal digits
  unsigned long seed = 0;
  std::string out;
};

Globals G;

long bits() { return bits_for_digits(G.prec); }

void emit(const std::string& text) {
  std::string t = text;
  if (t.empty() || t.back() != '\n') t += '\n';
  if (G.out.empty())
    std::cout << t;
  else
    io::write_text_file(G.out, t);
}

BigRational rat(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw io::InputError(e.what());
  }
}

std::vector<BigRational> rat_list(const std::string& s) {
  std::vector<BigRational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(rat(item));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string r;
  for (std::size_t i = 0; i < parts.size(); ++i) r += (i ? sep : "") + parts[i];
  return r;
}

template <class T>
std::string join_str(const std::vector<T>& v, const std::string& sep = ", ") {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(to_string(x));
  return join(s, sep);
}

rootsys::Flavor parse_flavor(const std::string& f) {
  if (f == "NF") return rootsys::Flavor::NF;
  if (f == "FF") return rootsys::Flavor::FF;
  if (f == "RS") return rootsys::Flavor::RS;
  throw io::InputError("unknown flavor '" + f + "' (NF, FF, RS)");
}

rootsys::RootSystemData root_system(const std::string& type, int rank) {
  if (type.size() != 1) throw io::InputError("type must be a single letter");
  return rootsys::build_root_system(type[0], rank);
}

// ---- curve ----------------------------------------------------------------

void add_curve(CLI::App& app) {
  auto* cmd = app.add_subcommand("curve", "zeta function of a curve over F_q");
  cmd->require_subcommand(1);
  static std::string in;
  static int k = 1, dmax = 3;
  static double tol = 1e-12;

  auto* z = cmd->add_subcommand("zeta", "Artin zeta as a rational function in t");
  z->add_option("--in", in, "curve file")->required();
  z->callback([] { emit(curve::format_zeta(io::read_curve_file(in))); });

  auto* sp = cmd->add_subcommand("special", "completed zeta at s = k");
  sp->add_option("--in", in, "curve file")->required();
  sp->add_option("--k", k, "integer point")->required();
  sp->callback([] { emit(to_string(curve::zeta_special_value(io::read_curve_file(in), k))); });

  auto* dv = cmd->add_subcommand("divisors", "effective divisor counts of degree 0..dmax");
  dv->add_option("--in", in, "curve file")->required();
  dv->add_option("--dmax", dmax, "largest degree")->required();
  dv->callback([] { emit(join_str(curve::effective_divisor_counts(io::read_curve_file(in), dmax))); });

  auto* rh = cmd->add_subcommand("rh", "check |root| = q^{-1/2} for the numerator roots");
  rh->add_option("--in", in, "curve file")->required();
  rh->add_option("--tol", tol, "tolerance on | |root| - q^{-1/2} |");
  rh->callback([] {
    const auto r = curve::rh_check(io::read_curve_file(in), tol, std::max(bits(), 256L));
    std::string text;
    for (const auto& root : r.roots) text += "root: " + root.to_string(G.prec) + "\n";
    text += "max_deviation: " + r.max_deviation.to_string(6) + "\n";
    text += std::string("RH: ") + (r.pass ? "pass" : "fail") + "\n";
    emit(text);
    if (!r.pass) throw CheckFailed("RH check failed");
  });
}

// ---- mass -----------------------------------------------------------------

void add_mass(CLI::App& app) {
  auto* cmd = app.add_subcommand("mass", "masses and volumes from parabolic reduction");
  cmd->require_subcommand(1);
  static std::string in, table, convention = "prefix_suffix";
  static int n = 2, nmax = 3;
  static long d = 0, cap = 6;

  auto* tot = cmd->add_subcommand("total", "total mass m_{X,n}; with --nmax, a mass table");
  tot->add_option("--in", in, "curve file")->required();
  auto* n_opt = tot->add_option("--n", n, "rank");
  tot->add_option("--nmax", nmax, "write totals for ranks 1..nmax as a mass table")->excludes(n_opt);
  tot->callback([tot] {
    const auto c = io::read_curve_file(in);
    if (tot->count("--nmax") == 0) {
      emit(to_string(mass::total_mass_ff(c, n)));
      return;
    }
    io::MassTable t;
    t.q = c.q;
    t.g = c.g;
    for (int r = 1; r <= nmax; ++r) t.exact[{r, 0}] = mass::total_mass_ff(c, r);
    emit(io::mass_table_to_text(t));
  });

  auto* zg = cmd->add_subcommand("zagier", "normalized semistable mass from the closed form");
  zg->add_option("--in", in, "curve file")->required();
  zg->add_option("--n", n, "rank")->required();
  zg->add_option("--d", d, "degree")->required();
  zg->callback([] { emit(to_string(mass::zagier_semistable_mass(io::read_curve_file(in), n, d))); });

  auto* ss = cmd->add_subcommand("sstable", "semistable masses for ranks 1..nmax, degrees 0..n-1, as a mass table");
  ss->add_option("--in", in, "curve file")->required();
  ss->add_option("--nmax", nmax, "largest rank")->required();
  ss->callback([] {
    const auto c = io::read_curve_file(in);
    io::MassTable t;
    t.quantity = "semistable";
    t.q = c.q;
    t.g = c.g;
    const auto ctx = mass::MassContext::from_curve(c, nmax);
    for (int r = 1; r <= nmax; ++r)
      for (long e = 0; e < r; ++e) t.exact[{r, e}] = mass::zagier_semistable_mass(ctx, r, e);
    emit(io::mass_table_to_text(t));
  });

  auto* hn = cmd->add_subcommand("hnseries", "truncated Harder-Narasimhan series for the total mass");
  hn->add_option("--in", in, "curve file")->required();
  hn->add_option("--n", n, "rank")->required();
  hn->add_option("--d", d, "degree")->required();
  hn->add_option("--cap", cap, "largest instability weight")->required();
  hn->callback([] {
    const auto c = io::read_curve_file(in);
    const auto p = mass::hn_series_partial(c, n, d, cap);
    emit("partial_sum: " + to_string(p.partial_sum) + "\nlast_shell: " + to_string(p.last_shell) +
         "\ntotal: " + to_string(mass::total_mass_ff(c, n)));
  });

  auto* avg = cmd->add_subcommand("wzavg", "n m_{X,n} against the sum over degrees");
  avg->add_option("--in", in, "curve file");
  avg->add_option("--table", table, "total mass table instead of a curve");
  avg->add_option("--n", n, "rank")->required();
  avg->callback([] {
    if (in.empty() == table.empty()) throw io::InputError("give exactly one of --in and --table");
    mass::IdentityCheck r;
    if (!in.empty()) {
      r = mass::wz_average_identity(io::read_curve_file(in), n);
    } else {
      const auto t = io::read_mass_table_file(table);
      if (t.kind != io::MassTable::Kind::function_field || t.quantity != "total")
        throw io::InputError(table + ": expected a function-field total mass table");
      mass::MassContext ctx;
      ctx.q = t.q;
      ctx.genus = t.g;
      ctx.total.push_back(1);
      for (int r2 = 1; r2 <= n; ++r2) {
        auto it = t.exact.find({r2, 0});
        if (it == t.exact.end()) throw io::InputError(table + ": missing total for n=" + std::to_string(r2));
        ctx.total.push_back(it->second);
      }
      r = mass::wz_average_identity(ctx, n);
    }
    emit("lhs: " + to_string(r.lhs) + "\nrhs: " + to_string(r.rhs) + "\nidentity: " + (r.pass ? "pass" : "fail"));
    if (!r.pass) throw CheckFailed("average identity failed");
  });

  auto* ind = cmd->add_subcommand("wzind", "root-of-unity average for a single degree");
  ind->add_option("--in", in, "curve file")->required();
  ind->add_option("--n", n, "rank")->required();
  ind->add_option("--d", d, "degree")->required();
  ind->callback([] {
    const auto r = mass::wz_individual_mass(io::read_curve_file(in), n, static_cast<int>(d), bits());
    emit("value: " + r.value.to_string(G.prec) + "\nreference: " + to_string(r.reference) +
         "\ndeviation: " + r.deviation.to_string(G.prec));
  });

  auto* sg = cmd->add_subcommand("siegel", "number-field total volume m_{Q,n}");
  sg->add_option("--n", n, "rank")->required();
  sg->callback([] { emit(mass::siegel_volume_nf(n, bits()).to_string(G.prec)); });

  auto* wg = cmd->add_subcommand("wengss", "number-field semistable volume m^ss_{Q,n}");
  wg->add_option("--n", n, "rank");
  wg->add_option("--nmax", nmax, "write ranks 1..nmax as a mass table");
  wg->callback([wg] {
    if (wg->count("--nmax") == 0) {
      emit(mass::weng_semistable_volume_nf(n, bits()).to_string(G.prec));
      return;
    }
    io::MassTable t;
    t.kind = io::MassTable::Kind::number_field;
    t.quantity = "semistable";
    t.digits = G.prec;
    for (int r = 1; r <= nmax; ++r) t.decimal[r] = mass::weng_semistable_volume_nf(r, bits()).to_string(G.prec);
    emit(io::mass_table_to_text(t));
  });

  auto* ks = cmd->add_subcommand("ks", "composition coefficients expressing m_n through semistable masses");
  ks->add_option("--convention", convention, "prefix_suffix or prefix_only");
  ks->add_option("--nmax", nmax, "largest rank");
  ks->callback([] {
    const auto conv = mass::parse_ks_convention(convention);
    std::string text;
    for (int r = 1; r <= nmax; ++r)
      for (const auto& c : mass::compositions(r)) {
        std::vector<std::string> parts;
        for (int p : c.parts) parts.push_back(std::to_string(p));
        text += "(" + join(parts, ",") + ")\t" + to_string(mass::ks_coefficient(c, conv)) + "\n";
      }
    emit(text);
  });

  auto* inv = cmd->add_subcommand("invcheck", "symbolic inversion residuals per convention");
  inv->add_option("--nmax", nmax, "largest rank")->required();
  inv->callback([] { emit(mass::inversion_consistency(nmax).to_text()); });
}

// ---- zeta -----------------------------------------------------------------

void add_zeta(CLI::App& app) {
  auto* cmd = app.add_subcommand("zeta", "rank-n zeta assembled from alpha/beta tables");
  cmd->require_subcommand(1);
  static std::string table, in;
  static bool check_fe = false;
  static int trials = 200;

  auto* as = cmd->add_subcommand("assemble", "assemble Z(T) and report its numerator");
  as->add_option("--table", table, "alpha/beta table file")->required();
  as->add_flag("--check-fe", check_fe, "verify the functional equation");
  as->callback([] {
    const auto z = assembly::assemble_zeta(io::read_ab_table_file(table));
    std::string text = "Z: " + z.Z.to_string() + "\n";
    text += "numerator: " + join_str(assembly::extract_numerator(z).coeffs()) + "\n";
    text += "residue: " + to_string(assembly::residue_at_one(z)) + "\n";
    bool ok = true;
    if (check_fe) {
      const auto fe = assembly::functional_equation_check(z);
      ok = fe.pass;
      text += std::string("FE: ") + (fe.pass ? "pass" : "fail") + "\n";
      if (!fe.pass) text += "witness: " + fe.witness.to_string() + "\n";
    }
    emit(text);
    if (!ok) throw CheckFailed("functional equation failed");
  });

  auto* r1 = cmd->add_subcommand("rank1", "alpha/beta table of a curve in rank 1");
  r1->add_option("--in", in, "curve file")->required();
  r1->callback([] { emit(io::ab_table_to_text(assembly::rank_one_pipeline(io::read_curve_file(in)))); });

  auto* rh = cmd->add_subcommand("rh", "numerator roots against |T| = Q^{-1/2}");
  rh->add_option("--table", table, "alpha/beta table file")->required();
  rh->callback([] {
    const auto r = assembly::rh_explore(assembly::assemble_zeta(io::read_ab_table_file(table)), std::max(bits(), 256L));
    std::string text;
    for (std::size_t i = 0; i < r.roots.size(); ++i)
      text += "root: " + r.roots[i].to_string(G.prec) + "\tdeviation: " + r.deviations[i].to_string(6) + "\n";
    emit(text.empty() ? "no roots" : text);
  });

  auto* pr = cmd->add_subcommand("fecheck", "functional equation and residue on random tables");
  pr->add_option("--trials", trials, "number of tables");
  pr->callback([] {
    std::mt19937_64 rng(G.seed);
    std::uniform_int_distribution<int> gd(0, 4), nd(1, 3);
    std::uniform_int_distribution<long> num(0, 40), den(1, 9);
    const BigRational bases[] = {2, 3, 4, 5, make_rational(5, 2), make_rational(7, 4)};
    int fe_ok = 0, res_ok = 0;
    for (int t = 0; t < trials; ++t) {
      assembly::AlphaBetaTable tab;
      tab.g = gd(rng);
      tab.n = nd(rng);
      tab.base = bases[static_cast<std::size_t>(t) % 6];
      for (int m = 0; m < tab.g; ++m) tab.alphas.push_back(make_rational(num(rng), den(rng)));
      tab.beta = make_rational(num(rng) + 1, den(rng));
      const auto z = assembly::assemble_zeta(tab);
      fe_ok += assembly::functional_equation_check(z).pass;
      res_ok += assembly::residue_at_one(z) == tab.beta;
    }
    emit("trials: " + std::to_string(trials) + "\nFE pass: " + std::to_string(fe_ok) +
         "\nresidue pass: " + std::to_string(res_ok));
    if (fe_ok != trials || res_ok != trials) throw CheckFailed("property check failed");
  });
}

// ---- rootsys --------------------------------------------------------------

void add_rootsys(CLI::App& app) {
  auto* cmd = app.add_subcommand("rootsys", "root systems, Weyl groups and coefficient tables");
  cmd->require_subcommand(1);
  static std::string type = "A", flavor = "NF", q, convention = "as_printed";
  static int rank = 1, n = 3;
  static bool records = false;

  auto add_type = [](CLI::App* sub) {
    sub->add_option("--type", type, "A, B, C, D or G")->required();
    sub->add_option("--rank", rank, "rank")->required();
  };

  auto* co = cmd->add_subcommand("coeffs", "coefficients attached to the standard parabolics");
  add_type(co);
  co->add_option("--flavor", flavor, "NF, FF or RS");
  co->add_option("--q", q, "numeric q for FF");
  co->add_flag("--records", records, "one tab-separated row per parabolic");
  co->callback([] {
    const auto rs = root_system(type, rank);
    rootsys::CoefficientOptions opt;
    opt.flavor = parse_flavor(flavor);
    if (!q.empty()) opt.q = rat(q);
    opt.precision_bits = bits();
    const auto rows = rootsys::conjecture_coeffs(rs, opt);
    if (!records) {
      std::vector<std::string> parts;
      for (const auto& r : rows) parts.push_back(r.label + ": " + r.text);
      emit(join(parts, ", "));
      return;
    }
    std::string text = "mask\tparabolic\tw\tcoefficient\n";
    for (const auto& r : rows)
      text += std::to_string(r.parabolic.J) + "\t" + r.label + "\t" +
              rootsys::format_word(rs.weyl_group()[r.parabolic.w].word) + "\t" + r.text + "\n";
    emit(text);
  });

  auto* ex = cmd->add_subcommand("exponents", "exponent counts n_i");
  add_type(ex);
  ex->callback([] {
    std::vector<std::string> parts;
    for (const auto& [i, c] : rootsys::exponent_counts(root_system(type, rank)))
      parts.push_back(std::to_string(i) + ":" + std::to_string(c));
    emit(join(parts, ", "));
  });

  auto* w0 = cmd->add_subcommand("w0", "the elements of W_0 and their parabolics");
  add_type(w0);
  w0->callback([] {
    const auto rs = root_system(type, rank);
    const auto w = rootsys::enumerate_W0(rs);
    std::string text = "order_W: " + std::to_string(rs.weyl_group().size()) + "\npositive_roots: " +
                       std::to_string(rs.positive_roots().size()) + "\nW0: " + std::to_string(w.size()) + "\n";
    text += "mask\tparabolic\tw\n";
    for (const auto& p : w)
      text += std::to_string(p.J) + "\t" + rootsys::parabolic_label(rs, p.J) + "\t" +
              rootsys::format_word(rs.weyl_group()[p.w].word) + "\n";
    emit(text);
  });

  auto* vol = cmd->add_subcommand("volume", "Langlands volume with Riemann zeta values");
  add_type(vol);
  vol->add_option("--convention", convention, "as_printed or reciprocal");
  vol->callback([] {
    const auto rs = root_system(type, rank);
    rootsys::VolumeConvention c;
    if (convention == "as_printed")
      c = rootsys::VolumeConvention::as_printed;
    else if (convention == "reciprocal")
      c = rootsys::VolumeConvention::reciprocal;
    else
      throw io::InputError("unknown convention '" + convention + "'");
    const auto v = rootsys::langlands_volume(rs, rootsys::riemann_zeta_values(rs, bits()), c, bits());
    std::string text = "v_G: " + rootsys::coweight_cell_volume(rs, bits()).to_string(G.prec) + "\n";
    text += "volume: " + v.value.to_string(G.prec) + "\n";
    if (v.siegel) text += "siegel: " + v.siegel->to_string(G.prec) + "\n";
    emit(text);
  });

  auto* cc = cmd->add_subcommand("crosscheck", "A_{n-1} coefficients against the SL_n composition coefficients");
  cc->add_option("--n", n, "2..5")->required();
  cc->callback([] {
    const auto r = rootsys::sln_coefficient_crosscheck(n);
    emit(r.to_text());
    for (const auto& row : r.rows)
      if (!row.nf_match || !row.ff_match) throw CheckFailed("cross-check mismatch");
  });
}

// ---- witten ---------------------------------------------------------------

void add_witten(CLI::App& app) {
  auto* cmd = app.add_subcommand("witten", "Witten zeta values and volumes for SU(n)");
  cmd->require_subcommand(1);
  static int n = 2, g = 2;
  static long s = 2, cutoff = 1000;
  static std::string vol;

  auto* z = cmd->add_subcommand("zeta", "partial sum with a rigorous tail bound");
  z->add_option("--n", n, "SU(n)")->required();
  z->add_option("--s", s, "integer exponent >= 2")->required();
  z->add_option("--cutoff", cutoff, "largest Dynkin label")->required();
  z->callback([] {
    const auto r = witten::witten_zeta_su(n, s, cutoff, bits());
    emit("value: " + r.value.to_string(G.prec) + "\ntail_bound: " + r.tail_bound.to_string(6) +
         "\nterms: " + std::to_string(r.terms));
  });

  auto* v = cmd->add_subcommand("volume", "moduli volume from the Witten zeta value");
  v->add_option("--n", n, "SU(n)")->required();
  v->add_option("--g", g, "genus >= 2")->required();
  v->add_option("--vol", vol, "volume of SU(n), as p/q or a decimal")->required();
  v->add_option("--cutoff", cutoff, "largest Dynkin label");
  v->callback([] {
    HPReal V(bits());
    if (vol.find_first_of(".eE") != std::string::npos) {
      try {
        V = HPReal::from_string(vol, bits());
      } catch (const std::invalid_argument& e) {
        throw io::InputError(e.what());
      }
    } else {
      V = HPReal(rat(vol), bits());
    }
    const auto r = witten::witten_volume(n, g, V, cutoff, bits());
    emit("value: " + r.value.to_string(G.prec) + "\nuncertainty: " + r.uncertainty.to_string(6));
  });
}

// ---- period ---------------------------------------------------------------

void add_period(CLI::App& app) {
  auto* cmd = app.add_subcommand("period", "Weyl-sum periods and the SL_2 comparison table");
  cmd->require_subcommand(1);
  static std::string in, lambda, samples, table, sign = "all_plus", type = "A";
  static int rank = 1;

  auto* ev = cmd->add_subcommand("eval", "period at lambda given by its simple coroot pairings");
  ev->add_option("--in", in, "curve file")->required();
  ev->add_option("--type", type, "root system type");
  ev->add_option("--rank", rank, "rank");
  ev->add_option("--lambda", lambda, "comma-separated pairings, p/q allowed")->required();
  ev->add_option("--sign", sign, "all_plus or length_sign");
  ev->callback([] {
    const auto rs = root_system(type, rank);
    periods::PeriodConfig cfg{periods::parse_sign_convention(sign), bits()};
    const auto r = periods::period_eval(rs, io::read_curve_file(in), rat_list(lambda), cfg);
    std::string text = "w\tsign\tgamma\tzeta\tterm\n";
    for (const auto& t : r.terms)
      text += t.word + "\t" + std::to_string(t.sign) + "\t" + t.gamma_factor.to_string(G.prec) + "\t" +
              t.zeta_factor.to_string(G.prec) + "\t" + t.value.to_string(G.prec) + "\n";
    text += "value: " + r.value.to_string(G.prec) + "\n";
    emit(text);
  });

  auto* sl = cmd->add_subcommand("sl2", "CSV table of the A1 period, optionally against an assembled zeta");
  sl->add_option("--in", in, "curve file")->required();
  sl->add_option("--samples", samples, "comma-separated s values")->required();
  sl->add_option("--table", table, "alpha/beta table for the comparison columns");
  sl->add_option("--sign", sign, "all_plus or length_sign");
  sl->callback([] {
    periods::PeriodConfig cfg{periods::parse_sign_convention(sign), bits()};
    std::optional<assembly::AlphaBetaTable> tab;
    if (!table.empty()) tab = io::read_ab_table_file(table);
    const auto t = periods::sl2_group_zeta(rootsys::build_root_system('A', 1), io::read_curve_file(in),
                                           rat_list(samples), cfg, tab);
    emit(t.to_csv(G.prec));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nazeta: zeta functions, masses and volumes for curves and root systems"};
  app.require_subcommand(1);
  app.add_option("--prec", G.prec, "decimal digits for real output")->check(CLI::Range(5, 2000));
  app.add_option("--seed", G.seed, "seed for randomized checks");
  app.add_option("--out", G.out, "write output to this file instead of stdout");
  add_curve(app);
  add_mass(app);
  add_zeta(app);
  add_rootsys(app);
  add_witten(app);
  add_period(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 4;
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
