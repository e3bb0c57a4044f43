// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "fixtures.hpp"
#include "nazeta/assembly.hpp"
#include "nazeta/curve.hpp"
#include "nazeta/mass.hpp"
#include "nazeta/rootsys.hpp"
#include "nazeta/witten.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace nazeta;

namespace {

BigRational Q(long p, long q = 1) { return make_rational(p, q); }

struct Result {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Coefficients of P(t)/((1-t)(1-qt)) up to t^dmax by plain series division.
std::vector<BigInt> series_counts(const curve::CurveData& c, int dmax) {
  std::vector<BigInt> geo1(static_cast<std::size_t>(dmax + 1), 1), out(static_cast<std::size_t>(dmax + 1), 0);
  std::vector<BigInt> both(static_cast<std::size_t>(dmax + 1), 0);
  // 1/((1-t)(1-qt)) = sum_d (q^{d+1}-1)/(q-1) t^d
  for (int d = 0; d <= dmax; ++d) {
    BigInt s = 0, p = 1;
    for (int k = 0; k <= d; ++k, p *= c.q) s += p;
    both[static_cast<std::size_t>(d)] = s;
  }
  for (int d = 0; d <= dmax; ++d)
    for (std::size_t i = 0; i < c.numerator.size() && static_cast<int>(i) <= d; ++i)
      out[static_cast<std::size_t>(d)] += c.numerator[i] * both[static_cast<std::size_t>(d) - i];
  return out;
}

Result c1() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  const auto e = fixtures::e2();
  const long prec = 128;
  const BigRational v1 = curve::zeta_special_value(e, 1), v2 = curve::zeta_special_value(e, 2),
                    v3 = curve::zeta_special_value(e, 3);
  r.require(v1 == 3 && v2 == 3 && v3 == Q(11, 7), "special values " + to_string(v1) + ", " + to_string(v2) + ", " + to_string(v3));
  const auto counts = curve::effective_divisor_counts(e, 3);
  r.require(counts == std::vector<BigInt>{1, 3, 9, 21}, "divisor counts");
  r.require(counts == series_counts(e, 3), "divisor counts vs series");

  // Numeric oracle: residue at s = 1 as a limit, direct evaluation at s = 2, 3.
  {
    const long wide = 2 * prec;
    const HPReal h = ldexp_one(-100, wide);
    const HPReal logq = log(HPReal(2L, wide));
    const HPReal t = exp(-(HPReal(1L, wide) + h) * logq);
    const HPReal one(1L, wide);
    const HPReal z = (one + HPReal(2L, wide) * t * t) / ((one - t) * (one - HPReal(2L, wide) * t));
    const HPReal res = (h * z * logq).with_precision(prec);
    r.require(abs(res - HPReal(v1, prec)) < HPReal(1e-25, prec), "numeric residue " + res.to_string(30));
  }
  for (long k : {2L, 3L}) {
    const HPReal t = pow(HPReal(2L, prec), -k);
    const HPReal one(1L, prec);
    const HPReal val = (one + HPReal(2L, prec) * t * t) / ((one - t) * (one - HPReal(2L, prec) * t));
    const BigRational exact = k == 2 ? v2 : v3;
    r.require(abs(val - HPReal(exact, prec)) < HPReal(1e-35, prec), "numeric value at " + std::to_string(k));
  }
  const double dt = seconds_since(t0);
  r.require(dt < 1.0, "runtime " + std::to_string(dt) + " s");
  return r;
}

Result c2() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  const auto e = fixtures::e2();
  r.require(mass::total_mass_ff(e, 2) == 9, "m_2");
  r.require(mass::total_mass_ff(e, 3) == Q(99, 7), "m_3");
  r.require(mass::zagier_semistable_mass(e, 2, 0) == 6, "ss(2,0)");
  r.require(mass::zagier_semistable_mass(e, 2, 1) == 3, "ss(2,1)");
  r.require(mass::zagier_semistable_mass(e, 3, 0) == Q(66, 7), "ss(3,0)");
  r.require(mass::zagier_semistable_mass(e, 3, 1) == 3, "ss(3,1)");
  r.require(mass::zagier_semistable_mass(e, 3, 2) == 3, "ss(3,2)");
  const double dt = seconds_since(t0);
  r.require(dt < 1.0, "runtime " + std::to_string(dt) + " s");
  return r;
}

Result c3() {
  Result r;
  const auto e = fixtures::e2();
  const auto a2 = mass::wz_average_identity(e, 2), a3 = mass::wz_average_identity(e, 3);
  r.require(a2.pass && a2.lhs == 18 && a2.rhs == 18, "n=2: " + to_string(a2.lhs) + " vs " + to_string(a2.rhs));
  r.require(a3.pass && a3.lhs == Q(297, 7) && a3.rhs == Q(297, 7), "n=3: " + to_string(a3.lhs) + " vs " + to_string(a3.rhs));
  const auto g2 = fixtures::genus2();
  r.require(g2.g == 2 && g2.numerator == std::vector<BigInt>{1, 0, 0, 0, 4}, "genus-2 fixture");
  const auto b = mass::wz_average_identity(g2, 2);
  r.require(b.pass && b.lhs == b.rhs, "genus 2: " + to_string(b.lhs) + " vs " + to_string(b.rhs));
  return r;
}

Result c4() {
  Result r;
  const auto ctx = mass::MassContext::from_curve(fixtures::e2(), 2);
  for (long J = 0; J <= 6; ++J) {
    const auto p = mass::hn_series_partial(ctx, 2, 0, 2 * J);
    const BigRational expect = 9 - 3 * pow(BigRational(4), -J);
    r.require(p.partial_sum == expect, "J=" + std::to_string(J) + ": " + to_string(p.partial_sum));
  }
  const auto p16 = mass::hn_series_partial(ctx, 2, 0, 32);
  r.require(p16.partial_sum == 9 - 3 * pow(BigRational(4), -16), "J=16 exact");
  const BigRational gap = 9 - p16.partial_sum;
  r.require(gap >= 0 && gap < Q(1, 1000000000), "J=16 gap " + to_string(gap));
  return r;
}

// Shared by criteria 5 and 6.
std::vector<assembly::AlphaBetaTable> random_tables() {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<int> gd(0, 4), nd(1, 3);
  std::uniform_int_distribution<long> num(0, 40), den(1, 9);
  const BigRational bases[] = {Q(2), Q(3), Q(4), Q(5), Q(5, 2), Q(7, 4)};
  std::vector<assembly::AlphaBetaTable> out;
  for (int i = 0; i < 200; ++i) {
    assembly::AlphaBetaTable t;
    t.g = gd(rng);
    t.n = nd(rng);
    t.base = bases[i % 6];
    for (int m = 0; m < t.g; ++m) t.alphas.push_back(make_rational(num(rng), den(rng)));
    t.beta = make_rational(num(rng) + 1, den(rng));
    out.push_back(t);
  }
  return out;
}

Result c5() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  int fails = 0;
  for (const auto& t : random_tables())
    if (!assembly::functional_equation_check(assembly::assemble_zeta(t)).pass) ++fails;
  r.require(fails == 0, std::to_string(fails) + " tables fail the functional equation");
  for (const auto& c : {fixtures::e2(), fixtures::e2b(), fixtures::p1(), fixtures::genus2()}) {
    const auto z = assembly::assemble_zeta(assembly::rank_one_pipeline(c));
    const auto artin = curve::artin_zeta(c).zeta_t;
    r.require(z.Z.num().coeffs() == artin.num().coeffs() && z.Z.den().coeffs() == artin.den().coeffs(),
              "rank-1 mismatch for numerator " + z.Z.to_string());
  }
  const double dt = seconds_since(t0);
  r.require(dt < 30.0, "runtime " + std::to_string(dt) + " s");
  return r;
}

Result c6() {
  Result r;
  int fails = 0;
  for (const auto& t : random_tables())
    if (assembly::residue_at_one(assembly::assemble_zeta(t)) != t.beta) ++fails;
  r.require(fails == 0, std::to_string(fails) + " residues differ from beta");
  return r;
}

Result c7() {
  Result r;
  const long b50 = bits_for_digits(50), b80 = bits_for_digits(80);
  const HPReal tol(1e-45, b50);
  const HPReal pi = HPReal::pi(b50);
  const HPReal six(6L, b50), half(Q(1, 2), b50);
  r.require(abs(mass::siegel_volume_nf(1, b50) - HPReal(1L, b50)) < tol, "m_1");
  r.require(abs(mass::siegel_volume_nf(2, b50) - pi / six) < tol, "m_2");
  r.require(abs(mass::weng_semistable_volume_nf(2, b50) - (pi / six - half)) < tol, "m^ss_2");
  const HPReal ss50 = mass::weng_semistable_volume_nf(3, b50);
  const HPReal ss80 = mass::weng_semistable_volume_nf(3, b80).with_precision(b50);
  r.require(abs(ss50 - ss80) < tol, "m^ss_3 across precisions");
  for (long b : {b50, b80}) {
    const HPReal rhs = mass::siegel_volume_nf(3, b) - HPReal(Q(2, 3), b) * mass::siegel_volume_nf(2, b) + HPReal(Q(1, 4), b);
    r.require(abs(mass::weng_semistable_volume_nf(3, b) - rhs) < HPReal(1e-45, b), "m^ss_3 closed form at " + std::to_string(b) + " bits");
  }
  return r;
}

Result c8() {
  Result r;
  const auto rep = mass::inversion_consistency(3);
  std::set<std::pair<int, mass::KsConvention>> seen;
  for (const auto& row : rep.rows) {
    seen.insert({row.n, row.convention});
    if (row.n == 1) r.require(row.closes && row.residual.is_zero(), "n=1 does not close");
  }
  r.require(seen.size() == 6, "expected a row per (n, convention), got " + std::to_string(seen.size()));
  const std::string text = rep.to_text();
  r.require(text.find("residual=") != std::string::npos, "report has no residuals");
  std::cout << text;
  return r;
}

// Closure of the simple reflections as integer matrices, independent of the library's BFS.
std::size_t brute_weyl_order(const rootsys::RootSystemData& rs) {
  const int n = rs.rank();
  using M = std::vector<long>;
  std::vector<M> gens;
  for (int i = 0; i < n; ++i) {
    // s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i; columns are images.
    M m(static_cast<std::size_t>(n * n), 0);
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(j * n + j)] += 1;
      m[static_cast<std::size_t>(i * n + j)] -= rs.cartan(j, i);
    }
    gens.push_back(m);
  }
  auto mul = [n](const M& a, const M& b) {
    M c(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
          c[static_cast<std::size_t>(i * n + j)] += a[static_cast<std::size_t>(i * n + k)] * b[static_cast<std::size_t>(k * n + j)];
    return c;
  };
  M id(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i * n + i)] = 1;
  std::set<M> seen{id};
  std::vector<M> frontier{id};
  while (!frontier.empty()) {
    std::vector<M> next;
    for (const auto& w : frontier)
      for (const auto& s : gens) {
        M x = mul(w, s);
        if (seen.insert(x).second) next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

Result c9() {
  Result r;
  const auto a2 = rootsys::build_root_system('A', 2), g2 = rootsys::build_root_system('G', 2);
  r.require(a2.weyl_group().size() == 6, "|W(A2)|");
  r.require(g2.weyl_group().size() == 12, "|W(G2)|");
  r.require(g2.positive_roots().size() == 6, "|Phi+(G2)|");
  for (int n = 2; n <= 5; ++n) {
    std::map<int, int> expect;
    for (int i = 1; i <= n - 1; ++i) expect[i] = 1;
    r.require(rootsys::exponent_counts(rootsys::build_root_system('A', n - 1)) == expect, "n_i(A" + std::to_string(n - 1) + ")");
  }
  r.require(rootsys::exponent_counts(g2) == std::map<int, int>{{1, 1}, {5, 1}}, "n_i(G2)");

  const std::vector<std::pair<char, int>> types{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
                                                {'C', 2}, {'C', 3}, {'C', 4}, {'D', 3}, {'D', 4}, {'G', 2}};
  for (const auto& [t, n] : types) {
    const auto rs = rootsys::build_root_system(t, n);
    const std::string name = rs.label();
    r.require(brute_weyl_order(rs) == rs.weyl_group().size(), "|W(" + name + ")| vs closure");
    std::vector<rootsys::ParabolicIndex> w0;
    try {
      w0 = rootsys::enumerate_W0(rs);
    } catch (const std::exception& e) {
      r.require(false, name + ": " + e.what());
      continue;
    }
    const std::size_t expect = std::size_t(1) << n;
    // Brute-force filter over W for elements sending simple roots to simple or negative roots.
    std::size_t count = 0;
    for (const auto& w : rs.weyl_group()) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        rootsys::IntVec a(static_cast<std::size_t>(n), 0);
        a[static_cast<std::size_t>(i)] = 1;
        const auto img = rs.apply(w, a);
        ok = rootsys::RootSystemData::is_negative(img) || rs.simple_index(img) >= 0;
      }
      count += ok;
    }
    std::set<unsigned> masks;
    for (const auto& p : w0) masks.insert(p.J);
    r.require(w0.size() == expect && count == expect && masks.size() == expect, "|W0(" + name + ")|");
  }
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result c10() {
  Result r;
  const auto a1 = rootsys::build_root_system('A', 1);
  rootsys::CoefficientOptions nf;
  const auto rows = rootsys::conjecture_coeffs(a1, nf);
  r.require(rows.size() == 2 && rows[1].label == "B" && rows[1].exact == Q(-1, 2), "NF Borel");
  rootsys::CoefficientOptions ff;
  ff.flavor = rootsys::Flavor::FF;
  const auto frows = rootsys::conjecture_coeffs(a1, ff);
  r.require(frows.size() == 2 && frows[1].text == "-1/(q^2-1)" && frows[1].ff_exponents == std::vector<long>{2},
            "FF Borel " + (frows.size() == 2 ? frows[1].text : std::string("?")));
  ff.q = Q(3);
  const auto f3 = rootsys::conjecture_coeffs(a1, ff);
  r.require(f3.size() == 2 && f3[1].exact == Q(-1, 8), "FF Borel at q=3");
  for (int n : {3, 4}) {
    const auto rep = rootsys::sln_coefficient_crosscheck(n);
    const std::string golden = read_file(std::string(NAZETA_GOLDEN_DIR) + "/sl" + std::to_string(n) + "_crosscheck.txt");
    r.require(!golden.empty() && rep.to_text() == golden, "SL_" + std::to_string(n) + " report differs from golden");
    r.require(rep.to_text() == rootsys::sln_coefficient_crosscheck(n).to_text(), "SL_" + std::to_string(n) + " report unstable");
  }
  return r;
}

Result c11() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  const long prec = 128;
  const HPReal pi = HPReal::pi(prec);
  const auto z2 = witten::witten_zeta_su(2, 2, 10000, prec);
  r.require(abs(z2.value - pi * pi / HPReal(6L, prec)) <= z2.tail_bound, "SU(2) s=2 outside tail bound");
  r.require(z2.tail_bound <= HPReal(1e-3, prec), "SU(2) s=2 tail bound " + z2.tail_bound.to_string(6));
  const auto z4 = witten::witten_zeta_su(2, 4, 10000, prec);
  r.require(abs(z4.value - pow(pi, 4L) / HPReal(90L, prec)) <= z4.tail_bound, "SU(2) s=4 outside tail bound");
  r.require(z4.tail_bound <= HPReal(1e-3, prec), "SU(2) s=4 tail bound");
  const auto a = witten::witten_zeta_su(3, 2, 200, prec), b = witten::witten_zeta_su(3, 2, 400, prec);
  const HPReal larger = a.tail_bound > b.tail_bound ? a.tail_bound : b.tail_bound;
  r.require(abs(a.value - b.value) <= larger, "SU(3) cutoffs 200/400 disagree");
  const double dt = seconds_since(t0);
  r.require(dt < 60.0, "runtime " + std::to_string(dt) + " s");
  return r;
}

Result c12() {
  Result r;
  r.require(curve::rh_check(fixtures::e2(), 1e-12).pass, "1+2T^2");
  r.require(curve::rh_check(fixtures::e2b(), 1e-12).pass, "1+2T+2T^2");
  const auto g = curve::rh_check(fixtures::genus2(), 1e-10);
  r.require(g.roots.size() == 4, "genus 2 root count");
  const long prec = 256;
  const HPReal target = sqrt(HPReal(Q(1, 2), prec));
  for (const auto& z : g.roots) r.require(abs(abs(z) - target) < HPReal(1e-10, prec), "genus 2 root " + z.to_string(20));
  return r;
}

struct Proc {
  int code = -1;
  std::string out;
};

Proc run_cli(const std::string& args) {
  const std::string cmd = std::string(NAZETA_CLI_PATH) + " " + args + " 2>&1";
  Proc p;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return p;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) p.out.append(buf.data(), n);
  const int status = pclose(f);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

Result c13() {
  Result r;
  const std::string d = std::string(NAZETA_DATA_DIR) + "/";
  const std::vector<std::string> manifests{
      "curve zeta --in " + d + "e2.curve",
      "curve special --k 3 --in " + d + "e2.curve",
      "curve divisors --dmax 8 --in " + d + "genus2.curve",
      "curve rh --in " + d + "genus2.curve --tol 1e-10",
      "mass total --in " + d + "e2.curve --nmax 4",
      "mass sstable --in " + d + "e2.curve --nmax 3",
      "mass hnseries --in " + d + "e2.curve --n 2 --d 0 --cap 12",
      "mass wzavg --in " + d + "e2.curve --n 3",
      "mass wzind --in " + d + "e2.curve --n 3 --d 1",
      "--prec 50 mass siegel --n 3",
      "--prec 40 mass wengss --nmax 3",
      "mass ks --nmax 4 --convention prefix_only",
      "mass invcheck --nmax 3",
      "zeta assemble --table " + d + "g1n2.ab --check-fe",
      "zeta rank1 --in " + d + "genus2.curve",
      "zeta rh --table " + d + "e2_rank1.ab",
      "--seed 11 zeta fecheck --trials 40",
      "rootsys coeffs --type A --rank 1 --flavor NF",
      "rootsys coeffs --type B --rank 3 --flavor FF --records",
      "rootsys coeffs --type G --rank 2 --flavor RS",
      "rootsys exponents --type D --rank 4",
      "rootsys w0 --type C --rank 3",
      "rootsys volume --type A --rank 3",
      "rootsys crosscheck --n 4",
      "witten zeta --n 2 --s 2 --cutoff 10000",
      "witten zeta --n 3 --s 4 --cutoff 60",
      "witten volume --n 2 --g 3 --vol 7/3 --cutoff 500",
      "period eval --in " + d + "e2.curve --lambda 2 --sign length_sign",
      "period sl2 --in " + d + "e2.curve --samples 2,5/2,3,7/2 --table " + d + "e2_rank1.ab",
  };
  for (const auto& m : manifests) {
    const Proc a = run_cli(m), b = run_cli(m);
    r.require(a.code == 0, "'" + m + "' exit " + std::to_string(a.code) + ": " + a.out.substr(0, 200));
    r.require(a.code == b.code && a.out == b.out && !a.out.empty(), "'" + m + "' differs between runs");
  }
  // File output through --out is byte-identical too.
  const std::string f1 = "acceptance_out_1.txt", f2 = "acceptance_out_2.txt";
  run_cli("--out " + f1 + " zeta rank1 --in " + d + "genus2.curve");
  run_cli("--out " + f2 + " zeta rank1 --in " + d + "genus2.curve");
  const std::string o1 = read_file(f1), o2 = read_file(f2);
  r.require(!o1.empty() && o1 == o2, "--out files differ");
  std::remove(f1.c_str());
  std::remove(f2.c_str());
  if (r.pass) r.detail = std::to_string(manifests.size() + 1) + " manifests";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"1 exact curve fixtures on E/F2", c1},
      {"2 mass identities on E/F2", c2},
      {"3 average identity (E/F2 n=2,3; genus 2 n=2)", c3},
      {"4 HN partial sums 9 - 3*4^-J", c4},
      {"5 functional equation on 200 tables, rank-1 pipeline", c5},
      {"6 residue returns beta on 200 tables", c6},
      {"7 number-field volumes at 50/80 digits", c7},
      {"8 inversion report for n <= 3", c8},
      {"9 root systems, exponents, W0 bijection", c9},
      {"10 A1 coefficients and SL3/SL4 golden reports", c10},
      {"11 Witten zeta against tail bounds", c11},
      {"12 RH checks", c12},
      {"13 CLI determinism", c13},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds_since(t0));
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << name << "  [" << timing << "]";
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << std::endl;
    failed += !r.pass;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
