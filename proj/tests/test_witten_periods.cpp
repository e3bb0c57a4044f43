#include "doctest.h"

#include "fixtures.hpp"
#include "nazeta/periods.hpp"
#include "nazeta/witten.hpp"

#include <random>

using namespace nazeta;

namespace {

BigRational Q(long p, long q = 1) { return make_rational(p, q); }

// Hook-content formula on the partition with lambda_i = a_i + ... + a_{n-1}.
BigInt hook_content_dimension(int n, const std::vector<long>& a) {
  std::vector<long> lambda(static_cast<std::size_t>(n), 0);
  for (int i = n - 2; i >= 0; --i) lambda[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i + 1)] + a[static_cast<std::size_t>(i)];
  BigRational dim = 1;
  for (int i = 0; i < n; ++i)
    for (long j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      long below = 0;
      for (int k = i + 1; k < n && lambda[static_cast<std::size_t>(k)] > j; ++k) ++below;
      const long hook = lambda[static_cast<std::size_t>(i)] - j - 1 + below + 1;
      dim *= BigRational(n + j - i) / hook;
    }
  return dim.get_num();
}

}  // namespace

TEST_CASE("Weyl dimensions") {
  using witten::weyl_dimension;
  for (long m = 0; m < 20; ++m) CHECK(weyl_dimension(2, {m}) == m + 1);
  CHECK(weyl_dimension(3, {1, 1}) == 8);
  CHECK(weyl_dimension(3, {0, 0}) == 1);
  CHECK(weyl_dimension(4, {0, 1, 0}) == 6);
  CHECK(weyl_dimension(4, {1, 0, 1}) == 15);
  CHECK_THROWS_AS(weyl_dimension(3, {1}), std::invalid_argument);
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> lab(0, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    std::vector<long> a(static_cast<std::size_t>(n - 1));
    for (auto& x : a) x = lab(rng);
    CHECK(weyl_dimension(n, a) == hook_content_dimension(n, a));
  }
}

TEST_CASE("SU(2) Witten zeta is the Riemann zeta") {
  const long prec = 128;
  const HPReal pi = HPReal::pi(prec);
  const auto z2 = witten::witten_zeta_su(2, 2, 10000, prec);
  const HPReal exact2 = pi * pi / HPReal(6L, prec);
  CHECK(abs(z2.value - exact2) <= z2.tail_bound);
  CHECK(z2.tail_bound <= HPReal(1e-3, prec));
  CHECK(exact2 - z2.value <= HPReal(1e-4, prec));  // true tail is below 1/cutoff
  const auto z4 = witten::witten_zeta_su(2, 4, 1000, prec);
  CHECK(abs(z4.value - pow(pi, 4L) / HPReal(90L, prec)) <= z4.tail_bound);
  for (long s : {2L, 4L, 6L}) {
    const auto z = witten::witten_zeta_su(2, s, 500, prec);
    CHECK(abs(z.value - riemann_zeta(HPReal(s, prec))) <= z.tail_bound);
  }
  CHECK_THROWS_WITH_AS(witten::witten_zeta_su(2, 1, 10, prec), "divergent", std::invalid_argument);
}

TEST_CASE("SU(3) Witten zeta self-consistency") {
  const long prec = 128;
  const auto a = witten::witten_zeta_su(3, 2, 200, prec);
  const auto b = witten::witten_zeta_su(3, 2, 400, prec);
  CHECK(abs(a.value - b.value) <= (a.tail_bound > b.tail_bound ? a.tail_bound : b.tail_bound));
  CHECK(b.value >= a.value);
  CHECK(b.tail_bound <= a.tail_bound);
  // The omitted mass is really covered: b - a is part of a's tail.
  CHECK(b.value - a.value <= a.tail_bound);
  auto first = witten::witten_zeta_su(3, 2, 1, prec);
  HPReal prev = first.value, prev_tail = first.tail_bound;
  for (long cutoff : {5L, 20L, 60L}) {
    const auto z = witten::witten_zeta_su(3, 2, cutoff, prec);
    CHECK(z.value >= prev);
    CHECK(z.tail_bound <= prev_tail);
    prev = z.value;
    prev_tail = z.tail_bound;
  }
}

TEST_CASE("Witten volume assembly") {
  const long prec = 128;
  const HPReal V(Q(7, 3), prec);
  const auto vol = witten::witten_volume(2, 2, V, 2000, prec);
  const auto z = witten::witten_zeta_su(2, 2, 2000, prec);
  const HPReal two_pi_cubed = pow(HPReal(2L, prec) * HPReal::pi(prec), 3L);
  const HPReal base = V / two_pi_cubed;
  const HPReal expected = HPReal(2L, prec) * base * base * z.value;
  CHECK(abs(vol.value - expected) < HPReal(1e-30, prec) * expected);
  CHECK(abs(vol.uncertainty - HPReal(2L, prec) * base * base * z.tail_bound) < HPReal(1e-30, prec));
  CHECK_THROWS_WITH_AS(witten::witten_volume(1, 2, V, 10, prec), "n >= 2 required", std::invalid_argument);
  CHECK_THROWS_AS(witten::witten_volume(2, 1, V, 10, prec), std::invalid_argument);
}

TEST_CASE("Gamma_R") {
  const long prec = 128;
  const HPReal pi = HPReal::pi(prec);
  const HPReal tol(1e-35, prec);
  CHECK(abs(periods::gamma_r(HPComplex(HPReal(1L, prec))).real() - HPReal(1L, prec)) < tol);
  CHECK(abs(periods::gamma_r(HPComplex(HPReal(2L, prec))).real() - HPReal(1L, prec) / pi) < tol);
  CHECK_THROWS_WITH_AS(periods::gamma_r(HPComplex(HPReal(0L, prec))), "Gamma_R pole", std::domain_error);
  CHECK_THROWS_AS(periods::gamma_r(HPComplex(HPReal(-4L, prec))), std::domain_error);
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> num(-300, 300);
  for (int i = 0; i < 10; ++i) {
    const BigRational x = make_rational(num(rng), 41);
    const HPReal xr(x, prec);
    const HPReal half = xr / HPReal(2L, prec);
    const HPReal direct = pow(pi, -half) * gamma(half);
    const HPComplex v = periods::gamma_r(HPComplex(xr));
    CHECK(abs(v.real() - direct) <= ldexp_one(-prec / 2, prec) * abs(direct));
    // Gamma_R(z + 2) = Gamma_R(z) z / (2 pi) off the real line.
    const HPComplex z(xr, HPReal(Q(3, 7), prec));
    const HPComplex lhs = periods::gamma_r(z + HPComplex(HPReal(2L, prec)));
    const HPComplex rhs = periods::gamma_r(z) * z / HPComplex(HPReal(2L, prec) * pi);
    CHECK(abs(lhs - rhs) <= ldexp_one(-prec / 2, prec) * abs(rhs));
  }
}

TEST_CASE("completed curve zeta at rational points") {
  const long prec = 128;
  const auto e = fixtures::e2();
  for (const auto& c : {fixtures::e2(), fixtures::genus2()}) {
    for (const auto& s : {Q(5, 2), Q(1, 3), Q(-7, 4), Q(3)}) {
      const HPReal a = periods::completed_curve_zeta(c, s, prec);
      const HPReal b = periods::completed_curve_zeta(c, 1 - s, prec);
      CHECK(abs(a - b) <= HPReal(1e-30, prec) * abs(a));
    }
  }
  CHECK(periods::completed_curve_zeta(e, Q(3), prec) == HPReal(Q(11, 7), prec));
  CHECK_THROWS_AS(periods::completed_curve_zeta(e, Q(1), prec), std::domain_error);
  CHECK_THROWS_AS(periods::completed_curve_zeta(e, Q(0), prec), std::domain_error);
}

TEST_CASE("A1 period on E/F2") {
  const long prec = 128;
  const HPReal pi = HPReal::pi(prec);
  const auto a1 = rootsys::build_root_system('A', 1);
  const auto e = fixtures::e2();
  periods::PeriodConfig plus{periods::SignConvention::all_plus, prec};
  periods::PeriodConfig alt{periods::SignConvention::length_sign, prec};

  const auto r = periods::period_eval(a1, e, {Q(2)}, plus);
  REQUIRE(r.terms.size() == 2);
  // Identity: Gamma_R(-1) = -2 pi, no zeta ratio. Reflection: Gamma_R(3) = 1/(2 pi), ratio 3/(11/7).
  CHECK(abs(r.terms[0].value.real() + HPReal(2L, prec) * pi) < HPReal(1e-35, prec));
  CHECK(abs(r.terms[1].zeta_factor - HPReal(Q(21, 11), prec)) < HPReal(1e-35, prec));
  const HPReal expected = -HPReal(2L, prec) * pi + HPReal(Q(21, 11), prec) / (HPReal(2L, prec) * pi);
  CHECK(abs(r.value.real() - expected) < HPReal(1e-35, prec));
  CHECK(abs(r.value.imag()) < HPReal(1e-35, prec));

  const auto r2 = periods::period_eval(a1, e, {Q(2)}, alt);
  CHECK(abs(r2.terms[1].value.real() + r.terms[1].value.real()) < HPReal(1e-35, prec));
  CHECK(abs((r.value - r2.value).real() - HPReal(2L, prec) * r.terms[1].value.real()) < HPReal(1e-35, prec));

  // Summing the terms in reverse order gives the same value.
  HPComplex rev(prec);
  for (auto it = r.terms.rbegin(); it != r.terms.rend(); ++it) rev = rev + it->value;
  CHECK(abs(rev - r.value) < HPReal(1e-35, prec));

  CHECK_THROWS_AS(periods::period_eval(a1, e, {Q(1)}, plus), std::domain_error);
  try {
    periods::period_eval(a1, e, {Q(0)}, plus);
    CHECK(false);
  } catch (const std::domain_error& ex) {
    CHECK(std::string(ex.what()).find("singular configuration: w=") == 0);
  }
  CHECK_THROWS_AS(periods::period_eval(a1, e, {Q(1), Q(2)}, plus), std::invalid_argument);
}

TEST_CASE("SL2 table") {
  const long prec = 128;
  const auto a1 = rootsys::build_root_system('A', 1);
  const auto e = fixtures::e2();
  periods::PeriodConfig cfg{periods::SignConvention::all_plus, prec};
  const auto t = periods::sl2_group_zeta(a1, e, {Q(2), Q(5, 2), Q(3)}, cfg);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].period.has_value());
  CHECK(t.rows[1].period.has_value());
  // Gamma_R(1 - s) has a pole at s = 3.
  CHECK_FALSE(t.rows[2].period.has_value());
  CHECK(t.rows[2].period_note.find("Gamma_R(-2)") != std::string::npos);
  CHECK_FALSE(t.has_comparison);
  CHECK(t.to_csv(10).rfind("s,period\n", 0) == 0);

  CHECK(periods::sl2_group_zeta(a1, e, {}, cfg).rows.empty());
  CHECK_THROWS_WITH_AS(periods::sl2_group_zeta(rootsys::build_root_system('A', 2), e, {Q(2)}, cfg), "rank-1 only",
                       std::invalid_argument);

  assembly::AlphaBetaTable tab;
  tab.n = 2;
  tab.g = 1;
  tab.base = 2;
  tab.alphas = {Q(1)};
  tab.beta = 6;
  const auto c = periods::sl2_group_zeta(a1, e, {Q(2), Q(5, 2), Q(7, 2), Q(9, 2)}, cfg, tab);
  CHECK(c.has_comparison);
  CHECK(c.to_csv(10).rfind("s,period,assembled,ratio\n", 0) == 0);
  REQUIRE(c.rows[0].assembled.has_value());
  // Z(T) with T = 2^{-4}, Q = 4: 1 + 18 T / ((1 - T)(1 - 4T)).
  const BigRational T = Q(1, 16);
  const BigRational expect = 1 + 18 * T / ((1 - T) * (1 - 4 * T));
  CHECK(abs(*c.rows[0].assembled - HPReal(expect, prec)) < HPReal(1e-30, prec));
  CHECK(c.fit.has_value());
}
