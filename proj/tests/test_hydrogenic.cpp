#include <doctest.h>

#include <cmath>

#include "nlolim/eigensolver.hpp"
#include "nlolim/hydrogenic.hpp"
#include "nlolim/sum_rules.hpp"

using namespace nlolim;
using namespace nlolim::hydrogenic;

TEST_CASE("hlike_p2 virial baseline") {
  // alpha -> 0: <p^2> = -Z^2/N^2 - 2 V_nn = +Z^2/N^2
  CHECK(hlike_p2(1, 0, 0.5, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hlike_p2(1, 1, 0.5, 0.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(hlike_p2(2, 0, 0.5, 0.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(hlike_p2(1, 0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(hlike_p2(0, 0, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("hlike_p2 fine-structure term at z = 80") {
  const double a = kFineStructure;
  const double z4a2 = 80.0 * 80.0 * 80.0 * 80.0 * a * a;
  // printed form at N = 1, j = 1/2: Z^2 + Z^4 alpha^2 (1 - 3/4)
  const double printed = 6400.0 + z4a2 * 0.25;
  CHECK(hlike_p2(80, 0, 0.5, a) == doctest::Approx(printed).epsilon(1e-14));

  // energy-route oracle: 2(E_nj - V_nn) with E to order (Z alpha)^4 carries a
  // fine-structure term of the same magnitude
  const double e_fs = -0.5 * 6400.0 * (1.0 + 6400.0 * a * a * (1.0 - 0.75));
  const double oracle = 2.0 * (e_fs + 6400.0);
  CHECK(std::fabs(printed - 6400.0) ==
        doctest::Approx(std::fabs(oracle - 6400.0)).epsilon(1e-12));
}

TEST_CASE("hlike_lambda limits and variants") {
  const LambdaSet flat = hlike_lambda(5, 0.0);
  CHECK(flat.l00 == 1.0);
  CHECK(flat.l11 == 1.0);
  CHECK(flat.l10 == 0.0);
  CHECK(flat.l20 == 0.0);

  const double a = kFineStructure;
  const LambdaSet lit = hlike_lambda(1, a, LambdaVariant::literal);
  const LambdaSet half = hlike_lambda(1, a, LambdaVariant::half);
  const double p200 = 1.0 + a * a / 4.0;
  CHECK(lit.l00 == doctest::Approx(1.0 - a * a * p200).epsilon(1e-14));
  CHECK(half.l00 == doctest::Approx(1.0 - 0.5 * a * a * p200).epsilon(1e-14));
  CHECK(lit.l00 < 1.0);
  CHECK(lit.l11 < 1.0);
  CHECK(lit.l10 == 0.0);
  CHECK(lit.l20 == 0.0);
}

TEST_CASE("lambda00 slope against alpha^2 equals -p2_00") {
  const double a2 = kFineStructure * kFineStructure;
  const double h = 1e-8;
  const auto lam_at = [](double alpha2) {
    return hlike_lambda(1, std::sqrt(alpha2), LambdaVariant::literal).l00;
  };
  const double slope = (lam_at(a2 + h) - lam_at(a2)) / h;
  const double p200 = hlike_p2_averaged(1, 0, kFineStructure);
  CHECK(slope == doctest::Approx(-p200).epsilon(1e-4));
}

TEST_CASE("soft-Coulomb eigensolver concordance for the lambda deficit") {
  PotentialSpec p;
  p.kind = PotentialSpec::Kind::soft_coulomb;
  p.z = 1.0;
  p.softening = 1.0;
  const Eigensystem es = solve_nonrel(p, GridSpec{-40.0, 40.0, 3001}, 2);
  const LambdaMatrix lam = lambda_matrix_from_p2(es, 2, 1.0 / kFineStructure);
  const double deficit_1d = 1.0 - lam.values(0, 0);
  const double deficit_model = 1.0 - hlike_lambda(1, kFineStructure).l00;
  // order-of-magnitude concordance between the two routes
  CHECK(deficit_1d > 0.0);
  CHECK(deficit_1d / deficit_model > 0.05);
  CHECK(deficit_1d / deficit_model < 20.0);
}

TEST_CASE("non-relativistic hydrogen energy fractions") {
  const HLikeModel m = hlike_model(1, 0.0);
  CHECK(m.e10 == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
  CHECK(m.e20 == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
  CHECK(m.e10 / m.e20 == doctest::Approx(27.0 / 32.0).epsilon(1e-14));
}

TEST_CASE("oscillator strengths against a radial quadrature oracle") {
  // R10 = 2 exp(-r), R21 = r exp(-r/2)/(2 sqrt6),
  // R31 = 8/(27 sqrt6) r (1 - r/6) exp(-r/3); f = (2/3) dE D^2
  const auto simpson = [](auto f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
  };
  // integrand R_n1(r) * r * R_10(r) * r^2
  const double d2p = simpson(
      [](double r) { return (1.0 / (2.0 * std::sqrt(6.0))) * r * std::exp(-r / 2.0) *
                            r * 2.0 * std::exp(-r) * r * r; },
      0.0, 80.0, 40000);
  const double d3p = simpson(
      [](double r) {
        return (8.0 / (27.0 * std::sqrt(6.0))) * r * (1.0 - r / 6.0) * std::exp(-r / 3.0) *
               r * 2.0 * std::exp(-r) * r * r;
      },
      0.0, 80.0, 40000);
  const double f2 = (2.0 / 3.0) * (3.0 / 8.0) * d2p * d2p;
  const double f3 = (2.0 / 3.0) * (4.0 / 9.0) * d3p * d3p;
  CHECK(oscillator_strength_1s_np(2) == doctest::Approx(f2).epsilon(1e-8));
  CHECK(oscillator_strength_1s_np(3) == doctest::Approx(f3).epsilon(1e-8));
  CHECK(oscillator_strength_1s_np(2) == doctest::Approx(0.4161995).epsilon(1e-5));
  CHECK(oscillator_strength_1s_np(3) == doctest::Approx(0.0791016).epsilon(1e-5));

  const double xf = x_fraction_from_oscillator_strengths();
  CHECK(xf == doctest::Approx(std::sqrt(f2 / (f2 + f3))).epsilon(1e-8));
}

TEST_CASE("gamma at z = 1 shifts by an alpha^2-scale relative correction") {
  const double g_rel = hlike_gamma(1, kFineStructure);
  const double g_non = hlike_gamma_nonrel(1);
  const double rel_shift = std::fabs(g_rel / g_non - 1.0);
  CHECK(rel_shift > 1e-6);
  CHECK(rel_shift < 1e-3);
}

TEST_CASE("classical limit collapses to the pure scaling law") {
  const auto rows = gamma_ratio_curve(20, 0.0);
  for (const auto& r : rows) {
    CHECK(std::fabs(r.gamma_raw_ratio - std::pow(double(r.z), -10.0)) /
              std::pow(double(r.z), -10.0) <
          1e-10);
    CHECK(r.gamma_isolated_ratio == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("physical curve: unity at z=1, strict monotone decay, warnings") {
  const auto rows = gamma_ratio_curve(100, kFineStructure);
  REQUIRE(rows.size() == 100);
  CHECK(rows[0].gamma_raw_ratio == 1.0);
  CHECK(rows[0].gamma_isolated_ratio == doctest::Approx(1.0).epsilon(1e-3));
  double prev = 2.0;
  for (const auto& r : rows) {
    CHECK(r.gamma_isolated_ratio < prev);
    CHECK(r.gamma_isolated_ratio <= 1.0);
    prev = r.gamma_isolated_ratio;
    CHECK(r.validity_warning == (double(r.z) * kFineStructure >= 0.5));
  }
  // the alternate lambda column also decays but more slowly
  CHECK(rows[99].gamma_isolated_ratio_alt > rows[99].gamma_isolated_ratio);
}
