#include "nlolim/three_level.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "nlolim/kahan.hpp"
#include "nlolim/scan.hpp"
#include "nlolim/sos.hpp"
#include "nlolim/version.hpp"

namespace nlolim {
namespace three_level {

namespace {

void require_unit_interval(const ThreeLevelPoint& p, bool open) {
  if (!(p.E10 > 0.0)) throw std::invalid_argument("three-level: E10 must be positive");
  const bool ok = open ? (p.X > 0.0 && p.X < 1.0 && p.E > 0.0 && p.E < 1.0)
                       : (p.X >= 0.0 && p.X <= 1.0 && p.E >= 0.0 && p.E <= 1.0);
  if (!ok) {
    std::ostringstream os;
    os << "three-level: (X, E) = (" << p.X << ", " << p.E << ") outside the "
       << (open ? "open" : "closed") << " unit square";
    if (open) os << "; boundary values are handled by the dedicated limit operations";
    throw std::domain_error(os.str());
  }
}

double beta_units(double E10, double m) {
  return std::pow(kHbar, 3) / std::sqrt(m * m * m * std::pow(E10, 7));
}

double gamma_units(double E10, double m) {
  return std::pow(kHbar, 4) / (m * m * std::pow(E10, 5));
}

// The five bracket polynomials of the corrected second hyperpolarizability.
// `fused_bracket` switches the lambda00*lambda11 bracket to the alternate
// product transcription; the consistency audit compares both.
double gamma_poly(double X, double E, const LambdaSet& lam, bool fused_bracket) {
  const double X2 = X * X, X4 = X2 * X2;
  const double E2 = E * E, E3 = E2 * E, E5 = E3 * E2;
  const double a = 4.0 - (1.0 + 2.0 * X2 + 5.0 * X4) * E5 -
                   (1.0 - 2.0 * X2 - 5.0 * X4) * E3 - (3.0 - 5.0 * X4) * E2 - 5.0 * X4;
  const double b = (1.0 - 2.0 * X2 + 5.0 * X4) * E5 + (2.0 * X2 - 5.0 * X4) * E3 +
                   (4.0 * X2 - 5.0 * X4) * E2 + 5.0 * X4 - 4.0 * X2;
  const double cpoly = 4.0 - 4.0 * X2 + (4.0 * X2 - 3.0) * E2 + (4.0 * X2 - 1.0) * E3 -
                       4.0 * X2 * E5;
  const double d = (2.0 + 10.0 * X4) * E5 + (1.0 - 10.0 * X4) * E3 +
                   (3.0 + 4.0 * X2 - 10.0 * X4) * E2 + 10.0 * X4 - 4.0 * X2 - 4.0;
  const double f =
      fused_bracket
          ? 4.0 * X2 * E5 * (1.0 - 4.0 * X2) * E3 + (3.0 - 4.0 * X2) * E2 + 4.0 * X2 - 4.0
          : 4.0 * X2 * E5 + (1.0 - 4.0 * X2) * E3 + (3.0 - 4.0 * X2) * E2 + 4.0 * X2 - 4.0;

  double value = 4.0 * a - 9.0 * b * lam.l00 * lam.l00 - 6.0 * cpoly * lam.l11 +
                 6.0 * d * lam.l00 - 9.0 * f * lam.l00 * lam.l11 +
                 9.0 * (E5 * lam.l20 * lam.l20 + lam.l10 * lam.l10);

  // The H*G cross term enters only with the off-diagonal lambdas; evaluated
  // lazily so the polynomial part stays defined below the l00 = 2/3 floor.
  if (lam.l10 != 0.0 || lam.l20 != 0.0) {
    const double h = h_lambda(lam.l00);
    const double g = g_lambda(X, lam.l00, lam.l11);
    value += -12.0 * h * g *
             (lam.l10 * (2.0 + E) * std::sqrt(1.0 - E) * std::sqrt(1.0 - X2) -
              lam.l20 * X * std::sqrt(E * (1.0 - E)) * (E3 + 2.0 * E3 * E));
  }
  return value;
}

}  // namespace

double h_lambda(double l00) {
  const double arg = 1.5 * l00 - 1.0;
  if (arg < 0.0) {
    std::ostringstream os;
    os << "h_lambda: lambda00 = " << l00 << " below the validity floor 2/3";
    throw std::domain_error(os.str());
  }
  return std::sqrt(arg);
}

double g_lambda(double X, double l00, double l11) {
  const double arg = X * X * (1.5 * l00 - 1.0) + 1.5 * l11 - 1.0;
  if (arg < 0.0) {
    std::ostringstream os;
    os << "g_lambda: negative argument " << arg << " at X = " << X
       << ", lambda00 = " << l00 << ", lambda11 = " << l11;
    throw std::domain_error(os.str());
  }
  return std::sqrt(arg);
}

Spectrum ansatz_moments(const ThreeLevelPoint& p, const LambdaSet& lam, double mass) {
  require_unit_interval(p, /*open=*/true);
  const double h = h_lambda(lam.l00);
  const double g = g_lambda(p.X, lam.l00, lam.l11);
  if (h == 0.0)
    throw std::domain_error("ansatz_moments: lambda00 at the 2/3 floor makes x10 vanish");

  const double unit = kHbar / std::sqrt(mass * p.E10);
  const double X = p.X, E = p.E;
  const double sx = std::sqrt(1.0 - X * X);
  const double se = std::sqrt(1.0 - E);

  const double x10 = unit * X * h;
  const double x12 = unit * std::sqrt(E / (1.0 - E)) * g;
  const double x20 = unit * std::sqrt(E) * sx * h;
  const double xb11 = unit * ((E - 2.0) / se * (sx / X) * g + 1.5 * lam.l10 / (X * h));
  const double xb22 =
      unit * ((1.0 - 2.0 * E) / se * (X / sx) * g + 1.5 * std::sqrt(E) * lam.l20 / (sx * h));

  Spectrum s;
  s.mass = mass;
  s.charge = 1.0;
  s.energies = {0.0, p.E10, p.E10 / E};
  s.moments = Matrix(3, 3);
  s.moments(0, 1) = s.moments(1, 0) = x10;
  s.moments(0, 2) = s.moments(2, 0) = x20;
  s.moments(1, 2) = s.moments(2, 1) = x12;
  s.moments(1, 1) = xb11;  // x00 = 0, so the barred and plain diagonals agree
  s.moments(2, 2) = xb22;
  s.validate();
  return s;
}

std::array<double, 4> sum_rule_residuals(const Spectrum& s, const LambdaSet& lam) {
  if (s.num_states() != 3)
    throw std::invalid_argument("sum_rule_residuals: expects a three-level spectrum");
  const double hm = kHbar * kHbar / s.mass;
  const double E10 = s.energies[1], E20 = s.energies[2], E21 = E20 - E10;
  const double x10 = s.moments(0, 1), x20 = s.moments(0, 2), x12 = s.moments(1, 2);
  const double xb11 = s.moments(1, 1) - s.moments(0, 0);
  const double xb22 = s.moments(2, 2) - s.moments(0, 0);
  return {
      x10 * x10 * E10 + x20 * x20 * E20 - hm * (1.5 * lam.l00 - 1.0),
      x12 * x12 * E21 - x10 * x10 * E10 - hm * (1.5 * lam.l11 - 1.0),
      x10 * xb11 * E10 + x12 * x20 * (E21 + E20) - 1.5 * hm * lam.l10,
      x20 * xb22 * E20 + x10 * x12 * (E10 - E21) - 1.5 * hm * lam.l20,
  };
}

double alpha3l_rel(const ThreeLevelPoint& p, const LambdaSet& lam, double m) {
  require_unit_interval(p, /*open=*/false);
  const double h = h_lambda(lam.l00);
  const double X2 = p.X * p.X;
  return 2.0 * kHbar * kHbar / (m * p.E10 * p.E10) *
         (X2 + p.E * p.E * (1.0 - X2)) * h * h;
}

double beta3l_rel(const ThreeLevelPoint& p, const LambdaSet& lam, double m) {
  require_unit_interval(p, /*open=*/false);
  const double h = h_lambda(lam.l00);
  const double g = g_lambda(p.X, lam.l00, lam.l11);
  const double X = p.X, E = p.E;
  const double sx = std::sqrt(1.0 - X * X);
  return 6.0 * beta_units(p.E10, m) * h *
         (sx * X * std::pow(1.0 - E, 1.5) * (1.0 + 1.5 * E + E * E) * h * g -
          3.0 * X * lam.l10 - 3.0 * sx * std::pow(E, 3.5) * lam.l20);
}

double gamma3l_rel(const ThreeLevelPoint& p, const LambdaSet& lam, double m) {
  require_unit_interval(p, /*open=*/false);
  return gamma_units(p.E10, m) * gamma_poly(p.X, p.E, lam, /*fused_bracket=*/false);
}

double gamma3l_rel_fused_bracket(const ThreeLevelPoint& p, const LambdaSet& lam, double m) {
  require_unit_interval(p, /*open=*/false);
  return gamma_units(p.E10, m) * gamma_poly(p.X, p.E, lam, /*fused_bracket=*/true);
}

double alpha3l_nonrel(const ThreeLevelPoint& p, double m) {
  require_unit_interval(p, /*open=*/false);
  const double X2 = p.X * p.X;
  return kHbar * kHbar / (m * p.E10 * p.E10) * (X2 + p.E * p.E * (1.0 - X2));
}

double beta3l_nonrel(const ThreeLevelPoint& p, double m) {
  require_unit_interval(p, /*open=*/false);
  const double X = p.X, E = p.E;
  return 3.0 / (2.0 * std::sqrt(2.0)) * beta_units(p.E10, m) * X *
         std::sqrt(1.0 - X * X * X * X) * std::pow(1.0 - E, 1.5) *
         (1.0 + 1.5 * E + E * E);
}

double gamma3l_nonrel(const ThreeLevelPoint& p, double m) {
  require_unit_interval(p, /*open=*/false);
  const double X2 = p.X * p.X, X4 = X2 * X2;
  const double E = p.E, E2 = E * E, E3 = E2 * E;
  return gamma_units(p.E10, m) *
         (4.0 - 2.0 * (E2 - 1.0) * E3 * X2 -
          5.0 * (E - 1.0) * (E - 1.0) * (E + 1.0) * (E2 + E + 1.0) * X4 -
          (E3 + E + 3.0) * E2);
}

LimitReport beta_limit(double E10, double m) {
  LimitReport r;
  r.value = std::pow(3.0, 0.25) * beta_units(E10, m);
  r.intrinsic = 1.0;
  r.normalizer_family = "beta-max";
  return r;
}

LimitReport gamma_upper_limit(double E10, double m) {
  LimitReport r;
  r.value = 4.0 * gamma_units(E10, m);
  r.intrinsic = 1.0;
  r.normalizer_family = "gamma-upper";
  return r;
}

LimitReport gamma_lower_limit(double E10, double m) {
  LimitReport r;
  r.value = -gamma_units(E10, m);
  r.intrinsic = -1.0;
  r.normalizer_family = "gamma-lower";
  return r;
}

double beta_prime_at_peak(const LambdaSet& lam, double E10, double m) {
  const double h = h_lambda(lam.l00);
  const double sumarg = 1.5 * lam.l00 + 1.5 * lam.l11 - 1.0;
  if (sumarg < 0.0)
    throw std::domain_error("beta_prime_at_peak: lambda00 + lambda11 below the validity floor");
  return 2.0 / std::pow(3.0, 0.25) * beta_units(E10, m) * h *
         (std::sqrt(6.0) * h * std::sqrt(sumarg) - 9.0 * lam.l10);
}

double gamma_prime_00(const LambdaSet& lam, double E10, double m) {
  const double a = 3.0 * lam.l00 - 2.0;
  const double b = 3.0 * lam.l11 - 2.0;
  double cross = 0.0;
  if (lam.l10 != 0.0) {
    if (a < 0.0 || b < 0.0)
      throw std::domain_error("gamma_prime_00: lambda diagonal below the validity floor");
    cross = -12.0 * lam.l10 * std::sqrt(a * b);
  }
  return gamma_units(E10, m) * (16.0 + 9.0 * lam.l10 - 24.0 * lam.l11 +
                                3.0 * lam.l00 * (12.0 * lam.l11 - 8.0) + cross);
}

double gamma_prime_10(const LambdaSet& lam, double E10, double m) {
  return gamma_units(E10, m) *
         (12.0 * lam.l00 - 9.0 * lam.l00 * lam.l00 + 9.0 * lam.l10 * lam.l10 - 4.0);
}

double gamma_prime_X1(const LambdaSet& lam, double E10, double m) {
  return gamma_units(E10, m) *
         (12.0 * lam.l00 - 9.0 * lam.l00 * lam.l00 + 9.0 * lam.l10 * lam.l10 +
          9.0 * lam.l20 * lam.l20 - 4.0);
}

double intrinsic(double value, LimitFamily family, double E10, double m) {
  double normalizer = 0.0;
  switch (family) {
    case LimitFamily::beta:
      normalizer = beta_limit(E10, m).value;
      break;
    case LimitFamily::gamma_upper:
      normalizer = gamma_upper_limit(E10, m).value;
      break;
    case LimitFamily::gamma_lower:
      normalizer = std::fabs(gamma_lower_limit(E10, m).value);
      break;
  }
  return value / normalizer;
}

double intrinsic_family_self(double value, LimitFamily family, double E10, double m) {
  const LambdaSet identity{};
  double normalizer = 0.0;
  switch (family) {
    case LimitFamily::beta:
      normalizer = beta_prime_at_peak(identity, E10, m);
      break;
    case LimitFamily::gamma_upper:
      normalizer = gamma_prime_00(identity, E10, m);
      break;
    case LimitFamily::gamma_lower:
      normalizer = std::fabs(gamma_prime_10(identity, E10, m));
      break;
  }
  return value / normalizer;
}

ConsistencyReport consistency_report(std::uint64_t samples, std::uint64_t seed) {
  ConsistencyReport rep;
  rep.samples = samples;
  rep.seed = seed;

  std::mt19937_64 rng(seed);
  const auto draw = [&rng]() {
    // portable uniform in (0.01, 0.99)
    const double u = double(rng() >> 11) * 0x1.0p-53;
    return 0.01 + 0.98 * u;
  };

  const LambdaSet identity{};
  double beta_ratio_min = 0.0, beta_ratio_max = 0.0;
  double beta_sos_min = 0.0, beta_sos_max = 0.0;
  KahanSum beta_ratio_sum, beta_sos_sum;
  bool first = true;

  for (std::uint64_t i = 0; i < samples; ++i) {
    ThreeLevelPoint p;
    p.X = draw();
    p.E = draw();
    p.E10 = 1.0;

    const double a_rel = alpha3l_rel(p, identity);
    const double a_non = alpha3l_nonrel(p);
    rep.alpha_max_rel_dev =
        std::max(rep.alpha_max_rel_dev, std::fabs(a_rel - a_non) / std::fabs(a_non));

    const double b_non = beta3l_nonrel(p);
    const double b_ratio = beta3l_rel(p, identity) / b_non;
    beta_ratio_sum += b_ratio;
    beta_ratio_min = first ? b_ratio : std::min(beta_ratio_min, b_ratio);
    beta_ratio_max = first ? b_ratio : std::max(beta_ratio_max, b_ratio);

    const Spectrum s = ansatz_moments(p, identity);
    const double b_sos_ratio = beta_sos(s) / b_non;
    beta_sos_sum += b_sos_ratio;
    beta_sos_min = first ? b_sos_ratio : std::min(beta_sos_min, b_sos_ratio);
    beta_sos_max = first ? b_sos_ratio : std::max(beta_sos_max, b_sos_ratio);
    first = false;

    const double g_non = gamma3l_nonrel(p);
    const double g_sum = gamma3l_rel(p, identity);
    const double g_fused = gamma3l_rel_fused_bracket(p, identity);
    const double g_scale = std::max(1.0, std::fabs(g_non));
    rep.gamma_sum_reading_max_dev =
        std::max(rep.gamma_sum_reading_max_dev, std::fabs(g_sum - g_non) / g_scale);
    rep.gamma_fused_reading_max_dev =
        std::max(rep.gamma_fused_reading_max_dev, std::fabs(g_fused - g_non) / g_scale);

    const double g_sos = gamma_sos(s);
    const double dev = std::fabs(g_sos - g_sum) / std::max(1.0, std::fabs(g_sum));
    if (dev > rep.gamma_sos_max_dev) {
      rep.gamma_sos_max_dev = dev;
      rep.gamma_sos_dev_at_X = p.X;
      rep.gamma_sos_dev_at_E = p.E;
    }
  }

  rep.beta_ratio_mean = beta_ratio_sum.value() / double(samples);
  rep.beta_ratio_max_dev = std::max(std::fabs(beta_ratio_max - rep.beta_ratio_mean),
                                    std::fabs(beta_ratio_min - rep.beta_ratio_mean));
  rep.beta_sos_ratio_mean = beta_sos_sum.value() / double(samples);
  rep.beta_sos_ratio_max_dev = std::max(std::fabs(beta_sos_max - rep.beta_sos_ratio_mean),
                                        std::fabs(beta_sos_min - rep.beta_sos_ratio_mean));

  rep.corner_gamma_00 = gamma3l_rel({0.0, 0.0, 1.0}, identity);
  rep.corner_gamma_10 = gamma3l_rel({1.0, 0.0, 1.0}, identity);
  rep.corner_gamma_E1 = gamma3l_rel({0.5, 1.0, 1.0}, identity);
  return rep;
}

std::string ConsistencyReport::to_text() const {
  std::ostringstream os;
  os << "nlolim consistency report\n";
  os << "schema: " << kSchema << "\n";
  os << "version: " << kVersion << "\n";
  os << "samples: " << samples << "\n";
  os << "seed: " << seed << "\n";
  os << "alpha corrected-vs-nonrel max rel dev: " << format_float(alpha_max_rel_dev) << "\n";
  os << "beta corrected/nonrel ratio mean: " << format_float(beta_ratio_mean) << "\n";
  os << "beta corrected/nonrel ratio max dev: " << format_float(beta_ratio_max_dev) << "\n";
  os << "beta sos/nonrel ratio mean: " << format_float(beta_sos_ratio_mean) << "\n";
  os << "beta sos/nonrel ratio max dev: " << format_float(beta_sos_ratio_max_dev) << "\n";
  os << "gamma corrected(sum reading)-vs-nonrel max rel dev: "
     << format_float(gamma_sum_reading_max_dev) << "\n";
  os << "gamma corrected(fused reading)-vs-nonrel max rel dev: "
     << format_float(gamma_fused_reading_max_dev) << "\n";
  os << "gamma sos-vs-corrected max rel dev: " << format_float(gamma_sos_max_dev)
     << " at X=" << format_float(gamma_sos_dev_at_X)
     << " E=" << format_float(gamma_sos_dev_at_E) << "\n";
  os << "gamma corner (X=0,E=0): " << format_float(corner_gamma_00) << " (expected 4)\n";
  os << "gamma corner (X=1,E=0): " << format_float(corner_gamma_10) << " (expected -1)\n";
  os << "gamma corner (E=1):     " << format_float(corner_gamma_E1) << " (expected -1)\n";
  const bool sum_ok = gamma_sum_reading_max_dev < 1e-10;
  const bool fused_ok = gamma_fused_reading_max_dev < 1e-10;
  os << "verdict: ";
  if (sum_ok && !fused_ok) {
    os << "the summed-bracket transcription matches the non-relativistic reduction and "
          "the sum-over-states oracle; the fused-product transcription does not\n";
  } else if (!sum_ok && fused_ok) {
    os << "the fused-product transcription matches; the summed transcription does not\n";
  } else {
    os << "inconclusive; see deviations above\n";
  }
  return os.str();
}

}  // namespace three_level
}  // namespace nlolim
