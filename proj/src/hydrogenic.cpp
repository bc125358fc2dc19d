#include "nlolim/hydrogenic.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nlolim {
namespace hydrogenic {

namespace {

// Multiplet j values and statistical weights 2j+1 per 0-based level index:
// ground s_1/2; first excited p_1/2 + p_3/2 doublet; second excited the
// j = 3/2, 5/2 multiplet.
struct Multiplet {
  std::vector<double> j;
  std::vector<double> w;
};

Multiplet multiplet_for_level(int n) {
  switch (n) {
    case 0: return {{0.5}, {2.0}};
    case 1: return {{0.5, 1.5}, {2.0, 4.0}};
    case 2: return {{1.5, 2.5}, {4.0, 6.0}};
    default: throw std::invalid_argument("hydrogenic: model has three levels (n = 0..2)");
  }
}

// Fine-structure level energy for principal quantum number N = n+1:
//   E = -Z^2/(2N^2) [1 + (Z alpha)^2/N^2 (N/(j+1/2) - 3/4)].
double level_energy_j(int z, int n, double j, double alpha_fs) {
  const double N = double(n + 1);
  const double za2 = double(z) * double(z) * alpha_fs * alpha_fs;
  return -double(z) * double(z) / (2.0 * N * N) *
         (1.0 + za2 / (N * N) * (N / (j + 0.5) - 0.75));
}

}  // namespace

double hlike_p2(int z, int n, double j, double alpha_fs) {
  if (z < 1) throw std::invalid_argument("hlike_p2: z must be >= 1");
  if (!(j == 0.5 || j == 1.5 || j == 2.5))
    throw std::invalid_argument("hlike_p2: j must be one of 1/2, 3/2, 5/2");
  const double N = double(n + 1);
  const double zz = double(z) * double(z);
  const double z4a2 = zz * zz * alpha_fs * alpha_fs;
  const double v_nn = -zz / (N * N);  // <-Z/r> for hydrogenic states
  return z4a2 / (N * N) * (2.0 / ((1.0 + 2.0 * j) * N) - 3.0 / (4.0 * N * N)) -
         zz / (N * N) - 2.0 * v_nn;
}

double hlike_p2_averaged(int z, int n, double alpha_fs) {
  const Multiplet mult = multiplet_for_level(n);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < mult.j.size(); ++i) {
    num += mult.w[i] * hlike_p2(z, n, mult.j[i], alpha_fs);
    den += mult.w[i];
  }
  return num / den;
}

LambdaSet hlike_lambda(int z, double alpha_fs, LambdaVariant variant) {
  const double scale = (variant == LambdaVariant::literal) ? 1.0 : 0.5;
  LambdaSet lam;
  lam.l00 = 1.0 - scale * alpha_fs * alpha_fs * hlike_p2_averaged(z, 0, alpha_fs);
  lam.l11 = 1.0 - scale * alpha_fs * alpha_fs * hlike_p2_averaged(z, 1, alpha_fs);
  lam.l10 = 0.0;  // off-diagonals vanish in this approximation
  lam.l20 = 0.0;
  return lam;
}

double hlike_level_energy(int z, int n, double alpha_fs) {
  const Multiplet mult = multiplet_for_level(n);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < mult.j.size(); ++i) {
    num += mult.w[i] * level_energy_j(z, n, mult.j[i], alpha_fs);
    den += mult.w[i];
  }
  return num / den;
}

double oscillator_strength_1s_np(int n_upper) {
  // f(1s -> np) = 2^8 n^5 (n-1)^(2n-4) / [3 (n+1)^(2n+4)], n >= 2.
  if (n_upper < 2) throw std::invalid_argument("oscillator_strength_1s_np: n must be >= 2");
  const double n = double(n_upper);
  return 256.0 * std::pow(n, 5) * std::pow(n - 1.0, 2.0 * n - 4.0) /
         (3.0 * std::pow(n + 1.0, 2.0 * n + 4.0));
}

double x_fraction_from_oscillator_strengths() {
  const double f1 = oscillator_strength_1s_np(2);
  const double f2 = oscillator_strength_1s_np(3);
  return std::sqrt(f1 / (f1 + f2));
}

HLikeModel hlike_model(int z, double alpha_fs, LambdaVariant variant) {
  if (z < 1) throw std::invalid_argument("hlike_model: z must be >= 1");
  HLikeModel m;
  m.z = z;
  m.alpha_fs = alpha_fs;
  const double e_ground = hlike_level_energy(z, 0, alpha_fs);
  m.e10 = hlike_level_energy(z, 1, alpha_fs) - e_ground;
  m.e20 = hlike_level_energy(z, 2, alpha_fs) - e_ground;
  m.x_fraction = x_fraction_from_oscillator_strengths();
  m.lambda = hlike_lambda(z, alpha_fs, variant);
  m.validity_warning = double(z) * alpha_fs >= 0.5;
  return m;
}

double hlike_gamma(int z, double alpha_fs, LambdaVariant variant) {
  const HLikeModel m = hlike_model(z, alpha_fs, variant);
  three_level::ThreeLevelPoint p;
  p.X = m.x_fraction;
  p.E = m.e10 / m.e20;
  p.E10 = m.e10;
  return three_level::gamma3l_rel(p, m.lambda);
}

double hlike_gamma_nonrel(int z) {
  three_level::ThreeLevelPoint p;
  p.X = x_fraction_from_oscillator_strengths();
  p.E = 27.0 / 32.0;  // (3/8) / (4/9) from the Bohr ladder
  p.E10 = 3.0 * double(z) * double(z) / 8.0;
  return three_level::gamma3l_rel(p, LambdaSet{});
}

std::vector<GammaRatioRow> gamma_ratio_curve(int z_max, double alpha_fs) {
  if (z_max < 1 || z_max > 137)
    throw std::invalid_argument("gamma_ratio_curve: z_max must be in [1, 137]");
  std::vector<GammaRatioRow> rows;
  rows.reserve(std::size_t(z_max));
  const double gamma1 = hlike_gamma(1, alpha_fs, LambdaVariant::literal);
  for (int z = 1; z <= z_max; ++z) {
    const HLikeModel m = hlike_model(z, alpha_fs, LambdaVariant::literal);
    GammaRatioRow r;
    r.z = z;
    r.e10 = m.e10;
    r.e_ratio = m.e10 / m.e20;
    r.x_fraction = m.x_fraction;
    r.lambda00 = m.lambda.l00;
    r.lambda11 = m.lambda.l11;
    r.validity_warning = m.validity_warning;
    const double g = hlike_gamma(z, alpha_fs, LambdaVariant::literal);
    const double g_alt = hlike_gamma(z, alpha_fs, LambdaVariant::half);
    const double g_non = hlike_gamma_nonrel(z);
    r.gamma_raw_ratio = g / gamma1;
    r.gamma_isolated_ratio = g / g_non;
    r.gamma_isolated_ratio_alt = g_alt / g_non;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace hydrogenic
}  // namespace nlolim
