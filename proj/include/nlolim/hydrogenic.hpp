#pragma once

#include <cstdint>
#include <string>

#include "nlolim/sum_rules.hpp"
#include "nlolim/three_level.hpp"

namespace nlolim {
namespace hydrogenic {

inline constexpr double kFineStructure = 1.0 / 137.035999084;

// Which momentum-to-lambda normalization to use: the literal alpha^2 p^2 form,
// or the half-coefficient form consistent with the p^2 inversion of the 1D
// sum rules (alpha^2 p^2 / 2). Both are computed and published.
enum class LambdaVariant { literal, half };

// Three-level H-like ion model: fine-structure-averaged transition energies,
// sum-rule-saturating moment split, and diagonal lambda values.
struct HLikeModel {
  int z = 1;
  double alpha_fs = kFineStructure;
  double e10 = 0.0;          // averaged first transition energy
  double e20 = 0.0;          // averaged second transition energy
  double x_fraction = 0.0;   // X of the reduced parameterization
  LambdaSet lambda;          // l10 = l20 = 0 in this model
  bool validity_warning = false;  // z * alpha_fs >= 0.5
};

// Diagonal <p^2> with the printed fine-structure term, 0-based principal
// index n (n = 0 is the ground state), V_nn = -Z^2/(n+1)^2.
double hlike_p2(int z, int n, double j, double alpha_fs);

// Statistical-weight (2j+1) average of hlike_p2 over the multiplet j values
// of level n (ground 1/2; first excited 1/2,3/2; second excited 3/2,5/2).
double hlike_p2_averaged(int z, int n, double alpha_fs);

// Diagonal lambdas from the averaged p^2; off-diagonals zero in this model.
LambdaSet hlike_lambda(int z, double alpha_fs, LambdaVariant variant = LambdaVariant::literal);

// Fine-structure-averaged level energies (absolute, negative).
double hlike_level_energy(int z, int n, double alpha_fs);

// Full model assembly: averaged energies, oscillator-strength split X,
// lambda set for the requested variant.
HLikeModel hlike_model(int z, double alpha_fs, LambdaVariant variant = LambdaVariant::literal);

// Corrected second hyperpolarizability of the model (three-level closed form).
double hlike_gamma(int z, double alpha_fs, LambdaVariant variant = LambdaVariant::literal);

// Non-relativistic baseline for the same z (alpha -> 0 limit of the model).
double hlike_gamma_nonrel(int z);

// Non-relativistic hydrogen oscillator strengths of the two model transitions
// (1s -> 2p, 1s -> 3p); the ratio fixes the sum-rule split X.
double oscillator_strength_1s_np(int n_upper);
double x_fraction_from_oscillator_strengths();

// One row of the Z sweep.
struct GammaRatioRow {
  int z = 0;
  double gamma_raw_ratio = 0.0;            // gamma'(z) / gamma'(1)
  double gamma_isolated_ratio = 0.0;       // gamma'(z) / gamma_nonrel(z)
  double gamma_isolated_ratio_alt = 0.0;   // same, half-coefficient lambdas
  double e10 = 0.0;
  double e_ratio = 0.0;
  double x_fraction = 0.0;
  double lambda00 = 0.0;
  double lambda11 = 0.0;
  bool validity_warning = false;
};

std::vector<GammaRatioRow> gamma_ratio_curve(int z_max, double alpha_fs);

}  // namespace hydrogenic
}  // namespace nlolim
