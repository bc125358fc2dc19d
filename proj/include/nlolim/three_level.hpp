#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "nlolim/spectrum.hpp"
#include "nlolim/sum_rules.hpp"

namespace nlolim {
namespace three_level {

// Reduced parameters of the three-level ansatz: X = |x10|/|x10_max| and
// E = E10/E20, plus the first transition energy setting the overall scale.
struct ThreeLevelPoint {
  double X = 0.0;
  double E = 0.0;
  double E10 = 1.0;
};

// A limit value together with the normalization that produced the intrinsic.
struct LimitReport {
  double value = 0.0;
  double intrinsic = 0.0;
  std::string normalizer_family;
};

enum class LimitFamily { beta, gamma_upper, gamma_lower };

// H_lambda = sqrt(3/2 lambda00 - 1); 1/sqrt(2) in the non-relativistic limit.
// Throws std::domain_error below the validity floor lambda00 = 2/3.
double h_lambda(double l00);

// G_lambda(X) = sqrt(X^2 (3/2 l00 - 1) + 3/2 l11 - 1); throws std::domain_error
// (naming the offending values) when the argument is negative.
double g_lambda(double X, double l00, double l11);

// Transition moments solving the four corrected sum rules, assembled into a
// three-level Spectrum (x00 = 0, off-diagonal signs positive). Requires
// X in (0,1) and E in (0,1); the boundary values are singular for the moment
// formulas and belong to the dedicated limit operations.
Spectrum ansatz_moments(const ThreeLevelPoint& p, const LambdaSet& lam, double mass = 1.0);

// Residuals of the four constructed sum rules ((0,0), (1,1), (1,0), (2,0)
// pattern) for a three-level spectrum against a LambdaSet; all four vanish for
// ansatz_moments output by construction.
std::array<double, 4> sum_rule_residuals(const Spectrum& s, const LambdaSet& lam);

// Corrected closed forms (reduce to the non-relativistic ones at identity).
double alpha3l_rel(const ThreeLevelPoint& p, const LambdaSet& lam, double mass = 1.0);
double beta3l_rel(const ThreeLevelPoint& p, const LambdaSet& lam, double mass = 1.0);
double gamma3l_rel(const ThreeLevelPoint& p, const LambdaSet& lam, double mass = 1.0);

// Alternate transcription of the lambda00*lambda11 bracket in the corrected
// second hyperpolarizability (terms fused into a product instead of summed);
// used only by the consistency audit to adjudicate the two readings.
double gamma3l_rel_fused_bracket(const ThreeLevelPoint& p, const LambdaSet& lam,
                                 double mass = 1.0);

// Non-relativistic closed forms, regular on the closed unit square.
double alpha3l_nonrel(const ThreeLevelPoint& p, double mass = 1.0);
double beta3l_nonrel(const ThreeLevelPoint& p, double mass = 1.0);
double gamma3l_nonrel(const ThreeLevelPoint& p, double mass = 1.0);

// Fundamental limits in the non-relativistic three-level model.
LimitReport beta_limit(double E10, double mass = 1.0);    // 3^(1/4) e^3 hbar^3 / sqrt(m^3 E10^7)
LimitReport gamma_upper_limit(double E10, double mass = 1.0);  //  4 e^4 hbar^4 / m^2 E10^5
LimitReport gamma_lower_limit(double E10, double mass = 1.0);  // -1 e^4 hbar^4 / m^2 E10^5

// Corrected limit expressions at the non-relativistic extremizers.
double beta_prime_at_peak(const LambdaSet& lam, double E10, double mass = 1.0);
double gamma_prime_00(const LambdaSet& lam, double E10, double mass = 1.0);
double gamma_prime_10(const LambdaSet& lam, double E10, double mass = 1.0);
double gamma_prime_X1(const LambdaSet& lam, double E10, double mass = 1.0);

// value / (family limit). beta -> beta_limit, gamma_upper -> gamma_upper_limit,
// gamma_lower -> |gamma_lower_limit|.
double intrinsic(double value, LimitFamily family, double E10, double mass = 1.0);

// value / (same corrected formula at lambda = identity); invariant to any
// overall-constant discrepancy between the corrected and non-relativistic
// printings of the same limit.
double intrinsic_family_self(double value, LimitFamily family, double E10, double mass = 1.0);

// Deterministic audit comparing the corrected closed forms, their
// non-relativistic reductions, and direct SOS evaluation on the constructed
// spectrum, over seeded uniform draws of (X, E) in (0.01, 0.99)^2 at identity.
struct ConsistencyReport {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double alpha_max_rel_dev = 0.0;      // corrected vs non-relativistic
  double beta_ratio_mean = 0.0;        // corrected / non-relativistic
  double beta_ratio_max_dev = 0.0;     // max |ratio - mean|
  double beta_sos_ratio_mean = 0.0;    // SOS / non-relativistic
  double beta_sos_ratio_max_dev = 0.0;
  double gamma_sum_reading_max_dev = 0.0;    // summed bracket vs non-relativistic
  double gamma_fused_reading_max_dev = 0.0;  // fused bracket vs non-relativistic
  double gamma_sos_max_dev = 0.0;            // SOS vs corrected (summed reading)
  double gamma_sos_dev_at_X = 0.0;
  double gamma_sos_dev_at_E = 0.0;
  double corner_gamma_00 = 0.0;   // expect  4
  double corner_gamma_10 = 0.0;   // expect -1
  double corner_gamma_E1 = 0.0;   // expect -1

  std::string to_text() const;
};
ConsistencyReport consistency_report(std::uint64_t samples, std::uint64_t seed);

}  // namespace three_level
}  // namespace nlolim
