#pragma once

#include <cstddef>

#include "nlolim/eigensolver.hpp"
#include "nlolim/matrix.hpp"
#include "nlolim/spectrum.hpp"
#include "nlolim/version.hpp"

namespace nlolim {

// Relativistic correction factors lambda_kn multiplying the sum-rule right
// side; identity in the c -> infinity limit. Symmetric for real wavefunctions.
struct LambdaMatrix {
  Matrix values;
  double c = kSpeedOfLight;

  static LambdaMatrix identity(std::size_t n, double c);
  double max_identity_deviation() const;
};

// The four-element subset the three-level closed forms consume.
struct LambdaSet {
  double l00 = 1.0;
  double l11 = 1.0;
  double l10 = 0.0;
  double l20 = 0.0;
};

// Left side of the position-moment sum rule:
//   sum_{l<L} x_kl x_ln [E_l - (E_k + E_n)/2].
double trk_lhs(const Spectrum& s, std::size_t k, std::size_t n, std::size_t L);

// Corrected right side (hbar^2/m)(3/2 lambda_kn - delta_kn); reduces to
// hbar^2 delta_kn / 2m at lambda = identity.
double trk_rhs_rel(const LambdaMatrix& lam, std::size_t k, std::size_t n, double mass);

// trk_lhs - trk_rhs_rel; the magnitude is the sum-rule violation metric.
double trk_residual(const Spectrum& s, const LambdaMatrix& lam,
                    std::size_t k, std::size_t n, std::size_t L);

// lambda_kn = delta_kn - p2_kn / (2 m^2 c^2), the inversion of
// <k|p^2|n> = 2 m^2 c^2 (delta_kn - lambda_kn).
LambdaMatrix lambda_from_p2(const Matrix& p2, double c, double mass);

// Direct quadrature of
//   <k| sqrt(1 - 2(E_n - V)/mc^2 + hbar^2 V''/4m^3c^4) |n>
// with the argument clamped at zero. clamped_weight_out (optional) receives
// the |psi_k psi_n| mass fraction of the clamped region; the flag threshold
// is 1e-6.
struct LambdaDirectResult {
  double value = 0.0;
  double clamped_weight = 0.0;
  bool clamped_flag = false;  // clamped_weight > 1e-6
};
LambdaDirectResult lambda_direct(const Eigensystem& es, std::size_t k, std::size_t n,
                                 double c);

// Full matrices over the lowest n states (both routes); lambda_from_p2 is the
// reference route, the direct route exists to exercise the square-root form.
LambdaMatrix lambda_matrix_from_p2(const Eigensystem& es, std::size_t n_states, double c);
LambdaMatrix lambda_matrix_direct(const Eigensystem& es, std::size_t n_states, double c);

}  // namespace nlolim
