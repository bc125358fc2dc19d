#pragma once

#include <string>
#include <vector>

#include "nlolim/hydrogenic.hpp"
#include "nlolim/scan.hpp"

namespace nlolim {

struct AxisSpec {
  double lo = 2.0 / 3.0;
  double hi = 2.0;
  std::size_t n = 201;

  std::vector<double> values() const;
};

// Corrected-hyperpolarizability scan at the non-relativistic extremizer over
// (lambda00, lambda11) at fixed lambda10.
//
// Columns:
//   beta_prime          corrected limit expression (E10 = m = 1)
//   beta_int_self       family-self intrinsic: value / same formula at the
//                       same (l00, l11) with lambda10 at its non-relativistic
//                       value 0 (empty where that reference vanishes)
//   beta_int_max_self   value / formula at lambda = identity
//   beta_int_limit      value / beta_limit
//   beta_peak_sub       full corrected beta at the peak point (X=3^-1/4, E=0)
//   valid               1 where the cell evaluated
//   limit_break         1 where beta_int_self <= -1
ScanTable scan_beta(double l10, const AxisSpec& l00_axis, const AxisSpec& l11_axis,
                    unsigned threads);

// Corrected gamma maximum over (lambda00, lambda11) at fixed lambda10;
// gamma_int = value / upper limit (the family-self and upper normalizations
// coincide for this family).
ScanTable scan_gamma_max(double l10, const AxisSpec& l00_axis, const AxisSpec& l11_axis,
                         unsigned threads);

// Corrected gamma minimum over (lambda00, lambda10); intrinsic under both the
// lower-family and upper-family normalizations.
ScanTable scan_gamma_min(const AxisSpec& l00_axis, const AxisSpec& l10_axis,
                         unsigned threads);

// H-like ion Z sweep, fixed column set.
std::string hydrogenic_csv(const std::vector<hydrogenic::GammaRatioRow>& rows,
                           double alpha_fs);
std::string hydrogenic_json(const std::vector<hydrogenic::GammaRatioRow>& rows,
                            double alpha_fs);

}  // namespace nlolim
