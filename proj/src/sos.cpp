#include "nlolim/sos.hpp"

#include <stdexcept>

#include "nlolim/kahan.hpp"

namespace nlolim {

double barred_moment(const Spectrum& s, std::size_t i, std::size_t j) {
  const std::size_t n = s.num_states();
  if (i >= n || j >= n) throw std::out_of_range("barred_moment: state index out of range");
  if (i == j) return s.moments(i, i) - s.moments(0, 0);
  return s.moments(i, j);
}

double alpha_sos(const Spectrum& s) {
  const std::size_t n = s.num_states();
  KahanSum sum;
  for (std::size_t a = 1; a < n; ++a) {
    const double x0a = s.moments(0, a);
    sum += x0a * x0a / s.energies[a];
  }
  return 2.0 * s.charge * s.charge * sum.value();
}

double beta_sos(const Spectrum& s) {
  const std::size_t n = s.num_states();
  KahanSum sum;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      sum += s.moments(0, a) * barred_moment(s, a, b) * s.moments(b, 0) /
             (s.energies[a] * s.energies[b]);
  const double e = s.charge;
  return 3.0 * e * e * e * sum.value();
}

double gamma_sos(const Spectrum& s) {
  const std::size_t n = s.num_states();
  KahanSum first;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) {
      const double xab = barred_moment(s, a, b);
      if (xab == 0.0) continue;
      for (std::size_t k = 1; k < n; ++k)
        first += s.moments(0, a) * xab * barred_moment(s, b, k) * s.moments(k, 0) /
                 (s.energies[a] * s.energies[b] * s.energies[k]);
    }
  KahanSum second;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) {
      const double x0a = s.moments(0, a);
      const double x0b = s.moments(0, b);
      second += x0a * x0a * x0b * x0b / (s.energies[a] * s.energies[a] * s.energies[b]);
    }
  const double e = s.charge;
  return 4.0 * e * e * e * e * (first.value() - second.value());
}

}  // namespace nlolim
