#include "nlolim/sum_rules.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlolim/kahan.hpp"

namespace nlolim {

LambdaMatrix LambdaMatrix::identity(std::size_t n, double c) {
  LambdaMatrix lam;
  lam.c = c;
  lam.values = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) lam.values(i, i) = 1.0;
  return lam;
}

double LambdaMatrix::max_identity_deviation() const {
  double dev = 0.0;
  for (std::size_t i = 0; i < values.rows(); ++i)
    for (std::size_t j = 0; j < values.cols(); ++j)
      dev = std::max(dev, std::fabs(values(i, j) - (i == j ? 1.0 : 0.0)));
  return dev;
}

double trk_lhs(const Spectrum& s, std::size_t k, std::size_t n, std::size_t L) {
  const std::size_t ns = s.num_states();
  if (k >= ns || n >= ns) throw std::out_of_range("trk_lhs: state index out of range");
  if (L > ns) throw std::out_of_range("trk_lhs: truncation count exceeds state count");
  const double mid = 0.5 * (s.energies[k] + s.energies[n]);
  KahanSum sum;
  for (std::size_t l = 0; l < L; ++l)
    sum += s.moments(k, l) * s.moments(l, n) * (s.energies[l] - mid);
  return sum.value();
}

double trk_rhs_rel(const LambdaMatrix& lam, std::size_t k, std::size_t n, double mass) {
  if (k >= lam.values.rows() || n >= lam.values.cols())
    throw std::out_of_range("trk_rhs_rel: index out of range");
  const double delta = (k == n) ? 1.0 : 0.0;
  return kHbar * kHbar / mass * (1.5 * lam.values(k, n) - delta);
}

double trk_residual(const Spectrum& s, const LambdaMatrix& lam,
                    std::size_t k, std::size_t n, std::size_t L) {
  return trk_lhs(s, k, n, L) - trk_rhs_rel(lam, k, n, s.mass);
}

LambdaMatrix lambda_from_p2(const Matrix& p2, double c, double mass) {
  if (p2.rows() != p2.cols()) throw std::invalid_argument("lambda_from_p2: matrix not square");
  if (!p2.is_symmetric(0.0))
    throw std::invalid_argument("lambda_from_p2: p^2 matrix must be symmetric");
  if (!(c > 0.0)) throw std::invalid_argument("lambda_from_p2: c must be positive");
  LambdaMatrix lam;
  lam.c = c;
  lam.values = Matrix(p2.rows(), p2.cols());
  const double denom = 2.0 * mass * mass * c * c;
  for (std::size_t i = 0; i < p2.rows(); ++i)
    for (std::size_t j = 0; j < p2.cols(); ++j)
      lam.values(i, j) = (i == j ? 1.0 : 0.0) - p2(i, j) / denom;
  return lam;
}

LambdaDirectResult lambda_direct(const Eigensystem& es, std::size_t k, std::size_t n,
                                 double c) {
  if (k >= es.num_states() || n >= es.num_states())
    throw std::out_of_range("lambda_direct: state index out of range");
  if (es.grid.n_points < 3)
    throw std::invalid_argument("lambda_direct: grid too coarse for V''");
  const double dx = es.grid.dx();
  const double m = es.mass;
  const double en = es.eigenvalues[n];
  const std::vector<double> vpp = second_derivative(es.potential, dx);

  const auto& pk = es.wavefunctions[k];
  const auto& pn = es.wavefunctions[n];

  KahanSum integral, weight_all, weight_clamped;
  for (std::size_t i = 1; i + 1 < es.grid.n_points; ++i) {
    const double arg = 1.0 - 2.0 * (en - es.potential[i]) / (m * c * c) +
                       kHbar * kHbar * vpp[i] / (4.0 * m * m * m * c * c * c * c);
    const double overlap = std::fabs(pk[i] * pn[i]) * dx;
    weight_all += overlap;
    if (arg < 0.0) weight_clamped += overlap;
    integral += pk[i] * std::sqrt(std::max(0.0, arg)) * pn[i] * dx;
  }
  LambdaDirectResult r;
  r.value = integral.value();
  r.clamped_weight = weight_all.value() > 0.0 ? weight_clamped.value() / weight_all.value() : 0.0;
  r.clamped_flag = r.clamped_weight > 1e-6;
  return r;
}

LambdaMatrix lambda_matrix_from_p2(const Eigensystem& es, std::size_t n_states, double c) {
  return lambda_from_p2(p2_matrix(es, n_states), c, es.mass);
}

LambdaMatrix lambda_matrix_direct(const Eigensystem& es, std::size_t n_states, double c) {
  LambdaMatrix lam;
  lam.c = c;
  lam.values = Matrix(n_states, n_states);
  for (std::size_t k = 0; k < n_states; ++k)
    for (std::size_t n = k; n < n_states; ++n) {
      const double v = lambda_direct(es, k, n, c).value;
      lam.values(k, n) = v;
      lam.values(n, k) = v;
    }
  return lam;
}

}  // namespace nlolim
