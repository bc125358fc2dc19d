#include "nlolim/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <lapacke.h>

#include "nlolim/errors.hpp"
#include "nlolim/kahan.hpp"

namespace nlolim {

namespace {

constexpr double kTailThreshold = 1e-8;

std::vector<double> sample_potential(const PotentialSpec& pot, const GridSpec& grid,
                                     double mass) {
  std::vector<double> v(grid.n_points);
  for (std::size_t i = 0; i < grid.n_points; ++i) v[i] = pot.evaluate(grid.x(i), mass);
  return v;
}

// Lowest n_states eigenpairs of the symmetric tridiagonal (diag, offdiag).
void tridiag_lowest(std::vector<double> diag, std::vector<double> offdiag,
                    std::size_t n_states, std::vector<double>& w,
                    std::vector<double>& z_colmajor) {
  const lapack_int n = lapack_int(diag.size());
  const lapack_int iu = lapack_int(n_states);
  w.assign(std::size_t(n), 0.0);
  z_colmajor.assign(std::size_t(n) * n_states, 0.0);
  std::vector<lapack_int> isuppz(2 * n_states);
  lapack_int m = 0;
  const lapack_int info = LAPACKE_dstevr(
      LAPACK_COL_MAJOR, 'V', 'I', n, diag.data(), offdiag.data(), 0.0, 0.0, 1, iu,
      0.0, &m, w.data(), z_colmajor.data(), n, isuppz.data());
  if (info != 0) throw solver_error("eigensolver: dstevr failed, info=" + std::to_string(info));
  if (std::size_t(m) != n_states)
    throw solver_error("eigensolver: dstevr returned fewer states than requested");
  w.resize(n_states);
}

// Lowest n_states eigenpairs of a symmetric banded matrix, lower storage,
// bandwidth kd, column-major band ab(kd+1, n).
void banded_lowest(std::vector<double>& ab, lapack_int n, lapack_int kd,
                   std::size_t n_states, std::vector<double>& w,
                   std::vector<double>& z_colmajor) {
  const lapack_int iu = lapack_int(n_states);
  w.assign(std::size_t(n), 0.0);
  z_colmajor.assign(std::size_t(n) * n_states, 0.0);
  std::vector<double> q(std::size_t(n) * std::size_t(n));
  std::vector<lapack_int> ifail(n_states);
  lapack_int m = 0;
  const lapack_int info = LAPACKE_dsbevx(
      LAPACK_COL_MAJOR, 'V', 'I', 'L', n, kd, ab.data(), kd + 1, q.data(), n, 0.0, 0.0,
      1, iu, 2.0 * LAPACKE_dlamch('S'), &m, w.data(), z_colmajor.data(), n, ifail.data());
  if (info != 0) throw solver_error("eigensolver: dsbevx failed, info=" + std::to_string(info));
  if (std::size_t(m) != n_states)
    throw solver_error("eigensolver: dsbevx returned fewer states than requested");
  w.resize(n_states);
}

// Unpack column-major interior eigenvectors into full-grid wavefunctions with
// Dirichlet zeros, trapezoid-normalized, with a deterministic phase: the
// ground state integrates positive and each x_{n,n+1} moment is positive
// (falling back to a positive leading component when that moment vanishes).
std::vector<std::vector<double>> unpack_wavefunctions(const std::vector<double>& z,
                                                      std::size_t n_int,
                                                      std::size_t n_points,
                                                      std::size_t n_states,
                                                      const GridSpec& grid) {
  const double dx = grid.dx();
  std::vector<std::vector<double>> psi(n_states, std::vector<double>(n_points, 0.0));
  const double scale = 1.0 / std::sqrt(dx);
  for (std::size_t s = 0; s < n_states; ++s)
    for (std::size_t i = 0; i < n_int; ++i)
      psi[s][i + 1] = scale * z[s * n_int + i];

  const auto flip = [&](std::vector<double>& w) {
    for (double& v : w) v = -v;
  };
  {
    double mass = 0.0;
    for (std::size_t i = 1; i + 1 < n_points; ++i) mass += psi[0][i] * dx;
    if (mass < 0.0) flip(psi[0]);
  }
  for (std::size_t s = 1; s < n_states; ++s) {
    double moment = 0.0, peak = 0.0;
    for (std::size_t i = 1; i + 1 < n_points; ++i) {
      moment += psi[s - 1][i] * grid.x(i) * psi[s][i] * dx;
      peak = std::max(peak, std::fabs(psi[s][i]));
    }
    if (std::fabs(moment) > 1e-12 * peak) {
      if (moment < 0.0) flip(psi[s]);
      continue;
    }
    for (std::size_t i = 1; i + 1 < n_points; ++i) {
      if (std::fabs(psi[s][i]) > 1e-8 * peak) {
        if (psi[s][i] < 0.0) flip(psi[s]);
        break;
      }
    }
  }
  return psi;
}

void fill_diagnostics(Eigensystem& es) {
  const std::size_t n = es.grid.n_points;
  double tail = 0.0;
  for (const auto& psi : es.wavefunctions) {
    double t = 0.0;
    for (std::size_t i : {std::size_t(1), std::size_t(2), n - 3, n - 2})
      t += psi[i] * psi[i] * es.grid.dx();
    tail = std::max(tail, t);
  }
  es.boundary_tail = tail;
  es.confined = tail < kTailThreshold;
}

}  // namespace

std::vector<double> second_derivative(const std::vector<double>& v, double dx) {
  const std::size_t n = v.size();
  std::vector<double> d2(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i)
    d2[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (dx * dx);
  if (n >= 3) {
    d2[0] = d2[1];
    d2[n - 1] = d2[n - 2];
  }
  return d2;
}

Eigensystem solve_nonrel(const PotentialSpec& pot, const GridSpec& grid,
                         std::size_t n_states, double mass) {
  pot.validate();
  const GridSpec g = pot.effective_grid(grid);
  g.validate();
  const std::size_t n_int = g.n_points - 2;
  if (n_states == 0 || n_states > n_int)
    throw solver_error("solve_nonrel: requested states exceed grid modes");

  const double dx = g.dx();
  const double k = kHbar * kHbar / (mass * dx * dx);
  const std::vector<double> v = sample_potential(pot, g, mass);

  std::vector<double> diag(n_int), off(n_int > 1 ? n_int - 1 : 0, -0.5 * k);
  for (std::size_t i = 0; i < n_int; ++i) diag[i] = k + v[i + 1];

  std::vector<double> w, z;
  tridiag_lowest(std::move(diag), std::move(off), n_states, w, z);

  Eigensystem es;
  es.eigenvalues = std::move(w);
  es.wavefunctions = unpack_wavefunctions(z, n_int, g.n_points, n_states, g);
  es.potential = v;
  es.grid = g;
  es.mode = SolveMode::nonrelativistic;
  es.mass = mass;
  if (!pot.hard_walled()) fill_diagnostics(es);
  return es;
}

RelativisticShift perturbative_shift(const Eigensystem& es, std::size_t n, double c) {
  if (n >= es.num_states()) throw std::out_of_range("perturbative_shift: state index");
  const double dx = es.grid.dx();
  const double m = es.mass;
  const auto& psi = es.wavefunctions[n];
  const std::size_t np = psi.size();

  // p^2 psi by central differences (Dirichlet outside the grid).
  std::vector<double> p2psi(np, 0.0);
  for (std::size_t i = 1; i + 1 < np; ++i)
    p2psi[i] = -kHbar * kHbar * (psi[i + 1] - 2.0 * psi[i] + psi[i - 1]) / (dx * dx);

  KahanSum p4, darwin;
  const std::vector<double> vpp = second_derivative(es.potential, dx);
  for (std::size_t i = 1; i + 1 < np; ++i) {
    p4 += p2psi[i] * p2psi[i] * dx;          // <p^4> = ||p^2 psi||^2
    darwin += psi[i] * psi[i] * vpp[i] * dx;
  }
  RelativisticShift shift;
  shift.p4_term = -p4.value() / (8.0 * m * m * m * c * c);
  shift.darwin_term = kHbar * kHbar * darwin.value() / (8.0 * m * m * c * c);
  return shift;
}

Eigensystem solve_rel(const PotentialSpec& pot, const GridSpec& grid,
                      std::size_t n_states, double mass, double c, SolveMode mode) {
  if (!(c > 0.0)) throw std::invalid_argument("solve_rel: c must be positive");
  if (mode == SolveMode::nonrelativistic) return solve_nonrel(pot, grid, n_states, mass);

  if (mode == SolveMode::relativistic_perturbative) {
    Eigensystem es = solve_nonrel(pot, grid, n_states, mass);
    es.mode = SolveMode::relativistic_perturbative;
    es.c = c;
    for (std::size_t n = 0; n < es.num_states(); ++n)
      es.eigenvalues[n] += perturbative_shift(es, n, c).total();
    // first-order shifts can reorder at tiny c; eigenvalues must stay sorted
    if (!std::is_sorted(es.eigenvalues.begin(), es.eigenvalues.end()))
      throw solver_error("solve_rel: perturbative shifts reordered the spectrum");
    const double vmin = *std::min_element(es.potential.begin(), es.potential.end());
    for (double e : es.eigenvalues)
      if (e < vmin - 1e-6) es.collapse_flag = true;
    return es;
  }

  // Direct mode: banded quartic Hamiltonian, bandwidth 2.
  pot.validate();
  const GridSpec g = pot.effective_grid(grid);
  g.validate();
  const std::size_t n_int = g.n_points - 2;
  if (n_states == 0 || n_states > n_int)
    throw solver_error("solve_rel: requested states exceed grid modes");

  const double dx = g.dx();
  const double m = mass;
  const std::vector<double> v = sample_potential(pot, g, m);
  const std::vector<double> vpp = second_derivative(v, dx);

  // p^2 band: diag 2u, off -u; p^4 = (p^2)^2 is pentadiagonal.
  const double u = kHbar * kHbar / (dx * dx);
  const double p4c = 1.0 / (8.0 * m * m * m * c * c);
  const double dmc = kHbar * kHbar / (8.0 * m * m * c * c);

  const lapack_int n = lapack_int(n_int);
  std::vector<double> ab(3 * n_int, 0.0);  // lower band, ldab = 3, col-major
  for (std::size_t j = 0; j < n_int; ++j) {
    const bool edge = (j == 0 || j + 1 == n_int);
    const double p4_diag = (edge ? 5.0 : 6.0) * u * u;
    ab[3 * j + 0] = (2.0 * u) / (2.0 * m) - p4c * p4_diag + v[j + 1] + dmc * vpp[j + 1];
    if (j + 1 < n_int) ab[3 * j + 1] = (-u) / (2.0 * m) - p4c * (-4.0 * u * u);
    if (j + 2 < n_int) ab[3 * j + 2] = -p4c * (u * u);
  }

  std::vector<double> w, z;
  banded_lowest(ab, n, 2, n_states, w, z);

  Eigensystem es;
  es.eigenvalues = std::move(w);
  es.wavefunctions = unpack_wavefunctions(z, n_int, g.n_points, n_states, g);
  es.potential = v;
  es.grid = g;
  es.mode = SolveMode::relativistic_direct;
  es.mass = m;
  es.c = c;
  const double vmin = *std::min_element(v.begin(), v.end());
  for (double e : es.eigenvalues)
    if (e < vmin - 1e-6) es.collapse_flag = true;
  if (!pot.hard_walled()) fill_diagnostics(es);
  return es;
}

Spectrum spectrum_from_eigensystem(const Eigensystem& es, std::size_t n_states) {
  if (n_states > es.num_states() || n_states < 2)
    throw std::invalid_argument("spectrum_from_eigensystem: bad state count");
  const double dx = es.grid.dx();
  const std::size_t np = es.grid.n_points;

  Spectrum s;
  s.mass = es.mass;
  s.charge = 1.0;
  s.energies.resize(n_states);
  for (std::size_t n = 0; n < n_states; ++n)
    s.energies[n] = es.eigenvalues[n] - es.eigenvalues[0];

  Matrix x(n_states, n_states);
  for (std::size_t a = 0; a < n_states; ++a)
    for (std::size_t b = a; b < n_states; ++b) {
      KahanSum sum;
      for (std::size_t i = 1; i + 1 < np; ++i)
        sum += es.wavefunctions[a][i] * es.grid.x(i) * es.wavefunctions[b][i] * dx;
      x(a, b) = sum.value();
      x(b, a) = sum.value();
    }
  s.moments = std::move(x);
  s.validate();
  return s;
}

Matrix p2_matrix(const Eigensystem& es, std::size_t n_states) {
  if (n_states > es.num_states())
    throw std::invalid_argument("p2_matrix: bad state count");
  const double dx = es.grid.dx();
  const std::size_t np = es.grid.n_points;

  std::vector<std::vector<double>> p2psi(n_states, std::vector<double>(np, 0.0));
  for (std::size_t a = 0; a < n_states; ++a)
    for (std::size_t i = 1; i + 1 < np; ++i)
      p2psi[a][i] = -kHbar * kHbar *
                    (es.wavefunctions[a][i + 1] - 2.0 * es.wavefunctions[a][i] +
                     es.wavefunctions[a][i - 1]) /
                    (dx * dx);

  Matrix p2(n_states, n_states);
  for (std::size_t a = 0; a < n_states; ++a)
    for (std::size_t b = 0; b < n_states; ++b) {
      KahanSum sum;
      for (std::size_t i = 1; i + 1 < np; ++i)
        sum += es.wavefunctions[a][i] * p2psi[b][i] * dx;
      p2(a, b) = sum.value();
    }
  return p2.symmetrized();
}

}  // namespace nlolim
