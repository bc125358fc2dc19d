#pragma once

#include <cstddef>
#include <vector>

#include "nlolim/grid.hpp"
#include "nlolim/matrix.hpp"
#include "nlolim/spectrum.hpp"
#include "nlolim/version.hpp"

namespace nlolim {

enum class SolveMode { nonrelativistic, relativistic_direct, relativistic_perturbative };

// Bound states of a 1D Hamiltonian on a uniform Dirichlet grid. Wavefunctions
// are sampled on the grid and orthonormal under trapezoidal quadrature.
// Immutable after return from a solver.
struct Eigensystem {
  std::vector<double> eigenvalues;      // absolute energies, nondecreasing
  std::vector<std::vector<double>> wavefunctions;
  std::vector<double> potential;        // V on the grid (without Darwin shift)
  GridSpec grid;
  SolveMode mode = SolveMode::nonrelativistic;
  double mass = 1.0;
  double c = kSpeedOfLight;

  // Diagnostics.
  double boundary_tail = 0.0;   // max over states of the outer-edge probability
  bool confined = true;         // boundary_tail < 1e-8 (hard-walled boxes: true)
  bool collapse_flag = false;   // direct mode: some E_n below min V by > 1e-6

  std::size_t num_states() const { return eigenvalues.size(); }
};

// Lowest n_states of H0 = p^2/2m + V with a three-point Laplacian.
Eigensystem solve_nonrel(const PotentialSpec& pot, const GridSpec& grid,
                         std::size_t n_states, double mass = 1.0);

// Lowest n_states of H = p^2/2m - p^4/8m^3c^2 + V + hbar^2 V''/8m^2c^2.
// direct: diagonalizes the banded quartic Hamiltonian (p^4 = square of the
// discrete p^2). perturbative: non-relativistic wavefunctions with first-order
// energy shifts <n| -p^4/8m^3c^2 + hbar^2 V''/8m^2c^2 |n>.
Eigensystem solve_rel(const PotentialSpec& pot, const GridSpec& grid,
                      std::size_t n_states, double mass, double c,
                      SolveMode mode = SolveMode::relativistic_perturbative);

// Spectrum (E_n0 differences plus the full moment matrix, diagonals included)
// from the lowest n_states of an eigensystem; trapezoidal quadrature.
Spectrum spectrum_from_eigensystem(const Eigensystem& es, std::size_t n_states);

// p2_kn = -hbar^2 int psi_k psi_n'' dx via central differences, symmetrized.
Matrix p2_matrix(const Eigensystem& es, std::size_t n_states);

// First-order shift <n| -p^4/8m^3c^2 + hbar^2 V''/8m^2c^2 |n> and its pieces.
struct RelativisticShift {
  double p4_term = 0.0;      // -<p^4>/8m^3c^2
  double darwin_term = 0.0;  // hbar^2 <V''>/8m^2c^2
  double total() const { return p4_term + darwin_term; }
};
RelativisticShift perturbative_shift(const Eigensystem& es, std::size_t n, double c);

// V'' on the grid by central second differences (endpoints copy neighbors).
std::vector<double> second_derivative(const std::vector<double>& v, double dx);

}  // namespace nlolim
