#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nlolim {

// Uniform 1D grid with Dirichlet boundaries.
struct GridSpec {
  double x_min = -10.0;
  double x_max = 10.0;
  std::size_t n_points = 2001;

  double dx() const { return (x_max - x_min) / double(n_points - 1); }
  double x(std::size_t i) const { return x_min + double(i) * dx(); }

  void validate() const;
};

// Declarative 1D potential description, atomic units throughout.
struct PotentialSpec {
  enum class Kind { harmonic, box, polynomial, soft_coulomb, tabulated };

  Kind kind = Kind::harmonic;
  double omega = 1.0;                    // harmonic: V = m omega^2 x^2 / 2
  double width = 1.0;                    // box: V = 0 on [0, width], hard walls
  std::vector<double> coefficients;      // polynomial: V = sum_k c_k x^k
  double z = 1.0;                        // soft_coulomb: V = -z / sqrt(x^2 + softening^2)
  double softening = 1.0;
  std::vector<double> tab_x, tab_v;      // tabulated: linear interpolation

  double evaluate(double x, double mass) const;

  // Grid on which this potential should be solved; the box kind overrides the
  // requested grid span with [0, width].
  GridSpec effective_grid(const GridSpec& requested) const;

  bool hard_walled() const { return kind == Kind::box; }

  void validate() const;

  std::string to_json() const;
  static PotentialSpec from_json(const std::string& text);
};

}  // namespace nlolim
