#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nlolim/matrix.hpp"

namespace nlolim {

struct LambdaMatrix;  // sum_rules.hpp

// Truncated quantum system: excitation energies E_n0 above the ground state
// (energies[0] == 0) and the symmetric position-moment matrix x_ij, all in
// atomic units. Immutable after construction; validate() enforces the
// invariants.
struct Spectrum {
  std::vector<double> energies;  // E_n0, strictly increasing, energies[0] = 0
  Matrix moments;                // (N+1)x(N+1) symmetric, x_ij = <i|x|j>
  double charge = 1.0;           // |e|
  double mass = 1.0;             // m

  std::size_t num_states() const { return energies.size(); }

  void validate() const;

  std::string to_json(const LambdaMatrix* lambda = nullptr) const;
  static Spectrum from_json(const std::string& text,
                            std::optional<LambdaMatrix>* lambda_out = nullptr);
};

}  // namespace nlolim
