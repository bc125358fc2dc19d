#pragma once

#include <cstddef>

#include "nlolim/spectrum.hpp"

namespace nlolim {

// Off-resonant sum-over-states responses of a truncated spectrum. The primed
// sums exclude the ground state; diagonal moments enter only through the
// origin-shifted combination x_ii - x_00. All pure functions, safe to call
// concurrently.

// x_ij for i != j, x_ii - x_00 for i == j.
double barred_moment(const Spectrum& s, std::size_t i, std::size_t j);

// alpha = 2 e^2 sum'_n x_0n x_n0 / E_n0. Nonnegative; zero iff all x_0n = 0.
double alpha_sos(const Spectrum& s);

// beta = 3 e^3 sum'_{n,l} x_0n xbar_nl x_l0 / (E_n0 E_l0).
double beta_sos(const Spectrum& s);

// gamma = 4 e^4 [ sum'_{n,l,k} x_0n xbar_nl xbar_lk x_k0 / (E_n0 E_l0 E_k0)
//               - sum'_{n,l} x_0n x_n0 x_0l x_l0 / (E_n0^2 E_l0) ].
double gamma_sos(const Spectrum& s);

}  // namespace nlolim
