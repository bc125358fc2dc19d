#include <doctest.h>

#include <cmath>

#include "nlolim/sos.hpp"
#include "test_util.hpp"

using namespace nlolim;

TEST_CASE("two-level closed values") {
  // single-term sums: alpha = 2, beta = 3, gamma = -4
  const Spectrum a = testutil::two_level(1.0, 1.0);
  CHECK(alpha_sos(a) == doctest::Approx(2.0).epsilon(1e-15));

  const Spectrum b = testutil::two_level(1.0, 1.0, 1.0);
  CHECK(beta_sos(b) == doctest::Approx(3.0).epsilon(1e-15));

  const Spectrum g = testutil::two_level(1.0, 1.0, 0.0);
  CHECK(gamma_sos(g) == doctest::Approx(-4.0).epsilon(1e-15));
}

TEST_CASE("empty response when the ground state decouples") {
  Spectrum s = testutil::two_level(1.0, 0.0, 0.7);
  CHECK(alpha_sos(s) == 0.0);
  CHECK(beta_sos(s) == 0.0);
  CHECK(gamma_sos(s) == 0.0);
}

TEST_CASE("parity kills beta for the harmonic ladder") {
  const Spectrum s = testutil::analytic_ho(8);
  CHECK(beta_sos(s) == 0.0);
}

TEST_CASE("harmonic ladder: exact alpha, vanishing gamma") {
  const Spectrum s = testutil::analytic_ho(30);
  CHECK(alpha_sos(s) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::fabs(gamma_sos(s)) < 1e-13);
}

TEST_CASE("translation invariance of the diagonal moments") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 10; ++iter) {
    Spectrum s = testutil::random_spectrum(rng, 5);
    const double a0 = alpha_sos(s), b0 = beta_sos(s), g0 = gamma_sos(s);
    const double d = 3.7;
    for (std::size_t i = 0; i < s.num_states(); ++i) s.moments(i, i) += d;
    CHECK(alpha_sos(s) == doctest::Approx(a0).epsilon(1e-12));
    CHECK(beta_sos(s) == doctest::Approx(b0).epsilon(1e-12));
    CHECK(gamma_sos(s) == doctest::Approx(g0).epsilon(1e-12));
  }
}

TEST_CASE("moment and energy scaling laws") {
  std::mt19937_64 rng(13);
  Spectrum s = testutil::random_spectrum(rng, 4);
  const double a0 = alpha_sos(s), b0 = beta_sos(s), g0 = gamma_sos(s);

  // power-of-two moment scale: bit-exact power laws
  Spectrum ms = s;
  for (std::size_t i = 0; i < s.num_states(); ++i)
    for (std::size_t j = 0; j < s.num_states(); ++j) ms.moments(i, j) *= 2.0;
  CHECK(alpha_sos(ms) == 4.0 * a0);
  CHECK(beta_sos(ms) == 8.0 * b0);
  CHECK(gamma_sos(ms) == 16.0 * g0);

  Spectrum es = s;
  for (std::size_t i = 1; i < s.num_states(); ++i) es.energies[i] *= 2.0;
  CHECK(alpha_sos(es) == doctest::Approx(a0 / 2.0).epsilon(1e-14));
  CHECK(beta_sos(es) == doctest::Approx(b0 / 4.0).epsilon(1e-14));
  CHECK(gamma_sos(es) == doctest::Approx(g0 / 8.0).epsilon(1e-14));
}

TEST_CASE("alpha is nonnegative and grows under truncation") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 10; ++iter) {
    const Spectrum full = testutil::random_spectrum(rng, 6);
    double prev = 0.0;
    for (std::size_t n = 2; n <= 6; ++n) {
      Spectrum trunc;
      trunc.energies.assign(full.energies.begin(), full.energies.begin() + n);
      trunc.moments = Matrix(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) trunc.moments(i, j) = full.moments(i, j);
      trunc.validate();
      const double a = alpha_sos(trunc);
      CHECK(a >= 0.0);
      CHECK(a >= prev - 1e-15);
      prev = a;
    }
  }
}

TEST_CASE("charge enters with the right powers") {
  const Spectrum s1 = testutil::two_level(1.0, 1.0, 1.0, 0.0, 1.0);
  const Spectrum s2 = testutil::two_level(1.0, 1.0, 1.0, 0.0, 2.0);
  CHECK(alpha_sos(s2) == 4.0 * alpha_sos(s1));
  CHECK(beta_sos(s2) == 8.0 * beta_sos(s1));
  CHECK(gamma_sos(s2) == 16.0 * gamma_sos(s1));
}
