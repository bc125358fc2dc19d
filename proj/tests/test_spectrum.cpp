#include <doctest.h>

#include "nlolim/sos.hpp"
#include "nlolim/spectrum.hpp"
#include "nlolim/sum_rules.hpp"
#include "test_util.hpp"

using namespace nlolim;

TEST_CASE("barred_moment definition") {
  Spectrum s = testutil::two_level(1.0, 0.3, 2.0, 0.5);
  CHECK(barred_moment(s, 0, 0) == 0.0);
  CHECK(barred_moment(s, 1, 1) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(barred_moment(s, 0, 1) == 0.3);

  std::mt19937_64 rng(7);
  Spectrum t = testutil::random_spectrum(rng, 4);
  t.moments(1, 2) = t.moments(2, 1) = 0.3;
  CHECK(barred_moment(t, 1, 2) == 0.3);
  CHECK_THROWS_AS(barred_moment(t, 4, 0), std::out_of_range);
}

TEST_CASE("Spectrum invariants enforced") {
  Spectrum s = testutil::two_level(1.0, 1.0);
  CHECK_NOTHROW(s.validate());

  Spectrum bad = s;
  bad.energies = {0.0, -1.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = s;
  bad.energies = {0.5, 1.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = s;
  bad.energies = {0.0, 1.0, 1.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = s;
  bad.moments(0, 1) = 0.9;  // break symmetry
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = s;
  bad.energies = {0.0};
  bad.moments = Matrix(1, 1);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("Spectrum JSON round-trip is exact") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 20; ++iter) {
    const Spectrum s = testutil::random_spectrum(rng, 2 + iter % 5);
    const Spectrum back = Spectrum::from_json(s.to_json());
    CHECK(back.energies == s.energies);
    CHECK(back.moments == s.moments);
    CHECK(back.charge == s.charge);
    CHECK(back.mass == s.mass);
  }
}

TEST_CASE("Spectrum JSON carries the lambda block") {
  const Spectrum s = testutil::two_level(1.0, 1.0);
  LambdaMatrix lam = LambdaMatrix::identity(2, 137.035999084);
  lam.values(0, 0) = 1.0 - 1.25e-5;
  std::optional<LambdaMatrix> lam_back;
  const Spectrum back = Spectrum::from_json(s.to_json(&lam), &lam_back);
  REQUIRE(lam_back.has_value());
  CHECK(lam_back->c == lam.c);
  CHECK(lam_back->values == lam.values);
  CHECK(back.energies == s.energies);

  std::optional<LambdaMatrix> none;
  Spectrum::from_json(s.to_json(), &none);
  CHECK(!none.has_value());
}

TEST_CASE("Spectrum JSON rejects unknown schemas") {
  CHECK_THROWS_AS(Spectrum::from_json("{\"schema\": \"other/9\", \"energies\": [0, 1]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(Spectrum::from_json("{\"energies\": [0, 1]}"), std::invalid_argument);
}
