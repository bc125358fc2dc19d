#include <doctest.h>

#include <cmath>

#include "nlolim/scan.hpp"
#include "nlolim/scan_ops.hpp"
#include "nlolim/three_level.hpp"

using namespace nlolim;

namespace {

int count_flags(const ScanTable& t) {
  int n = 0;
  for (double v : t.column("limit_break"))
    if (v == 1.0) ++n;
  return n;
}

}  // namespace

TEST_CASE("axis values hit the endpoints exactly") {
  const AxisSpec a{2.0 / 3.0, 2.0, 201};
  const auto v = a.values();
  REQUIRE(v.size() == 201);
  CHECK(v.front() == 2.0 / 3.0);
  CHECK(v.back() == 2.0);
}

TEST_CASE("beta scan: identity cell and flag behavior") {
  const AxisSpec ax{2.0 / 3.0, 2.0, 101};
  const ScanTable t0 = scan_beta(0.0, ax, ax, 1);

  // lambda10 = 0: family-self intrinsic is unity wherever defined, no flags
  CHECK(count_flags(t0) == 0);
  int defined = 0;
  for (double v : t0.column("beta_int_self"))
    if (!std::isnan(v)) {
      CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
      ++defined;
    }
  CHECK(defined > 100 * 100);

  // values are nonnegative and grow with lambda00 along the identity row
  const auto& vals = t0.column("beta_prime");
  double prev = -1.0;
  for (std::size_t i = 0; i < t0.axis1.size(); ++i) {
    const double v = vals[t0.index(i, 50)];
    CHECK(v >= 0.0);
    CHECK(v >= prev);
    prev = v;
  }

  const ScanTable t2 = scan_beta(0.2, ax, ax, 1);
  CHECK(count_flags(t2) > 0);
}

TEST_CASE("beta scan columns are mutually consistent") {
  const AxisSpec ax{2.0 / 3.0, 2.0, 21};
  const ScanTable t = scan_beta(0.1, ax, ax, 1);
  const double max_self = three_level::beta_prime_at_peak(LambdaSet{}, 1.0);
  const double limit = three_level::beta_limit(1.0).value;
  for (std::size_t c = 0; c < t.cell_count(); ++c) {
    if (t.column("valid")[c] != 1.0) continue;
    const double v = t.column("beta_prime")[c];
    CHECK(t.column("beta_int_max_self")[c] == doctest::Approx(v / max_self).epsilon(1e-14));
    CHECK(t.column("beta_int_limit")[c] == doctest::Approx(v / limit).epsilon(1e-14));
  }
}

TEST_CASE("gamma-max scan pinned cells") {
  const AxisSpec ax{2.0 / 3.0, 2.0, 201};
  const ScanTable t0 = scan_gamma_max(0.0, ax, ax, 1);
  // cell nearest (1, 1): 2/3 + (4/3)(i/200) = 1 at i = 50
  CHECK(t0.column("gamma_int")[t0.index(50, 50)] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::fabs(t0.column("gamma_int")[t0.index(0, 0)]) < 1e-12);

  const ScanTable t2 = scan_gamma_max(0.2, ax, ax, 1);
  CHECK(t2.column("gamma_int")[t2.index(50, 50)] == doctest::Approx(0.85).epsilon(1e-12));
}

TEST_CASE("gamma-min scan pinned cells") {
  const AxisSpec l00{2.0 / 3.0, 2.0, 201};
  const AxisSpec l10{0.0, 0.5, 201};
  const ScanTable t = scan_gamma_min(l00, l10, 1);
  CHECK(t.column("gamma_int_lower")[t.index(50, 0)] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(t.column("gamma_int_upper")[t.index(50, 0)] == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(std::fabs(t.column("gamma_prime")[t.index(0, 0)]) < 1e-12);
  // large l10 turns the minimum positive: l00 = 1, l10 = 0.5
  CHECK(t.column("gamma_prime")[t.index(50, 200)] > 0.0);
}

TEST_CASE("scan tables round-trip bit-exactly") {
  const AxisSpec ax{2.0 / 3.0, 2.0, 11};
  const ScanTable t = scan_beta(0.2, ax, ax, 1);

  const std::string csv = t.to_csv();
  const ScanTable back = ScanTable::from_csv(csv);
  CHECK(back.to_csv() == csv);

  const std::string json = t.to_json();
  const ScanTable jback = ScanTable::from_json(json);
  CHECK(jback.to_json() == json);
  CHECK(jback.to_csv() == csv);
}

TEST_CASE("worker count does not change the bytes") {
  const AxisSpec ax{2.0 / 3.0, 2.0, 41};
  const std::string a = scan_beta(0.2, ax, ax, 1).to_csv();
  const std::string b = scan_beta(0.2, ax, ax, 3).to_csv();
  const std::string c = scan_beta(0.2, ax, ax, 8).to_csv();
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("parallel_for_cells covers every cell once") {
  std::vector<int> hits(30 * 7, 0);
  parallel_for_cells(30, 7, 4, [&](std::size_t i, std::size_t j) {
    hits[i * 7 + j] += 1;
  });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("format_float round-trips doubles") {
  for (double v : {1.0 / 3.0, 2.0 / 3.0, M_PI, 1e-300, -4.625, 0.1}) {
    CHECK(std::stod(format_float(v)) == v);
  }
}
