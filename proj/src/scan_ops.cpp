#include "nlolim/scan_ops.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "nlolim/three_level.hpp"
#include "nlolim/version.hpp"

namespace nlolim {

using three_level::LimitFamily;

std::vector<double> AxisSpec::values() const {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
  return v;
}

namespace {

void add_axis_metadata(ScanTable& t, const char* name, const AxisSpec& a) {
  t.metadata.emplace_back(std::string(name) + "_lo", format_float(a.lo));
  t.metadata.emplace_back(std::string(name) + "_hi", format_float(a.hi));
  t.metadata.emplace_back(std::string(name) + "_n", std::to_string(a.n));
}

void add_common_metadata(ScanTable& t, const std::string& command) {
  t.metadata.emplace_back("command", command);
  t.metadata.emplace_back("version", kVersion);
  t.metadata.emplace_back("e10", format_float(1.0));
  t.metadata.emplace_back("mass", format_float(1.0));
}

}  // namespace

ScanTable scan_beta(double l10, const AxisSpec& l00_axis, const AxisSpec& l11_axis,
                    unsigned threads) {
  ScanTable t;
  t.axis1_name = "l00";
  t.axis1 = l00_axis.values();
  t.axis2_name = "l11";
  t.axis2 = l11_axis.values();
  add_common_metadata(t, "three-level scan-beta");
  t.metadata.emplace_back("l10", format_float(l10));
  add_axis_metadata(t, "l00", l00_axis);
  add_axis_metadata(t, "l11", l11_axis);
  t.metadata.emplace_back("normalization", "family-self");
  t.add_column("beta_prime");
  t.add_column("beta_int_self");
  t.add_column("beta_int_max_self");
  t.add_column("beta_int_limit");
  t.add_column("beta_peak_sub");
  t.add_column("valid");
  t.add_column("limit_break");

  const double peak_x = std::pow(3.0, -0.25);
  const double max_self = three_level::beta_prime_at_peak(LambdaSet{}, 1.0);
  const double limit = three_level::beta_limit(1.0).value;

  parallel_for_cells(t.axis1.size(), t.axis2.size(), threads,
                     [&](std::size_t i, std::size_t j) {
    const std::size_t c = t.index(i, j);
    LambdaSet lam;
    lam.l00 = t.axis1[i];
    lam.l11 = t.axis2[j];
    lam.l10 = l10;
    try {
      const double v = three_level::beta_prime_at_peak(lam, 1.0);
      t.column("beta_prime")[c] = v;
      LambdaSet ref = lam;
      ref.l10 = 0.0;
      const double self_ref = three_level::beta_prime_at_peak(ref, 1.0);
      const double self = self_ref != 0.0 ? v / self_ref : std::nan("");
      t.column("beta_int_self")[c] = self;
      t.column("beta_int_max_self")[c] = v / max_self;
      t.column("beta_int_limit")[c] = v / limit;
      t.column("beta_peak_sub")[c] =
          three_level::beta3l_rel({peak_x, 0.0, 1.0}, lam);
      t.column("valid")[c] = 1.0;
      t.column("limit_break")[c] = (!std::isnan(self) && self <= -1.0) ? 1.0 : 0.0;
    } catch (const std::domain_error&) {
      t.column("valid")[c] = 0.0;
    }
  });
  return t;
}

ScanTable scan_gamma_max(double l10, const AxisSpec& l00_axis, const AxisSpec& l11_axis,
                         unsigned threads) {
  ScanTable t;
  t.axis1_name = "l00";
  t.axis1 = l00_axis.values();
  t.axis2_name = "l11";
  t.axis2 = l11_axis.values();
  add_common_metadata(t, "three-level scan-gamma-max");
  t.metadata.emplace_back("l10", format_float(l10));
  add_axis_metadata(t, "l00", l00_axis);
  add_axis_metadata(t, "l11", l11_axis);
  t.add_column("gamma_prime");
  t.add_column("gamma_int");
  t.add_column("valid");

  const double upper = three_level::gamma_upper_limit(1.0).value;
  parallel_for_cells(t.axis1.size(), t.axis2.size(), threads,
                     [&](std::size_t i, std::size_t j) {
    const std::size_t c = t.index(i, j);
    LambdaSet lam;
    lam.l00 = t.axis1[i];
    lam.l11 = t.axis2[j];
    lam.l10 = l10;
    try {
      const double v = three_level::gamma_prime_00(lam, 1.0);
      t.column("gamma_prime")[c] = v;
      t.column("gamma_int")[c] = v / upper;
      t.column("valid")[c] = 1.0;
    } catch (const std::domain_error&) {
      t.column("valid")[c] = 0.0;
    }
  });
  return t;
}

ScanTable scan_gamma_min(const AxisSpec& l00_axis, const AxisSpec& l10_axis,
                         unsigned threads) {
  ScanTable t;
  t.axis1_name = "l00";
  t.axis1 = l00_axis.values();
  t.axis2_name = "l10";
  t.axis2 = l10_axis.values();
  add_common_metadata(t, "three-level scan-gamma-min");
  add_axis_metadata(t, "l00", l00_axis);
  add_axis_metadata(t, "l10", l10_axis);
  t.add_column("gamma_prime");
  t.add_column("gamma_int_lower");
  t.add_column("gamma_int_upper");
  t.add_column("valid");

  const double lower = std::fabs(three_level::gamma_lower_limit(1.0).value);
  const double upper = three_level::gamma_upper_limit(1.0).value;
  parallel_for_cells(t.axis1.size(), t.axis2.size(), threads,
                     [&](std::size_t i, std::size_t j) {
    const std::size_t c = t.index(i, j);
    LambdaSet lam;
    lam.l00 = t.axis1[i];
    lam.l10 = t.axis2[j];
    const double v = three_level::gamma_prime_10(lam, 1.0);
    t.column("gamma_prime")[c] = v;
    t.column("gamma_int_lower")[c] = v / lower;
    t.column("gamma_int_upper")[c] = v / upper;
    t.column("valid")[c] = 1.0;
  });
  return t;
}

std::string hydrogenic_csv(const std::vector<hydrogenic::GammaRatioRow>& rows,
                           double alpha_fs) {
  std::ostringstream os;
  os << "# schema: " << kSchema << "\n";
  os << "# meta command: hydrogenic\n";
  os << "# meta version: " << kVersion << "\n";
  os << "# meta z_max: " << (rows.empty() ? 0 : rows.back().z) << "\n";
  os << "# meta alpha_fs: " << format_float(alpha_fs) << "\n";
  os << "# meta x_fraction_source: hydrogen 1s-2p/1s-3p oscillator strength ratio\n";
  int warn_from = 0;
  for (const auto& r : rows)
    if (r.validity_warning) {
      warn_from = r.z;
      break;
    }
  os << "# meta validity_warning_from_z: " << warn_from << "\n";
  os << "z,gamma_raw_ratio,gamma_isolated_ratio,gamma_isolated_ratio_alt_lambda,"
        "e10,e_ratio,x_fraction,lambda00,lambda11\n";
  for (const auto& r : rows) {
    os << r.z << "," << format_float(r.gamma_raw_ratio) << ","
       << format_float(r.gamma_isolated_ratio) << ","
       << format_float(r.gamma_isolated_ratio_alt) << "," << format_float(r.e10) << ","
       << format_float(r.e_ratio) << "," << format_float(r.x_fraction) << ","
       << format_float(r.lambda00) << "," << format_float(r.lambda11) << "\n";
  }
  return os.str();
}

std::string hydrogenic_json(const std::vector<hydrogenic::GammaRatioRow>& rows,
                            double alpha_fs) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["metadata"] = {{"command", "hydrogenic"},
                   {"version", kVersion},
                   {"z_max", rows.empty() ? 0 : rows.back().z},
                   {"alpha_fs", alpha_fs},
                   {"x_fraction_source", "hydrogen 1s-2p/1s-3p oscillator strength ratio"}};
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"z", r.z},
                   {"gamma_raw_ratio", r.gamma_raw_ratio},
                   {"gamma_isolated_ratio", r.gamma_isolated_ratio},
                   {"gamma_isolated_ratio_alt_lambda", r.gamma_isolated_ratio_alt},
                   {"e10", r.e10},
                   {"e_ratio", r.e_ratio},
                   {"x_fraction", r.x_fraction},
                   {"lambda00", r.lambda00},
                   {"lambda11", r.lambda11},
                   {"validity_warning", r.validity_warning}});
  }
  j["rows"] = arr;
  return j.dump(2) + "\n";
}

}  // namespace nlolim
