#include "nlolim/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace nlolim {

void GridSpec::validate() const {
  if (!(x_min < x_max)) throw std::invalid_argument("GridSpec: x_min must be < x_max");
  if (n_points < 50) throw std::invalid_argument("GridSpec: need at least 50 points");
}

void PotentialSpec::validate() const {
  switch (kind) {
    case Kind::harmonic:
      if (!(omega > 0.0)) throw std::invalid_argument("harmonic: omega must be positive");
      break;
    case Kind::box:
      if (!(width > 0.0)) throw std::invalid_argument("box: width must be positive");
      break;
    case Kind::polynomial:
      if (coefficients.empty())
        throw std::invalid_argument("polynomial: coefficients required");
      break;
    case Kind::soft_coulomb:
      if (!(softening > 0.0))
        throw std::invalid_argument("soft_coulomb: softening must be positive");
      break;
    case Kind::tabulated:
      if (tab_x.size() != tab_v.size() || tab_x.size() < 2)
        throw std::invalid_argument("tabulated: need matching x/v arrays (>= 2 points)");
      if (!std::is_sorted(tab_x.begin(), tab_x.end()))
        throw std::invalid_argument("tabulated: x values must be sorted");
      break;
  }
}

double PotentialSpec::evaluate(double x, double mass) const {
  switch (kind) {
    case Kind::harmonic:
      return 0.5 * mass * omega * omega * x * x;
    case Kind::box:
      return 0.0;  // walls are the grid boundaries
    case Kind::polynomial: {
      // Horner
      double v = 0.0;
      for (std::size_t i = coefficients.size(); i-- > 0;) v = v * x + coefficients[i];
      return v;
    }
    case Kind::soft_coulomb:
      return -z / std::sqrt(x * x + softening * softening);
    case Kind::tabulated: {
      if (x <= tab_x.front()) return tab_v.front();
      if (x >= tab_x.back()) return tab_v.back();
      const auto it = std::upper_bound(tab_x.begin(), tab_x.end(), x);
      const std::size_t hi = std::size_t(it - tab_x.begin());
      const double t = (x - tab_x[hi - 1]) / (tab_x[hi] - tab_x[hi - 1]);
      return tab_v[hi - 1] + t * (tab_v[hi] - tab_v[hi - 1]);
    }
  }
  return 0.0;
}

GridSpec PotentialSpec::effective_grid(const GridSpec& requested) const {
  if (kind != Kind::box) return requested;
  GridSpec g = requested;
  g.x_min = 0.0;
  g.x_max = width;
  return g;
}

std::string PotentialSpec::to_json() const {
  nlohmann::ordered_json j;
  switch (kind) {
    case Kind::harmonic:
      j["kind"] = "harmonic";
      j["omega"] = omega;
      break;
    case Kind::box:
      j["kind"] = "box";
      j["width"] = width;
      break;
    case Kind::polynomial:
      j["kind"] = "polynomial";
      j["coefficients"] = coefficients;
      break;
    case Kind::soft_coulomb:
      j["kind"] = "soft_coulomb";
      j["z"] = z;
      j["softening"] = softening;
      break;
    case Kind::tabulated:
      j["kind"] = "tabulated";
      j["x"] = tab_x;
      j["v"] = tab_v;
      break;
  }
  return j.dump(2) + "\n";
}

PotentialSpec PotentialSpec::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PotentialSpec p;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "harmonic") {
    p.kind = Kind::harmonic;
    p.omega = j.at("omega").get<double>();
  } else if (kind == "box") {
    p.kind = Kind::box;
    p.width = j.at("width").get<double>();
  } else if (kind == "polynomial") {
    p.kind = Kind::polynomial;
    p.coefficients = j.at("coefficients").get<std::vector<double>>();
  } else if (kind == "soft_coulomb") {
    p.kind = Kind::soft_coulomb;
    p.z = j.at("z").get<double>();
    p.softening = j.at("softening").get<double>();
  } else if (kind == "tabulated") {
    p.kind = Kind::tabulated;
    p.tab_x = j.at("x").get<std::vector<double>>();
    p.tab_v = j.at("v").get<std::vector<double>>();
  } else {
    throw std::invalid_argument("PotentialSpec: unknown kind '" + kind + "'");
  }
  p.validate();
  return p;
}

}  // namespace nlolim
