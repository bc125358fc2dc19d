#include "nlolim/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "nlolim/sum_rules.hpp"
#include "nlolim/version.hpp"

namespace nlolim {

void Spectrum::validate() const {
  const std::size_t n = energies.size();
  if (n < 2) throw std::invalid_argument("Spectrum: need at least one excited state");
  if (energies[0] != 0.0)
    throw std::invalid_argument("Spectrum: energies[0] must be 0 (E_00 = 0)");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(energies[i] > energies[i - 1]))
      throw std::invalid_argument("Spectrum: energies must be strictly increasing");
    if (!(energies[i] > 0.0))
      throw std::invalid_argument("Spectrum: excited energies must be positive");
    if (!std::isfinite(energies[i]))
      throw std::invalid_argument("Spectrum: non-finite energy");
  }
  if (moments.rows() != n || moments.cols() != n)
    throw std::invalid_argument("Spectrum: moment matrix must be (N+1)x(N+1)");
  if (!moments.is_symmetric(0.0))
    throw std::invalid_argument("Spectrum: moment matrix must be symmetric");
  if (!(mass > 0.0) || !(charge > 0.0))
    throw std::invalid_argument("Spectrum: mass and charge must be positive");
}

std::string Spectrum::to_json(const LambdaMatrix* lambda) const {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["energies"] = energies;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < moments.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < moments.cols(); ++k) row.push_back(moments(i, k));
    rows.push_back(row);
  }
  j["moments"] = rows;
  j["charge"] = charge;
  j["mass"] = mass;
  if (lambda != nullptr) {
    nlohmann::ordered_json lj;
    lj["c"] = lambda->c;
    nlohmann::ordered_json lrows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < lambda->values.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < lambda->values.cols(); ++k)
        row.push_back(lambda->values(i, k));
      lrows.push_back(row);
    }
    lj["values"] = lrows;
    j["lambda"] = lj;
  }
  return j.dump(2) + "\n";
}

static Matrix parse_matrix(const nlohmann::json& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw std::invalid_argument("Spectrum JSON: empty matrix");
  Matrix m(n, rows.at(0).size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows.at(i);
    if (row.size() != m.cols())
      throw std::invalid_argument("Spectrum JSON: ragged matrix");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = row.at(k).get<double>();
  }
  return m;
}

Spectrum Spectrum::from_json(const std::string& text,
                             std::optional<LambdaMatrix>* lambda_out) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("schema", std::string{}) != kSchema)
    throw std::invalid_argument("Spectrum JSON: unknown or missing schema");
  Spectrum s;
  s.energies = j.at("energies").get<std::vector<double>>();
  s.moments = parse_matrix(j.at("moments"));
  s.charge = j.value("charge", 1.0);
  s.mass = j.value("mass", 1.0);
  s.validate();
  if (lambda_out != nullptr) {
    lambda_out->reset();
    if (j.contains("lambda")) {
      LambdaMatrix lam;
      lam.c = j["lambda"].at("c").get<double>();
      lam.values = parse_matrix(j["lambda"].at("values"));
      *lambda_out = std::move(lam);
    }
  }
  return s;
}

}  // namespace nlolim
