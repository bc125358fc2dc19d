#include "nlolim/scan.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "nlolim/errors.hpp"
#include "nlolim/version.hpp"

namespace nlolim {

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void ScanTable::add_column(const std::string& name) {
  if (columns.count(name)) throw std::invalid_argument("ScanTable: duplicate column " + name);
  column_names.push_back(name);
  columns[name] = std::vector<double>(cell_count(), std::nan(""));
}

std::vector<double>& ScanTable::column(const std::string& name) {
  auto it = columns.find(name);
  if (it == columns.end()) throw std::invalid_argument("ScanTable: no column " + name);
  return it->second;
}

const std::vector<double>& ScanTable::column(const std::string& name) const {
  auto it = columns.find(name);
  if (it == columns.end()) throw std::invalid_argument("ScanTable: no column " + name);
  return it->second;
}

std::string ScanTable::to_csv() const {
  std::ostringstream os;
  os << "# schema: " << kSchema << "\n";
  for (const auto& [k, v] : metadata) os << "# meta " << k << ": " << v << "\n";
  os << "# axis1 " << axis1_name << ":";
  for (double v : axis1) os << " " << format_float(v);
  os << "\n# axis2 " << axis2_name << ":";
  for (double v : axis2) os << " " << format_float(v);
  os << "\n";

  os << axis1_name << "," << axis2_name;
  for (const auto& name : column_names) os << "," << name;
  os << "\n";
  for (std::size_t i = 0; i < axis1.size(); ++i)
    for (std::size_t j = 0; j < axis2.size(); ++j) {
      os << format_float(axis1[i]) << "," << format_float(axis2[j]);
      for (const auto& name : column_names) {
        const double v = columns.at(name)[index(i, j)];
        os << ",";
        if (!std::isnan(v)) os << format_float(v);
      }
      os << "\n";
    }
  return os.str();
}

namespace {

std::vector<double> parse_float_list(const std::string& s) {
  std::vector<double> out;
  std::istringstream is(s);
  double v;
  while (is >> v) out.push_back(v);
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

ScanTable ScanTable::from_csv(const std::string& text) {
  ScanTable t;
  std::istringstream is(text);
  std::string line;
  bool header_seen = false;
  std::size_t cell = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# meta ", 0) == 0) {
        const std::string body = line.substr(7);
        const auto pos = body.find(": ");
        if (pos == std::string::npos) throw io_error("ScanTable CSV: malformed meta line");
        t.metadata.emplace_back(body.substr(0, pos), body.substr(pos + 2));
      } else if (line.rfind("# axis1 ", 0) == 0) {
        const std::string body = line.substr(8);
        const auto pos = body.find(":");
        t.axis1_name = body.substr(0, pos);
        t.axis1 = parse_float_list(body.substr(pos + 1));
      } else if (line.rfind("# axis2 ", 0) == 0) {
        const std::string body = line.substr(8);
        const auto pos = body.find(":");
        t.axis2_name = body.substr(0, pos);
        t.axis2 = parse_float_list(body.substr(pos + 1));
      }
      continue;
    }
    if (!header_seen) {
      const auto fields = split_csv_line(line);
      if (fields.size() < 2) throw io_error("ScanTable CSV: malformed header");
      for (std::size_t k = 2; k < fields.size(); ++k) {
        t.column_names.push_back(fields[k]);
        t.columns[fields[k]] = std::vector<double>(t.cell_count(), std::nan(""));
      }
      header_seen = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != t.column_names.size() + 2)
      throw io_error("ScanTable CSV: row width mismatch");
    if (cell >= t.cell_count()) throw io_error("ScanTable CSV: too many rows");
    for (std::size_t k = 0; k < t.column_names.size(); ++k) {
      const std::string& f = fields[k + 2];
      t.columns[t.column_names[k]][cell] = f.empty() ? std::nan("") : std::stod(f);
    }
    ++cell;
  }
  if (cell != t.cell_count()) throw io_error("ScanTable CSV: missing rows");
  return t;
}

std::string ScanTable::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  nlohmann::ordered_json meta = nlohmann::ordered_json::array();
  for (const auto& [k, v] : metadata) meta.push_back({{"key", k}, {"value", v}});
  j["metadata"] = meta;
  j["axis1"] = {{"name", axis1_name}, {"values", axis1}};
  j["axis2"] = {{"name", axis2_name}, {"values", axis2}};
  nlohmann::ordered_json cols = nlohmann::ordered_json::array();
  for (const auto& name : column_names) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (double v : columns.at(name)) {
      if (std::isnan(v))
        values.push_back(nullptr);
      else
        values.push_back(v);
    }
    cols.push_back({{"name", name}, {"cells", values}});
  }
  j["columns"] = cols;
  return j.dump(2) + "\n";
}

ScanTable ScanTable::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("schema", std::string{}) != kSchema)
    throw io_error("ScanTable JSON: unknown or missing schema");
  ScanTable t;
  for (const auto& m : j.at("metadata"))
    t.metadata.emplace_back(m.at("key").get<std::string>(), m.at("value").get<std::string>());
  t.axis1_name = j.at("axis1").at("name").get<std::string>();
  t.axis1 = j.at("axis1").at("values").get<std::vector<double>>();
  t.axis2_name = j.at("axis2").at("name").get<std::string>();
  t.axis2 = j.at("axis2").at("values").get<std::vector<double>>();
  for (const auto& col : j.at("columns")) {
    const std::string name = col.at("name").get<std::string>();
    std::vector<double> cells;
    cells.reserve(col.at("cells").size());
    for (const auto& v : col.at("cells"))
      cells.push_back(v.is_null() ? std::nan("") : v.get<double>());
    if (cells.size() != t.cell_count()) throw io_error("ScanTable JSON: cell count mismatch");
    t.column_names.push_back(name);
    t.columns[name] = std::move(cells);
  }
  return t;
}

void parallel_for_cells(std::size_t n1, std::size_t n2, unsigned threads,
                        const std::function<void(std::size_t, std::size_t)>& fn) {
  if (threads <= 1 || n1 < 2) {
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j) fn(i, j);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const unsigned nw = std::min<unsigned>(threads, unsigned(n1));
  for (unsigned w = 0; w < nw; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (std::size_t i = w; i < n1; i += nw)
          for (std::size_t j = 0; j < n2; ++j) fn(i, j);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace nlolim
