#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace nlolim {

// Rectangular grid of computed values with axis and reproducibility metadata.
// Cells are row-major over (axis1, axis2); several named columns share the
// same grid. Invalid cells are NaN in memory and empty fields in CSV, with a
// companion validity column. Serialization round-trips bit-exactly.
struct ScanTable {
  std::string axis1_name;
  std::vector<double> axis1;
  std::string axis2_name;
  std::vector<double> axis2;

  std::vector<std::string> column_names;           // emission order
  std::map<std::string, std::vector<double>> columns;  // row-major cells

  // Reproducibility block: every key/value needed to regenerate the table.
  std::vector<std::pair<std::string, std::string>> metadata;

  std::size_t cell_count() const { return axis1.size() * axis2.size(); }
  std::size_t index(std::size_t i, std::size_t j) const { return i * axis2.size() + j; }

  void add_column(const std::string& name);
  std::vector<double>& column(const std::string& name);
  const std::vector<double>& column(const std::string& name) const;

  std::string to_csv() const;
  static ScanTable from_csv(const std::string& text);
  std::string to_json() const;
  static ScanTable from_json(const std::string& text);
};

// Deterministic parallel map over grid cells: results land in preassigned
// slots, so the output is independent of the worker count.
void parallel_for_cells(std::size_t n1, std::size_t n2, unsigned threads,
                        const std::function<void(std::size_t i, std::size_t j)>& fn);

// 17-significant-digit scientific float formatting used by every emitter.
std::string format_float(double v);

}  // namespace nlolim
