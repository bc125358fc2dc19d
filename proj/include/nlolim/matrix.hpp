#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nlolim {

// Minimal dense row-major matrix. Sized for moment/overlap matrices of
// truncated spectra (hundreds of states), not for the discretized Hamiltonians
// (those stay in banded storage inside the eigensolver).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<double>& data() const { return data_; }

  bool is_symmetric(double tol = 0.0) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j) {
        const double d = (*this)(i, j) - (*this)(j, i);
        if ((d > 0 ? d : -d) > tol) return false;
      }
    return true;
  }

  // (A + A^T)/2, exact when already symmetric.
  Matrix symmetrized() const {
    if (rows_ != cols_) throw std::invalid_argument("symmetrized: matrix not square");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        s(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
    return s;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace nlolim
