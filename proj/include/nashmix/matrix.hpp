#pragma once

#include <cstddef>
#include <vector>

#include "nashmix/common.hpp"

namespace nashmix {

// Dense row-major matrix, just enough linear algebra for payoff work.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw input_error("matrix data size mismatch");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // A * y
  std::vector<double> mul(const std::vector<double>& y) const {
    std::vector<double> out(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * y[j];
      out[i] = s;
    }
    return out;
  }

  // A^T * x
  std::vector<double> mul_t(const std::vector<double>& x) const {
    std::vector<double> out(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      const double xi = x[i];
      if (xi == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) out[j] += xi * (*this)(i, j);
    }
    return out;
  }

  // x^T A y
  double quad(const std::vector<double>& x, const std::vector<double>& y) const {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (x[i] == 0.0) continue;
      double r = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) r += (*this)(i, j) * y[j];
      s += x[i] * r;
    }
    return s;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

inline double vec_max(const std::vector<double>& v) {
  double m = v[0];
  for (double x : v)
    if (x > m) m = x;
  return m;
}

inline double vec_min(const std::vector<double>& v) {
  double m = v[0];
  for (double x : v)
    if (x < m) m = x;
  return m;
}

// Indices within an absolute tolerance of the max (suppmax) or min (suppmin).
inline std::vector<std::size_t> arg_max_set(const std::vector<double>& v, double eps = tol::tie) {
  const double m = vec_max(v);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] >= m - eps) out.push_back(i);
  return out;
}

inline std::vector<std::size_t> arg_min_set(const std::vector<double>& v, double eps = tol::tie) {
  const double m = vec_min(v);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] <= m + eps) out.push_back(i);
  return out;
}

} // namespace nashmix
