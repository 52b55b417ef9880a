#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gorenstein {

/// Dense row-major matrix. Entry types are Scalar or Polynomial.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }

  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_).subspan(i * cols_, cols_);
  }
  std::span<const T> data() const { return data_; }

  Matrix transpose() const {
    Matrix out;
    out.rows_ = cols_;
    out.cols_ = rows_;
    out.data_.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) out.data_.push_back((*this)(i, j));
    }
    return out;
  }

  /// Keeps the listed rows and columns, in the listed order.
  Matrix select(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
    Matrix out;
    out.rows_ = row_ids.size();
    out.cols_ = col_ids.size();
    out.data_.reserve(out.rows_ * out.cols_);
    for (std::size_t i : row_ids) {
      for (std::size_t j : col_ids) out.data_.push_back(at(i, j));
    }
    return out;
  }

  friend bool operator==(const Matrix& l, const Matrix& r) {
    return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.data_ == r.data_;
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// 0, 1, ..., n-1 with `skip` removed.
inline std::vector<std::size_t> indices_without(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != skip) out.push_back(i);
  }
  return out;
}

/// first, first+1, ..., first+count-1.
inline std::vector<std::size_t> index_range(std::size_t first, std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

}  // namespace gorenstein
