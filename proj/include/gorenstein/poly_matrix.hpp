#pragma once

#include <span>
#include <string>
#include <vector>

#include "gorenstein/linalg.hpp"

namespace gorenstein {

/// Dense matrix of homogeneous polynomials that all share one declared
/// degree (zero entries carry that degree too).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, const Field& field, int degree);

  /// form * m, entry by entry.
  static PolyMatrix from_constant(const FieldMatrix& m, const Polynomial& form);
  /// A constant matrix viewed as a degree-0 polynomial matrix.
  static PolyMatrix from_constant(const Field& field, const FieldMatrix& m);
  /// One row from a list of forms of equal degree.
  static PolyMatrix row(const Field& field, int degree, std::span<const Polynomial> entries);

  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }
  bool is_square() const { return entries_.is_square(); }
  const Field& field() const { return field_; }
  int degree() const { return degree_; }

  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_.at(i, j); }
  /// Throws unless p has the declared degree and field.
  void set(std::size_t i, std::size_t j, Polynomial p);

  const Matrix<Polynomial>& entries() const { return entries_; }

  PolyMatrix transpose() const;
  PolyMatrix select(std::span<const std::size_t> row_ids,
                    std::span<const std::size_t> col_ids) const;
  /// Scalar matrix of the coefficients at one monomial.
  FieldMatrix coefficient_matrix(const Monomial& m) const;

  bool is_zero() const;
  /// Every entry homogeneous of the declared degree.
  bool is_homogeneous() const;

  friend bool operator==(const PolyMatrix& l, const PolyMatrix& r) {
    return l.field_ == r.field_ && l.degree_ == r.degree_ && l.entries_ == r.entries_;
  }

 private:
  Field field_;
  int degree_ = 0;
  Matrix<Polynomial> entries_;
};

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a);
PolyMatrix operator*(const Scalar& s, const PolyMatrix& a);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const FieldMatrix& b);
PolyMatrix operator*(const FieldMatrix& a, const PolyMatrix& b);

bool is_alternating(const PolyMatrix& m);

/// [[top_left, top_right], [bottom_left, bottom_right]]; blocks must agree in
/// degree and fit together.
PolyMatrix block_matrix(const PolyMatrix& top_left, const PolyMatrix& top_right,
                        const PolyMatrix& bottom_left, const PolyMatrix& bottom_right);

/// Entries as polynomial strings, one row per line.
std::string to_string(const PolyMatrix& m);

}  // namespace gorenstein
