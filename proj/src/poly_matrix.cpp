#include "gorenstein/poly_matrix.hpp"

#include <sstream>

#include "gorenstein/kernels.hpp"

namespace gorenstein {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const Field& field, int degree)
    : field_(field), degree_(degree), entries_(rows, cols, Polynomial(field, degree)) {}

PolyMatrix PolyMatrix::from_constant(const FieldMatrix& m, const Polynomial& form) {
  PolyMatrix out(m.rows(), m.cols(), form.field(), form.degree());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) out.entries_(i, j) = m(i, j) * form;
    }
  }
  return out;
}

PolyMatrix PolyMatrix::from_constant(const Field& field, const FieldMatrix& m) {
  return from_constant(m, Polynomial::constant(Scalar::one(field)));
}

PolyMatrix PolyMatrix::row(const Field& field, int degree, std::span<const Polynomial> entries) {
  PolyMatrix out(1, entries.size(), field, degree);
  for (std::size_t j = 0; j < entries.size(); ++j) out.set(0, j, entries[j]);
  return out;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
  if (p.field() != field_) throw FieldMismatch("polynomial entry from a different field");
  if (p.degree() != degree_) {
    throw std::invalid_argument("entry of degree " + std::to_string(p.degree()) +
                                " in a matrix of degree " + std::to_string(degree_));
  }
  entries_.at(i, j) = std::move(p);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out;
  out.field_ = field_;
  out.degree_ = degree_;
  out.entries_ = entries_.transpose();
  return out;
}

PolyMatrix PolyMatrix::select(std::span<const std::size_t> row_ids,
                              std::span<const std::size_t> col_ids) const {
  PolyMatrix out;
  out.field_ = field_;
  out.degree_ = degree_;
  out.entries_ = entries_.select(row_ids, col_ids);
  return out;
}

FieldMatrix PolyMatrix::coefficient_matrix(const Monomial& m) const {
  FieldMatrix out(rows(), cols(), Scalar::zero(field_));
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) out(i, j) = entries_(i, j).coefficient(m);
  }
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : entries_.data()) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool PolyMatrix::is_homogeneous() const {
  for (const auto& p : entries_.data()) {
    if (p.degree() != degree_ || p.field() != field_) return false;
  }
  return true;
}

namespace {

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
  }
  if (a.degree() != b.degree()) throw std::invalid_argument(std::string(op) + ": degree mismatch");
}

template <class F>
PolyMatrix entrywise(const PolyMatrix& a, F&& f) {
  PolyMatrix out(a.rows(), a.cols(), a.field(), a.degree());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, f(i, j));
  }
  return out;
}

}  // namespace

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b, "matrix sum");
  return entrywise(a, [&](std::size_t i, std::size_t j) { return a(i, j) + b(i, j); });
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b, "matrix difference");
  return entrywise(a, [&](std::size_t i, std::size_t j) { return a(i, j) - b(i, j); });
}

PolyMatrix operator-(const PolyMatrix& a) {
  return entrywise(a, [&](std::size_t i, std::size_t j) { return -a(i, j); });
}

PolyMatrix operator*(const Scalar& s, const PolyMatrix& a) {
  return entrywise(a, [&](std::size_t i, std::size_t j) { return s * a(i, j); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  return kernels::parallel::multiply(a, b);
}

PolyMatrix operator*(const PolyMatrix& a, const FieldMatrix& b) {
  return kernels::parallel::multiply(a, PolyMatrix::from_constant(a.field(), b));
}

PolyMatrix operator*(const FieldMatrix& a, const PolyMatrix& b) {
  return kernels::parallel::multiply(PolyMatrix::from_constant(b.field(), a), b);
}

bool is_alternating(const PolyMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (!(m(i, j) + m(j, i)).is_zero()) return false;
    }
  }
  return true;
}

PolyMatrix block_matrix(const PolyMatrix& top_left, const PolyMatrix& top_right,
                        const PolyMatrix& bottom_left, const PolyMatrix& bottom_right) {
  if (top_left.rows() != top_right.rows() || bottom_left.rows() != bottom_right.rows() ||
      top_left.cols() != bottom_left.cols() || top_right.cols() != bottom_right.cols()) {
    throw std::invalid_argument("block_matrix: blocks do not fit together");
  }
  const int degree = top_left.degree();
  for (const PolyMatrix* b : {&top_right, &bottom_left, &bottom_right}) {
    if (b->degree() != degree) throw std::invalid_argument("block_matrix: degree mismatch");
  }
  const std::size_t r0 = top_left.rows();
  const std::size_t c0 = top_left.cols();
  PolyMatrix out(r0 + bottom_left.rows(), c0 + top_right.cols(), top_left.field(), degree);
  auto place = [&out](const PolyMatrix& b, std::size_t r, std::size_t c) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out.set(r + i, c + j, b(i, j));
    }
  };
  place(top_left, 0, 0);
  place(top_right, 0, c0);
  place(bottom_left, r0, 0);
  place(bottom_right, r0, c0);
  return out;
}

std::string to_string(const PolyMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) os << " , ";
      os << to_string(m(i, j));
    }
    os << " ]\n";
  }
  return os.str();
}

}  // namespace gorenstein
