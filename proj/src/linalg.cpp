#include "gorenstein/linalg.hpp"

#include <string>

#include "gorenstein/kernels.hpp"

namespace gorenstein {

namespace {

Field field_of(const FieldMatrix& m) {
  return m.empty() ? Field::rationals() : m(0, 0).field();
}

void require_same_shape(const FieldMatrix& a, const FieldMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
  }
}

}  // namespace

FieldMatrix identity(const Field& field, std::size_t n) {
  FieldMatrix m(n, n, Scalar::zero(field));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

FieldMatrix zeros(const Field& field, std::size_t rows, std::size_t cols) {
  return FieldMatrix(rows, cols, Scalar::zero(field));
}

FieldMatrix make_matrix(const Field& field, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FieldMatrix m(rows.size(), cols, Scalar::zero(field));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar::parse(field, rows[i][j]);
  }
  return m;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  return kernels::parallel::multiply(a, b);
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_shape(a, b, "matrix sum");
  FieldMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_shape(a, b, "matrix difference");
  FieldMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

FieldMatrix operator-(const FieldMatrix& a) {
  FieldMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
  }
  return out;
}

FieldMatrix operator*(const Scalar& s, const FieldMatrix& a) {
  FieldMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  }
  return out;
}

bool is_zero(const FieldMatrix& m) {
  for (const auto& v : m.data()) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool is_symmetric(const FieldMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (!(m(i, j) == m(j, i))) return false;
    }
  }
  return true;
}

bool is_alternating(const FieldMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (!(m(i, j) + m(j, i)).is_zero()) return false;
    }
  }
  return true;
}

RowEchelon row_reduce(FieldMatrix m) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && m(found, col).is_zero()) ++found;
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(found, j), m(pivot_row, j));
    }
    const Scalar inv = m(pivot_row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, col).is_zero()) continue;
      const Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(pivot_row, j);
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

InverseResult invert(const FieldMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("invert: matrix is not square");
  const std::size_t n = m.rows();
  const Field field = field_of(m);
  FieldMatrix augmented(n, 2 * n, Scalar::zero(field));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n + i) = Scalar::one(field);
  }
  RowEchelon ech = row_reduce(std::move(augmented));
  InverseResult result;
  std::size_t left_rank = 0;
  for (std::size_t c : ech.pivot_columns) {
    if (c < n) ++left_rank;
  }
  result.rank = left_rank;
  if (left_rank == n) {
    FieldMatrix inv(n, n, Scalar::zero(field));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
    }
    result.inverse = std::move(inv);
  }
  return result;
}

std::size_t rank(const FieldMatrix& m) { return row_reduce(m).rank(); }

Scalar determinant(const FieldMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const Field field = field_of(m);
  FieldMatrix work = m;
  Scalar det = Scalar::one(field);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = col;
    while (found < n && work(found, col).is_zero()) ++found;
    if (found == n) return Scalar::zero(field);
    if (found != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(found, j), work(col, j));
      det = -det;
    }
    det *= work(col, col);
    const Scalar inv = work(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (work(i, col).is_zero()) continue;
      const Scalar factor = work(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) work(i, j) -= factor * work(col, j);
    }
  }
  return det;
}

std::vector<std::vector<Scalar>> kernel(const FieldMatrix& m) {
  const Field field = field_of(m);
  RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(field));
    v[free] = Scalar::one(field);
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
      v[ech.pivot_columns[r]] = -ech.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gorenstein
