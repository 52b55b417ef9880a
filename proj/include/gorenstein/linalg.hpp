#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gorenstein/forms.hpp"

namespace gorenstein {

FieldMatrix identity(const Field& field, std::size_t n);
FieldMatrix zeros(const Field& field, std::size_t rows, std::size_t cols);
/// Parses a row-major list of scalar strings.
FieldMatrix make_matrix(const Field& field,
                        const std::vector<std::vector<std::string>>& rows);

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator-(const FieldMatrix& a);
FieldMatrix operator*(const Scalar& s, const FieldMatrix& a);

bool is_zero(const FieldMatrix& m);
bool is_symmetric(const FieldMatrix& m);
/// m + m^T = 0 with an exactly zero diagonal.
bool is_alternating(const FieldMatrix& m);

/// Reduced row echelon form; pivots are the first nonzero entry found in
/// column order.
struct RowEchelon {
  FieldMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};
RowEchelon row_reduce(FieldMatrix m);

/// Singularity is a result, not an error: callers branch on invertible().
struct InverseResult {
  std::optional<FieldMatrix> inverse;
  std::size_t rank = 0;
  bool invertible() const { return inverse.has_value(); }
};
/// Throws std::invalid_argument for a non-square input.
InverseResult invert(const FieldMatrix& m);

std::size_t rank(const FieldMatrix& m);
Scalar determinant(const FieldMatrix& m);

/// Basis of the right null space; empty iff m has full column rank.
std::vector<std::vector<Scalar>> kernel(const FieldMatrix& m);

}  // namespace gorenstein
