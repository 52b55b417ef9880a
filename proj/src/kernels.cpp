#include "gorenstein/kernels.hpp"

#include <omp.h>

#include "gorenstein/pfaffian.hpp"

namespace gorenstein::kernels {

namespace {

Field product_field(const FieldMatrix& a, const FieldMatrix& b) {
  if (!a.empty()) return a(0, 0).field();
  if (!b.empty()) return b(0, 0).field();
  return Field::rationals();
}

void require_product_shape(std::size_t a_cols, std::size_t b_rows) {
  if (a_cols != b_rows) throw std::invalid_argument("matrix product: inner dimensions differ");
}

void require_pfaffian_row_shape(std::size_t n) {
  if (n % 2 == 0) {
    throw std::invalid_argument("signed maximal Pfaffians need an odd-size matrix");
  }
}

void fill_product_row(const FieldMatrix& a, const FieldMatrix& b, FieldMatrix& out,
                      std::size_t i) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Scalar& aik = a(i, k);
    if (aik.is_zero()) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  }
}

void fill_product_row(const PolyMatrix& a, const PolyMatrix& b, Matrix<Polynomial>& out,
                      std::size_t i) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Polynomial& aik = a(i, k);
    if (aik.is_zero()) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  }
}

PolyMatrix assemble(const Field& field, int degree, const Matrix<Polynomial>& entries) {
  PolyMatrix out(entries.rows(), entries.cols(), field, degree);
  for (std::size_t i = 0; i < entries.rows(); ++i) {
    for (std::size_t j = 0; j < entries.cols(); ++j) out.set(i, j, entries(i, j));
  }
  return out;
}

Scalar catalecticant_entry(const DualElement& phi, const Monomial& left, const Monomial& right,
                           const Polynomial& middle) {
  Scalar acc = Scalar::zero(phi.field());
  const Monomial outer = left * right;
  middle.for_each_term([&](const Monomial& t, const Scalar& c) {
    const Scalar& v = phi.coefficient_at(basis_index(outer * t));
    if (!v.is_zero()) acc += c * v;
  });
  return acc;
}

void require_catalecticant_degrees(const DualElement& phi, std::span<const Monomial> rows,
                                   std::span<const Monomial> cols, const Polynomial& middle) {
  if (middle.field() != phi.field()) throw FieldMismatch("catalecticant: field mismatch");
  const int rd = rows.empty() ? 0 : rows.front().degree();
  const int cd = cols.empty() ? 0 : cols.front().degree();
  if (!rows.empty() && !cols.empty() && rd + cd + middle.degree() != phi.degree()) {
    throw std::invalid_argument("catalecticant: degrees do not add up to deg phi");
  }
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

namespace serial {

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b) {
  require_product_shape(a.cols(), b.rows());
  FieldMatrix out(a.rows(), b.cols(), Scalar::zero(product_field(a, b)));
  for (std::size_t i = 0; i < a.rows(); ++i) fill_product_row(a, b, out, i);
  return out;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  require_product_shape(a.cols(), b.rows());
  if (a.field() != b.field()) throw FieldMismatch("matrix product over different fields");
  const int degree = a.degree() + b.degree();
  Matrix<Polynomial> out(a.rows(), b.cols(), Polynomial(a.field(), degree));
  for (std::size_t i = 0; i < a.rows(); ++i) fill_product_row(a, b, out, i);
  return assemble(a.field(), degree, out);
}

std::vector<Scalar> signed_maximal_pfaffians(const FieldMatrix& m) {
  require_alternating(m);
  require_pfaffian_row_shape(m.rows());
  const std::size_t n = m.rows();
  if (n == 1) return {Scalar::one(m(0, 0).field())};
  auto expander = detail::make_expander(m, m(0, 0).field());
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar v = expander.of(detail::full_mask(n) & ~(std::uint64_t{1} << j));
    out.push_back(j % 2 == 0 ? v : -v);
  }
  return out;
}

std::vector<Polynomial> signed_maximal_pfaffians(const PolyMatrix& m) {
  require_alternating(m);
  require_pfaffian_row_shape(m.rows());
  const std::size_t n = m.rows();
  auto expander = detail::make_expander(m);
  std::vector<Polynomial> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial v = expander.of(detail::full_mask(n) & ~(std::uint64_t{1} << j));
    out.push_back(j % 2 == 0 ? v : -v);
  }
  return out;
}

FieldMatrix catalecticant(const DualElement& phi, std::span<const Monomial> rows,
                          std::span<const Monomial> cols, const Polynomial& middle) {
  require_catalecticant_degrees(phi, rows, cols, middle);
  FieldMatrix out(rows.size(), cols.size(), Scalar::zero(phi.field()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(i, j) = catalecticant_entry(phi, rows[i], cols[j], middle);
    }
  }
  return out;
}

}  // namespace serial

namespace parallel {

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b) {
  require_product_shape(a.cols(), b.rows());
  FieldMatrix out(a.rows(), b.cols(), Scalar::zero(product_field(a, b)));
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    fill_product_row(a, b, out, static_cast<std::size_t>(i));
  }
  return out;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  require_product_shape(a.cols(), b.rows());
  if (a.field() != b.field()) throw FieldMismatch("matrix product over different fields");
  const int degree = a.degree() + b.degree();
  Matrix<Polynomial> out(a.rows(), b.cols(), Polynomial(a.field(), degree));
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    fill_product_row(a, b, out, static_cast<std::size_t>(i));
  }
  return assemble(a.field(), degree, out);
}

std::vector<Scalar> signed_maximal_pfaffians(const FieldMatrix& m) {
  require_alternating(m);
  require_pfaffian_row_shape(m.rows());
  const std::size_t n = m.rows();
  const Field field = m(0, 0).field();
  if (n == 1) return {Scalar::one(field)};
  std::vector<Scalar> out(n, Scalar::zero(field));
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t jj = 0; jj < count; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    auto expander = detail::make_expander(m, field);
    const Scalar& v = expander.of(detail::full_mask(n) & ~(std::uint64_t{1} << j));
    out[j] = j % 2 == 0 ? v : -v;
  }
  return out;
}

std::vector<Polynomial> signed_maximal_pfaffians(const PolyMatrix& m) {
  require_alternating(m);
  require_pfaffian_row_shape(m.rows());
  const std::size_t n = m.rows();
  std::vector<Polynomial> out(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t jj = 0; jj < count; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    auto expander = detail::make_expander(m);
    const Polynomial& v = expander.of(detail::full_mask(n) & ~(std::uint64_t{1} << j));
    out[j] = j % 2 == 0 ? v : -v;
  }
  return out;
}

FieldMatrix catalecticant(const DualElement& phi, std::span<const Monomial> rows,
                          std::span<const Monomial> cols, const Polynomial& middle) {
  require_catalecticant_degrees(phi, rows, cols, middle);
  FieldMatrix out(rows.size(), cols.size(), Scalar::zero(phi.field()));
  const auto count = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(i, j) = catalecticant_entry(phi, rows[i], cols[j], middle);
    }
  }
  return out;
}

}  // namespace parallel

}  // namespace gorenstein::kernels
