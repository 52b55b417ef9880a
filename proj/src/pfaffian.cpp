#include "gorenstein/pfaffian.hpp"

#include "gorenstein/kernels.hpp"

namespace gorenstein {

namespace detail {

PfaffianExpander<Scalar> make_expander(const FieldMatrix& m, const Field& field) {
  return PfaffianExpander<Scalar>(m, Scalar::one(field),
                                  std::vector<Scalar>(m.rows() / 2 + 1, Scalar::zero(field)));
}

PfaffianExpander<Polynomial> make_expander(const PolyMatrix& m) {
  std::vector<Polynomial> zeros;
  for (std::size_t k = 0; k <= m.rows() / 2; ++k) {
    zeros.emplace_back(m.field(), static_cast<int>(k) * m.degree());
  }
  return PfaffianExpander<Polynomial>(m.entries(), Polynomial::constant(Scalar::one(m.field())),
                                      std::move(zeros));
}

}  // namespace detail

namespace {

Field field_of(const FieldMatrix& m) {
  return m.empty() ? Field::rationals() : m(0, 0).field();
}

void require_size(std::size_t n) {
  if (n > kMaxPfaffianSize) {
    throw std::invalid_argument("Pfaffian expansion limited to size " +
                                std::to_string(kMaxPfaffianSize));
  }
}

}  // namespace

void require_alternating(const FieldMatrix& m) {
  if (!is_alternating(m)) throw std::invalid_argument("matrix is not alternating");
  require_size(m.rows());
}

void require_alternating(const PolyMatrix& m) {
  if (!is_alternating(m)) throw std::invalid_argument("polynomial matrix is not alternating");
  require_size(m.rows());
}

Scalar pfaffian(const FieldMatrix& m) {
  require_alternating(m);
  auto expander = detail::make_expander(m, field_of(m));
  return expander.of(detail::full_mask(m.rows()));
}

Polynomial pfaffian(const PolyMatrix& m) {
  require_alternating(m);
  auto expander = detail::make_expander(m);
  return expander.of(detail::full_mask(m.rows()));
}

Scalar pfaffian_minor(const FieldMatrix& m, std::size_t deleted) {
  require_alternating(m);
  if (deleted >= m.rows()) throw std::out_of_range("deleted index out of range");
  auto expander = detail::make_expander(m, field_of(m));
  return expander.of(detail::full_mask(m.rows()) & ~(std::uint64_t{1} << deleted));
}

Polynomial pfaffian_minor(const PolyMatrix& m, std::size_t deleted) {
  require_alternating(m);
  if (deleted >= m.rows()) throw std::out_of_range("deleted index out of range");
  auto expander = detail::make_expander(m);
  return expander.of(detail::full_mask(m.rows()) & ~(std::uint64_t{1} << deleted));
}

std::vector<Scalar> signed_maximal_pfaffians(const FieldMatrix& m) {
  return kernels::parallel::signed_maximal_pfaffians(m);
}

std::vector<Polynomial> signed_maximal_pfaffians(const PolyMatrix& m) {
  return kernels::parallel::signed_maximal_pfaffians(m);
}

bool congruence_pfaffian_check(const FieldMatrix& a, const FieldMatrix& m) {
  if (!a.is_square() || !m.is_square() || a.rows() != m.rows()) {
    throw std::invalid_argument("congruence check: size mismatch");
  }
  require_alternating(a);
  const Scalar lhs = pfaffian(m.transpose() * a * m);
  const Scalar rhs = determinant(m) * pfaffian(a);
  return lhs == rhs;
}

}  // namespace gorenstein
