#include "gorenstein/resolution.hpp"

#include "gorenstein/kernels.hpp"
#include "gorenstein/pfaffian.hpp"

namespace gorenstein {

namespace {

void require_degree(const DualElement& phi, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (phi.degree() != 2 * n - 1) {
    throw std::invalid_argument("inverse system has degree " + std::to_string(phi.degree()) +
                                ", expected 2n-1 = " + std::to_string(2 * n - 1));
  }
}

std::size_t sym_size(int d) { return basis_size(d); }

// sum_i v(i) m_i over the degree-d basis of Sym U.
Polynomial combine(const Field& field, int d, const FieldMatrix& m, std::size_t col) {
  Polynomial out(field, d);
  for (std::size_t i = 0; i < m.rows(); ++i) out.coefficient_at(i) = m(i, col);
  return out;
}

FieldMatrix embed(const Field& field, std::size_t rows, std::size_t cols, const FieldMatrix& block,
                  std::size_t row0, std::size_t col0) {
  FieldMatrix out = zeros(field, rows, cols);
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) out(row0 + i, col0 + j) = block(i, j);
  }
  return out;
}

}  // namespace

Catalecticants build_p_r(const DualElement& phi, int n) {
  require_degree(phi, n);
  const Field& field = phi.field();
  const auto rows = sym_basis(n - 1);
  const auto u0 = sym_basis_u0(n);
  const Polynomial one = Polynomial::constant(Scalar::one(field));
  return {kernels::parallel::catalecticant(phi, rows, rows, variable(field, 0)),
          kernels::parallel::catalecticant(phi, rows, u0, one)};
}

BettiShape linear_betti_shape(int n) {
  return {{0, 1}, {n, 2 * n + 1}, {n + 1, 2 * n + 1}, {2 * n + 1, 1}};
}

BettiShape quadratic_betti_shape(int n) {
  return {{0, 1}, {n, n + 1}, {n + 2, n + 1}, {2 * n + 2, 1}};
}

LinearPresentation build_linear_presentation(const DualElement& phi, int n) {
  require_degree(phi, n);
  const Field& field = phi.field();
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t big = sym_size(n - 1);

  LinearPresentation lin;
  lin.n = n;
  lin.field = field;
  auto [p, r] = build_p_r(phi, n);
  lin.p = std::move(p);
  lin.r = std::move(r);
  auto inv = invert(lin.p);
  lin.p_rank = inv.rank;
  if (!inv.invertible()) return lin;
  lin.linearly_presented = true;
  lin.p_inverse = std::move(*inv.inverse);

  const FieldMatrix rt_pinv = lin.r.transpose() * lin.p_inverse;  // (n+1) x big
  const FieldMatrix full = rt_pinv * lin.r;                       // (n+1) x (n+1)
  lin.a0 = full.select(index_range(0, nn), index_range(1, nn));
  lin.a_prime = lin.a0 - lin.a0.transpose();
  lin.b0 = rt_pinv.select(index_range(0, nn + 1), index_range(big - nn, nn));

  const FieldMatrix b0_top = lin.b0.select(index_range(0, nn), index_range(0, nn));
  const FieldMatrix b0_bottom = lin.b0.select(index_range(1, nn), index_range(0, nn));
  lin.b1 = embed(field, nn, nn + 1, b0_top, 0, 1) - embed(field, nn, nn + 1, b0_bottom, 0, 0);

  const Polynomial x = variable(field, 0);
  const Polynomial y = variable(field, 1);
  const Polynomial z = variable(field, 2);
  lin.b2 = PolyMatrix(nn, nn + 1, field, 1);
  for (std::size_t i = 0; i < nn; ++i) {
    lin.b2.set(i, i, z);
    lin.b2.set(i, i + 1, -y);
  }

  const FieldMatrix corner = lin.p_inverse.select(index_range(big - nn, nn), index_range(big - nn, nn));
  lin.d0 = embed(field, nn + 1, nn + 1, corner, 0, 1);

  lin.a = PolyMatrix::from_constant(lin.a_prime, x);
  lin.b = PolyMatrix::from_constant(lin.b1, x) + lin.b2;
  lin.d = PolyMatrix::from_constant(lin.d0 - lin.d0.transpose(), x);
  lin.syzygies = block_matrix(lin.a, lin.b, -lin.b.transpose(), lin.d);
  lin.generators = signed_maximal_pfaffians(lin.syzygies);
  lin.explicit_generators = explicit_generators(phi, n, lin.p_inverse);
  return lin;
}

std::vector<Polynomial> explicit_generators(const DualElement& phi, int n,
                                            const FieldMatrix& p_inverse) {
  require_degree(phi, n);
  const Field& field = phi.field();
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t big = sym_size(n - 1);
  if (p_inverse.rows() != big || p_inverse.cols() != big) {
    throw std::invalid_argument("p^-1 has the wrong shape");
  }
  const Polynomial x = variable(field, 0);
  std::vector<Polynomial> out;
  out.reserve(2 * nn + 1);
  for (std::size_t k = 0; k < nn; ++k) {
    out.push_back(x * combine(field, n - 1, p_inverse, big - nn + k));
  }
  const FieldMatrix correction = p_inverse * build_p_r(phi, n).r;
  const auto u0 = sym_basis_u0(n);
  for (std::size_t j = 0; j < u0.size(); ++j) {
    out.push_back(Polynomial::monomial(field, u0[j]) - x * combine(field, n - 1, correction, j));
  }
  return out;
}

Scalar proportionality_unit(const std::vector<Polynomial>& lhs,
                            const std::vector<Polynomial>& rhs) {
  if (lhs.size() != rhs.size()) throw ProportionalityError("rows have different lengths");
  std::optional<Scalar> unit;
  for (std::size_t k = 0; k < rhs.size() && !unit; ++k) {
    rhs[k].for_each_term([&](const Monomial& m, const Scalar& c) {
      if (!unit) unit = lhs[k].coefficient(m) / c;
    });
  }
  if (!unit || unit->is_zero()) throw ProportionalityError("no nonzero unit relates the rows");
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    if (!(lhs[k] == *unit * rhs[k])) {
      throw ProportionalityError("inconsistent ratio at coordinate " + std::to_string(k + 1));
    }
  }
  return *unit;
}

DualElement reduced_inverse_system(const DualElement& phi) {
  DualElement out = phi;
  for (const auto& m : sym_basis_u0(phi.degree())) {
    out.set_coefficient(m, Scalar::zero(phi.field()));
  }
  return out;
}

ReductionBasisChange reduction_basis_change(const DualElement& phi, int n) {
  require_degree(phi, n);
  const Field& field = phi.field();
  const auto nn = static_cast<std::size_t>(n);
  const DualElement rho = phi - reduced_inverse_system(phi);
  const auto lower = sym_basis_u0(n - 1);
  const auto upper = sym_basis_u0(n);
  FieldMatrix coupling(nn, nn + 1, Scalar::zero(field));
  for (std::size_t k = 0; k < nn; ++k) {
    for (std::size_t j = 0; j <= nn; ++j) coupling(k, j) = rho.coefficient(lower[k] * upper[j]);
  }
  ReductionBasisChange out{identity(field, 2 * nn + 1), identity(field, 2 * nn + 1)};
  for (std::size_t k = 0; k < nn; ++k) {
    for (std::size_t j = 0; j <= nn; ++j) {
      out.generators(k, nn + j) = -coupling(k, j);
      out.syzygies(nn + j, k) = coupling(k, j);
    }
  }
  return out;
}

bool reduction_conjugation_check(const LinearPresentation& lin_phi,
                                 const LinearPresentation& lin_reduced, const DualElement& phi) {
  if (lin_phi.n != lin_reduced.n) throw std::invalid_argument("presentations of different n");
  if (!lin_phi.linearly_presented || !lin_reduced.linearly_presented) {
    throw std::invalid_argument("both presentations must be linear");
  }
  const auto change = reduction_basis_change(phi, lin_phi.n);
  if (!(change.generators * lin_phi.syzygies == lin_reduced.syzygies * change.syzygies)) {
    return false;
  }
  const auto reduced_row = PolyMatrix::row(lin_phi.field, lin_phi.n,
                                           lin_reduced.explicit_generators);
  const auto phi_row = PolyMatrix::row(lin_phi.field, lin_phi.n, lin_phi.explicit_generators);
  return reduced_row * change.generators == phi_row;
}

QuadraticPresentation build_quadratic_presentation(const LinearPresentation& lin) {
  if (!lin.linearly_presented) {
    throw std::invalid_argument("quadratic presentation needs a linearly presented I");
  }
  const auto nn = static_cast<std::size_t>(lin.n);
  QuadraticPresentation quad;
  quad.n = lin.n;
  quad.explicit_generators.assign(lin.explicit_generators.begin() + static_cast<long>(nn),
                                  lin.explicit_generators.end());
  if (lin.n % 2 == 1) {
    quad.status = QuadraticStatus::OddN;
    quad.a_prime_rank = rank(lin.a_prime);
    return quad;
  }
  auto inv = invert(lin.a_prime);
  quad.a_prime_rank = inv.rank;
  if (!inv.invertible()) {
    quad.status = QuadraticStatus::SingularAPrime;
    return quad;
  }
  quad.status = QuadraticStatus::Presented;
  const PolyMatrix x_d = PolyMatrix::from_constant(
      lin.d0 - lin.d0.transpose(), power(variable(lin.field, 0), 2));
  quad.syzygies = lin.b.transpose() * *inv.inverse * lin.b + x_d;
  quad.generators = signed_maximal_pfaffians(quad.syzygies);
  quad.unit = proportionality_unit(quad.generators, quad.explicit_generators);
  return quad;
}

bool pfaffian_factorization_check(const LinearPresentation& lin,
                                  const QuadraticPresentation& quad) {
  if (!quad.quadratically_presented()) {
    throw std::invalid_argument("factorization check needs a quadratic presentation");
  }
  const auto nn = static_cast<std::size_t>(lin.n);
  const Scalar pf = pfaffian(lin.a_prime);
  for (std::size_t i = 0; i <= nn; ++i) {
    if (!(pfaffian_minor(lin.syzygies, nn + i) == pf * pfaffian_minor(quad.syzygies, i))) {
      return false;
    }
  }
  return true;
}

}  // namespace gorenstein
