#include "gorenstein/oracle.hpp"

#include <stdexcept>

#include "gorenstein/kernels.hpp"

namespace gorenstein {

namespace {

// Rows: dual monomials of degree s - d; columns: degree-d monomials.
FieldMatrix evaluation_matrix(const DualElement& phi, int d) {
  const auto rows = sym_basis(phi.degree() - d);
  const auto cols = sym_basis(d);
  return kernels::parallel::catalecticant(phi, rows, cols,
                                          Polynomial::constant(Scalar::one(phi.field())));
}

Polynomial from_coordinates(const Field& field, int d, const std::vector<Scalar>& v) {
  Polynomial out(field, d);
  for (std::size_t i = 0; i < v.size(); ++i) out.coefficient_at(i) = v[i];
  return out;
}

// One row per form, coordinates in the degree-d monomial basis.
FieldMatrix coordinate_matrix(const Field& field, int d, const std::vector<Polynomial>& forms) {
  FieldMatrix out(forms.size(), basis_size(d), Scalar::zero(field));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = forms[i].coefficient_at(j);
  }
  return out;
}

std::vector<Polynomial> multiples(const std::vector<Polynomial>& forms, int d) {
  std::vector<Polynomial> out;
  for (const auto& f : forms) {
    if (f.degree() > d) continue;
    for (const auto& m : sym_basis(d - f.degree())) {
      out.push_back(Polynomial::monomial(f.field(), m) * f);
    }
  }
  return out;
}

std::size_t span_dim(const Field& field, int d, const std::vector<Polynomial>& forms) {
  return forms.empty() ? 0 : rank(coordinate_matrix(field, d, forms));
}

}  // namespace

std::vector<Polynomial> annihilator_degree(const DualElement& phi, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  const Field& field = phi.field();
  std::vector<Polynomial> out;
  if (d > phi.degree()) {
    for (const auto& m : sym_basis(d)) out.push_back(Polynomial::monomial(field, m));
    return out;
  }
  for (const auto& v : kernel(evaluation_matrix(phi, d))) out.push_back(from_coordinates(field, d, v));
  return out;
}

std::vector<std::size_t> GradedIdealSummary::hilbert_function() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) {
    if (d.degree <= socle_degree) out.push_back(d.quotient_dim);
  }
  return out;
}

std::vector<std::size_t> GradedIdealSummary::generator_counts() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.min_generators);
  return out;
}

GradedIdealSummary summarize_ideal(const DualElement& phi, int max_degree, bool keep_bases) {
  if (phi.is_zero()) throw std::invalid_argument("the zero functional has no Gorenstein ideal");
  const Field& field = phi.field();
  const int s = phi.degree();
  if (max_degree < 0) max_degree = s + 1;

  GradedIdealSummary out;
  out.socle_degree = s;
  std::vector<Polynomial> previous;
  for (int d = 0; d <= max_degree; ++d) {
    auto basis = annihilator_degree(phi, d);
    DegreeSummary row;
    row.degree = d;
    row.ideal_dim = basis.size();
    row.quotient_dim = basis_size(d) - basis.size();
    const std::size_t from_below = d == 0 ? 0 : span_dim(field, d, multiples(previous, d));
    row.min_generators = row.ideal_dim - from_below;
    if (keep_bases) row.kernel_basis = basis;
    out.degrees.push_back(std::move(row));
    previous = std::move(basis);
  }

  out.hilbert_symmetric = true;
  const auto h = out.hilbert_function();
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] != h[h.size() - 1 - i]) out.hilbert_symmetric = false;
  }
  return out;
}

bool IdealComparison::equal() const {
  for (const auto& d : degrees) {
    if (!d.equal()) return false;
  }
  return true;
}

IdealComparison ideal_equality_check(const std::vector<Polynomial>& gens, const DualElement& phi,
                                     int max_degree) {
  const Field& field = phi.field();
  const int s = phi.degree();
  if (max_degree < 0) max_degree = s + 1;
  for (const auto& g : gens) {
    if (g.field() != field) throw FieldMismatch("generator over a different field");
    if (g.degree() > max_degree) {
      throw std::invalid_argument("max degree is below a generator degree");
    }
  }

  IdealComparison out;
  for (int d = 0; d <= max_degree; ++d) {
    DegreeComparison row;
    row.degree = d;
    const auto span = multiples(gens, d);
    row.generated_dim = span_dim(field, d, span);
    if (d > s) {
      row.annihilator_dim = basis_size(d);
      row.contained = true;
    } else {
      const FieldMatrix eval = evaluation_matrix(phi, d);
      row.annihilator_dim = basis_size(d) - rank(eval);
      row.contained =
          span.empty() || is_zero(eval * coordinate_matrix(field, d, span).transpose());
    }
    out.degrees.push_back(row);
  }
  return out;
}

LefschetzReport wlp_test(const DualElement& phi, const Polynomial& ell) {
  if (phi.degree() % 2 == 0) {
    throw std::invalid_argument("the Lefschetz determinant test needs odd socle degree");
  }
  if (ell.degree() != 1 || ell.is_zero()) {
    throw std::invalid_argument("ell must be a nonzero linear form");
  }
  if (ell.field() != phi.field()) throw FieldMismatch("ell and phi over different fields");
  const auto basis = sym_basis((phi.degree() - 1) / 2);
  LefschetzReport out;
  out.ell = ell;
  out.m = kernels::parallel::catalecticant(phi, basis, basis, ell);
  out.determinant = determinant(out.m);
  out.lefschetz = !out.determinant.is_zero();
  out.note = out.lefschetz
                 ? "det M != 0; this also shows ann(phi) has no forms of degree " +
                       std::to_string((phi.degree() - 1) / 2)
                 : "det M = 0";
  return out;
}

DualElement family_phi(int n, const Field& field) {
  if (!field.is_rational()) {
    throw std::invalid_argument("the example family is defined over the rationals only");
  }
  if (n < 1) throw std::invalid_argument("n must be positive");
  const Scalar one = Scalar::one(field);
  const Polynomial sum = linear_form(one, one, one);
  return contract(power(sum, n + 1), DualElement::monomial(field, Monomial{n, n, n}));
}

HypothesisReport check_hypotheses(const DualElement& phi, int n) {
  if (phi.degree() != 2 * n - 1) throw std::invalid_argument("inverse system must have degree 2n-1");
  HypothesisReport out;
  const Field& field = phi.field();
  out.x_lefschetz = wlp_test(phi, variable(field, 0)).lefschetz;
  out.no_low_degree_forms = annihilator_degree(phi, n - 1).empty();
  return out;
}

}  // namespace gorenstein
