#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gorenstein/matrix.hpp"
#include "gorenstein/monomial.hpp"
#include "gorenstein/scalar.hpp"

namespace gorenstein {

using FieldMatrix = Matrix<Scalar>;

namespace detail {
struct SymTag {};
struct DualTag {};
}  // namespace detail

/// A homogeneous element of one graded piece, stored densely on the ordered
/// monomial basis of its degree. The zero element keeps its degree.
///
/// HomogeneousForm<SymTag> is an element of Sym_d U (a polynomial);
/// HomogeneousForm<DualTag> is an element of D_d U*, where the coefficient at
/// monomial m is the coefficient of the dual basis vector m*.
template <class Tag>
class HomogeneousForm {
 public:
  HomogeneousForm() : HomogeneousForm(Field::rationals(), 0) {}
  HomogeneousForm(const Field& field, int degree)
      : field_(field), degree_(degree), coeffs_(basis_size(degree), Scalar::zero(field)) {
    if (degree < 0) throw std::invalid_argument("negative degree");
  }

  static HomogeneousForm monomial(const Field& field, const Monomial& m) {
    HomogeneousForm f(field, m.degree());
    f.coeffs_[basis_index(m)] = Scalar::one(field);
    return f;
  }
  static HomogeneousForm constant(const Scalar& c) {
    HomogeneousForm f(c.field(), 0);
    f.coeffs_[0] = c;
    return f;
  }

  const Field& field() const { return field_; }
  int degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }

  const Scalar& coefficient(const Monomial& m) const {
    require_degree(m);
    return coeffs_[basis_index(m)];
  }
  void set_coefficient(const Monomial& m, Scalar value) {
    require_degree(m);
    if (value.field() != field_) throw FieldMismatch("coefficient from a different field");
    coeffs_[basis_index(m)] = std::move(value);
  }
  void add_to(const Monomial& m, const Scalar& value) {
    require_degree(m);
    coeffs_[basis_index(m)] += value;
  }

  /// Coefficients in basis order, zeros included.
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  const Scalar& coefficient_at(std::size_t i) const { return coeffs_[i]; }
  Scalar& coefficient_at(std::size_t i) { return coeffs_[i]; }

  /// Nonzero terms in basis order.
  std::vector<std::pair<Monomial, Scalar>> terms() const {
    std::vector<std::pair<Monomial, Scalar>> out;
    for_each_term([&out](const Monomial& m, const Scalar& c) { out.emplace_back(m, c); });
    return out;
  }

  /// Calls f(monomial, coefficient) for every nonzero coefficient, in basis order.
  template <class F>
  void for_each_term(F&& f) const {
    std::size_t idx = 0;
    for (int a = degree_; a >= 0; --a) {
      for (int b = degree_ - a; b >= 0; --b, ++idx) {
        if (!coeffs_[idx].is_zero()) f(Monomial{a, b, degree_ - a - b}, coeffs_[idx]);
      }
    }
  }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  HomogeneousForm& operator+=(const HomogeneousForm& rhs) {
    require_compatible(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  HomogeneousForm& operator-=(const HomogeneousForm& rhs) {
    require_compatible(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }
  HomogeneousForm& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  HomogeneousForm operator-() const {
    HomogeneousForm out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend HomogeneousForm operator+(HomogeneousForm l, const HomogeneousForm& r) { return l += r; }
  friend HomogeneousForm operator-(HomogeneousForm l, const HomogeneousForm& r) { return l -= r; }
  friend HomogeneousForm operator*(HomogeneousForm l, const Scalar& s) { return l *= s; }
  friend HomogeneousForm operator*(const Scalar& s, HomogeneousForm r) { return r *= s; }

  friend bool operator==(const HomogeneousForm& l, const HomogeneousForm& r) {
    return l.field_ == r.field_ && l.degree_ == r.degree_ && l.coeffs_ == r.coeffs_;
  }

 private:
  void require_degree(const Monomial& m) const {
    if (m.degree() != degree_ || !m.is_valid()) {
      throw std::invalid_argument("monomial " + to_string(m) + " has the wrong degree");
    }
  }
  void require_compatible(const HomogeneousForm& rhs) const {
    if (rhs.field_ != field_) throw FieldMismatch("forms over different fields");
    if (rhs.degree_ != degree_) {
      throw std::invalid_argument("degree mismatch: " + std::to_string(degree_) + " vs " +
                                  std::to_string(rhs.degree_));
    }
  }

  Field field_;
  int degree_ = 0;
  std::vector<Scalar> coeffs_;
};

using Polynomial = HomogeneousForm<detail::SymTag>;
using DualElement = HomogeneousForm<detail::DualTag>;

Polynomial operator*(const Polynomial& u, const Polynomial& v);
inline Polynomial multiply(const Polynomial& u, const Polynomial& v) { return u * v; }
Polynomial power(const Polynomial& u, int exponent);

/// cx*x + cy*y + cz*z.
Polynomial linear_form(const Scalar& cx, const Scalar& cy, const Scalar& cz);
Polynomial variable(const Field& field, int index);

/// Module action of Sym U on D U*: a monomial u sends m* to (m/u)* when u
/// divides m and to 0 otherwise. Requires deg u <= deg w.
DualElement contract(const Polynomial& u, const DualElement& w);

/// w(u) for forms of equal degree.
Scalar evaluate(const DualElement& w, const Polynomial& u);

/// Linear change of variables g acting on Sym U: variable k is sent to
/// sum_i g(i, k) * variable_i.
Polynomial apply_change_of_variables(const FieldMatrix& g, const Polynomial& u);

/// Returns w o Sym_d(g): the result evaluated on u equals w(g . u).
/// Throws std::invalid_argument for a singular or non-3x3 g.
DualElement substitute(const DualElement& w, const FieldMatrix& g);

/// Polynomial text: "(-1/6)x^2 + (1/6)xz + (-1/6)z^2", "0" for zero.
std::string to_string(const Polynomial& u);
/// Accepts the to_string form and the looser "2x^2-xy+3*y*z" style.
/// A string without variables is a constant (degree 0) unless `degree`
/// requests the zero form of another degree for "0".
Polynomial parse_polynomial(const Field& field, const std::string& text, int degree = -1);

}  // namespace gorenstein
