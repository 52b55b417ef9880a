#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gorenstein/linalg.hpp"
#include "test_support.hpp"

using namespace gorenstein;
using gorenstein::testing::contraction_by_pairing;
using gorenstein::testing::gf;
using gorenstein::testing::qq;
using gorenstein::testing::random_form;
using gorenstein::testing::random_matrix;

namespace {

DualElement dual(const Field& field, Monomial m) { return DualElement::monomial(field, m); }
Polynomial mono(const Field& field, Monomial m) { return Polynomial::monomial(field, m); }

std::vector<std::string> names(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(to_string(m));
  return out;
}

FieldMatrix random_invertible(const Field& field, std::mt19937_64& rng) {
  for (;;) {
    FieldMatrix g = random_matrix(field, 3, 3, rng);
    if (!determinant(g).is_zero()) return g;
  }
}

}  // namespace

TEST_CASE("basis order") {
  CHECK(names(sym_basis(2)) == std::vector<std::string>{"x^2", "xy", "xz", "y^2", "yz", "z^2"});
  CHECK(names(sym_basis_u0(2)) == std::vector<std::string>{"y^2", "yz", "z^2"});
  CHECK(names(sym_basis(0)) == std::vector<std::string>{"1"});
  CHECK(enumerate_basis(Space::DualU0, 3).size() == 4);
  for (int d = 0; d <= 7; ++d) {
    const auto basis = sym_basis(d);
    REQUIRE(basis.size() == static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis_index(basis[i]) == i);
      CHECK(monomial_at(d, i) == basis[i]);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        CHECK(precedes(basis[i], basis[j]) == (i < j));
      }
    }
    for (const auto& m : sym_basis_u0(d)) CHECK(m.is_x_free());
  }
  CHECK(parse_exponent_key(exponent_key(Monomial{2, 0, 5})) == Monomial{2, 0, 5});
}

TEST_CASE("contraction on monomials") {
  const Field q = qq();
  CHECK(contract(variable(q, 0), dual(q, {2, 1, 0})) == dual(q, {1, 1, 0}));
  CHECK(contract(variable(q, 2), dual(q, {2, 1, 0})).is_zero());
  CHECK_THROWS_AS(contract(mono(q, {2, 2, 0}), dual(q, {1, 0, 0})), std::invalid_argument);
}

TEST_CASE("contraction of a cube against (x^2y^2z^2)*") {
  const Field q = qq();
  const Polynomial cube = power(linear_form(Scalar::one(q), Scalar::one(q), Scalar::one(q)), 3);
  const DualElement top = dual(q, {2, 2, 2});
  const DualElement phi = contract(cube, top);

  DualElement expected(q, 3);
  for (Monomial m : {Monomial{2, 1, 0}, Monomial{2, 0, 1}, Monomial{1, 2, 0}, Monomial{0, 2, 1},
                     Monomial{1, 0, 2}, Monomial{0, 1, 2}}) {
    expected.set_coefficient(m, Scalar(q, 3L));
  }
  expected.set_coefficient({1, 1, 1}, Scalar(q, 6L));
  CHECK(phi == expected);
  CHECK(phi == contraction_by_pairing(cube, top));
  CHECK(evaluate(phi, mono(q, {2, 1, 0})) == Scalar(q, 3L));
}

TEST_CASE("evaluation") {
  const Field q = qq();
  CHECK(evaluate(dual(q, {1, 1, 1}), mono(q, {1, 1, 1})).is_one());
  CHECK(evaluate(dual(q, {1, 1, 1}), mono(q, {3, 0, 0})).is_zero());
  CHECK_THROWS_AS(evaluate(dual(q, {1, 1, 1}), mono(q, {1, 0, 0})), std::invalid_argument);
}

TEST_CASE("contraction agrees with the pairing definition") {
  std::mt19937_64 rng(21);
  for (const Field& field : {qq(), gf()}) {
    for (int t = 0; t < 30; ++t) {
      const int i = static_cast<int>(rng() % 4);
      const int j = i + static_cast<int>(rng() % 4);
      const auto u = random_form<Polynomial>(field, i, rng);
      const auto w = random_form<DualElement>(field, j, rng);
      CHECK(contract(u, w) == contraction_by_pairing(u, w));
    }
  }
}

TEST_CASE("module associativity and adjointness") {
  std::mt19937_64 rng(22);
  for (const Field& field : {qq(), gf()}) {
    for (int t = 0; t < 30; ++t) {
      const int du = static_cast<int>(rng() % 3);
      const int dv = static_cast<int>(rng() % 3);
      const int dw = du + dv + static_cast<int>(rng() % 3);
      const auto u = random_form<Polynomial>(field, du, rng);
      const auto v = random_form<Polynomial>(field, dv, rng);
      const auto w = random_form<DualElement>(field, dw, rng);
      CHECK(contract(u * v, w) == contract(u, contract(v, w)));
      const auto r = random_form<Polynomial>(field, dw - du, rng);
      CHECK(evaluate(contract(u, w), r) == evaluate(w, u * r));
    }
  }
}

TEST_CASE("multiplication") {
  const Field q = qq();
  const Polynomial x = variable(q, 0);
  const Polynomial y = variable(q, 1);
  const Polynomial z = variable(q, 2);
  CHECK(x * y == mono(q, {1, 1, 0}));
  CHECK((y + z) * (y - z) == mono(q, {0, 2, 0}) - mono(q, {0, 0, 2}));

  const auto basis = sym_basis(1);
  for (const auto& mi : basis) {
    for (const auto& mj : basis) {
      const Polynomial prod = x * mono(q, mi) * mono(q, mj);
      const auto terms = prod.terms();
      REQUIRE(terms.size() == 1);
      CHECK(terms[0].first == Monomial{1, 0, 0} * mi * mj);
      CHECK(terms[0].second.is_one());
    }
  }
}

TEST_CASE("substitution") {
  const Field q = qq();
  const DualElement w = dual(q, {0, 2, 1});
  CHECK(substitute(w, identity(q, 3)) == w);
  const FieldMatrix swap = make_matrix(q, {{"1", "0", "0"}, {"0", "0", "1"}, {"0", "1", "0"}});
  CHECK(substitute(w, swap) == dual(q, {0, 1, 2}));
  CHECK_THROWS_AS(substitute(w, zeros(q, 3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(substitute(w, identity(q, 2)), std::invalid_argument);
}

TEST_CASE("substitution x -> x+y agrees with direct evaluation") {
  const Field field = gf();
  std::mt19937_64 rng(23);
  const int d = 5;
  const auto phi = random_form<DualElement>(field, d, rng);
  FieldMatrix g = identity(field, 3);
  g(1, 0) = Scalar::one(field);  // column 0 holds the image of x
  const DualElement moved = substitute(phi, g);
  const Polynomial x_plus_y = variable(field, 0) + variable(field, 1);
  for (int t = 0; t < 20; ++t) {
    const auto mu = random_form<Polynomial>(field, d, rng);
    Polynomial replaced(field, d);
    mu.for_each_term([&](const Monomial& m, const Scalar& c) {
      replaced += c * (power(x_plus_y, m.a) * power(variable(field, 1), m.b) *
                       power(variable(field, 2), m.c));
    });
    CHECK(evaluate(moved, mu) == evaluate(phi, replaced));
  }
}

TEST_CASE("substitution is a right action") {
  std::mt19937_64 rng(24);
  for (const Field& field : {qq(), gf()}) {
    for (int t = 0; t < 10; ++t) {
      const auto w = random_form<DualElement>(field, 3, rng);
      const FieldMatrix g = random_invertible(field, rng);
      const FieldMatrix h = random_invertible(field, rng);
      CHECK(substitute(substitute(w, g), h) == substitute(w, g * h));
      const auto mu = random_form<Polynomial>(field, 3, rng);
      CHECK(evaluate(substitute(w, g), mu) == evaluate(w, apply_change_of_variables(g, mu)));
    }
  }
}

TEST_CASE("polynomial text round trip") {
  const Field q = qq();
  const Polynomial p = parse_polynomial(q, "(-1/6)x^2 + (1/6)xz + (-1/6)z^2");
  CHECK(p.degree() == 2);
  CHECK(to_string(p) == "(-1/6)x^2 + (1/6)xz + (-1/6)z^2");
  CHECK(parse_polynomial(q, "2x^2-xy+3*y*z") ==
        parse_polynomial(q, "(2)x^2 + (-1)xy + (3)yz"));
  CHECK(to_string(Polynomial(q, 3)) == "0");
  CHECK(parse_polynomial(q, "0", 3) == Polynomial(q, 3));
  CHECK_THROWS(parse_polynomial(q, "x + y^2"));

  std::mt19937_64 rng(25);
  for (const Field& field : {qq(), gf()}) {
    for (int t = 0; t < 20; ++t) {
      const auto u = random_form<Polynomial>(field, static_cast<int>(rng() % 4) + 1, rng);
      CHECK(parse_polynomial(field, to_string(u), u.degree()) == u);
    }
  }
}
