#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gorenstein/oracle.hpp"
#include "gorenstein/resolution.hpp"
#include "test_support.hpp"

using namespace gorenstein;
using gorenstein::testing::gf;
using gorenstein::testing::qq;
using gorenstein::testing::random_form;

namespace {

using Counts = std::vector<std::size_t>;

}  // namespace

TEST_CASE("annihilator in single degrees") {
  const DualElement phi = family_phi(2);
  CHECK(annihilator_degree(phi, 0).empty());
  CHECK(annihilator_degree(phi, 4).size() == basis_size(4));
  const auto j2 = annihilator_degree(phi, 2);
  CHECK(j2.size() == 3);
  for (const auto& mu : j2) CHECK(contract(mu, phi).is_zero());
}

TEST_CASE("family coefficients match the multinomial closed form") {
  const Field q = qq();
  for (int n = 1; n <= 5; ++n) {
    const DualElement phi = family_phi(n);
    CHECK(phi.degree() == 2 * n - 1);
    for (const auto& m : sym_basis(2 * n - 1)) {
      const int a = n - m.a, b = n - m.b, c = n - m.c;
      const Scalar expected =
          (a < 0 || b < 0 || c < 0) ? Scalar::zero(q) : multinomial(q, n + 1, a, b, c);
      CHECK(phi.coefficient(m) == expected);
    }
    if (n > 1) CHECK(phi.coefficient({2 * n - 1, 0, 0}).is_zero());
  }
  CHECK_THROWS_AS(family_phi(2, gf()), std::invalid_argument);
}

TEST_CASE("monomial inverse system") {
  const Field q = qq();
  for (int s = 1; s <= 4; ++s) {
    const auto summary = summarize_ideal(DualElement::monomial(q, {0, 0, s}));
    Counts gens(static_cast<std::size_t>(s + 2), 0);
    gens[1] = 2;
    gens[static_cast<std::size_t>(s + 1)] += 1;
    CHECK(summary.generator_counts() == gens);
    CHECK(summary.hilbert_function() == Counts(static_cast<std::size_t>(s + 1), 1));
    CHECK(summary.hilbert_symmetric);
  }
  CHECK_THROWS_AS(summarize_ideal(DualElement(q, 3)), std::invalid_argument);
}

TEST_CASE("family Hilbert functions and generators") {
  const auto s2 = summarize_ideal(family_phi(2));
  CHECK(s2.socle_degree == 3);
  CHECK(s2.hilbert_function() == Counts{1, 3, 3, 1});
  CHECK(s2.generator_counts() == Counts{0, 0, 3, 0, 0});
  CHECK(s2.hilbert_symmetric);

  const auto s4 = summarize_ideal(family_phi(4), -1, false);
  CHECK(s4.hilbert_function() == Counts{1, 3, 6, 10, 10, 6, 3, 1});
  CHECK(s4.generator_counts() == Counts{0, 0, 0, 0, 5, 0, 0, 0, 0});
  CHECK(s4.degrees[4].kernel_basis.empty());
}

TEST_CASE("Hilbert symmetry for random inverse systems") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 10; ++t) {
    const int s = 1 + static_cast<int>(rng() % 6);
    const auto phi = random_form<DualElement>(gf(), s, rng);
    const auto summary = summarize_ideal(phi);
    CHECK(summary.hilbert_symmetric);
    for (const auto& d : summary.degrees) {
      CHECK(d.ideal_dim + d.quotient_dim == basis_size(d.degree));
    }
  }
}

TEST_CASE("ideal equality") {
  const DualElement phi = family_phi(2);
  std::vector<Polynomial> own;
  for (int d = 0; d <= 4; ++d) {
    for (auto& g : annihilator_degree(phi, d)) own.push_back(g);
  }
  CHECK(ideal_equality_check(own, phi).equal());

  const auto quad = build_quadratic_presentation(build_linear_presentation(phi, 2));
  const auto cmp = ideal_equality_check(quad.generators, phi, 4);
  CHECK(cmp.degrees.size() == 5);
  CHECK(cmp.equal());

  const DualElement phi4 = family_phi(4);
  auto gens4 = build_quadratic_presentation(build_linear_presentation(phi4, 4)).generators;
  gens4.pop_back();
  const auto dropped = ideal_equality_check(gens4, phi4, 8);
  CHECK_FALSE(dropped.equal());
  CHECK(dropped.degrees[4].generated_dim == 4);
  CHECK(dropped.degrees[4].annihilator_dim == 5);
  CHECK(dropped.degrees[4].contained);

  const std::vector<Polynomial> wrong{variable(qq(), 0)};
  CHECK_FALSE(ideal_equality_check(wrong, phi).degrees[1].contained);
  CHECK_THROWS_AS(ideal_equality_check(own, phi, 2), std::invalid_argument);
}

TEST_CASE("Lefschetz determinant") {
  const Field q = qq();
  const Polynomial x = variable(q, 0);
  for (int n : {2, 4}) {
    const DualElement phi = family_phi(n);
    const auto report = wlp_test(phi, x);
    CHECK(report.lefschetz);
    CHECK(report.m == build_p_r(phi, n).p);
  }
  const auto y_report = wlp_test(family_phi(2), variable(q, 1));
  CHECK(y_report.lefschetz);

  const auto dead = wlp_test(DualElement::monomial(q, {0, 2, 1}), x);
  CHECK_FALSE(dead.lefschetz);
  CHECK(is_zero(dead.m));
  CHECK_THROWS_AS(wlp_test(DualElement::monomial(q, {0, 2, 2}), x), std::invalid_argument);
  CHECK_THROWS_AS(wlp_test(family_phi(2), Polynomial(q, 1)), std::invalid_argument);
}

TEST_CASE("hypotheses for the family") {
  CHECK(check_hypotheses(family_phi(2), 2).holds());
  CHECK(check_hypotheses(family_phi(4), 4).holds());
  CHECK_FALSE(check_hypotheses(DualElement::monomial(qq(), {0, 2, 1}), 2).holds());
}
