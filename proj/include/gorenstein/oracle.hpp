#pragma once

#include <string>
#include <vector>

#include "gorenstein/forms.hpp"
#include "gorenstein/linalg.hpp"

// Brute-force facts about ann(phi) computed degree by degree with exact
// linear algebra. Used as ground truth for the resolution code.

namespace gorenstein {

/// Basis of {mu in Sym_d U : mu(phi) = 0}; all of Sym_d U when d > deg phi.
std::vector<Polynomial> annihilator_degree(const DualElement& phi, int d);

struct DegreeSummary {
  int degree = 0;
  std::size_t ideal_dim = 0;
  std::size_t quotient_dim = 0;
  std::size_t min_generators = 0;
  std::vector<Polynomial> kernel_basis;
};

struct GradedIdealSummary {
  int socle_degree = 0;
  std::vector<DegreeSummary> degrees;  // d = 0, ..., max degree
  bool hilbert_symmetric = false;      // quotient_dim(i) == quotient_dim(s - i)

  std::vector<std::size_t> hilbert_function() const;  // d = 0, ..., s
  std::vector<std::size_t> generator_counts() const;
};

/// Minimal generators in degree d counted as dim I_d - dim(R_1 I_{d-1}).
/// max_degree < 0 means socle degree + 1. Throws for phi = 0.
GradedIdealSummary summarize_ideal(const DualElement& phi, int max_degree = -1,
                                   bool keep_bases = true);

struct DegreeComparison {
  int degree = 0;
  std::size_t generated_dim = 0;
  std::size_t annihilator_dim = 0;
  bool contained = false;
  bool equal() const { return contained && generated_dim == annihilator_dim; }
};

struct IdealComparison {
  std::vector<DegreeComparison> degrees;
  bool equal() const;
};

/// Compares (gens) with ann(phi) in each degree up to max_degree
/// (default deg phi + 1). ann(phi) contains every form of degree > deg phi.
/// If (gens) agrees with it in degree deg phi + 1, then (gens) also contains
/// every form of that degree and hence of every higher degree, so agreement in
/// all degrees up to deg phi + 1 proves the two ideals are equal.
IdealComparison ideal_equality_check(const std::vector<Polynomial>& gens, const DualElement& phi,
                                     int max_degree = -1);

struct LefschetzReport {
  Polynomial ell;
  FieldMatrix m;  // phi(mu_i ell mu_j) over the degree (s-1)/2 monomials
  Scalar determinant;
  bool lefschetz = false;
  std::string note;
};

/// Requires odd socle degree and ell != 0 of degree 1.
LefschetzReport wlp_test(const DualElement& phi, const Polynomial& ell);

/// (x+y+z)^{n+1} contracted into (x^n y^n z^n)*; inverse system of
/// (x^{n+1}, y^{n+1}, z^{n+1}) : (x+y+z)^{n+1}. Rationals only.
DualElement family_phi(int n, const Field& field = Field::rationals());

/// Whether x is a weak Lefschetz element for R/ann(phi) and ann(phi) has no
/// forms of degree n-1; the conditions under which a singular a_prime rules out
/// a quadratic presentation.
struct HypothesisReport {
  bool x_lefschetz = false;
  bool no_low_degree_forms = false;
  bool holds() const { return x_lefschetz && no_low_degree_forms; }
};
HypothesisReport check_hypotheses(const DualElement& phi, int n);

}  // namespace gorenstein
