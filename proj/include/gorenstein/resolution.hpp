#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gorenstein/poly_matrix.hpp"

// Minimal resolutions of R/I and R/J from an inverse system phi of degree 2n-1,
// where I = ann(x(phi)) and J = ann(phi).
//
// Generator order in every row and every block matrix: first the n slots
// indexed by y^{n-1}, ..., z^{n-1}, then the n+1 slots indexed by y^n, ..., z^n.

namespace gorenstein {

struct ProportionalityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// p(i, j) = phi(x m_i m_j) over the degree n-1 basis of Sym U;
/// r(i, j) = phi(m_i m0_j) with m0_j running over the degree n basis of Sym U0.
struct Catalecticants {
  FieldMatrix p;
  FieldMatrix r;
};

Catalecticants build_p_r(const DualElement& phi, int n);

/// (degree, rank) pairs of the free modules in a length-three resolution.
using BettiShape = std::vector<std::pair<int, int>>;
BettiShape linear_betti_shape(int n);
BettiShape quadratic_betti_shape(int n);

/// Linear syzygy matrix of R/I. When p is singular only p, r and p_rank are
/// filled in.
struct LinearPresentation {
  int n = 0;
  Field field;
  FieldMatrix p;
  FieldMatrix r;
  std::size_t p_rank = 0;
  bool linearly_presented = false;

  FieldMatrix p_inverse;
  FieldMatrix a0;       // r^T p^-1 r without its last row and first column
  FieldMatrix a_prime;  // a0 - a0^T
  FieldMatrix b0;       // last n columns of r^T p^-1
  FieldMatrix b1;       // [0 | b0 without last row] - [b0 without first row | 0]
  PolyMatrix b2;        // [z I | 0] - [0 | y I]
  FieldMatrix d0;       // [[0, bottom-right n x n of p^-1], [0, 0]]
  PolyMatrix a;         // x a_prime
  PolyMatrix b;         // x b1 + b2
  PolyMatrix d;         // x (d0 - d0^T)
  PolyMatrix syzygies;  // [[a, b], [-b^T, d]], (2n+1) x (2n+1)
  std::vector<Polynomial> generators;           // signed maximal Pfaffians of syzygies
  std::vector<Polynomial> explicit_generators;  // closed-form generators of I
};

LinearPresentation build_linear_presentation(const DualElement& phi, int n);

/// The 2n+1 degree-n generators of I written directly from p^-1:
///   x p^-1(e_k) for the n x-free basis vectors of Sym_{n-1} U, then
///   m0 - x p^-1(m0(phi)) for m0 = y^n, ..., z^n.
std::vector<Polynomial> explicit_generators(const DualElement& phi, int n,
                                            const FieldMatrix& p_inverse);

/// The unit u with lhs = u * rhs. Throws ProportionalityError if no unit
/// exists; the ratio is read from the first nonzero coordinate of rhs.
Scalar proportionality_unit(const std::vector<Polynomial>& lhs,
                            const std::vector<Polynomial>& rhs);

/// phi with every x-free dual monomial removed; x(result) = x(phi).
DualElement reduced_inverse_system(const DualElement& phi);

/// Change-of-basis matrices relating the resolutions built from phi and from
/// its reduction. With rho = phi - reduced and u_k, m0_j the degree n-1 and
/// degree n bases of Sym U0:
///   generators: [[I_n, -R], [0, I_{n+1}]],   R(k, j) = rho(u_k m0_j)
///   syzygies:   [[I_n, 0], [R^T, I_{n+1}]]
struct ReductionBasisChange {
  FieldMatrix generators;
  FieldMatrix syzygies;
};
ReductionBasisChange reduction_basis_change(const DualElement& phi, int n);

/// Whether gen * syz(phi) == syz(reduced) * syz_change and
/// explicit(phi) == explicit(reduced) * gen.
bool reduction_conjugation_check(const LinearPresentation& lin_phi,
                                 const LinearPresentation& lin_reduced, const DualElement& phi);

enum class QuadraticStatus {
  Presented,
  OddN,             // the alternating n x n matrix a_prime is necessarily singular
  SingularAPrime,
};

/// Quadratic syzygy matrix of R/J.
struct QuadraticPresentation {
  int n = 0;
  QuadraticStatus status = QuadraticStatus::SingularAPrime;
  std::size_t a_prime_rank = 0;
  /// Set by callers that confirmed x is a weak Lefschetz element and J_{n-1} = 0.
  /// Without both, a singular a_prime proves nothing about J.
  bool hypotheses_checked = false;

  PolyMatrix syzygies;  // b^T a_prime^-1 b + x d, (n+1) x (n+1), quadratic
  std::vector<Polynomial> generators;           // signed maximal Pfaffians of syzygies
  std::vector<Polynomial> explicit_generators;  // last n+1 explicit generators of I
  std::optional<Scalar> unit;  // generators = unit * explicit_generators

  bool quadratically_presented() const { return status == QuadraticStatus::Presented; }
};

/// Requires lin.linearly_presented (throws std::invalid_argument otherwise).
/// Odd n and singular a_prime are reported through status, not thrown.
QuadraticPresentation build_quadratic_presentation(const LinearPresentation& lin);

/// For i = 1..n+1: Pf(syz_lin without n+i) == Pf(a_prime) Pf(syz_quad without i).
bool pfaffian_factorization_check(const LinearPresentation& lin, const QuadraticPresentation& quad);

}  // namespace gorenstein
