#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gorenstein {

/// x^a y^b z^c.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;

  int degree() const { return a + b + c; }
  bool is_valid() const { return a >= 0 && b >= 0 && c >= 0; }
  /// True when the monomial lies in Sym U0, i.e. has no x.
  bool is_x_free() const { return a == 0; }
  bool divides(const Monomial& m) const { return a <= m.a && b <= m.b && c <= m.c; }

  friend Monomial operator*(const Monomial& l, const Monomial& r) {
    return {l.a + r.a, l.b + r.b, l.c + r.c};
  }
  /// Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const {
    return {a - divisor.a, b - divisor.b, c - divisor.c};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Monomial order used throughout: within one degree, x^a y^b z^c precedes
/// x^α y^β z^γ iff α < a, or α = a and β < b.
bool precedes(const Monomial& lhs, const Monomial& rhs);

/// Number of monomials of degree d in x, y, z.
inline std::size_t basis_size(int d) {
  return d < 0 ? 0 : static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 2) / 2;
}

/// Position of m in the ordered basis of its degree.
inline std::size_t basis_index(const Monomial& m) {
  const auto rest = static_cast<std::size_t>(m.degree() - m.a);
  return rest * (rest + 1) / 2 + (rest - static_cast<std::size_t>(m.b));
}

/// Inverse of basis_index.
Monomial monomial_at(int degree, std::size_t index);

/// "x^2yz", "1" for the constant monomial.
std::string to_string(const Monomial& m);
/// Exponent triple "a,b,c" used as a JSON key.
std::string exponent_key(const Monomial& m);
Monomial parse_exponent_key(const std::string& key);

enum class Space { SymU, SymU0, DualU, DualU0 };

/// Ordered basis of one graded piece. For the dual spaces each listed
/// monomial m stands for the dual basis vector m*.
struct BasisIndex {
  Space space = Space::SymU;
  int degree = 0;
  std::vector<Monomial> monomials;

  std::size_t size() const { return monomials.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials[i]; }
};

/// x^d, x^{d-1}y, x^{d-1}z, ..., z^d for U; y^d, y^{d-1}z, ..., z^d for U0.
BasisIndex enumerate_basis(Space space, int degree);

std::vector<Monomial> sym_basis(int degree);
std::vector<Monomial> sym_basis_u0(int degree);

}  // namespace gorenstein
